#include "lpa/algebra.hpp"

#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return a.beta <=> b.beta;
}

Monomial vertex_monomial(VertexId v) { return {vertex_path(v), vertex_path(v)}; }

Monomial ghost_monomial(const DiGraph& g, const Path& beta) {
  return {vertex_path(path_range(g, beta)), beta};
}

Monomial real_monomial(const DiGraph& g, const Path& alpha) {
  return {alpha, vertex_path(path_range(g, alpha))};
}

AlgebraElement::AlgebraElement(GraphPtr g, const Monomial& m, const Scalar& c) : g_(std::move(g)) {
  add_term(m, c);
}

AlgebraElement AlgebraElement::vertex(GraphPtr g, VertexId v) {
  if (v >= g->vertex_count()) throw PreconditionError("unknown vertex id");
  return AlgebraElement(std::move(g), vertex_monomial(v));
}

AlgebraElement AlgebraElement::one(GraphPtr g) {
  AlgebraElement x(g);
  for (VertexId v = 0; v < g->vertex_count(); ++v) x.add_term(vertex_monomial(v), 1);
  return x;
}

AlgebraElement AlgebraElement::real(GraphPtr g, const Path& alpha) {
  if (!is_valid_path(*g, alpha)) throw PreconditionError("invalid path");
  Monomial m = real_monomial(*g, alpha);
  return AlgebraElement(std::move(g), m);
}

AlgebraElement AlgebraElement::ghost(GraphPtr g, const Path& beta) {
  if (!is_valid_path(*g, beta)) throw PreconditionError("invalid path");
  Monomial m = ghost_monomial(*g, beta);
  return AlgebraElement(std::move(g), m);
}

bool AlgebraElement::is_pure_ghost() const {
  for (const auto& [m, c] : terms_)
    if (!m.alpha.empty()) return false;
  return true;
}

bool AlgebraElement::is_pure_real() const {
  for (const auto& [m, c] : terms_)
    if (!m.beta.empty()) return false;
  return true;
}

std::size_t AlgebraElement::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_same_graph(const AlgebraElement& o) const {
  if (g_ != o.g_) throw PreconditionError("operands live over different graphs");
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_graph(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same_graph(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

std::optional<Monomial> multiply(const DiGraph& g, const Monomial& x, const Monomial& y) {
  const Path& beta = x.beta;
  const Path& gamma = y.alpha;
  if (is_head(beta, gamma)) {
    Path rest = tail(g, gamma, beta.length());
    Path alpha = x.alpha;
    alpha.arrows.insert(alpha.arrows.end(), rest.arrows.begin(), rest.arrows.end());
    return Monomial{std::move(alpha), y.beta};
  }
  if (is_head(gamma, beta)) {
    Path rest = tail(g, beta, gamma.length());
    Path delta = y.beta;
    delta.arrows.insert(delta.arrows.end(), rest.arrows.begin(), rest.arrows.end());
    return Monomial{x.alpha, std::move(delta)};
  }
  return std::nullopt;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same_graph(b);
  AlgebraElement r(a.g_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      if (auto m = multiply(*a.g_, ma, mb)) r.add_term(*m, ca * cb);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.g_ != b.g_) return false;
  return a.terms_ == b.terms_;
}

namespace {

// The arrow e = last(alpha) = last(beta) when e is the special arrow at s(e).
std::optional<Arrow> ck2_junction(const DiGraph& g, const Monomial& m) {
  if (m.alpha.empty() || m.beta.empty()) return std::nullopt;
  const Arrow& e = m.alpha.arrows.back();
  if (!(e == m.beta.arrows.back())) return std::nullopt;
  auto special = g.special_arrow(g.source(e));
  if (!special || !(*special == e)) return std::nullopt;
  return e;
}

}  // namespace

AlgebraElement leavitt_normal_form(const AlgebraElement& x) {
  const DiGraph& g = *x.graph();
  std::map<Monomial, Scalar> work(x.terms().begin(), x.terms().end());
  AlgebraElement out(x.graph());
  auto add = [](std::map<Monomial, Scalar>& w, const Monomial& m, const Scalar& c) {
    auto [it, fresh] = w.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) w.erase(it);
    }
  };
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Monomial m = it->first;
    Scalar c = it->second;
    work.erase(it);
    auto e = ck2_junction(g, m);
    if (!e) {
      out.add_term(m, c);
      continue;
    }
    Path a0 = head(m.alpha, m.alpha.length() - 1);
    Path b0 = head(m.beta, m.beta.length() - 1);
    add(work, Monomial{a0, b0}, c);
    for (const auto& f : g.out_arrows(g.source(*e))) {
      if (f == *e) continue;
      Path af = a0, bf = b0;
      af.arrows.push_back(f);
      bf.arrows.push_back(f);
      add(work, Monomial{af, bf}, -c);
    }
  }
  return out;
}

bool equals_leavitt(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.graph() != y.graph()) throw PreconditionError("operands live over different graphs");
  return leavitt_normal_form(x - y).is_zero();
}

AlgebraElement involution(const AlgebraElement& x) {
  AlgebraElement r(x.graph());
  for (const auto& [m, c] : x.terms()) r.add_term(Monomial{m.beta, m.alpha}, c);
  return r;
}

}  // namespace lpa
