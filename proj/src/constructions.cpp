#include "lpa/constructions.hpp"

#include <algorithm>

#include "lpa/errors.hpp"

namespace lpa {

std::size_t GhostModule::add(std::string name, VertexId sector) {
  names.push_back(std::move(name));
  sectors.push_back(sector);
  return names.size() - 1;
}

void GhostModule::set(const Arrow& a, std::size_t s, std::size_t t, const Scalar& c) {
  auto& row = ghost[{a, s}];
  if (c.is_zero()) {
    row.erase(t);
  } else {
    row[t] = c;
  }
}

namespace {

Label at_seed(const GhostModule& n, std::size_t s) { return Label{vertex_path(n.sectors[s]), s}; }

std::string scalar_list(const std::vector<Scalar>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c[i].to_string();
  return out;
}

void require_loop(const DiGraph& g, const Arrow& a, VertexId v) {
  if (!g.valid(a) || g.source(a) != v || g.range(a) != v)
    throw PreconditionError(g.arrow_name(a) + " is not a loop at " + g.vertex_name(v));
}

class ChenSeeds : public SeedModel {
 public:
  ChenSeeds(GraphPtr g, ChenWord w) : g_(std::move(g)), w_(std::move(w)), tails_(w_.distinct_tails()) {}

  std::size_t seeds_up_to(std::size_t d) const override { return tails_ ? *tails_ : d + 1; }
  VertexId sector(std::size_t s) const override { return g_->source(w_.letter(s)); }
  std::size_t seed_degree(std::size_t s) const override { return tails_ ? 0 : s; }
  std::string seed_name(std::size_t s) const override { return "t(" + std::to_string(s) + ")"; }

  std::optional<ModuleVector> rewrite(const Arrow& a, std::size_t s) const override {
    if (s >= 1 && a == w_.letter(s - 1)) return ModuleVector{{seed(s - 1), Scalar(1)}};
    if (tails_ && s == w_.prefix().length() && a == w_.letter(*tails_ - 1))
      return ModuleVector{{seed(*tails_ - 1), Scalar(1)}};
    return std::nullopt;
  }

  ModuleVector ghost(const Arrow& a, std::size_t s) const override {
    if (a != w_.letter(s)) return {};
    return {{seed(w_.tail_class(s + 1)), Scalar(1)}};
  }

 private:
  Label seed(std::size_t s) const { return Label{vertex_path(sector(s)), s}; }

  GraphPtr g_;
  ChenWord w_;
  std::optional<std::size_t> tails_;
};

}  // namespace

RepresentationSpace induced_module(const GraphPtr& g, const GhostModule& n, std::int64_t window, ModuleInfo info) {
  auto seeds = std::make_shared<TableSeeds>();
  for (std::size_t s = 0; s < n.names.size(); ++s) {
    if (n.sectors[s] >= g->vertex_count()) throw PreconditionError("seed sector out of range");
    seeds->add_seed(n.names[s], n.sectors[s]);
  }
  for (const auto& [key, row] : n.ghost) {
    const auto& [a, s] = key;
    if (g->source(a) != n.sectors.at(s)) throw PreconditionError("ghost " + g->arrow_name(a) + "* applied off its sector");
    ModuleVector image;
    for (const auto& [t, c] : row) {
      if (n.sectors.at(t) != g->range(a))
        throw PreconditionError("ghost " + g->arrow_name(a) + "* lands outside r(a)");
      image[at_seed(n, t)] = c;
    }
    seeds->set_ghost(a, s, image);
  }

  for (VertexId w = 0; w < g->vertex_count(); ++w) {
    if (!g->is_regular(w)) continue;
    std::vector<std::size_t> rows;
    for (std::size_t s = 0; s < n.names.size(); ++s)
      if (n.sectors[s] == w) rows.push_back(s);
    if (rows.empty()) continue;

    std::vector<std::pair<Arrow, std::size_t>> cols;
    for (const Arrow& e : g->out_arrows(w))
      for (std::size_t t = 0; t < n.names.size(); ++t)
        if (n.sectors[t] == g->range(e)) cols.emplace_back(e, t);

    auto phi = [&](std::size_t s, std::size_t c) {
      auto it = n.ghost.find({cols[c].first, s});
      if (it == n.ghost.end()) return Scalar(0);
      auto jt = it->second.find(cols[c].second);
      return jt == it->second.end() ? Scalar(0) : jt->second;
    };

    Echelon<std::size_t> span;
    std::vector<std::size_t> pivots;
    for (std::size_t c = cols.size(); c-- > 0 && pivots.size() < rows.size();) {
      SparseVector<std::size_t> col;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (Scalar x = phi(rows[i], c); !x.is_zero()) col[i] = x;
      if (span.insert(col)) pivots.push_back(c);
    }
    if (pivots.size() < rows.size())
      throw PreconditionError("s -> (e* s)_e is not injective at " + g->vertex_name(w));

    Matrix a(rows.size(), DenseVector(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < pivots.size(); ++k) a[i][k] = phi(rows[i], pivots[k]);
    Matrix inv = inverse(a);

    std::vector<bool> is_pivot(cols.size(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<ModuleVector> rhs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rhs[i][at_seed(n, rows[i])] = Scalar(1);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (is_pivot[c]) continue;
        Scalar x = phi(rows[i], c);
        if (x.is_zero()) continue;
        axpy(rhs[i], -x, ModuleVector{{Label{arrow_path(*g, cols[c].first), cols[c].second}, Scalar(1)}});
      }
    }
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      ModuleVector value;
      for (std::size_t i = 0; i < rows.size(); ++i) axpy(value, inv[k][i], rhs[i]);
      seeds->set_rewrite(cols[pivots[k]].first, cols[pivots[k]].second, value);
    }
  }
  return RepresentationSpace(g, seeds, window, std::move(info));
}

RepresentationSpace chen_module(const GraphPtr& g, const ChenWord& alpha, std::int64_t window) {
  auto seeds = std::make_shared<ChenSeeds>(g, alpha);
  ModuleInfo info;
  info.construction = "chen";
  info.params = {{"word", alpha.describe(*g)}};
  info.generator = {{Label{vertex_path(alpha.source()), 0}, Scalar(1)}};
  info.chain = {info.generator};
  return RepresentationSpace(g, seeds, window, std::move(info));
}

RepresentationSpace cohn_jacobson_module(const GraphPtr& g, VertexId v, std::int64_t window) {
  if (g->classify(v) != VertexKind::infinite_emitter)
    throw PreconditionError(g->vertex_name(v) + " is not an infinite emitter");
  GhostModule n;
  n.add(g->vertex_name(v), v);
  ModuleInfo info;
  info.construction = "cohn-jacobson";
  info.params = {{"vertex", g->vertex_name(v)}};
  info.generator = {{at_seed(n, 0), Scalar(1)}};
  info.chain = {info.generator};
  return induced_module(g, n, window, std::move(info));
}

RepresentationSpace sink_module(const GraphPtr& g, VertexId w) {
  if (g->classify(w) != VertexKind::sink) throw PreconditionError(g->vertex_name(w) + " is not a sink");
  GhostModule n;
  n.add(g->vertex_name(w), w);
  ModuleInfo info;
  info.construction = "sink";
  info.params = {{"vertex", g->vertex_name(w)}};
  info.generator = {{at_seed(n, 0), Scalar(1)}};
  info.chain = {info.generator};
  return induced_module(g, n, 0, std::move(info));
}

RepresentationSpace hilbert_module(const GraphPtr& g, VertexId v, const StructureAlgebra& D,
                                   const std::map<Arrow, DivisionAlgebraElement>& images, std::int64_t window) {
  GhostModule n;
  for (std::size_t i = 0; i < D.dimension(); ++i) n.add(D.label(i), v);
  bool any = false;
  std::vector<DivisionAlgebraElement> gens;
  ModuleInfo info;
  info.construction = "hilbert";
  info.params = {{"vertex", g->vertex_name(v)}, {"algebra", D.name()}};
  for (const auto& [a, x] : images) {
    require_loop(*g, a, v);
    if (x.size() != D.dimension()) throw PreconditionError("image has the wrong dimension");
    info.params.emplace_back(g->arrow_name(a), D.format(x));
    if (std::all_of(x.begin(), x.end(), [](const Scalar& c) { return c.is_zero(); })) continue;
    any = true;
    gens.push_back(x);
    for (std::size_t j = 0; j < D.dimension(); ++j) {
      DivisionAlgebraElement y = D.multiply(x, D.basis(j));
      for (std::size_t k = 0; k < D.dimension(); ++k) n.set(a, j, k, y[k]);
    }
  }
  if (!any) throw PreconditionError("all loop images are zero");
  if (D.generated_dimension(gens) != D.dimension())
    info.notes.push_back("images generate a proper subalgebra");
  DivisionAlgebraElement one = D.one();
  for (std::size_t k = 0; k < D.dimension(); ++k)
    if (!one[k].is_zero()) info.generator[at_seed(n, k)] = one[k];
  info.chain = {info.generator};
  return induced_module(g, n, window, std::move(info));
}

RepresentationSpace mantese_module(const GraphPtr& g, VertexId v, const std::map<Arrow, Scalar>& r,
                                   std::int64_t window) {
  std::size_t loops = 0;
  bool family_loop = false;
  for (std::size_t i = 0; i < g->decl_count(); ++i) {
    const ArrowDecl& d = g->decl(i);
    if (d.src == v && d.dst == v) {
      ++loops;
      family_loop = family_loop || d.family;
    }
  }
  if (loops < 2 && !family_loop) throw PreconditionError("the vertex needs at least two loops");
  GhostModule n;
  n.add(g->vertex_name(v), v);
  ModuleInfo info;
  info.construction = "mantese";
  info.params = {{"vertex", g->vertex_name(v)}};
  bool any = false;
  for (const auto& [a, c] : r) {
    require_loop(*g, a, v);
    info.params.emplace_back(g->arrow_name(a), c.to_string());
    if (c.is_zero()) continue;
    any = true;
    n.set(a, 0, 0, c);
  }
  if (!any) throw PreconditionError("the tuple r must be nonzero");
  info.generator = {{at_seed(n, 0), Scalar(1)}};
  RepresentationSpace R = induced_module(g, n, window, info);
  if (g->classify(v) == VertexKind::infinite_emitter) {
    AlgebraElement f = -AlgebraElement::vertex(g, v);
    for (const auto& [a, c] : r) f += c * AlgebraElement::real(g, arrow_path(*g, a));
    R.info().chain = {apply(R, f, info.generator), info.generator};
  } else {
    R.info().chain = {info.generator};
  }
  return R;
}

namespace {

Polynomial checked_periodic_polynomial(const DiGraph& g, const Path& delta, const Polynomial& q,
                                       ModuleInfo& info) {
  if (!is_period(g, delta)) throw PreconditionError("delta is not a period");
  if (q.degree() < 1) throw PreconditionError("q must have positive degree");
  if (q.coeff(0).is_zero()) throw PreconditionError("q(0) must be nonzero");
  Irreducibility irr = is_irreducible(q);
  if (irr.kind == Irreducibility::no) throw PreconditionError("q is reducible");
  if (irr.kind == Irreducibility::unverified) info.notes.push_back("irreducibility of q is unverified");
  Scalar lead = q.lead().inverse();
  std::vector<Scalar> c;
  for (const Scalar& x : q.c) c.push_back(x * lead);
  info.params = {{"period", format_path(g, delta)}, {"poly", scalar_list(q.c)}};
  return Polynomial(c);
}

Path power(const Path& p, std::size_t k) {
  Path out{p.start, {}};
  for (std::size_t i = 0; i < k; ++i) out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

}  // namespace

RepresentationSpace rangaswamy_module_infinite(const GraphPtr& g, const Path& delta, const Polynomial& q,
                                               std::int64_t window) {
  ModuleInfo info;
  info.construction = "rangaswamy-infinite";
  Polynomial m = checked_periodic_polynomial(*g, delta, q, info);
  VertexId v = delta.start;
  if (g->classify(v) != VertexKind::infinite_emitter) throw PreconditionError("delta must start at an infinite emitter");
  std::size_t n = delta.length(), l = static_cast<std::size_t>(m.degree());

  GhostModule N;
  for (std::size_t i = 0; i < n * l; ++i) N.add("h*(" + std::to_string(i) + ")", g->source(delta.arrows[i % n]));
  for (std::size_t i = 0; i + 1 < n * l; ++i) N.set(delta.arrows[i % n], i, i + 1, Scalar(1));
  for (std::size_t j = 0; j < l; ++j) N.set(delta.arrows[n - 1], n * l - 1, n * j, -m.coeff(j));

  info.generator = {{at_seed(N, 0), Scalar(1)}};
  RepresentationSpace R = induced_module(g, N, window, info);

  Polynomial qs = reciprocal_polynomial(m);
  AlgebraElement qd(g);
  for (std::size_t j = 0; j <= static_cast<std::size_t>(qs.degree()); ++j)
    qd += qs.coeff(j) * (j == 0 ? AlgebraElement::vertex(g, v) : AlgebraElement::real(g, power(delta, j)));
  ModuleVector z = apply(R, qd, R.info().generator);
  std::vector<ModuleVector> zs{z};
  AlgebraElement ds = AlgebraElement::ghost(g, delta);
  for (std::size_t i = 1; i < l; ++i) zs.push_back(apply(R, ds, zs.back()));
  std::reverse(zs.begin(), zs.end());
  zs.push_back(R.info().generator);
  R.info().chain = zs;
  return R;
}

RepresentationSpace rangaswamy_module_regular(const GraphPtr& g, const Path& delta, const Polynomial& q,
                                              std::int64_t window) {
  ModuleInfo info;
  info.construction = "rangaswamy-regular";
  Polynomial m = checked_periodic_polynomial(*g, delta, q, info);
  for (const Arrow& a : delta.arrows)
    if (!g->is_regular(g->source(a))) throw PreconditionError("every vertex of delta must be regular");
  std::size_t n = delta.length(), l = static_cast<std::size_t>(m.degree()), nl = n * l;
  Path D = power(delta, l);

  Polynomial qs = reciprocal_polynomial(m);
  Scalar k = qs.lead();
  std::vector<Scalar> q1c(l), pc(l);
  for (std::size_t j = 0; j < l; ++j) {
    q1c[j] = -qs.coeff(j);
    pc[j] = -qs.coeff(j + 1);
  }

  auto seeds = std::make_shared<TableSeeds>();
  std::vector<Label> t;
  for (std::size_t i = 0; i < nl; ++i) {
    VertexId sec = i == 0 ? delta.start : g->source(D.arrows[nl - i]);
    seeds->add_seed("t(" + std::to_string(i) + ")", sec);
    t.push_back(Label{vertex_path(sec), i});
  }
  for (std::size_t i = 0; i + 1 < nl; ++i) seeds->set_rewrite(D.arrows[nl - i - 1], i, {{t[i + 1], Scalar(1)}});
  ModuleVector wrap;
  for (std::size_t j = 0; j < l; ++j) axpy(wrap, q1c[j] / k, ModuleVector{{t[n * j], Scalar(1)}});
  seeds->set_rewrite(D.arrows[0], nl - 1, wrap);
  for (std::size_t i = 1; i < nl; ++i) seeds->set_ghost(D.arrows[nl - i], i, {{t[i - 1], Scalar(1)}});
  ModuleVector back;
  for (std::size_t j = 0; j < l; ++j) axpy(back, pc[j], ModuleVector{{t[n * j + n - 1], Scalar(1)}});
  seeds->set_ghost(D.arrows[0], 0, back);

  info.generator = {{t[0], Scalar(1)}};
  info.chain = {info.generator};
  return RepresentationSpace(g, seeds, window, std::move(info));
}

RepresentationSpace linear_example_module(const GraphPtr& g, VertexId v, LinearVariant variant, std::int64_t window) {
  Arrow a = g->arrow("a"), b = g->arrow("b");
  require_loop(*g, a, v);
  require_loop(*g, b, v);
  ModuleInfo info;
  info.params = {{"vertex", g->vertex_name(v)}};
  AlgebraElement f = AlgebraElement::vertex(g, v) - AlgebraElement::real(g, arrow_path(*g, a)) -
                     AlgebraElement::real(g, Path{v, {a, b}});

  std::optional<RepresentationSpace> R;
  if (variant == LinearVariant::displayed) {
    info.construction = "linear-displayed";
    auto seeds = std::make_shared<TableSeeds>();
    seeds->add_seed(g->vertex_name(v), v);
    seeds->add_seed("a*", v);
    Label sv{vertex_path(v), 0}, sa{vertex_path(v), 1};
    seeds->set_ghost(a, 0, {{sa, Scalar(1)}});
    seeds->set_ghost(a, 1, {{sa, Scalar(1)}});
    seeds->set_ghost(b, 1, {{sv, Scalar(1)}});
    seeds->set_rewrite(a, 1, {{sv, Scalar(1)}});
    info.generator = {{sv, Scalar(1)}};
    R.emplace(g, seeds, window, info);
  } else {
    GhostModule n;
    n.add(g->vertex_name(v), v);
    n.add("a*", v);
    n.set(a, 0, 1, Scalar(1));
    n.set(a, 1, 1, Scalar(1));
    n.set(b, 1, 0, Scalar(1));
    if (variant == LinearVariant::nonlinear) {
      info.construction = "nonlinear";
      n.set(a, 1, 0, Scalar(1));
      f -= AlgebraElement::real(g, Path{v, {a, a}});
    } else {
      info.construction = "linear";
    }
    info.generator = {{at_seed(n, 0), Scalar(1)}};
    R.emplace(induced_module(g, n, window, info));
  }
  ModuleVector fbar = apply(*R, f, R->info().generator);
  R->info().chain = {apply(*R, AlgebraElement::ghost(g, arrow_path(*g, a)), fbar), fbar, R->info().generator};
  return *R;
}

RepresentationSpace quotient_module(const CosetBasis& B, std::int64_t window) {
  if (!B.certified && !(B.codescription && B.stabilized))
    throw PreconditionError("the quotient is not certified finite");
  const GraphPtr& g = B.graph;
  GhostModule n;
  std::map<Word, std::size_t> index;
  for (const Word& w : B.basis) index[w] = n.add(format_word(*g, w), w.vertex);
  for (const Word& w : B.basis) {
    for (const Arrow& x : g->arrows(window)) {
      auto p = prepend(*g, x, w);
      if (!p) continue;
      for (const auto& [u, c] : B.reduce(WordVector{{*p, Scalar(1)}})) n.set(x, index.at(w), index.at(u), c);
    }
  }
  ModuleInfo info;
  info.construction = "quotient";
  info.params = {{"codim", std::to_string(B.basis.size())}};
  for (const Word& w : B.basis)
    if (w.length() == 0) info.generator[at_seed(n, index.at(w))] = Scalar(1);
  info.chain = {info.generator};
  return induced_module(g, n, window, std::move(info));
}

RepresentationSpace decomposable_toy() {
  auto g = std::make_shared<const DiGraph>(DiGraph::build({"w"}, {}));
  auto seeds = std::make_shared<TableSeeds>();
  seeds->add_seed("s1", 0);
  seeds->add_seed("s2", 0);
  ModuleInfo info;
  info.construction = "toy";
  info.generator = {{Label{vertex_path(0), 0}, Scalar(1)}};
  info.chain = {info.generator};
  return RepresentationSpace(g, seeds, 0, std::move(info));
}

}  // namespace lpa
