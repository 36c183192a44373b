#include "lpa/representation.hpp"

#include <algorithm>
#include <functional>

#include "lpa/errors.hpp"

namespace lpa {

std::size_t TableSeeds::add_seed(std::string name, VertexId sector) {
  names_.push_back(std::move(name));
  sectors_.push_back(sector);
  return names_.size() - 1;
}

void TableSeeds::set_ghost(const Arrow& a, std::size_t s, ModuleVector image) {
  if (image.empty()) {
    ghost_.erase({a, s});
  } else {
    ghost_[{a, s}] = std::move(image);
  }
}

void TableSeeds::set_rewrite(const Arrow& a, std::size_t s, ModuleVector image) {
  rewrite_[{a, s}] = std::move(image);
}

std::optional<ModuleVector> TableSeeds::rewrite(const Arrow& a, std::size_t s) const {
  auto it = rewrite_.find({a, s});
  if (it == rewrite_.end()) return std::nullopt;
  return it->second;
}

ModuleVector TableSeeds::ghost(const Arrow& a, std::size_t s) const {
  auto it = ghost_.find({a, s});
  return it == ghost_.end() ? ModuleVector{} : it->second;
}

RepresentationSpace::RepresentationSpace(GraphPtr g, std::shared_ptr<const SeedModel> seeds, std::int64_t window,
                                         ModuleInfo info)
    : g_(std::move(g)), seeds_(std::move(seeds)), window_(window), info_(std::move(info)) {
  if (!g_ || !seeds_) throw PreconditionError("representation needs a graph and a seed model");
}

Label RepresentationSpace::seed_label(std::size_t s) const { return Label{vertex_path(seeds_->sector(s)), s}; }

std::size_t RepresentationSpace::degree(const Label& l) const { return l.mu.length() + seeds_->seed_degree(l.seed); }

std::size_t RepresentationSpace::degree(const ModuleVector& v) const {
  std::size_t d = 0;
  for (const auto& [l, c] : v) d = std::max(d, degree(l));
  return d;
}

bool RepresentationSpace::is_label(const Label& l) const {
  if (!is_valid_path(*g_, l.mu)) return false;
  if (path_range(*g_, l.mu) != seeds_->sector(l.seed)) return false;
  return l.mu.empty() || !seeds_->rewrite(l.mu.arrows.back(), l.seed).has_value();
}

std::vector<Label> RepresentationSpace::basis(std::size_t d) const {
  std::vector<Label> out;
  std::size_t n = seeds_->seeds_up_to(d);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t ds = seeds_->seed_degree(s);
    if (ds > d) continue;
    std::size_t room = d - ds;
    std::function<void(const Path&)> grow = [&](const Path& mu) {
      out.push_back(Label{mu, s});
      if (mu.length() == room) return;
      for (const Arrow& a : g_->in_arrows(mu.start, window_)) {
        if (mu.empty() && seeds_->rewrite(a, s)) continue;
        Path next{g_->source(a), {a}};
        next.arrows.insert(next.arrows.end(), mu.arrows.begin(), mu.arrows.end());
        grow(next);
      }
    };
    grow(vertex_path(seeds_->sector(s)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Action> RepresentationSpace::actions() const {
  std::vector<Action> out;
  for (VertexId u = 0; u < g_->vertex_count(); ++u) out.push_back(Action::at(u));
  for (const Arrow& a : g_->arrows(window_)) out.push_back(Action::of(a));
  for (const Arrow& a : g_->arrows(window_)) out.push_back(Action::star(a));
  return out;
}

ModuleVector RepresentationSpace::act(const Action& x, const Label& l) const {
  if (!overrides_.empty()) {
    auto it = overrides_.find({x, l});
    if (it != overrides_.end()) return it->second;
  }
  switch (x.kind) {
    case Action::vertex:
      if (l.mu.start == x.v) return {{l, Scalar(1)}};
      return {};
    case Action::real: {
      if (g_->range(x.a) != l.mu.start) return {};
      if (l.mu.empty()) {
        if (auto r = seeds_->rewrite(x.a, l.seed)) return *r;
      }
      Label out{Path{g_->source(x.a), {x.a}}, l.seed};
      out.mu.arrows.insert(out.mu.arrows.end(), l.mu.arrows.begin(), l.mu.arrows.end());
      return {{out, Scalar(1)}};
    }
    case Action::ghost: {
      if (g_->source(x.a) != l.mu.start) return {};
      if (l.mu.empty()) return seeds_->ghost(x.a, l.seed);
      if (l.mu.arrows.front() != x.a) return {};
      return {{Label{tail(*g_, l.mu, 1), l.seed}, Scalar(1)}};
    }
  }
  return {};
}

ModuleVector RepresentationSpace::act(const Action& x, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [l, c] : v) axpy(out, c, act(x, l));
  return out;
}

void RepresentationSpace::override_action(const Action& x, const Label& l, ModuleVector image) {
  overrides_[{x, l}] = std::move(image);
}

std::string RepresentationSpace::format(const Label& l) const {
  std::string name = "[" + seeds_->seed_name(l.seed) + "]";
  if (l.mu.empty()) return name;
  return format_path(*g_, l.mu) + "." + name;
}

std::string RepresentationSpace::format(const ModuleVector& v) const {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const Scalar& c = it->second;
    bool negative = c.modulus() == 0 && c.value() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.to_string() + " ";
    out += format(it->first);
    first = false;
  }
  return out;
}

ModuleVector apply_path(const RepresentationSpace& R, const Path& mu, const ModuleVector& m) {
  ModuleVector v = R.act(Action::at(path_range(*R.graph(), mu)), m);
  for (auto it = mu.arrows.rbegin(); it != mu.arrows.rend() && !v.empty(); ++it) v = R.act(Action::of(*it), v);
  return v;
}

ModuleVector apply(const RepresentationSpace& R, const AlgebraElement& x, const ModuleVector& m) {
  if (x.graph() != R.graph() && x.graph()->to_text() != R.graph()->to_text())
    throw PreconditionError("element and module live over different graphs");
  ModuleVector out;
  for (const auto& [mono, c] : x.terms()) {
    ModuleVector v = R.act(Action::at(mono.beta.start), m);
    for (auto it = mono.beta.arrows.begin(); it != mono.beta.arrows.end() && !v.empty(); ++it)
      v = R.act(Action::star(*it), v);
    v = apply_path(R, mono.alpha, v);
    axpy(out, c, v);
  }
  return out;
}

namespace {

ModuleVector minus(ModuleVector a, const ModuleVector& b) {
  axpy(a, Scalar(-1), b);
  return a;
}

}  // namespace

VerifyReport verify_representation(const RepresentationSpace& R, std::size_t d) {
  const DiGraph& g = *R.graph();
  VerifyReport rep;
  auto arrows = g.arrows(R.window());
  std::vector<VertexId> regular;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (g.is_regular(u)) regular.push_back(u);

  auto fail = [&](const Label& l, const std::string& what) {
    rep.pass = false;
    rep.violation = what + " at " + R.format(l);
  };

  for (const Label& l : R.basis(d)) {
    ++rep.labels_checked;
    ModuleVector e{{l, Scalar(1)}};

    std::size_t hits = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      ModuleVector x = R.act(Action::at(u), e);
      if (x == e) {
        ++hits;
      } else if (!x.empty()) {
        fail(l, "vertex " + g.vertex_name(u) + " is not idempotent");
        return rep;
      }
    }
    if (hits != 1) {
      fail(l, "vertices do not partition");
      return rep;
    }

    for (const Arrow& a : arrows) {
      ModuleVector x = R.act(Action::of(a), e);
      if (R.act(Action::at(g.source(a)), x) != x ||
          R.act(Action::of(a), R.act(Action::at(g.range(a)), e)) != x) {
        fail(l, "arrow " + g.arrow_name(a) + " is incompatible with its endpoints");
        return rep;
      }
      ModuleVector y = R.act(Action::star(a), e);
      if (R.act(Action::at(g.range(a)), y) != y ||
          R.act(Action::star(a), R.act(Action::at(g.source(a)), e)) != y) {
        fail(l, "ghost " + g.arrow_name(a) + "* is incompatible with its endpoints");
        return rep;
      }
    }

    for (const Arrow& b : arrows) {
      ModuleVector x = R.act(Action::of(b), e);
      for (const Arrow& a : arrows) {
        ModuleVector lhs = R.act(Action::star(a), x);
        ModuleVector rhs = a == b ? R.act(Action::at(g.range(a)), e) : ModuleVector{};
        if (lhs != rhs) {
          fail(l, "CK1 fails for " + g.arrow_name(a) + "*, " + g.arrow_name(b));
          return rep;
        }
      }
    }

    for (VertexId u : regular) {
      ModuleVector sum;
      for (const Arrow& a : g.out_arrows(u)) axpy(sum, Scalar(1), R.act(Action::of(a), R.act(Action::star(a), e)));
      if (!minus(sum, R.act(Action::at(u), e)).empty()) {
        fail(l, "CK2 fails at " + g.vertex_name(u));
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace lpa
