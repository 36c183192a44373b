#include "lpa/probes.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

/// Echelon that remembers each row as a combination of the inserted vectors.
class TrackedEchelon {
 public:
  struct Reduced {
    ModuleVector rest;
    SparseVector<std::size_t> combination;
  };

  Reduced reduce(ModuleVector v) const {
    Reduced out;
    while (!v.empty()) {
      auto it = std::prev(v.end());
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        out.rest.insert(out.rest.begin(), *it);
        v.erase(it);
      } else {
        Scalar c = it->second;
        axpy(v, -c, row->second.first);
        axpy(out.combination, c, row->second.second);
      }
    }
    return out;
  }

  bool insert(const ModuleVector& v, std::size_t id) {
    Reduced r = reduce(v);
    if (r.rest.empty()) return false;
    SparseVector<std::size_t> comb{{id, Scalar(1)}};
    axpy(comb, Scalar(-1), r.combination);
    Scalar inv = std::prev(r.rest.end())->second.inverse();
    rows_.emplace(std::prev(r.rest.end())->first, std::make_pair(scaled(r.rest, inv), scaled(comb, inv)));
    return true;
  }

 private:
  std::map<Label, std::pair<ModuleVector, SparseVector<std::size_t>>> rows_;
};

bool pure_prepend(const RepresentationSpace& R, const Arrow& a, const ModuleVector& x) {
  const DiGraph& g = *R.graph();
  for (const auto& [l, c] : x) {
    ModuleVector y = R.act(Action::of(a), l);
    if (y.empty()) continue;
    Label p{Path{g.source(a), {a}}, l.seed};
    p.mu.arrows.insert(p.mu.arrows.end(), l.mu.arrows.begin(), l.mu.arrows.end());
    if (y.size() != 1 || y.begin()->first != p || !y.begin()->second.is_one()) return false;
  }
  return true;
}

/// Null space of the sparse system given by `rows` in `n` unknowns.
std::vector<SparseVector<std::size_t>> sparse_nullspace(const std::vector<SparseVector<std::size_t>>& rows,
                                                       std::size_t n) {
  Echelon<std::size_t> e;
  for (const auto& r : rows) e.insert(r);
  e.interreduce();
  std::vector<SparseVector<std::size_t>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (e.is_pivot(f)) continue;
    SparseVector<std::size_t> x{{f, Scalar(1)}};
    for (const auto& [p, row] : e.rows()) {
      auto it = row.find(f);
      if (it != row.end()) x[p] = -it->second;
    }
    out.push_back(std::move(x));
  }
  return out;
}

ModuleVector random_vector(const std::vector<Label>& labels, std::mt19937_64& rng) {
  ModuleVector v;
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<int> count(1, 3), coeff(-3, 3);
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    int c = 0;
    while (c == 0) c = coeff(rng);
    axpy(v, Scalar(c), ModuleVector{{labels[pick(rng)], Scalar(1)}});
  }
  return v;
}

}  // namespace

Closure cyclic_closure(const RepresentationSpace& R, const std::vector<ModuleVector>& start, std::size_t d) {
  Closure c;
  c.degree = d;
  auto actions = R.actions();
  std::deque<std::size_t> queue;
  auto consider = [&](const ModuleVector& v) {
    if (v.empty() || !c.span.insert(v)) return;
    c.vectors.push_back(v);
    queue.push_back(c.vectors.size() - 1);
  };
  for (const ModuleVector& m : start) {
    if (R.degree(m) > d) throw PreconditionError("start vector exceeds the degree bound");
    consider(m);
  }
  while (!queue.empty()) {
    ModuleVector x = c.vectors[queue.front()];
    queue.pop_front();
    for (const Action& a : actions) {
      ModuleVector y = R.act(a, x);
      if (y.empty()) continue;
      if (R.degree(y) <= d) {
        consider(y);
      } else if (a.kind != Action::real || !pure_prepend(R, a.a, x)) {
        c.sealed = false;
      }
    }
  }
  c.span.interreduce();
  return c;
}

std::vector<ModuleVector> cyclic_submodule(const RepresentationSpace& R, const ModuleVector& m, std::size_t d) {
  if (m.empty()) return {};
  Closure c = cyclic_closure(R, {m}, d);
  std::vector<ModuleVector> out;
  for (const auto& [k, row] : c.span.rows()) out.push_back(row);
  return out;
}

std::string SimplicityVerdict::to_string() const {
  switch (kind) {
    case witnessed_simple_up_to:
      return "witnessed_simple_up_to(" + std::to_string(degree) + ")";
    case proper_submodule:
      return "proper_submodule(dim " + std::to_string(witness_dimension) + ")";
    case inconclusive:
      break;
  }
  return "inconclusive(" + std::to_string(degree) + ")";
}

SimplicityVerdict simplicity_probe(const RepresentationSpace& R, std::size_t d, std::size_t samples,
                                   std::uint64_t seed) {
  const ModuleVector& g = R.info().generator;
  if (g.empty()) throw PreconditionError("module has no designated generator");
  SimplicityVerdict out;
  out.degree = d;

  std::vector<Label> labels = R.basis(d);
  std::vector<ModuleVector> candidates;

  constexpr std::size_t kernel_cap = 1500, kernel_take = 40;
  if (labels.size() <= kernel_cap) {
    std::map<std::pair<Arrow, Label>, SparseVector<std::size_t>> eqs;
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (const Arrow& a : R.graph()->arrows(R.window()))
        for (const auto& [l, c] : R.act(Action::star(a), labels[i])) eqs[{a, l}][i] = c;
    std::vector<SparseVector<std::size_t>> rows;
    for (auto& [k, r] : eqs) rows.push_back(std::move(r));
    auto kernel = sparse_nullspace(rows, labels.size());
    for (std::size_t i = 0; i < kernel.size() && i < kernel_take; ++i) {
      ModuleVector v;
      for (const auto& [j, c] : kernel[i]) v[labels[j]] = c;
      candidates.push_back(std::move(v));
    }
  }
  for (const Label& l : labels) candidates.push_back({{l, Scalar(1)}});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples && !labels.empty(); ++i) {
    ModuleVector v = random_vector(labels, rng);
    if (!v.empty()) candidates.push_back(std::move(v));
  }

  bool open = false;
  for (const ModuleVector& m : candidates) {
    ++out.candidates;
    Closure c = cyclic_closure(R, {m}, d);
    if (c.contains(g)) continue;
    if (cyclic_closure(R, {m}, d + 1).contains(g) || cyclic_closure(R, {m}, d + 2).contains(g)) continue;
    if (c.sealed) {
      out.kind = SimplicityVerdict::proper_submodule;
      out.witness = m;
      out.witness_dimension = c.dimension();
      return out;
    }
    open = true;
  }
  out.kind = open ? SimplicityVerdict::inconclusive : SimplicityVerdict::witnessed_simple_up_to;
  return out;
}

std::size_t CompositionReport::count_typed(VertexId u) const {
  return static_cast<std::size_t>(std::count(typed.begin(), typed.end(), std::optional<VertexId>(u)));
}

CompositionReport composition_probe(const RepresentationSpace& R, const std::vector<ModuleVector>& chain,
                                    std::size_t d) {
  const DiGraph& g = *R.graph();
  CompositionReport rep;
  std::optional<Closure> prev;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Closure c = cyclic_closure(R, {chain[i]}, d);
    if (prev) {
      for (const ModuleVector& v : prev->vectors) {
        if (!c.contains(v)) {
          rep.increasing = false;
          rep.problem = "step " + std::to_string(i) + " does not contain step " + std::to_string(i - 1);
        }
      }
      if (c.dimension() <= prev->dimension()) {
        rep.increasing = false;
        if (rep.problem.empty()) rep.problem = "step " + std::to_string(i) + " is not strictly larger";
      }
    } else if (c.dimension() == 0) {
      rep.increasing = false;
      rep.problem = "first generator is zero";
    }
    rep.dimensions.push_back(c.dimension());

    std::optional<VertexId> type;
    for (VertexId u = 0; u < g.vertex_count() && !type; ++u) {
      if (R.act(Action::at(u), chain[i]) != chain[i]) continue;
      bool killed = true;
      for (const Arrow& b : g.out_arrows(u, R.window())) {
        ModuleVector y = R.act(Action::star(b), chain[i]);
        if (y.empty()) continue;
        if (!prev || !prev->contains(y)) {
          killed = false;
          break;
        }
      }
      if (killed) type = u;
    }
    rep.typed.push_back(type);
    prev = std::move(c);
  }
  return rep;
}

std::optional<DenseVector> Endomorphisms::compose(const DenseVector& x, const DenseVector& y) const {
  DenseVector out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (y[j].is_zero()) continue;
      if (!table[i][j]) return std::nullopt;
      for (std::size_t k = 0; k < dimension(); ++k) out[k] += x[i] * y[j] * (*table[i][j])[k];
    }
  }
  return out;
}

namespace {

using Program = std::vector<Action>;

ModuleVector run(const RepresentationSpace& R, const Program& p, ModuleVector v) {
  for (const Action& a : p) {
    if (v.empty()) break;
    v = R.act(a, v);
  }
  return v;
}

/// Images of labels under a map given on seeds.
ModuleVector extend(const RepresentationSpace& R, const std::map<std::size_t, ModuleVector>& seeds,
                    const ModuleVector& v, bool& complete) {
  ModuleVector out;
  for (const auto& [l, c] : v) {
    auto it = seeds.find(l.seed);
    if (it == seeds.end()) {
      complete = false;
      continue;
    }
    axpy(out, c, apply_path(R, l.mu, it->second));
  }
  return out;
}

}  // namespace

Endomorphisms endomorphism_probe(const RepresentationSpace& R, std::size_t d) {
  constexpr std::size_t cap = 4000;
  const DiGraph& g = *R.graph();
  const ModuleVector& gen = R.info().generator;
  if (gen.empty()) throw PreconditionError("module has no designated generator");
  if (d == 0) throw PreconditionError("degree bound must be positive");
  Endomorphisms E;
  E.degree = d;

  std::size_t nseeds = R.seeds().seeds_up_to(d);
  std::vector<std::size_t> targets;
  for (std::size_t s = 0; s < nseeds; ++s)
    if (R.seeds().seed_degree(s) <= d) targets.push_back(s);

  TrackedEchelon reach;
  std::vector<Program> programs;
  std::vector<ModuleVector> reached;
  std::map<std::size_t, SparseVector<std::size_t>> expr;
  std::deque<std::size_t> queue;
  auto actions = R.actions();
  auto try_targets = [&] {
    for (std::size_t s : targets) {
      if (expr.count(s)) continue;
      auto r = reach.reduce(R.seed_vector(s));
      if (r.rest.empty()) expr[s] = r.combination;
    }
  };
  auto consider = [&](ModuleVector v, Program p) {
    if (v.empty() || R.degree(v) > d) return;
    if (!reach.insert(v, programs.size())) return;
    programs.push_back(std::move(p));
    reached.push_back(std::move(v));
    queue.push_back(programs.size() - 1);
    try_targets();
  };
  consider(gen, {});
  while (!queue.empty() && expr.size() < targets.size()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const Action& a : actions) {
      Program p = programs[k];
      p.push_back(a);
      consider(R.act(a, reached[k]), std::move(p));
    }
  }
  for (std::size_t s : targets)
    if (!expr.count(s)) E.unreached.push_back(s);

  std::vector<Label> unknowns = R.basis(d - 1);
  if (unknowns.size() > cap) throw PreconditionError("slice too large for the endomorphism probe");
  std::size_t n = unknowns.size();

  // phi_j(s) for the map sending the generator to unknowns[j].
  std::vector<std::map<std::size_t, ModuleVector>> images(n);
  for (std::size_t j = 0; j < n; ++j) {
    ModuleVector z{{unknowns[j], Scalar(1)}};
    for (const auto& [s, comb] : expr) {
      ModuleVector v;
      for (const auto& [k, c] : comb) axpy(v, c, run(R, programs[k], z));
      images[j][s] = std::move(v);
    }
  }

  std::vector<SparseVector<std::size_t>> rows;
  auto collect = [&](const std::function<ModuleVector(std::size_t, bool&)>& residual) {
    std::map<Label, SparseVector<std::size_t>> local;
    for (std::size_t j = 0; j < n; ++j) {
      bool complete = true;
      ModuleVector r = residual(j, complete);
      if (!complete) return;
      for (const auto& [l, c] : r) local[l][j] = c;
    }
    for (auto& [l, row] : local) rows.push_back(std::move(row));
  };
  collect([&](std::size_t j, bool& complete) {
    ModuleVector r = extend(R, images[j], gen, complete);
    axpy(r, Scalar(-1), ModuleVector{{unknowns[j], Scalar(1)}});
    return r;
  });
  for (const auto& [s, comb] : expr) {
    VertexId sec = R.seeds().sector(s);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (u == sec) continue;
      collect([&](std::size_t j, bool&) { return R.act(Action::at(u), images[j].at(s)); });
    }
    for (const Arrow& a : g.arrows(R.window())) {
      if (g.source(a) == sec) {
        ModuleVector gs = R.seeds().ghost(a, s);
        collect([&](std::size_t j, bool& complete) {
          ModuleVector r = R.act(Action::star(a), images[j].at(s));
          axpy(r, Scalar(-1), extend(R, images[j], gs, complete));
          return r;
        });
      }
      if (g.range(a) == sec) {
        if (auto rw = R.seeds().rewrite(a, s)) {
          collect([&](std::size_t j, bool& complete) {
            ModuleVector r = R.act(Action::of(a), images[j].at(s));
            axpy(r, Scalar(-1), extend(R, images[j], *rw, complete));
            return r;
          });
        }
      }
    }
  }

  for (const auto& x : sparse_nullspace(rows, n)) {
    ModuleVector z;
    std::map<std::size_t, ModuleVector> seeds;
    for (const auto& [j, c] : x) {
      z[unknowns[j]] = c;
      for (const auto& [s, v] : images[j]) axpy(seeds[s], c, v);
    }
    E.basis.push_back(std::move(z));
    E.seed_images.push_back(std::move(seeds));
  }

  TrackedEchelon coords;
  for (std::size_t i = 0; i < E.basis.size(); ++i) coords.insert(E.basis[i], i);
  E.table.assign(E.dimension(), std::vector<std::optional<DenseVector>>(E.dimension()));
  for (std::size_t i = 0; i < E.dimension(); ++i) {
    for (std::size_t j = 0; j < E.dimension(); ++j) {
      bool complete = true;
      ModuleVector w = extend(R, E.seed_images[i], E.basis[j], complete);
      if (!complete) continue;
      auto r = coords.reduce(w);
      if (!r.rest.empty()) continue;
      DenseVector c(E.dimension());
      for (const auto& [k, x] : r.combination) c[k] = x;
      E.table[i][j] = std::move(c);
    }
  }
  return E;
}

ModuleVector apply_endomorphism(const RepresentationSpace& R, const Endomorphisms& E, std::size_t i,
                                const ModuleVector& v) {
  bool complete = true;
  ModuleVector out = extend(R, E.seed_images.at(i), v, complete);
  if (!complete) throw PreconditionError("vector involves seeds beyond the probe bound");
  return out;
}

std::size_t endomorphism_residual(const RepresentationSpace& R, const Endomorphisms& E, std::size_t i,
                                  std::size_t d) {
  std::size_t failures = 0;
  for (const Label& l : R.basis(d)) {
    ModuleVector e{{l, Scalar(1)}};
    bool complete = true;
    ModuleVector fl = extend(R, E.seed_images.at(i), e, complete);
    if (!complete) continue;
    for (const Action& a : R.actions()) {
      bool ok = true;
      ModuleVector lhs = extend(R, E.seed_images.at(i), R.act(a, e), ok);
      if (!ok) continue;
      if (lhs != R.act(a, fl)) ++failures;
    }
  }
  return failures;
}

}  // namespace lpa
