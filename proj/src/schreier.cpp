#include "lpa/schreier.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

// ---- words -----------------------------------------------------------------

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
  if (auto c = a.letters <=> b.letters; c != 0) return c;
  return a.vertex <=> b.vertex;
}

Word vertex_word(VertexId v) { return Word{v, {}}; }

VertexId right_vertex(const DiGraph& g, const Word& w) {
  return w.letters.empty() ? w.vertex : g.source(w.letters.back());
}

std::optional<Word> prepend(const DiGraph& g, const Arrow& x, const Word& w) {
  if (g.source(x) != w.vertex) return std::nullopt;
  Word out{g.range(x), {x}};
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

std::optional<Word> concat(const DiGraph& g, const Word& u, const Word& w) {
  if (right_vertex(g, u) != w.vertex) return std::nullopt;
  Word out = u;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

Word suffix(const DiGraph& g, const Word& w) {
  if (w.letters.empty()) throw PreconditionError("a vertex word has no proper tail");
  return Word{g.source(w.letters.front()), std::vector<Arrow>(w.letters.begin() + 1, w.letters.end())};
}

std::string format_word(const DiGraph& g, const Word& w) {
  if (w.letters.empty()) return g.vertex_name(w.vertex);
  std::string out;
  for (const auto& x : w.letters) out += g.arrow_name(x) + "*";
  return out;
}

std::vector<Word> words_of_length(const DiGraph& g, std::size_t l, std::int64_t window) {
  std::vector<Word> level;
  for (VertexId v = 0; v < g.vertex_count(); ++v) level.push_back(vertex_word(v));
  for (std::size_t k = 0; k < l; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (const auto& x : g.out_arrows(w.vertex, window)) next.push_back(*prepend(g, x, w));
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<Word> all_words(const DiGraph& g, std::size_t d, std::int64_t window) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= d; ++l) {
    auto level = words_of_length(g, l, window);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Word word_of(const DiGraph& g, const Monomial& m) {
  if (!m.alpha.empty()) throw PreconditionError("monomial is not purely ghost");
  (void)g;
  return Word{m.alpha.start, std::vector<Arrow>(m.beta.arrows.rbegin(), m.beta.arrows.rend())};
}

Monomial monomial_of(const DiGraph& g, const Word& w) {
  Path beta{right_vertex(g, w), std::vector<Arrow>(w.letters.rbegin(), w.letters.rend())};
  return Monomial{vertex_path(w.vertex), beta};
}

WordVector to_words(const AlgebraElement& x) {
  WordVector out;
  for (const auto& [m, c] : x.terms()) {
    if (!m.alpha.empty())
      throw PreconditionError("element " + format_element(x) + " is not purely ghost");
    out.emplace(word_of(*x.graph(), m), c);
  }
  return out;
}

AlgebraElement from_words(const GraphPtr& g, const WordVector& v) {
  AlgebraElement x(g);
  for (const auto& [w, c] : v) x.add_term(monomial_of(*g, w), c);
  return x;
}

WordVector multiply_words(const DiGraph& g, const WordVector& u, const WordVector& v) {
  WordVector out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v)
      if (auto w = concat(g, a, b)) axpy(out, ca * cb, WordVector{{*w, Scalar(1)}});
  return out;
}

// ---- presentations ---------------------------------------------------------

LeftIdealPresentation parse_ideal(GraphPtr g, const Field& k, std::string_view text) {
  LeftIdealPresentation L;
  L.graph = g;
  std::istringstream is{std::string(text)};
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto x = parse_element(g, k, line);
      if (!x.is_pure_ghost()) throw PreconditionError("generator is not purely ghost");
      L.generators.push_back(std::move(x));
    } catch (const std::exception& e) {
      throw ParseError("ideal line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return L;
}

LeftIdealPresentation load_ideal(GraphPtr g, const Field& k, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read ideal file '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal(std::move(g), k, ss.str());
}

// ---- coset bases -----------------------------------------------------------

bool CosetBasis::contains(const Word& w) const { return std::binary_search(basis.begin(), basis.end(), w); }

WordVector CosetBasis::reduce(const WordVector& v) const {
  if (!codescription) return staircase.reduce(v);
  WordVector out;
  for (const auto& [w, c] : v) axpy(out, c, codescription->reduce(w));
  return out;
}

namespace {

bool homogeneous(const AlgebraElement& x) {
  std::optional<std::size_t> d;
  for (const auto& [m, c] : x.terms()) {
    if (d && *d != m.degree()) return false;
    d = m.degree();
  }
  return true;
}

// Action of x* on a quotient vector, via the staircase.
WordVector act(const CosetBasis& B, const Arrow& x, const WordVector& v) {
  const DiGraph& g = *B.graph;
  WordVector lifted;
  for (const auto& [w, c] : v)
    if (auto p = prepend(g, x, w)) axpy(lifted, c, WordVector{{*p, Scalar(1)}});
  return B.reduce(lifted);
}

bool kills_one(const CosetBasis& B, const AlgebraElement& gen) {
  const DiGraph& g = *B.graph;
  WordVector total;
  for (const auto& [w, c] : to_words(gen)) {
    WordVector v = B.reduce({{vertex_word(right_vertex(g, w)), Scalar(1)}});
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = act(B, *it, v);
    axpy(total, c, v);
  }
  return total.empty();
}

}  // namespace

CosetBasis coset_basis(const LeftIdealPresentation& L, std::size_t d) {
  const DiGraph& g = *L.graph;
  CosetBasis B;
  B.graph = L.graph;
  B.degree = d;
  auto words = all_words(g, d, L.window);
  if (L.codescription) {
    B.codescription = L.codescription;
    for (const auto& w : words)
      if (L.codescription->in_basis(w)) B.basis.push_back(w);
    B.stabilized = std::none_of(B.basis.begin(), B.basis.end(), [&](const Word& w) { return w.length() == d; });
    B.certified = B.stabilized;
    B.exact = true;
    return B;
  }
  for (const auto& gen : L.generators) {
    WordVector gv = to_words(gen);
    std::size_t dg = gen.degree();
    if (dg > d) continue;
    for (const auto& m : words) {
      if (m.length() + dg > d) break;
      auto row = multiply_words(g, {{m, Scalar(1)}}, gv);
      if (!row.empty()) B.staircase.insert(row);
    }
  }
  for (const auto& w : words) {
    if (B.staircase.is_pivot(w)) continue;
    if (w.length() == 0 || B.contains(suffix(g, w))) {
      B.basis.push_back(w);
    } else {
      B.stable = false;
    }
  }
  B.stabilized = std::none_of(B.basis.begin(), B.basis.end(), [&](const Word& w) { return w.length() == d; });
  if (B.stable && B.stabilized && !g.has_families()) {
    B.certified = std::all_of(L.generators.begin(), L.generators.end(),
                              [&](const AlgebraElement& gen) { return kills_one(B, gen); });
  }
  B.exact = B.certified || L.generators.empty() ||
            std::all_of(L.generators.begin(), L.generators.end(), homogeneous);
  return B;
}

std::string check_codescription(const LeftIdealPresentation& L, std::size_t d) {
  if (!L.codescription) return "";
  LeftIdealPresentation plain = L;
  plain.codescription.reset();
  auto staircase = coset_basis(plain, d);
  auto described = coset_basis(L, d);
  if (staircase.basis != described.basis) {
    return "basis mismatch at degree " + std::to_string(d) + ": staircase has " +
           std::to_string(staircase.basis.size()) + " words, description has " +
           std::to_string(described.basis.size());
  }
  for (const auto& gen : L.generators) {
    if (gen.degree() > d) continue;
    if (!described.reduce(to_words(gen)).empty())
      return "generator " + format_element(gen) + " does not reduce to zero";
  }
  return "";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::in: return "in";
    case Membership::out: return "out";
    case Membership::unknown: return "unknown";
  }
  return "?";
}

Membership membership(const CosetBasis& B, const AlgebraElement& x) {
  if (x.degree() > B.degree)
    throw PreconditionError("element degree " + std::to_string(x.degree()) + " exceeds bound " +
                            std::to_string(B.degree));
  if (B.reduce(to_words(x)).empty()) return Membership::in;
  return B.exact ? Membership::out : Membership::unknown;
}

Membership membership(const LeftIdealPresentation& L, const AlgebraElement& x, std::size_t d) {
  if (x.degree() > d)
    throw PreconditionError("element degree " + std::to_string(x.degree()) + " exceeds bound " + std::to_string(d));
  return membership(coset_basis(L, d), x);
}

std::string Codimension::to_string() const {
  return (finite ? "finite(" : "at_least(") + std::to_string(c) + ")";
}

Codimension codimension(const CosetBasis& B) { return Codimension{B.certified, B.basis.size()}; }

Codimension codimension(const LeftIdealPresentation& L, std::size_t d) { return codimension(coset_basis(L, d)); }

long lewin_schreier_rank(long n, long c) {
  if (n < 1 || c < 0) throw PreconditionError("rank formula needs n >= 1 and c >= 0");
  return c * (n - 1) + 1;
}

std::vector<AlgebraElement> free_generators(const CosetBasis& B) {
  const DiGraph& g = *B.graph;
  std::vector<AlgebraElement> out;
  auto emit = [&](const Word& w) {
    WordVector v{{w, Scalar(1)}};
    axpy(v, Scalar(-1), B.reduce(v));
    if (!v.empty()) out.push_back(from_words(B.graph, v));
  };
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (!B.contains(vertex_word(u))) emit(vertex_word(u));
  std::int64_t window = static_cast<std::int64_t>(B.degree) + 1;
  for (const auto& b : B.basis) {
    if (b.length() >= B.degree) continue;
    for (const auto& x : g.out_arrows(b.vertex, window)) {
      Word w = *prepend(g, x, b);
      if (!B.contains(w)) emit(w);
    }
  }
  return out;
}

std::vector<AlgebraElement> free_generators(const LeftIdealPresentation& L, std::size_t d) {
  return free_generators(coset_basis(L, d));
}

std::string Openness::to_string() const {
  return (open ? "open(" : "not_open_up_to(") + std::to_string(l) + ")";
}

Openness is_open(const LeftIdealPresentation& L, std::size_t l_max) {
  const DiGraph& g = *L.graph;
  if (g.has_families()) throw PreconditionError("openness needs a graph without infinite emitters");
  std::size_t gen_degree = 0;
  for (const auto& gen : L.generators) gen_degree = std::max(gen_degree, gen.degree());
  for (std::size_t l = 1; l <= l_max; ++l) {
    auto B = coset_basis(L, std::max(l, gen_degree));
    bool all_in = true;
    for (const auto& w : words_of_length(g, l)) {
      if (B.reduce({{w, Scalar(1)}}).empty()) continue;
      all_in = false;
      break;
    }
    for (VertexId v = 0; all_in && v < g.vertex_count(); ++v)
      if (g.classify(v) == VertexKind::sink && !B.reduce({{vertex_word(v), Scalar(1)}}).empty()) all_in = false;
    if (all_in) return Openness{true, l};
  }
  return Openness{false, l_max};
}

// ---- Chen ideals -----------------------------------------------------------

Word head_star(const DiGraph& g, const ChenWord& alpha, std::size_t l) {
  Path h = alpha.head(l);
  return word_of(g, ghost_monomial(g, h));
}

LeftIdealPresentation chen_ideal(const GraphPtr& g, const ChenWord& alpha, std::size_t d) {
  LeftIdealPresentation L;
  L.graph = g;
  if (g->has_families()) L.window = static_cast<std::int64_t>(d) + 1;
  CoDescription cd;
  cd.name = "chen " + alpha.describe(*g);
  cd.in_basis = [g, alpha](const Word& w) { return w == head_star(*g, alpha, w.length()); };
  cd.reduce = [in = cd.in_basis](const Word& w) {
    return in(w) ? WordVector{{w, Scalar(1)}} : WordVector{};
  };
  L.codescription = cd;
  L.generators = free_generators(coset_basis(L, d));
  return L;
}

Membership chen_annihilator_membership(const GraphPtr& g, const ChenWord& alpha, const AlgebraElement& x,
                                       std::size_t d) {
  if (x.degree() > d)
    throw PreconditionError("element degree " + std::to_string(x.degree()) + " exceeds bound " + std::to_string(d));
  for (const auto& [w, c] : to_words(x))
    if (w == head_star(*g, alpha, w.length())) return Membership::out;
  return Membership::in;
}

// ---- period presentations --------------------------------------------------

PeriodPresentation mantese_rangaswamy_presentation(const GraphPtr& gp, VertexId v, const std::vector<Path>& periods,
                                                   const StructureAlgebra& D,
                                                   const std::vector<DivisionAlgebraElement>& images,
                                                   std::size_t d) {
  const DiGraph& g = *gp;
  if (periods.empty()) throw PreconditionError("at least one period is needed");
  if (images.size() != periods.size()) throw PreconditionError("one image per period is needed");
  std::set<Arrow> used;
  PeriodPresentation out;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    const Path& p = periods[i];
    if (p.start != v || !is_period(g, p)) throw PreconditionError("period " + format_path(g, p) + " is not a period at v");
    for (const auto& a : p.arrows)
      if (!used.insert(a).second) throw PreconditionError("periods share the arrow " + g.arrow_name(a));
    if (std::all_of(images[i].begin(), images[i].end(), [](const Scalar& s) { return s.is_zero(); }))
      throw PreconditionError("period " + format_path(g, p) + " has zero image");
    if (p.length() != 1) out.hilbert = false;
  }
  auto block_word = [gp, periods](std::size_t i) {
    return word_of(*gp, ghost_monomial(*gp, periods[i]));
  };

  // Coset words of the kernel inside K c*, length-lex greedy.
  std::vector<DivisionAlgebraElement> coset_images;
  Matrix span;
  std::set<std::pair<Word, std::size_t>> queue;
  std::vector<DivisionAlgebraElement> queue_images{D.one()};
  queue.insert({vertex_word(v), 0});
  std::size_t n = D.dimension();
  while (!queue.empty()) {
    auto [w, idx] = *queue.begin();
    queue.erase(queue.begin());
    const auto img = queue_images[idx];
    span.push_back(img);
    if (rank(span, n) < span.size()) {
      span.pop_back();
      continue;
    }
    out.coset_words.push_back(w);
    coset_images.push_back(img);
    for (std::size_t i = 0; i < periods.size(); ++i) {
      queue_images.push_back(D.multiply(images[i], img));
      queue.insert({*concat(g, block_word(i), w), queue_images.size() - 1});
    }
  }
  Matrix columns(n, DenseVector(coset_images.size(), Scalar(0)));
  for (std::size_t j = 0; j < coset_images.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) columns[k][j] = coset_images[j][k];
  std::set<Word> coset_set(out.coset_words.begin(), out.coset_words.end());

  struct Parsed {
    Word mu;
    Word nu;
    DivisionAlgebraElement image;
  };
  // Reads the path (reverse of the written word) from v as period blocks
  // followed by a proper head of a period.
  auto parse = [=](const Word& w) -> std::optional<Parsed> {
    const DiGraph& g = *gp;
    if (right_vertex(g, w) != v) return std::nullopt;
    std::vector<Arrow> path(w.letters.rbegin(), w.letters.rend());
    Parsed p{vertex_word(v), vertex_word(v), D.one()};
    std::size_t pos = 0;
    while (pos < path.size()) {
      std::optional<std::size_t> which;
      for (std::size_t i = 0; i < periods.size(); ++i)
        if (periods[i].arrows.front() == path[pos]) which = i;
      if (!which) return std::nullopt;
      const auto& delta = periods[*which].arrows;
      std::size_t rest = path.size() - pos;
      std::size_t k = std::min(rest, delta.size());
      if (!std::equal(delta.begin(), delta.begin() + static_cast<long>(k), path.begin() + static_cast<long>(pos)))
        return std::nullopt;
      if (rest < delta.size()) {
        Path mu{v, std::vector<Arrow>(path.begin() + static_cast<long>(pos), path.end())};
        p.mu = word_of(g, ghost_monomial(g, mu));
        break;
      }
      p.nu = *concat(g, block_word(*which), p.nu);
      p.image = D.multiply(images[*which], p.image);
      pos += delta.size();
    }
    return p;
  };

  CoDescription cd;
  cd.name = "periods";
  cd.in_basis = [=](const Word& w) {
    auto p = parse(w);
    return p && coset_set.count(p->nu) != 0;
  };
  cd.reduce = [=, words = out.coset_words](const Word& w) {
    const DiGraph& graph = *gp;
    WordVector r;
    auto p = parse(w);
    if (!p) return r;
    auto coeffs = solve(columns, p->image, coset_images.size());
    if (!coeffs) throw InvariantViolation("image outside the span of the coset words");
    for (std::size_t j = 0; j < coeffs->size(); ++j)
      if (!(*coeffs)[j].is_zero()) axpy(r, (*coeffs)[j], WordVector{{*concat(graph, p->mu, words[j]), Scalar(1)}});
    return r;
  };
  out.ideal.graph = gp;
  out.ideal.codescription = cd;
  out.ideal.generators = free_generators(coset_basis(out.ideal, d));
  return out;
}

}  // namespace lpa
