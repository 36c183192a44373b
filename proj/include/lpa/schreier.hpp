#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/chen.hpp"
#include "lpa/division.hpp"
#include "lpa/linalg.hpp"

namespace lpa {

/// Ghost word x1* x2* ... xk* in written order. `vertex` is the left end
/// r(x1) (the vertex itself for length 0). Nonzero iff r(x_{i+1}) = s(x_i).
struct Word {
  VertexId vertex = 0;
  std::vector<Arrow> letters;

  std::size_t length() const { return letters.size(); }
  /// Length first, then letters lexicographically, then vertex.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
};

using WordVector = SparseVector<Word>;

Word vertex_word(VertexId v);
/// Right end of the word: s(xk), or the vertex for length 0.
VertexId right_vertex(const DiGraph& g, const Word& w);
/// x^* w, or nullopt when s(x) != left end of w.
std::optional<Word> prepend(const DiGraph& g, const Arrow& x, const Word& w);
/// u w for a word u: concatenation when composable.
std::optional<Word> concat(const DiGraph& g, const Word& u, const Word& w);
/// Drops the first letter (the tail of colength 1).
Word suffix(const DiGraph& g, const Word& w);
std::string format_word(const DiGraph& g, const Word& w);

/// All words of length <= d; family arrows below `window`.
std::vector<Word> all_words(const DiGraph& g, std::size_t d, std::int64_t window = 0);
std::vector<Word> words_of_length(const DiGraph& g, std::size_t l, std::int64_t window = 0);

Word word_of(const DiGraph& g, const Monomial& m);
Monomial monomial_of(const DiGraph& g, const Word& w);
/// Throws unless x is purely ghost.
WordVector to_words(const AlgebraElement& x);
AlgebraElement from_words(const GraphPtr& g, const WordVector& v);
/// u * v for word vectors (left multiplication by each word of u).
WordVector multiply_words(const DiGraph& g, const WordVector& u, const WordVector& v);

/// Exact complement description: B is a tail-closed set of words and
/// `reduce(w)` is the coordinate vector of w modulo the ideal over B.
struct CoDescription {
  std::string name;
  std::function<bool(const Word&)> in_basis;
  std::function<WordVector(const Word&)> reduce;
};

struct LeftIdealPresentation {
  GraphPtr graph;
  std::vector<AlgebraElement> generators;
  std::optional<CoDescription> codescription;
  /// Family index window used when enumerating words.
  std::int64_t window = 0;
};

LeftIdealPresentation parse_ideal(GraphPtr g, const Field& k, std::string_view text);
LeftIdealPresentation load_ideal(GraphPtr g, const Field& k, const std::string& file);

struct CosetBasis {
  std::size_t degree = 0;
  std::vector<Word> basis;
  Echelon<Word> staircase;
  /// False if some non-pivot word had a pivot tail (tail closure broke).
  bool stable = true;
  /// No basis word of length `degree`.
  bool stabilized = false;
  /// Finite quotient proven: stabilized and every generator kills 1 in it.
  bool certified = false;
  /// Reduction answers are exact for inputs of degree <= `degree`.
  bool exact = false;
  /// The codescription used, if any.
  std::optional<CoDescription> codescription;
  GraphPtr graph;

  bool contains(const Word& w) const;
  /// Normal form modulo the ideal, supported on basis words.
  WordVector reduce(const WordVector& v) const;
};

CosetBasis coset_basis(const LeftIdealPresentation& L, std::size_t d);

/// Cross-check of a codescription against the generator staircase: same
/// basis words and every generator reduces to zero. Returns a problem or "".
std::string check_codescription(const LeftIdealPresentation& L, std::size_t d);

enum class Membership { in, out, unknown };
std::string to_string(Membership m);

Membership membership(const CosetBasis& B, const AlgebraElement& x);
Membership membership(const LeftIdealPresentation& L, const AlgebraElement& x, std::size_t d);

struct Codimension {
  bool finite = false;
  std::size_t c = 0;
  std::string to_string() const;
};

Codimension codimension(const LeftIdealPresentation& L, std::size_t d);
Codimension codimension(const CosetBasis& B);

long lewin_schreier_rank(long n, long c);

/// Schreier generators {x* b - NF(x* b)} together with the vertex words
/// outside B; a free basis of the ideal when the quotient is certified.
std::vector<AlgebraElement> free_generators(const CosetBasis& B);
std::vector<AlgebraElement> free_generators(const LeftIdealPresentation& L, std::size_t d);

struct Openness {
  bool open = false;
  std::size_t l = 0;
  std::string to_string() const;
};

Openness is_open(const LeftIdealPresentation& L, std::size_t l_max);

/// L^alpha: generated by all ghost words that are not of the form h*(l).
LeftIdealPresentation chen_ideal(const GraphPtr& g, const ChenWord& alpha, std::size_t d);
Membership chen_annihilator_membership(const GraphPtr& g, const ChenWord& alpha, const AlgebraElement& x,
                                       std::size_t d);
/// The word h_alpha(l)^*.
Word head_star(const DiGraph& g, const ChenWord& alpha, std::size_t l);

struct PeriodPresentation {
  LeftIdealPresentation ideal;
  /// Words of K c* whose images form a basis of the image algebra.
  std::vector<Word> coset_words;
  /// All periods are loops.
  bool hilbert = true;
};

/// L_c for pairwise arrow-disjoint periods at v, with delta* mapped into D.
/// Generators are listed up to degree d.
PeriodPresentation mantese_rangaswamy_presentation(const GraphPtr& g, VertexId v, const std::vector<Path>& periods,
                                                   const StructureAlgebra& D,
                                                   const std::vector<DivisionAlgebraElement>& images,
                                                   std::size_t d);

}  // namespace lpa
