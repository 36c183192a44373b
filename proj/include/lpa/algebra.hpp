#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lpa/digraph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// alpha · beta^* with r(alpha) == r(beta).
struct Monomial {
  Path alpha;
  Path beta;

  std::size_t degree() const { return alpha.length() + beta.length(); }
  long grade() const { return static_cast<long>(alpha.length()) - static_cast<long>(beta.length()); }

  /// Total length first, then real part, then ghost part.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial vertex_monomial(VertexId v);
/// The ghost path beta^* alone.
Monomial ghost_monomial(const DiGraph& g, const Path& beta);
/// The real path alpha alone.
Monomial real_monomial(const DiGraph& g, const Path& alpha);

/// Finite linear combination of Cohn-basis monomials over a fixed graph.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit AlgebraElement(GraphPtr g) : g_(std::move(g)) {}
  AlgebraElement(GraphPtr g, const Monomial& m, const Scalar& c = Scalar(1));

  static AlgebraElement vertex(GraphPtr g, VertexId v);
  /// Sum of all vertices.
  static AlgebraElement one(GraphPtr g);
  static AlgebraElement real(GraphPtr g, const Path& alpha);
  static AlgebraElement ghost(GraphPtr g, const Path& beta);

  const GraphPtr& graph() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_pure_ghost() const;
  bool is_pure_real() const;
  std::size_t degree() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  /// Cohn path algebra product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  /// Equality in the Cohn algebra (same canonical terms).
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void check_same_graph(const AlgebraElement& o) const;

  GraphPtr g_;
  Terms terms_;
};

/// Product of two monomials in the Cohn algebra: a monomial or zero.
std::optional<Monomial> multiply(const DiGraph& g, const Monomial& x, const Monomial& y);

AlgebraElement leavitt_normal_form(const AlgebraElement& x);
bool equals_leavitt(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement involution(const AlgebraElement& x);

/// Canonical printed form; re-parses to an equal element.
std::string format_element(const AlgebraElement& x);
std::string format_monomial(const DiGraph& g, const Monomial& m);
/// Expression grammar: `term (('+'|'-') term)*`, `term := scalar? mono`,
/// `mono := factor ('.' factor)*`, `factor := id | id* | id[n] | id[n]*`.
/// A bare scalar stands for that multiple of the sum of all vertices.
AlgebraElement parse_element(GraphPtr g, const Field& k, std::string_view text);

}  // namespace lpa
