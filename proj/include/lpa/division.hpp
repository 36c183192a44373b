#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/linalg.hpp"

namespace lpa {

/// Univariate polynomial, constant term first, no trailing zeros.
struct Polynomial {
  std::vector<Scalar> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial monomial(const Scalar& coeff, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Scalar coeff(std::size_t i) const { return i < c.size() ? c[i] : Scalar(0); }
  Scalar lead() const { return c.empty() ? Scalar(0) : c.back(); }
  bool is_monic() const { return !c.empty() && c.back().is_one(); }
  Scalar eval(const Scalar& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Comma-separated coefficients, constant term first.
Polynomial parse_polynomial(const Field& k, std::string_view text);

/// x^l q*(1/x) == q(x); requires q(0) != 0.
Polynomial reciprocal_polynomial(const Polynomial& q);

struct Irreducibility {
  enum Kind { yes, no, unverified } kind = unverified;
  std::optional<Polynomial> factor;
};

Irreducibility is_irreducible(const Polynomial& q);

using DivisionAlgebraElement = DenseVector;

/// Finite-dimensional algebra given by structure constants
/// b_i b_j = sum_k c[i][j][k] b_k.
class StructureAlgebra {
 public:
  /// Checks associativity and the two-sided unit exhaustively.
  StructureAlgebra(std::string name, std::vector<std::string> labels,
                   std::vector<std::vector<DenseVector>> constants, DenseVector unit);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const DenseVector& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }

  DivisionAlgebraElement one() const { return unit_; }
  DivisionAlgebraElement zero() const;
  DivisionAlgebraElement basis(std::size_t i) const;
  DivisionAlgebraElement multiply(const DivisionAlgebraElement& x, const DivisionAlgebraElement& y) const;
  DivisionAlgebraElement add(const DivisionAlgebraElement& x, const DivisionAlgebraElement& y) const;
  DivisionAlgebraElement scale(const DivisionAlgebraElement& x, const Scalar& k) const;
  /// Matrix of y -> x y in basis coordinates (column j is x b_j).
  Matrix left_multiplication(const DivisionAlgebraElement& x) const;
  /// Dimension of the subalgebra generated by the given elements and 1.
  std::size_t generated_dimension(const std::vector<DivisionAlgebraElement>& gens) const;
  std::size_t center_dimension() const;
  bool is_associative() const;

  std::string format(const DivisionAlgebraElement& x) const;
  DivisionAlgebraElement parse(const Field& k, std::string_view coords) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<DenseVector>> c_;
  DenseVector unit_;
};

/// K[x]/(q) with basis 1, x, ..., x^{deg q - 1}. Throws unless q is monic and
/// irreducible; `assume_irreducible` accepts an unverified verdict.
StructureAlgebra field_extension(const Polynomial& q, bool assume_irreducible = false);
/// Basis 1, i, j, k with i^2 = -c, j^2 = -d, ij = -ji = k.
StructureAlgebra quaternion_algebra(const Scalar& c, const Scalar& d);
/// `ext q = <coeffs>` or `quat c d`.
StructureAlgebra parse_algebra_spec(const Field& k, std::string_view text);

/// Norm form x0^2 + c x1^2 + d x2^2 + cd x3^2.
Scalar quaternion_norm(const Scalar& c, const Scalar& d, const DivisionAlgebraElement& x);

struct Isotropy {
  bool isotropic = false;
  std::array<long, 4> witness{};
  long bound = 0;
};

/// Searches integer zeros of the quaternion norm form with |x_i| <= bound.
Isotropy represents_zero(const Scalar& c, const Scalar& d, long bound);

/// Images of vertices and ghost arrows; a missing vertex image on a
/// one-vertex graph means the unit.
struct Substitution {
  std::map<VertexId, DivisionAlgebraElement> vertices;
  std::map<Arrow, DivisionAlgebraElement> arrows;
};

/// Algebra-homomorphic evaluation of a purely ghost element.
DivisionAlgebraElement substitute(const AlgebraElement& x, const StructureAlgebra& d, const Substitution& s);

}  // namespace lpa
