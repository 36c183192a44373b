#include "lpa/division.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

// ---- polynomials -----------------------------------------------------------

namespace {

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::uint32_t modulus_of(const Polynomial& q) {
  std::uint32_t p = 0;
  for (const auto& x : q.c) p = std::max(p, x.modulus());
  return p;
}

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(c); }

Polynomial Polynomial::monomial(const Scalar& coeff, std::size_t degree) {
  std::vector<Scalar> c(degree + 1, Scalar(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar r(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.c.size() + b.c.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return Polynomial(std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].to_string();
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  Polynomial r = a;
  std::vector<Scalar> quot(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Scalar(0));
  Scalar inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    Scalar f = r.lead() * inv;
    quot[shift] += f;
    r = r - Polynomial::monomial(f, shift) * b;
  }
  return {Polynomial(std::move(quot)), r};
}

Polynomial parse_polynomial(const Field& k, std::string_view text) {
  std::vector<Scalar> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    c.push_back(k.parse_scalar(tok));
    pos = comma + 1;
  }
  return Polynomial(std::move(c));
}

Polynomial reciprocal_polynomial(const Polynomial& q) {
  if (q.is_zero() || q.c.front().is_zero()) throw PreconditionError("reciprocal polynomial needs q(0) != 0");
  std::vector<Scalar> c(q.c.rbegin(), q.c.rend());
  return Polynomial(std::move(c));
}

// ---- irreducibility --------------------------------------------------------

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Integer coefficients of a rational polynomial after clearing denominators.
std::vector<mpz_class> integral(const Polynomial& q) {
  mpz_class l = 1;
  for (const auto& x : q.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den().get_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& x : q.c) {
    mpq_class v = x.value() * l;
    out.push_back(v.get_num());
  }
  return out;
}

std::optional<Polynomial> rational_root_factor(const Polynomial& q) {
  auto z = integral(q);
  if (z.front() == 0) return Polynomial({Scalar(0), Scalar(1)});
  for (const auto& num : divisors(z.front())) {
    for (const auto& den : divisors(z.back())) {
      for (int sign : {1, -1}) {
        Scalar r(mpq_class(sign * num, den));
        if (q.eval(r).is_zero()) return Polynomial({-r, Scalar(1)});
      }
    }
  }
  return std::nullopt;
}

// Exhaustive monic-divisor search over GF(p).
std::optional<Polynomial> modular_factor(const Polynomial& q, std::uint32_t p) {
  long n = q.degree();
  for (long deg = 1; 2 * deg <= n; ++deg) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(deg), 0);
    while (true) {
      std::vector<Scalar> c;
      for (auto d : digits) c.push_back(Scalar::modular(mpq_class(d), p));
      c.push_back(Scalar::modular(1, p));
      Polynomial f(std::move(c));
      if (divmod(q, f).second.is_zero()) return f;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace

Irreducibility is_irreducible(const Polynomial& q) {
  if (q.degree() < 1) throw PreconditionError("irreducibility of a constant polynomial");
  Irreducibility out;
  std::uint32_t p = modulus_of(q);
  if (p != 0) {
    std::vector<Scalar> c;
    for (const auto& x : q.c) c.push_back(Scalar::modular(x.value(), p));
    auto f = modular_factor(Polynomial(std::move(c)), p);
    out.kind = f ? Irreducibility::no : Irreducibility::yes;
    out.factor = f;
    return out;
  }
  if (q.degree() == 1) {
    out.kind = Irreducibility::yes;
    return out;
  }
  if (auto f = rational_root_factor(q)) {
    out.kind = Irreducibility::no;
    out.factor = f;
    return out;
  }
  if (q.degree() <= 3) {
    out.kind = Irreducibility::yes;
    return out;
  }
  auto z = integral(q);
  for (std::uint32_t prime : {3u, 5u, 7u, 11u, 13u}) {
    if (z.back() % prime == 0) continue;
    std::vector<Scalar> c;
    for (const auto& x : z) c.push_back(Scalar::modular(mpq_class(x), prime));
    if (!modular_factor(Polynomial(std::move(c)), prime)) {
      out.kind = Irreducibility::yes;
      return out;
    }
  }
  return out;
}

// ---- structure algebras ----------------------------------------------------

StructureAlgebra::StructureAlgebra(std::string name, std::vector<std::string> labels,
                                   std::vector<std::vector<DenseVector>> constants, DenseVector unit)
    : name_(std::move(name)), labels_(std::move(labels)), c_(std::move(constants)), unit_(std::move(unit)) {
  std::size_t n = labels_.size();
  if (n == 0 || c_.size() != n || unit_.size() != n) throw PreconditionError("structure constants have the wrong shape");
  for (const auto& row : c_) {
    if (row.size() != n) throw PreconditionError("structure constants have the wrong shape");
    for (const auto& v : row)
      if (v.size() != n) throw PreconditionError("structure constants have the wrong shape");
  }
  if (!is_associative()) throw InvariantViolation("structure constants of " + name_ + " are not associative");
  for (std::size_t i = 0; i < n; ++i) {
    auto b = basis(i);
    auto l = multiply(unit_, b);
    auto r = multiply(b, unit_);
    for (std::size_t k = 0; k < n; ++k)
      if (l[k] != b[k] || r[k] != b[k]) throw InvariantViolation("declared unit of " + name_ + " is not two-sided");
  }
}

DivisionAlgebraElement StructureAlgebra::zero() const { return DenseVector(dimension(), Scalar(0)); }

DivisionAlgebraElement StructureAlgebra::basis(std::size_t i) const {
  auto x = zero();
  x.at(i) = 1;
  return x;
}

DivisionAlgebraElement StructureAlgebra::multiply(const DivisionAlgebraElement& x,
                                                  const DivisionAlgebraElement& y) const {
  std::size_t n = dimension();
  if (x.size() != n || y.size() != n) throw PreconditionError("coordinate vector has the wrong length");
  auto r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c_[i][j][k].is_zero()) r[k] += f * c_[i][j][k];
    }
  }
  return r;
}

DivisionAlgebraElement StructureAlgebra::add(const DivisionAlgebraElement& x, const DivisionAlgebraElement& y) const {
  auto r = x;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += y.at(k);
  return r;
}

DivisionAlgebraElement StructureAlgebra::scale(const DivisionAlgebraElement& x, const Scalar& k) const {
  auto r = x;
  for (auto& v : r) v *= k;
  return r;
}

Matrix StructureAlgebra::left_multiplication(const DivisionAlgebraElement& x) const {
  std::size_t n = dimension();
  Matrix m(n, DenseVector(n, Scalar(0)));
  for (std::size_t j = 0; j < n; ++j) {
    auto col = multiply(x, basis(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

std::size_t StructureAlgebra::generated_dimension(const std::vector<DivisionAlgebraElement>& gens) const {
  std::size_t n = dimension();
  Matrix span{unit_};
  std::vector<DivisionAlgebraElement> frontier{unit_};
  std::size_t r = rank(span, n);
  while (!frontier.empty()) {
    std::vector<DivisionAlgebraElement> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        auto p = multiply(f, g);
        span.push_back(p);
        std::size_t r2 = rank(span, n);
        if (r2 > r) {
          r = r2;
          next.push_back(p);
        } else {
          span.pop_back();
        }
      }
    }
    frontier = std::move(next);
  }
  return r;
}

std::size_t StructureAlgebra::center_dimension() const {
  // Unknown z = sum z_k b_k with z b_i - b_i z = 0 for all i.
  std::size_t n = dimension();
  Matrix eqs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t coord = 0; coord < n; ++coord) {
      DenseVector row(n, Scalar(0));
      for (std::size_t k = 0; k < n; ++k) row[k] = c_[k][i][coord] - c_[i][k][coord];
      eqs.push_back(std::move(row));
    }
  }
  return nullspace(eqs, n).size();
}

bool StructureAlgebra::is_associative() const {
  std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto l = multiply(c_[i][j], basis(k));
        auto r = multiply(basis(i), c_[j][k]);
        for (std::size_t t = 0; t < n; ++t)
          if (l[t] != r[t]) return false;
      }
  return true;
}

std::string StructureAlgebra::format(const DivisionAlgebraElement& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    bool negative = x[i].modulus() == 0 && x[i].value() < 0;
    Scalar mag = negative ? -x[i] : x[i];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (labels_[i] == "1") {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + " ";
      out += labels_[i];
    }
  }
  return out.empty() ? "0" : out;
}

DivisionAlgebraElement StructureAlgebra::parse(const Field& k, std::string_view coords) const {
  Polynomial p = parse_polynomial(k, coords);
  auto x = zero();
  std::size_t count = static_cast<std::size_t>(std::count(coords.begin(), coords.end(), ',')) + 1;
  if (count != dimension())
    throw ParseError("expected " + std::to_string(dimension()) + " coordinates in '" + std::string(coords) + "'");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = p.coeff(i) * k(1);
  return x;
}

StructureAlgebra field_extension(const Polynomial& q, bool assume_irreducible) {
  if (q.degree() < 1) throw PreconditionError("field extension needs deg q >= 1");
  if (!q.is_monic()) throw PreconditionError("field extension needs a monic polynomial");
  auto irr = is_irreducible(q);
  if (irr.kind == Irreducibility::no)
    throw PreconditionError("polynomial " + q.to_string() + " is reducible (factor " + irr.factor->to_string() + ")");
  if (irr.kind == Irreducibility::unverified && !assume_irreducible)
    throw PreconditionError("irreducibility of " + q.to_string() + " is unverified");
  std::size_t n = static_cast<std::size_t>(q.degree());
  Scalar unit = q.lead();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  std::vector<std::vector<DenseVector>> c(n, std::vector<DenseVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto r = divmod(Polynomial::monomial(unit, i + j), q).second;
      DenseVector v(n, Scalar(0));
      for (std::size_t k = 0; k < n; ++k) v[k] = r.coeff(k) + unit * 0;
      c[i][j] = std::move(v);
    }
  DenseVector one(n, unit * 0);
  one[0] = unit;
  return StructureAlgebra("K[x]/(" + q.to_string() + ")", labels, c, one);
}

StructureAlgebra quaternion_algebra(const Scalar& c, const Scalar& d) {
  std::uint32_t p = std::max(c.modulus(), d.modulus());
  if (p == 2) throw PreconditionError("quaternion algebras need characteristic != 2");
  Scalar z = Scalar::modular(0, p), o = Scalar::modular(1, p);
  auto v = [&](Scalar a, Scalar b, Scalar e, Scalar f) { return DenseVector{a, b, e, f}; };
  std::vector<std::vector<DenseVector>> t(4, std::vector<DenseVector>(4));
  // 1, i, j, k
  for (std::size_t x = 0; x < 4; ++x) {
    DenseVector b(4, z);
    b[x] = o;
    t[0][x] = b;
    t[x][0] = b;
  }
  t[1][1] = v(-c, z, z, z);
  t[2][2] = v(-d, z, z, z);
  t[3][3] = v(-(c * d), z, z, z);
  t[1][2] = v(z, z, z, o);
  t[2][1] = v(z, z, z, -o);
  t[2][3] = v(z, d * o, z, z);
  t[3][2] = v(z, -(d * o), z, z);
  t[3][1] = v(z, z, c * o, z);
  t[1][3] = v(z, z, -(c * o), z);
  return StructureAlgebra("(" + c.to_string() + "," + d.to_string() + ")", {"1", "i", "j", "k"}, t, v(o, z, z, z));
}

StructureAlgebra parse_algebra_spec(const Field& k, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string kind;
  is >> kind;
  if (kind == "quat") {
    std::string c, d;
    if (!(is >> c >> d)) throw ParseError("expected 'quat c d'");
    return quaternion_algebra(k.parse_scalar(c), k.parse_scalar(d));
  }
  if (kind == "ext") {
    std::string rest;
    std::getline(is, rest);
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'ext q = <coeffs>'");
    return field_extension(parse_polynomial(k, std::string_view(rest).substr(eq + 1)));
  }
  throw ParseError("unknown algebra spec '" + std::string(text) + "'");
}

Scalar quaternion_norm(const Scalar& c, const Scalar& d, const DivisionAlgebraElement& x) {
  return x.at(0) * x[0] + c * x[1] * x[1] + d * x[2] * x[2] + c * d * x[3] * x[3];
}

Isotropy represents_zero(const Scalar& c, const Scalar& d, long bound) {
  if (c.modulus() != 0 || d.modulus() != 0) throw PreconditionError("represents_zero needs rational scalars");
  Isotropy out;
  out.bound = bound;
  for (long s = 1; s <= bound; ++s) {
    std::vector<std::array<long, 4>> shell;
    std::array<long, 4> x{};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == 4) {
        long m = 0;
        for (auto e : x) m = std::max(m, std::labs(e));
        auto first = std::find_if(x.begin(), x.end(), [](long e) { return e != 0; });
        if (m == s && first != x.end() && *first > 0) shell.push_back(x);
        return;
      }
      for (long e = -s; e <= s; ++e) {
        x[i] = e;
        rec(i + 1);
      }
    };
    rec(0);
    auto support = [](const std::array<long, 4>& a) { return std::count_if(a.begin(), a.end(), [](long e) { return e != 0; }); };
    std::sort(shell.begin(), shell.end(), [&](const auto& a, const auto& b) {
      if (support(a) != support(b)) return support(a) < support(b);
      return a > b;
    });
    for (const auto& w : shell) {
      DenseVector v{Scalar(w[0]), Scalar(w[1]), Scalar(w[2]), Scalar(w[3])};
      if (quaternion_norm(c, d, v).is_zero()) {
        out.isotropic = true;
        out.witness = w;
        return out;
      }
    }
  }
  return out;
}

DivisionAlgebraElement substitute(const AlgebraElement& x, const StructureAlgebra& d, const Substitution& s) {
  const DiGraph& g = *x.graph();
  auto vertex_image = [&](VertexId v) {
    auto it = s.vertices.find(v);
    if (it != s.vertices.end()) return it->second;
    if (g.vertex_count() == 1) return d.one();
    throw PreconditionError("no image for vertex " + g.vertex_name(v));
  };
  auto r = d.zero();
  for (const auto& [m, c] : x.terms()) {
    if (!m.alpha.empty()) throw PreconditionError("substitution needs a purely ghost element");
    auto val = vertex_image(m.alpha.start);
    for (auto it = m.beta.arrows.rbegin(); it != m.beta.arrows.rend(); ++it) {
      auto img = s.arrows.find(*it);
      if (img == s.arrows.end()) throw PreconditionError("no image for ghost arrow " + g.arrow_name(*it) + "*");
      val = d.multiply(val, img->second);
    }
    r = d.add(r, d.scale(val, c));
  }
  return r;
}

}  // namespace lpa
