#include "lpa/scalar.hpp"

#include <charconv>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

mpz_class mod_inverse(const mpz_class& a, std::uint32_t p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
    throw PreconditionError("scalar has no inverse modulo " + std::to_string(p));
  return r;
}

mpq_class to_residue(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = mod_inverse(q.get_den() % p, p);
  mpz_class r = (num * den) % p;
  return mpq_class(r);
}

}  // namespace

Scalar Scalar::modular(const mpq_class& q, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.v_ = p == 0 ? q : to_residue(q, p);
  s.v_.canonicalize();
  return s;
}

void Scalar::adopt(const Scalar& other) {
  if (p_ == other.p_ || other.p_ == 0) return;
  if (p_ != 0) throw PreconditionError("scalars from different prime fields");
  v_ = to_residue(v_, other.p_);
  p_ = other.p_;
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class r = v_.get_num() % p_;
  if (r < 0) r += p_;
  v_ = mpq_class(r);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt(o);
  Scalar t = o;
  t.adopt(*this);
  v_ += t.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt(o);
  Scalar t = o;
  t.adopt(*this);
  v_ *= t.v_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero scalar");
  Scalar r = *this;
  if (p_ == 0) {
    r.v_ = 1 / v_;
  } else {
    r.v_ = mpq_class(mod_inverse(v_.get_num(), p_));
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  adopt(o);
  Scalar t = o;
  t.adopt(*this);
  return *this *= t.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.v_ == b.v_;
  Scalar x = a, y = b;
  x.adopt(y);
  y.adopt(x);
  return x.v_ == y.v_;
}

std::string Scalar::to_string() const { return v_.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "gf:") {
    std::uint32_t p = 0;
    auto tail = text.substr(3);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
      throw ParseError("bad field modulus in '" + std::string(text) + "'");
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected q or gf:P)");
}

Scalar Field::operator()(const mpq_class& q) const { return Scalar::modular(q, p); }

Scalar Field::parse_scalar(std::string_view text) const {
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("bad scalar literal '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return (*this)(q);
}

std::string Field::name() const { return p == 0 ? "q" : "gf:" + std::to_string(p); }

}  // namespace lpa
