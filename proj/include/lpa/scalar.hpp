#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lpa {

/// Exact scalar: a rational number (modulus 0) or an element of GF(p).
///
/// Integer literals are rationals; mixing a rational with a GF(p) value maps
/// the rational into GF(p), which is the canonical ring map for p-integral
/// rationals. Mixing two different primes throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  static Scalar modular(const mpq_class& q, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void adopt(const Scalar& other);
  void reduce();

  mpq_class v_ = 0;
  std::uint32_t p_ = 0;
};

/// The coefficient field of a session: rationals (p == 0) or GF(p).
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);
  /// Accepts "q" or "gf:P".
  static Field parse(std::string_view text);

  Scalar operator()(const mpq_class& q) const;
  Scalar operator()(long v) const { return (*this)(mpq_class(v)); }
  /// Parses an integer or `p/q` literal into this field.
  Scalar parse_scalar(std::string_view text) const;
  std::uint32_t characteristic() const { return p; }
  std::string name() const;
};

bool is_prime(std::uint64_t n);

}  // namespace lpa
