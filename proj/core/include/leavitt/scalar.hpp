#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leavitt {

/// Coefficient field: the rationals, or F_p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view text);

  bool is_prime_field() const { return prime_ != 0; }
  std::uint64_t characteristic() const { return prime_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_;
};

/// Exact scalar. A rational scalar combined with an F_p scalar is reduced mod p first.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);

  static Scalar rational(long numerator, long denominator = 1);
  static Scalar in_field(const Field& field, long numerator, long denominator = 1);
  static Scalar parse(std::string_view text, const Field& field);

  bool is_zero() const;
  bool is_one() const;
  bool is_prime_field() const { return prime_ != 0; }
  Field field() const { return prime_ == 0 ? Field::rationals() : Field::prime(prime_); }

  /// Rational value; for F_p scalars the canonical residue in [0, p).
  mpq_class to_rational() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void unify(Scalar& other);
  static std::uint64_t reduce(const mpq_class& value, std::uint64_t p);

  mpq_class q_{0};
  std::uint64_t residue_ = 0;
  std::uint64_t prime_ = 0;
};

/// (-1)^k
inline long sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace leavitt
