#include "leavitt/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace leavitt {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^31 keeps the product in range
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("malformed field: " + std::string(text));
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string Field::to_string() const {
  return prime_ == 0 ? "Q" : "Fp:" + std::to_string(prime_);
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  mpq_class v(numerator, denominator);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::in_field(const Field& field, long numerator, long denominator) {
  Scalar s = rational(numerator, denominator);
  if (field.is_prime_field()) {
    s.prime_ = field.characteristic();
    s.residue_ = reduce(s.q_, s.prime_);
    s.q_ = 0;
  }
  return s;
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
  std::string s(text);
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed scalar '" + s + "'");
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  v.canonicalize();
  Scalar out(v);
  if (field.is_prime_field()) {
    out.prime_ = field.characteristic();
    out.residue_ = reduce(out.q_, out.prime_);
    out.q_ = 0;
  }
  return out;
}

std::uint64_t Scalar::reduce(const mpq_class& value, std::uint64_t p) {
  std::uint64_t num = mpz_mod(value.get_num(), p);
  std::uint64_t den = mpz_mod(value.get_den(), p);
  if (den == 0) {
    throw std::domain_error("denominator " + value.get_den().get_str() + " vanishes in F_" + std::to_string(p));
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

void Scalar::unify(Scalar& other) {
  if (prime_ == other.prime_) return;
  if (prime_ != 0 && other.prime_ != 0) {
    throw std::domain_error("scalars from different prime fields");
  }
  if (prime_ == 0) {
    residue_ = reduce(q_, other.prime_);
    prime_ = other.prime_;
    q_ = 0;
  } else {
    other.residue_ = reduce(other.q_, prime_);
    other.prime_ = prime_;
    other.q_ = 0;
  }
}

bool Scalar::is_zero() const { return prime_ == 0 ? q_ == 0 : residue_ == 0; }

bool Scalar::is_one() const { return prime_ == 0 ? q_ == 1 : residue_ == 1; }

mpq_class Scalar::to_rational() const {
  if (prime_ == 0) return q_;
  return mpq_class(mpz_class(std::to_string(residue_)));
}

std::string Scalar::to_string() const {
  return prime_ == 0 ? q_.get_str() : std::to_string(residue_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (prime_ == 0) {
    r.q_ = -q_;
  } else {
    r.residue_ = residue_ == 0 ? 0 : prime_ - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Scalar o = other;
  unify(o);
  if (prime_ == 0) {
    q_ += o.q_;
  } else {
    residue_ = (residue_ + o.residue_) % prime_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar o = other;
  unify(o);
  if (prime_ == 0) {
    q_ *= o.q_;
  } else {
    residue_ = mul_mod(residue_, o.residue_, prime_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  Scalar o = other;
  unify(o);
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (prime_ == 0) {
    q_ /= o.q_;
  } else {
    residue_ = mul_mod(residue_, pow_mod(o.residue_, prime_ - 2, prime_), prime_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar x = a;
  Scalar y = b;
  x.unify(y);
  return x.prime_ == 0 ? x.q_ == y.q_ : x.residue_ == y.residue_;
}

}  // namespace leavitt
