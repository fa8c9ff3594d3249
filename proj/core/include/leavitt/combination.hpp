#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>

#include "leavitt/scalar.hpp"

namespace leavitt {

/// Finite linear combination of basis keys with exact coefficients. Zero coefficients
/// are never stored, so structural equality is equality of vectors. Key must provide
/// ordering and degree().
template <class Key>
class Combination {
 public:
  using TermMap = std::map<Key, Scalar>;

  Combination() = default;
  static Combination from_term(Key k, Scalar c = 1) {
    Combination e;
    e.add_term(k, c);
    return e;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Zero counts as homogeneous.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
  }

  /// Throws std::domain_error on zero or inhomogeneous input.
  int degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero element");
    if (!is_homogeneous()) throw std::domain_error("degree of an inhomogeneous element");
    return terms_.begin()->first.degree();
  }

  Combination& operator+=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  Combination& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }
  Combination operator-() const {
    Combination r = *this;
    r *= Scalar(-1);
    return r;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Scalar& c, Combination a) { return a *= c; }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  TermMap terms_;
};

}  // namespace leavitt
