#pragma once

// Exact rational scalar on top of GMP. Values are always stored canonically:
// lowest terms, positive denominator, zero as 0/1. Nothing in the library
// ever rounds; every comparison and every arithmetic result is exact.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "liftreg/errors.hpp"

namespace liftreg {

using Int = mpz_class;

class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(static_cast<signed long>(v)) {}
  Rat(const Int& v) : q_(v) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  // absorbs GMP expression templates without mpz/mpq overload ambiguity
  template <class T, class U>
  Rat(const __gmp_expr<T, U>& e) : q_(e) {
    q_.canonicalize();
  }
  Rat(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) fail(ErrorCode::kSingular, "zero denominator");
    q_.canonicalize();
  }

  /// Parses "p/q" or "p" (arbitrary precision, optional leading '-').
  static Rat parse(const std::string& text);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Int floor() const;
  Int ceil() const;

  Rat abs() const { return sign() < 0 ? Rat(-q_) : *this; }
  Rat inv() const {
    if (is_zero()) fail(ErrorCode::kSingular, "inverse of zero");
    return Rat(1 / q_);
  }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) fail(ErrorCode::kSingular, "division by zero");
    return Rat(mpq_class(q_ / o.q_));
  }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }
  bool operator<=(const Rat& o) const { return q_ <= o.q_; }
  bool operator>(const Rat& o) const { return q_ > o.q_; }
  bool operator>=(const Rat& o) const { return q_ >= o.q_; }

 private:
  mpq_class q_;
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const Rat& s, const RatVec& v);
RatVec to_rat(const IntVec& v);
bool is_zero(const IntVec& v);
IntVec neg(const IntVec& v);

/// Parses a comma-separated rational vector, e.g. "1/2,-3,0".
RatVec parse_rat_vec(const std::string& text);
std::string str(const RatVec& v);
std::string str(const IntVec& v);

/// Integer vector parallel to v, entries coprime, direction preserved.
IntVec primitive_vector(const RatVec& v);
IntVec primitive_vector(const IntVec& v);

}  // namespace liftreg
