#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "homres/errors.hpp"

namespace homres {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Field of coefficients: p == 0 means the rationals, otherwise F_p (p prime).
struct Field {
  unsigned long p = 0;
  bool operator==(const Field&) const = default;
};

/// Exact field element over Q or F_p.  No floating point anywhere.
/// For F_p the value is kept as the canonical representative 0..p-1.
class Scalar {
 public:
  Scalar() = default;  // zero over Q
  explicit Scalar(Field f) : p_(f.p) {}
  Scalar(bigrat v, Field f = {}) : v_(std::move(v)), p_(f.p) { reduce_(); }
  Scalar(long v, Field f = {}) : v_(v), p_(f.p) { reduce_(); }

  Field field() const { return Field{p_}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  const bigrat& value() const { return v_; }

  Scalar operator-() const { return Scalar(-v_, field()); }
  Scalar operator+(const Scalar& o) const { check_(o); return Scalar(v_ + o.v_, field()); }
  Scalar operator-(const Scalar& o) const { check_(o); return Scalar(v_ - o.v_, field()); }
  Scalar operator*(const Scalar& o) const { check_(o); return Scalar(v_ * o.v_, field()); }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }

  std::string str() const;

 private:
  void check_(const Scalar& o) const {
    if (p_ != o.p_) throw context_mismatch("scalars over different fields");
  }
  void reduce_();

  bigrat v_ = 0;
  unsigned long p_ = 0;
};

}  // namespace homres
