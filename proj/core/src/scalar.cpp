#include "homres/scalar.hpp"

namespace homres {

namespace {

// Inverse of a mod p via extended Euclid; a in 0..p-1, a != 0.
bigint mod_inverse(bigint a, bigint p) {
  bigint r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    bigint q = r0 / r1;
    bigint r2 = r0 - q * r1;
    bigint s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  bigint inv = s0 % p;
  if (inv < 0) inv += p;
  return inv;
}

}  // namespace

void Scalar::reduce_() {
  if (p_ == 0) return;
  bigint p(p_);
  bigint num = boost::multiprecision::numerator(v_) % p;
  if (num < 0) num += p;
  bigint den = boost::multiprecision::denominator(v_) % p;
  if (den < 0) den += p;
  if (den == 0) throw domain_error("denominator divisible by the characteristic");
  if (den != 1) num = num * mod_inverse(den, p) % p;
  v_ = bigrat(num);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero");
  if (p_ == 0) return Scalar(1 / v_, field());
  return Scalar(bigrat(mod_inverse(bigint(boost::multiprecision::numerator(v_)), bigint(p_))),
                field());
}

std::string Scalar::str() const {
  return v_.str();
}

}  // namespace homres
