#pragma once

#include <map>
#include <optional>
#include <string>

#include "homres/monomial.hpp"

namespace homres {

/// Polynomial in the Ring context: finite map monomial -> nonzero Scalar.
/// Term map is keyed by the structural order, so iteration is deterministic
/// and independent of the term order in use.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, const Monomial& m, const Scalar& c);

  static Polynomial constant(const Ring& ring, const Scalar& c);
  static Polynomial variable(const Ring& ring, int i);

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  int degree() const;  // -1 for the zero polynomial

  Scalar coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, bool on_left) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Leading monomial with respect to ord; zero polynomial has none.
  std::optional<Monomial> leading_monomial(MonomialOrder ord) const;
  Scalar constant_term() const;

  /// True iff the polynomial is a nonzero constant (an invertible coefficient).
  bool is_unit() const;

  std::string str() const;

 private:
  void check_(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw context_mismatch("polynomials in different rings");
  }

  Ring ring_;
  std::map<Monomial, Scalar> terms_;
};

}  // namespace homres
