#pragma once

// Truncated normalized Bar complex of the residue field over a quotient
// algebra A, together with the coordinate-wise acyclic matchings that
// contract it.  Coefficients live in A and are kept in canonical reduced
// form via the shared reduction system.

#include <map>
#include <optional>
#include <vector>

#include "homres/based_complex.hpp"
#include "homres/morse.hpp"
#include "homres/reduction_system.hpp"

namespace homres {

/// Element of A = k[x]/a (or its non-commutative analogue) in canonical
/// form: a k-linear combination of standard monomials.  Products are
/// re-reduced through the reduction system, so arithmetic is exact in A.
class QuotientElem {
 public:
  QuotientElem() = default;
  QuotientElem(Polynomial p, const ReductionSystem* rs) : p_(rs->normal_form(p)), rs_(rs) {}

  static QuotientElem of_monomial(const Monomial& m, const ReductionSystem* rs) {
    return QuotientElem(Polynomial(rs->ring(), m, Scalar(1, rs->ring().field)), rs);
  }
  static QuotientElem of_scalar(const Scalar& c, const ReductionSystem* rs) {
    return QuotientElem(Polynomial::constant(rs->ring(), c), rs);
  }

  const Polynomial& poly() const { return p_; }
  const ReductionSystem* system() const { return rs_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_unit() const { return p_.is_unit(); }
  Scalar constant_term() const { return p_.constant_term(); }

  QuotientElem operator+(const QuotientElem& o) const {
    QuotientElem out = *this;
    out.p_ = out.p_ + o.p_;  // sums of reduced forms stay reduced
    if (!out.rs_) out.rs_ = o.rs_;
    return out;
  }
  QuotientElem operator*(const QuotientElem& o) const {
    const ReductionSystem* rs = rs_ ? rs_ : o.rs_;
    return QuotientElem(p_ * o.p_, rs);
  }
  QuotientElem operator-() const {
    QuotientElem out = *this;
    out.p_ = -out.p_;
    return out;
  }
  bool operator==(const QuotientElem& o) const { return p_ == o.p_; }

  std::string str() const { return p_.str(); }

 private:
  Polynomial p_;
  const ReductionSystem* rs_ = nullptr;
};

inline bool coeff_is_zero(const QuotientElem& c) { return c.is_zero(); }
inline bool coeff_is_unit(const QuotientElem& c) { return c.is_unit(); }
inline QuotientElem coeff_unit_inverse(const QuotientElem& c) {
  if (!c.is_unit()) throw domain_error("inverse of a non-unit quotient coefficient");
  return QuotientElem::of_scalar(c.constant_term().inverse(), c.system());
}
inline QuotientElem coeff_neg(const QuotientElem& c) { return -c; }
inline std::string coeff_str(const QuotientElem& c) { return c.str(); }
inline Scalar coeff_specialize(const QuotientElem& c) { return c.constant_term(); }

/// A Bar cell [w_1|...|w_i]: a tuple of standard monomials of degree >= 1.
/// The empty tuple is the degree-0 cell.
using BarTuple = std::vector<Monomial>;

std::string bar_label(const BarTuple& t);
int internal_degree(const BarTuple& t);

/// The normalized Bar complex truncated to homological degree <= D and
/// internal (monomial) degree <= d, with its cell index.
struct BarComplex {
  BasedComplex<QuotientElem> cx;
  std::vector<std::vector<BarTuple>> tuples;      // per homological degree
  std::map<BarTuple, std::pair<int, int>> index;  // tuple -> (degree, cell index)
  const ReductionSystem* system = nullptr;
  int max_hdeg = 0;
  int max_internal = 0;

  std::optional<std::pair<int, int>> find(const BarTuple& t) const {
    auto it = index.find(t);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

/// Builds the truncated normalized Bar complex over A; requires the
/// reduction system to be complete up to degree d.
BarComplex normalized_bar(const ReductionSystem& R, int D, int d);

/// The coordinate-by-coordinate matching in the commutative case (splits by
/// term-order-maximal divisors).  Cells of the top homological degree D may
/// spuriously stay critical because their partner lies beyond the
/// truncation; everything below D is exact.
Matching commutative_matching(const BarComplex& B);

/// The non-commutative analogue (splits by shortest admissible prefixes);
/// critical cells are the Anick chains.
Matching anick_matching(const BarComplex& B);

}  // namespace homres
