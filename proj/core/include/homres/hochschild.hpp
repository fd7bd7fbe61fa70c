#pragma once

// Two-sided (Hochschild) resolutions: A resolved as a module over the
// enveloping algebra A (x) A^op.  The normalized two-sided complex carries
// the same cells and matchings as the one-sided Bar machine; only the
// coefficients change, from A to A (x) A^op.  Includes the closed-form
// complex for complete-intersection initial ideals and the resulting
// Hilbert data.

#include <map>
#include <optional>
#include <vector>

#include "homres/closed_forms.hpp"
#include "homres/series.hpp"

namespace homres {

/// Element of A (x) A^op in canonical form: every tensor factor is reduced
/// to its normal form over the shared reduction system, so products are
/// exact in the quotient on both sides.
class BimoduleElem {
 public:
  BimoduleElem() = default;
  BimoduleElem(const Bimodule& b, const ReductionSystem* rs);

  /// p (x) q, reduced.
  static BimoduleElem tensor(const Polynomial& p, const Polynomial& q,
                             const ReductionSystem* rs);
  static BimoduleElem of_scalar(const Scalar& c, const ReductionSystem* rs);

  const Bimodule& value() const { return b_; }
  const ReductionSystem* system() const { return rs_; }
  bool is_zero() const { return b_.is_zero(); }
  bool is_unit() const { return b_.is_unit(); }
  Scalar constant_term() const { return b_.constant_term(); }

  BimoduleElem operator+(const BimoduleElem& o) const;
  BimoduleElem operator*(const BimoduleElem& o) const;
  BimoduleElem operator-() const;
  bool operator==(const BimoduleElem& o) const { return b_ == o.b_; }

  std::string str() const { return b_.str(); }

 private:
  Bimodule b_;
  const ReductionSystem* rs_ = nullptr;
};

inline bool coeff_is_zero(const BimoduleElem& c) { return c.is_zero(); }
inline bool coeff_is_unit(const BimoduleElem& c) { return c.is_unit(); }
BimoduleElem coeff_unit_inverse(const BimoduleElem& c);
inline BimoduleElem coeff_neg(const BimoduleElem& c) { return -c; }
inline std::string coeff_str(const BimoduleElem& c) { return c.str(); }
inline Scalar coeff_specialize(const BimoduleElem& c) { return c.constant_term(); }

/// The normalized two-sided complex truncated to homological degree <= D
/// and internal degree <= d.  Cells and their enumeration order coincide
/// with the one-sided complex, so the coordinate matchings apply verbatim.
struct HochschildComplex {
  BasedComplex<BimoduleElem> cx;
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

/// Builds the truncated normalized two-sided complex over A (x) A^op with
/// the differential
///   d[w_1|...|w_i] = (w_1 (x) 1)[w_2|...|w_i]
///                  + (-1)^i (1 (x) w_i)[w_1|...|w_{i-1}]
///                  + sum_j (-1)^j sum_r a_r [...|v_r|...]
/// where w_j w_{j+1} = sum_r a_r v_r in normal form.  Requires the
/// reduction system to be complete up to degree d.
HochschildComplex normalized_hochschild(const ReductionSystem& R, int D, int d);

/// Free resolution of A over A (x) A^op on the same critical cells as the
/// one-sided resolution, with two-sided coefficients.
struct BimoduleResolution {
  BasedComplex<BimoduleElem> cx;
  ChainSet cells;
  bool minimal = false;
};

/// Boundary of one chain in the two-sided resolution, as the sum over all
/// reduction sequences: a terminal left peel contributes (u (x) 1), a
/// terminal right peel (1 (x) u) with the sign of the peeled degree, and a
/// terminal merge a scalar.
std::map<BarTuple, BimoduleElem> hochschild_differential(const ChainSet& C, const BarTuple& e);

/// Assembles the two-sided resolution from the chains and the two-sided
/// reduction differential; the boundary-squared identity is verified on
/// the truncation.  Minimal iff the specialized differential (both tensor
/// factors killed) vanishes.
BimoduleResolution hochschild_resolution(const ReductionSystem& R, Flavor flavor, int D, int d);

/// Closed-form two-sided resolution when the initial ideal is a complete
/// intersection: exterior generators e_i with coefficient
/// T(x_i) = (x_i (x) 1) - (1 (x) x_i) and divided powers t_j^(l) with the
/// divided-difference transfer coefficients of the relation polynomials.
BimoduleResolution ci_bimodule_resolution(const ReductionSystem& R, int D, int d);

/// Ranks of a minimal two-sided resolution per (homological degree,
/// multidegree); throws for a non-minimal input.
BettiTable hh_hilbert(const BimoduleResolution& res);

}  // namespace homres
