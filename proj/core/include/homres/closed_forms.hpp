#pragma once

// Closed-form minimal resolution of the residue field when the initial
// ideal is a complete intersection: exterior generators e_i for the
// variables and divided powers t_j^(l) for the relations.

#include "homres/resolution.hpp"

namespace homres {

/// Pairwise-coprimality check on the minimal generators of the initial
/// ideal (the hypothesis the closed form needs).
bool initial_is_complete_intersection(const ReductionSystem& R);

/// Basis element e_{i_r}..e_{i_1} t_{j_1}^{(l_1)}..t_{j_q}^{(l_q)}.
struct CIcell {
  std::vector<int> I;       // exterior part, ascending variable indices
  std::vector<int> powers;  // divided power of t_j per minimal generator
};

struct CIResolution {
  BasedComplex<QuotientElem> cx;
  std::vector<std::vector<CIcell>> cells;  // per homological degree
  std::vector<Monomial> mingen;
};

/// The closed-form resolution truncated to homological degree <= D and
/// internal degree <= d; throws domain_error when the initial ideal is not
/// a complete intersection.
CIResolution complete_intersection_resolution(const ReductionSystem& R, int D, int d);

/// Label of a closed-form cell as the equivalent critical Bar tuple (tokens
/// ordered by descending head variable), matching build_resolution labels.
std::string ci_cell_label(const CIcell& c, const ReductionSystem& R);

}  // namespace homres
