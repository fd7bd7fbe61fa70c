#pragma once

// Ground truth by brute force: graded Betti numbers computed as minimal
// generator counts of successive kernels via exact Gaussian elimination,
// degree stratum by degree stratum.  Nothing here touches matchings,
// reduction differentials, or automata.

#include <algorithm>
#include <map>
#include <string>

#include "homres/series.hpp"

namespace homres {

/// Tor dimensions by (homological degree, internal total degree).  The
/// computation stratifies by total degree, so it applies to any quotient
/// whose rules preserve degree.
struct TorTable {
  std::map<std::pair<int, int>, long> ranks;

  long total(int i) const;
  std::string str() const;
  bool operator==(const TorTable&) const = default;
};

/// Tor over the quotient algebra with residue-field coefficients, exact up
/// to homological degree D and internal degree d.
TorTable tor_residue_field(const ReductionSystem& R, int D, int d);

/// Tor over the enveloping algebra (two-sided action) with coefficients in
/// the algebra itself: the bimodule Betti numbers.
TorTable tor_bimodule(const ReductionSystem& R, int D, int d);

/// Multigraded table collapsed onto (homological degree, total degree).
TorTable aggregate_internal(const BettiTable& tab);

/// Cells of a complex counted per (homological degree, total internal
/// degree), for diffing minimal resolutions against oracle tables.
template <class C>
TorTable cell_counts(const BasedComplex<C>& cx, int upto) {
  TorTable tab;
  for (int i = 0; i <= std::min(upto, cx.max_degree()); ++i)
    for (const auto& cell : cx.cells(i)) {
      int deg = 0;
      for (int v : cell.multidegree) deg += v;
      tab.ranks[{i, deg}] += 1;
    }
  return tab;
}

}  // namespace homres
