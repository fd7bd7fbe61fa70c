#pragma once

// Free resolutions of the residue field built directly from the critical
// cells of the Bar-complex matchings: chain enumeration, the three-type
// reduction differential, and the assembled resolution complex.

#include <map>
#include <set>
#include <vector>

#include "homres/bar.hpp"

namespace homres {

enum class Flavor { Commutative, Anick };

/// Enumerated critical cells plus a membership index, truncated to
/// homological degree <= D and internal degree <= d.
struct ChainSet {
  const ReductionSystem* system = nullptr;
  Flavor flavor = Flavor::Anick;
  int max_hdeg = 0;
  int max_internal = 0;
  std::vector<std::vector<BarTuple>> chains;  // per homological degree, 1..D
  std::set<BarTuple> member;

  bool contains(const BarTuple& t) const { return member.count(t) > 0; }
};

/// Direct enumeration of the critical cells without materializing the Bar
/// complex.  Anick flavor: DFS over minimal overlap extensions; commutative
/// flavor: words over the alphabet of variable runs and minimal fully
/// attached tuples subject to the adjacency rules.
ChainSet enumerate_chains(const ReductionSystem& R, Flavor flavor, int D, int d);

/// The minimal fully attached tuples themselves (commutative flavor), each
/// of which is extended entry by entry; exposed for testing.
std::vector<BarTuple> minimal_fully_attached(const ReductionSystem& R, int D, int d);

/// Boundary of one chain: coefficient [e:f] for every chain f one degree
/// down, computed as the sum over all reduction sequences (Types I/III with
/// a terminal peel or a terminal Type II merge).
std::map<BarTuple, QuotientElem> reduction_differential(const ChainSet& C, const BarTuple& e);

struct ResolutionComplex {
  BasedComplex<QuotientElem> cx;
  ChainSet cells;
  bool minimal = false;
};

/// Assembles the resolution from the chains and the reduction differential;
/// the boundary-squared identity is verified on the truncation.
ResolutionComplex build_resolution(const ReductionSystem& R, Flavor flavor, int D, int d);

struct TypeIIWitness {
  bool possible = false;
  std::vector<BarTuple> detail;  // flavor-specific: the tuples involved
};

/// Decides whether any reduction of Type II is possible (the minimality
/// obstruction).  Anick flavor searches the local four-monomial pattern up
/// to the degree bound; commutative flavor scans the reduction graphs of
/// the enumerated chains.
TypeIIWitness type_ii_possible(const ReductionSystem& R, Flavor flavor, int D, int d);

/// Exhaustive Type II scan over the reachable reduction graphs of a chain
/// set (used directly by the commutative flavor of type_ii_possible).
TypeIIWitness scan_chains_for_type_ii(const ChainSet& C);

}  // namespace homres
