#pragma once

// Generating functions for the ranks of the resolutions: a finite automaton
// whose language is the set of chain cells, exact rational-function
// extraction via determinants, closed forms for special quotients, and
// truncation into rank tables.

#include <map>
#include <string>
#include <vector>

#include "homres/resolution.hpp"

namespace homres {

/// The bookkeeping ring for series: commutative with rational coefficients
/// in x_1..x_n plus one extra variable tracking homological degree (printed
/// as `t`).
Ring series_ring(int n);

/// Exact rational function num/den over series_ring(n); the denominator has
/// constant term 1, so Taylor coefficients exist to any truncation order.
struct RationalSeries {
  Ring ring;  // series_ring(n)
  Polynomial num, den;
  bool upper_bound = false;  // coefficients bound the true ranks from above

  std::string str() const;
};

RationalSeries series_constant(int n, long c);
RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

/// Rank table: (homological degree, multidegree) -> rank.
struct BettiTable {
  int n = 0;
  std::map<std::pair<int, std::vector<int>>, long> ranks;

  long total(int i) const;
  std::string str() const;
  bool operator==(const BettiTable&) const = default;
};

/// Exact Taylor expansion of S up to the given total degree (in the x's and
/// t together); throws if the denominator has zero constant term.
BettiTable series_truncate(const RationalSeries& S, int total_degree);

/// Entries with homological degree + total multidegree <= T (the common
/// region when comparing tables produced under different truncations).
BettiTable restrict_total(const BettiTable& tab, int T);

/// Rank table of a chain set by direct counting (the comparison target for
/// every series computation).
BettiTable chain_table(const ChainSet& C);

/// Word-language automaton for the chain cells of a non-commutative
/// quotient: one state per realizable chain entry (a variable or a suffix
/// of a leading monomial), transitions exactly the chain-extension steps,
/// every state accepting.  The language is in weight-preserving bijection
/// with the chain cells for the rules present in R.
struct ChainAutomaton {
  const ReductionSystem* system = nullptr;
  std::vector<Monomial> entries;       // state i+1 reads entry entries[i]
  std::vector<int> seeds;              // 1-based states readable from the start
  std::vector<std::vector<int>> next;  // next[i]: 0-based successors of state i+1
};

ChainAutomaton build_automaton(const ReductionSystem& R);

/// Weighted word-counting function of the automaton's language as an exact
/// rational function: F = 1 + sum over nonempty accepted words of
/// x^{multidegree} t^{length}.  Computed via determinant ratios with
/// fraction-free elimination, no floating point.
RationalSeries automaton_series(const ChainAutomaton& A);

/// Commutative counting bound: prod over standard variables of (1+x_i t)
/// times the word-counting function of the language of minimal fully
/// attached letters (adjacency: weakly decreasing head indices).  The
/// coefficients equal the chain-cell counts on the truncation, and bound
/// the true ranks from above with equality iff the resolution is minimal.
/// Letters are enumerated up to internal degree d, so Taylor coefficients
/// are exact for total degree <= d.
RationalSeries commutative_upper_bound(const ReductionSystem& R, int d);

enum class ClosedForm {
  CompleteIntersection,  // prod(1+x_i t) / prod(1 - m_j t^2)
  Cartan,                // prod 1/(1 - x_i t)
  PolynomialHochschild,  // prod(1+x_i t)
  ExteriorHochschild,    // prod 1/(1 - x_i t)
};

/// The displayed rational functions for the special cases; `lead` is the
/// list of leading monomials (used by the complete-intersection form only).
RationalSeries closed_form_series(ClosedForm kind, int n,
                                  const std::vector<Monomial>& lead = {});

}  // namespace homres
