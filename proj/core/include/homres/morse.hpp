#pragma once

// Generic Algebraic Discrete Morse theory kernel: acyclic matchings on the
// differential graph of a based complex, the Morse complex via path-weight
// sums, and the homotopy equivalence maps.

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "homres/based_complex.hpp"

namespace homres {

/// A matching edge pairs an upper cell (deg, upper) with (deg-1, lower);
/// the weight is looked up from the complex.
struct MatchEdge {
  int deg = 0;
  int upper = 0;
  int lower = 0;
  bool operator==(const MatchEdge&) const = default;
};

struct Matching {
  std::vector<MatchEdge> edges;
};

struct MatchingViolation {
  std::string condition;  // "matching" | "invertibility" | "acyclicity" | "invalid-edge"
  std::string detail;
};

namespace detail {

/// Per-vertex matching lookup tables.
struct MatchTables {
  // matched_up[deg][idx] = index of matched upper cell in deg+1, or -1
  // matched_down[deg][idx] = index of matched lower cell in deg-1, or -1
  std::vector<std::vector<int>> up, down;

  template <class C>
  MatchTables(const BasedComplex<C>& cx, const Matching& m) {
    up.resize(cx.max_degree() + 1);
    down.resize(cx.max_degree() + 1);
    for (int i = 0; i <= cx.max_degree(); ++i) {
      up[i].assign(cx.rank(i), -1);
      down[i].assign(cx.rank(i), -1);
    }
    for (const auto& e : m.edges) {
      down[e.deg][e.upper] = e.lower;
      up[e.deg - 1][e.lower] = e.upper;
    }
  }

  bool is_critical(int deg, int idx) const { return up[deg][idx] < 0 && down[deg][idx] < 0; }
};

}  // namespace detail

template <class C>
C matched_weight(const BasedComplex<C>& cx, const MatchEdge& e) {
  for (const auto& [dst, c] : cx.column(e.deg, e.upper))
    if (dst == e.lower) return c;
  throw domain_error("matching edge not in differential support");
}

/// Checks the three acyclic-matching conditions.  Acyclicity is checked per
/// adjacent degree pair: every directed cycle of the reversed-edge graph
/// alternates matched-up and unmatched-down steps, hence stays within two
/// consecutive degrees (an up edge never follows an up edge).
template <class C>
std::optional<MatchingViolation> validate_matching(const BasedComplex<C>& cx, const Matching& m) {
  // matching condition + edge existence + invertibility
  std::set<std::pair<int, int>> used;
  for (const auto& e : m.edges) {
    if (e.deg <= 0 || e.deg > cx.max_degree() || e.upper >= cx.rank(e.deg) ||
        e.lower >= cx.rank(e.deg - 1))
      return MatchingViolation{"invalid-edge", "edge references a non-existent cell"};
    bool found = false;
    for (const auto& [dst, c] : cx.column(e.deg, e.upper))
      if (dst == e.lower) {
        found = true;
        if (!coeff_is_unit(c))
          return MatchingViolation{"invertibility",
                                   "weight of " + cx.cells(e.deg)[e.upper].label + " -> " +
                                       cx.cells(e.deg - 1)[e.lower].label + " is not a unit"};
      }
    if (!found) return MatchingViolation{"invalid-edge", "edge not in differential support"};
    if (!used.insert({e.deg, e.upper}).second)
      return MatchingViolation{"matching", "cell " + cx.cells(e.deg)[e.upper].label +
                                               " lies in two matching edges"};
    if (!used.insert({e.deg - 1, e.lower}).second)
      return MatchingViolation{"matching", "cell " + cx.cells(e.deg - 1)[e.lower].label +
                                               " lies in two matching edges"};
  }
  // acyclicity, per degree pair (i, i-1): DFS cycle detection on the
  // alternating graph whose vertices are the upper cells
  detail::MatchTables t(cx, m);
  for (int i = 1; i <= cx.max_degree(); ++i) {
    // successor(upper u) = uppers reachable by one down step (not the matched
    // edge) into a matched lower, then the reversed edge up
    std::vector<int> state(cx.rank(i), 0);  // 0 new, 1 open, 2 done
    std::vector<int> parent(cx.rank(i), -1);
    for (int start = 0; start < cx.rank(i); ++start) {
      if (state[start]) continue;
      std::vector<std::pair<int, bool>> stack{{start, false}};
      while (!stack.empty()) {
        auto [u, leaving] = stack.back();
        stack.pop_back();
        if (leaving) {
          state[u] = 2;
          continue;
        }
        if (state[u] == 2) continue;
        state[u] = 1;
        stack.emplace_back(u, true);
        for (const auto& [dst, c] : cx.column(i, u)) {
          if (t.down[i][u] == dst) continue;  // the reversed matched edge
          int next = t.up[i - 1][dst];
          if (next < 0) continue;
          if (state[next] == 1) {
            return MatchingViolation{
                "acyclicity", "cycle through " + cx.cells(i)[u].label + " -> " +
                                  cx.cells(i - 1)[dst].label + " -> " + cx.cells(i)[next].label};
          }
          if (state[next] == 0) {
            parent[next] = u;
            stack.emplace_back(next, false);
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Memoized path-weight sums Gamma(c, c') over the reversed-edge graph G_M:
/// Gamma(c, c) = 1 and each path multiplies edge weights left to right
/// (down edges keep [c:c'], reversed matched edges weigh -1/[c:c']).
template <class C>
class PathSums {
 public:
  using Target = std::pair<int, int>;  // (deg, idx)

  PathSums(const BasedComplex<C>& cx, const Matching& m, C one)
      : cx_(cx), t_(cx, m), one_(std::move(one)) {}

  /// Full sparse row Gamma((deg, idx), -).
  const std::map<Target, C>& gamma(int deg, int idx) {
    auto key = std::make_pair(deg, idx);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // reserve the slot to guard against cycles (must not happen: validated)
    std::map<Target, C> row;
    row.emplace(key, one_);
    // down edges
    for (const auto& [dst, c] : cx_.column(deg, idx)) {
      if (t_.down[deg][idx] == dst) continue;  // reversed, no longer down
      accumulate_(row, c, gamma(deg - 1, dst));
    }
    // the single reversed (up) edge, if this cell is a matched lower cell
    int up = t_.up[deg][idx];
    if (up >= 0) {
      C w = coeff_neg(coeff_unit_inverse(matched_weight(cx_, MatchEdge{deg + 1, up, idx})));
      accumulate_(row, w, gamma(deg + 1, up));
    }
    return memo_[key] = std::move(row);
  }

  bool is_critical(int deg, int idx) const { return t_.is_critical(deg, idx); }
  const detail::MatchTables& tables() const { return t_; }

 private:
  void accumulate_(std::map<Target, C>& row, const C& w, const std::map<Target, C>& sub) {
    for (const auto& [tgt, c] : sub) {
      C add = w * c;
      auto it = row.find(tgt);
      if (it == row.end())
        row.emplace(tgt, std::move(add));
      else
        it->second = it->second + add;
    }
    std::erase_if(row, [](const auto& kv) { return coeff_is_zero(kv.second); });
  }

  const BasedComplex<C>& cx_;
  detail::MatchTables t_;
  C one_;
  std::map<Target, std::map<Target, C>> memo_;
};

/// The Morse complex plus the data needed to map back and forth.
template <class C>
struct MorseData {
  BasedComplex<C> morse;
  std::vector<std::vector<int>> critical;     // per degree: original index of each Morse cell
  std::vector<std::vector<int>> morse_index;  // per degree: original index -> Morse index or -1
  // sparse homotopy maps, all indexed by original/morse cell indices:
  std::vector<std::vector<std::vector<std::pair<int, C>>>> f;    // C_i -> C^M_i
  std::vector<std::vector<std::vector<std::pair<int, C>>>> g;    // C^M_i -> C_i
  std::vector<std::vector<std::vector<std::pair<int, C>>>> chi;  // C_i -> C_{i+1}
};

/// Builds the Morse complex (and the maps f, g, chi) for a validated acyclic
/// matching.  `one` is the multiplicative unit of the coefficient domain.
template <class C>
MorseData<C> morse_complex(const BasedComplex<C>& cx, const Matching& m, C one) {
  if (auto v = validate_matching(cx, m))
    throw domain_error("invalid matching (" + v->condition + "): " + v->detail);
  MorseData<C> out;
  PathSums<C> gamma(cx, m, one);
  int D = cx.max_degree();
  out.critical.resize(D + 1);
  out.morse_index.resize(D + 1);
  for (int i = 0; i <= D; ++i) {
    out.morse_index[i].assign(cx.rank(i), -1);
    for (int s = 0; s < cx.rank(i); ++s) {
      if (!gamma.is_critical(i, s)) continue;
      out.morse_index[i][s] = out.morse.add_cell(i, cx.cells(i)[s]);
      out.critical[i].push_back(s);
    }
  }
  // Morse differential: Gamma restricted to critical targets one degree down
  for (int i = 1; i <= D; ++i) {
    for (std::size_t ms = 0; ms < out.critical[i].size(); ++ms) {
      int s = out.critical[i][ms];
      for (const auto& [tgt, c] : gamma.gamma(i, s)) {
        if (tgt.first != i - 1) continue;
        int mt = out.morse_index[i - 1][tgt.second];
        if (mt >= 0) out.morse.add_entry(i, static_cast<int>(ms), mt, c);
      }
    }
  }
  // homotopy maps
  out.f.resize(D + 1);
  out.g.resize(D + 1);
  out.chi.resize(D + 1);
  for (int i = 0; i <= D; ++i) {
    out.f[i].resize(cx.rank(i));
    out.chi[i].resize(cx.rank(i));
    for (int s = 0; s < cx.rank(i); ++s) {
      for (const auto& [tgt, c] : gamma.gamma(i, s)) {
        if (tgt.first == i && out.morse_index[i][tgt.second] >= 0)
          out.f[i][s].emplace_back(out.morse_index[i][tgt.second], c);
        else if (tgt.first == i + 1)
          out.chi[i][s].emplace_back(tgt.second, c);
      }
    }
    out.g[i].resize(out.critical[i].size());
    for (std::size_t ms = 0; ms < out.critical[i].size(); ++ms) {
      for (const auto& [tgt, c] : gamma.gamma(i, out.critical[i][ms]))
        if (tgt.first == i) out.g[i][ms].emplace_back(tgt.second, c);
    }
  }
  return out;
}

/// Greedy acyclic matching: scan cells top degree down, match each yet
/// unmatched cell to its first unmatched target with a unit weight, provided
/// the pair-local acyclicity is preserved.
template <class C>
Matching greedy_matching(const BasedComplex<C>& cx, unsigned seed = 0) {
  Matching m;
  for (int i = cx.max_degree(); i >= 1; --i) {
    // a deterministic but seed-dependent scan order
    std::vector<int> order(cx.rank(i));
    for (int s = 0; s < cx.rank(i); ++s) order[s] = s;
    if (seed) {
      for (std::size_t k = order.size(); k > 1; --k) {
        seed = seed * 1664525u + 1013904223u;
        std::swap(order[k - 1], order[seed % k]);
      }
    }
    for (int s : order) {
      detail::MatchTables t(cx, m);
      if (!t.is_critical(i, s)) continue;
      for (const auto& [dst, c] : cx.column(i, s)) {
        if (!t.is_critical(i - 1, dst) || !coeff_is_unit(c)) continue;
        m.edges.push_back(MatchEdge{i, s, dst});
        if (validate_matching(cx, m))
          m.edges.pop_back();  // would break acyclicity
        else
          break;
      }
    }
  }
  return m;
}

}  // namespace homres
