#include <algorithm>

#include "homres/bar.hpp"

namespace homres {

namespace {

// splits w = u1 * u2 with both factors nonunit; commutative: all divisor
// pairs, word: all prefix cuts
std::vector<std::pair<Monomial, Monomial>> proper_splits(const Monomial& w, MonomialOrder ord,
                                                         bool word) {
  std::vector<std::pair<Monomial, Monomial>> out;
  if (word) {
    for (int len = 1; len < w.degree(); ++len)
      out.emplace_back(w.subword(0, len), w.subword(len, w.degree() - len));
  } else {
    for (auto& [u, v] : divisors(w, ord))
      if (!v.is_one()) out.emplace_back(u, v);
  }
  return out;
}

Monomial head_variable(const Monomial& w, const Ring& ring, bool word) {
  return Monomial::variable(ring, word ? w.data().front() : w.least_variable());
}

// the upper cell obtained from `t` by splitting the entry at position
// `pos` (0-based) into u1, u2
BarTuple split_at(const BarTuple& t, int pos, const Monomial& u1, const Monomial& u2) {
  BarTuple u;
  u.reserve(t.size() + 1);
  u.insert(u.end(), t.begin(), t.begin() + pos);
  u.push_back(u1);
  u.push_back(u2);
  u.insert(u.end(), t.begin() + pos + 1, t.end());
  return u;
}

Matching coordinate_matching(const BarComplex& B, bool word) {
  const ReductionSystem& R = *B.system;
  const Ring& ring = R.ring();
  MonomialOrder ord = R.order();
  int D = B.max_hdeg;

  std::vector<std::vector<char>> critical(D + 1);
  for (int i = 0; i <= D; ++i) critical[i].assign(B.tuples[i].size(), 1);
  auto is_crit = [&](const std::pair<int, int>& at) { return critical[at.first][at.second]; };

  Matching m;
  auto commit = [&](const std::pair<int, int>& up, const std::pair<int, int>& lo) {
    m.edges.push_back(MatchEdge{up.first, up.second, lo.second});
    critical[up.first][up.second] = 0;
    critical[lo.first][lo.second] = 0;
  };

  // first coordinate: split the head variable off w_1
  for (int l = 1; l <= D; ++l) {
    for (std::size_t s = 0; s < B.tuples[l].size(); ++s) {
      const BarTuple& t = B.tuples[l][s];
      if (t[0].degree() < 2) continue;
      Monomial x = head_variable(t[0], ring, word);
      Monomial rest = word ? t[0].subword(1, t[0].degree() - 1) : x.quotient_of(t[0]);
      BarTuple u = split_at(t, 0, x, rest);
      if (auto up = B.find(u)) commit(*up, {l, static_cast<int>(s)});
      // upper beyond the homological truncation: the cell stays (spuriously)
      // critical; only degrees < D are exact
    }
  }

  // higher coordinates, against the critical set frozen per coordinate
  for (int j = 2; j <= D; ++j) {
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> level;
    for (int l = j; l <= D; ++l) {
      for (std::size_t s = 0; s < B.tuples[l].size(); ++s) {
        if (!critical[l][s]) continue;
        const BarTuple& t = B.tuples[l][s];
        const Monomial& wj = t[j - 1];
        if (wj.degree() < 2) continue;
        // admissible splits: both endpoints critical
        std::vector<std::pair<Monomial, Monomial>> cand;
        std::vector<std::pair<int, int>> cand_at;
        for (auto& [u1, u2] : proper_splits(wj, ord, word)) {
          auto up = B.find(split_at(t, j - 1, u1, u2));
          if (up && is_crit(*up)) {
            cand.emplace_back(u1, u2);
            cand_at.push_back(*up);
          }
        }
        int chosen = -1;
        if (word) {
          // shortest admissible prefix; all shorter ones are inadmissible by
          // construction of the candidate list
          for (std::size_t c = 0; c < cand.size() && chosen < 0; ++c) {
            bool minimal = true;
            for (std::size_t c2 = 0; c2 < cand.size(); ++c2)
              if (cand[c2].first.degree() < cand[c].first.degree()) minimal = false;
            if (minimal) chosen = static_cast<int>(c);
          }
        } else {
          // divisor-minimal candidates, then the term-order-maximal one
          for (std::size_t c = 0; c < cand.size(); ++c) {
            bool divisor_minimal = true;
            for (std::size_t c2 = 0; c2 < cand.size() && divisor_minimal; ++c2)
              if (c2 != c && cand[c2].first.divides(cand[c].first)) divisor_minimal = false;
            if (!divisor_minimal) continue;
            if (chosen < 0 ||
                cand[chosen].first.compare(cand[c].first, ord) == Ordering::less)
              chosen = static_cast<int>(c);
          }
        }
        if (chosen >= 0) level.emplace_back(cand_at[chosen], std::make_pair(l, (int)s));
      }
    }
    for (auto& [up, lo] : level) commit(up, lo);
  }
  return m;
}

}  // namespace

Matching commutative_matching(const BarComplex& B) { return coordinate_matching(B, false); }

Matching anick_matching(const BarComplex& B) { return coordinate_matching(B, true); }

}  // namespace homres
