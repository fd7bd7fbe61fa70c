#pragma once

// Local replay of the coordinate-by-coordinate matching, shared by the
// one-sided and two-sided reduction differentials.  For a single tuple it
// decides whether the tuple is critical, matched as the lower cell of an
// edge (and with which partner), or matched as an upper cell.  The
// classification only looks at the tuple itself, so neither walker needs a
// materialized complex.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "homres/bar.hpp"

namespace homres::detail {

// splits w = u1 * u2 with both factors nonunit; commutative: all divisor
// pairs, word: all prefix cuts
inline std::vector<std::pair<Monomial, Monomial>> nonunit_splits(const Monomial& w,
                                                                 MonomialOrder ord, bool word) {
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

enum class Status { Critical, Lower, Upper };

class MatchOracle {
 public:
  explicit MatchOracle(const ReductionSystem& R)
      : R_(R), word_(!R.ring().commutative) {}

  Status status(const BarTuple& t, BarTuple* partner = nullptr) {
    int l = static_cast<int>(t.size());
    for (int j = 1; j <= l; ++j) {
      if (lower_at(t, j)) {
        if (partner) {
          auto [u1, u2] = *canonical_split(t, j);
          *partner = split_at(t, j - 1, u1, u2);
        }
        return Status::Lower;
      }
      if (upper_at(t, j)) return Status::Upper;
    }
    return Status::Critical;
  }

  // is t critical after the matchings of coordinates 1..j?
  bool critical_through(const BarTuple& t, int j) {
    if (j <= 0) return true;
    auto key = std::make_pair(t, j);
    auto it = crit_.find(key);
    if (it != crit_.end()) return it->second;
    bool c = critical_through(t, j - 1) && !lower_at(t, j) && !upper_at(t, j);
    return crit_[key] = c;
  }

 private:
  static BarTuple split_at(const BarTuple& t, int pos, const Monomial& u1, const Monomial& u2) {
    BarTuple u(t.begin(), t.begin() + pos);
    u.push_back(u1);
    u.push_back(u2);
    u.insert(u.end(), t.begin() + pos + 1, t.end());
    return u;
  }

  // matched as the lower cell at coordinate j (requires criticality through
  // j-1, which the callers guarantee by scanning j in increasing order)
  bool lower_at(const BarTuple& t, int j) {
    if (static_cast<int>(t.size()) < j || t[j - 1].degree() < 2) return false;
    if (j == 1) return true;  // coordinate 1 splits the head variable off
    return canonical_split(t, j).has_value();
  }

  // matched as the upper cell at coordinate j: merging coordinates j, j+1
  // yields a tuple that is critical through j-1 and whose canonical split
  // at coordinate j reproduces exactly this tuple
  bool upper_at(const BarTuple& t, int j) {
    if (static_cast<int>(t.size()) < j + 1) return false;
    if (j == 1) {
      // the partner lower merges the first two entries; t must be exactly
      // its canonical head split (least variable first)
      if (t[0].degree() != 1) return false;
      Monomial prod = t[0] * t[1];
      if (!R_.is_standard(prod)) return false;
      return word_ || t[0].least_variable() == prod.least_variable();
    }
    Monomial prod = t[j - 1] * t[j];
    if (!R_.is_standard(prod)) return false;
    BarTuple merged(t.begin(), t.begin() + (j - 1));
    merged.push_back(prod);
    merged.insert(merged.end(), t.begin() + (j + 1), t.end());
    if (!critical_through(merged, j - 1)) return false;
    auto cs = canonical_split(merged, j);
    return cs && cs->first == t[j - 1] && cs->second == t[j];
  }

  // the distinguished split of coordinate j (j >= 2): among splits whose
  // upper cell is critical through j-1, take the divisor-minimal ones and
  // then the term-order-maximal first factor (shortest prefix for words)
  std::optional<std::pair<Monomial, Monomial>> canonical_split(const BarTuple& t, int j) {
    std::vector<std::pair<Monomial, Monomial>> cand;
    for (auto& [u1, u2] : nonunit_splits(t[j - 1], R_.order(), word_)) {
      if (critical_through(split_at(t, j - 1, u1, u2), j - 1)) cand.emplace_back(u1, u2);
    }
    int chosen = -1;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (word_) {  // prefixes are nested: shortest admissible prefix
        if (chosen < 0 || cand[c].first.degree() < cand[chosen].first.degree())
          chosen = static_cast<int>(c);
        continue;
      }
      bool divisor_minimal = true;
      for (std::size_t c2 = 0; c2 < cand.size() && divisor_minimal; ++c2)
        if (c2 != c && cand[c2].first != cand[c].first &&
            cand[c2].first.divides(cand[c].first))
          divisor_minimal = false;
      if (!divisor_minimal) continue;
      if (chosen < 0 || cand[chosen].first.compare(cand[c].first, R_.order()) == Ordering::less)
        chosen = static_cast<int>(c);
    }
    if (chosen < 0) return std::nullopt;
    return cand[chosen];
  }

  const ReductionSystem& R_;
  bool word_;
  std::map<std::pair<BarTuple, int>, bool> crit_;
};

}  // namespace homres::detail
