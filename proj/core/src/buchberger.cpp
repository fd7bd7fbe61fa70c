#include <algorithm>
#include <deque>
#include <set>

#include "homres/reduction_system.hpp"

namespace homres {

namespace {

// monic copy, or nullopt for zero
std::optional<Polynomial> monic(const Polynomial& p, MonomialOrder ord) {
  auto lm = p.leading_monomial(ord);
  if (!lm) return std::nullopt;
  return p.scale(p.coefficient(*lm).inverse());
}

ReductionSystem as_system(const Ring& ring, MonomialOrder ord,
                          const std::vector<Polynomial>& basis, int skip = -1) {
  ReductionSystem rs(ring, ord);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    Monomial lm = *basis[i].leading_monomial(ord);
    rs.add_rule(lm, Polynomial(ring, lm, Scalar(1, ring.field)) - basis[i]);
  }
  return rs;
}

// reduce every element against the others until stable; keeps all monic
void interreduce(std::vector<Polynomial>& basis, const Ring& ring, MonomialOrder ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Polynomial r = as_system(ring, ord, basis, static_cast<int>(i)).reduce(basis[i]);
      if (r == basis[i]) continue;
      changed = true;
      auto m = monic(r, ord);
      if (m) {
        basis[i] = *m;
      } else {
        basis.erase(basis.begin() + static_cast<long>(i));
        --i;
      }
    }
  }
}

Monomial lcm_of(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.data().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.data()[i], b.data()[i]);
  return Monomial::commutative(e);
}

}  // namespace

ReductionSystem buchberger(const std::vector<Polynomial>& gens, MonomialOrder ord) {
  Ring ring = gens.empty() ? Ring{0, true, {}} : gens.front().ring();
  if (!ring.commutative) throw context_mismatch("buchberger needs a commutative ring");

  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw context_mismatch("generators in different rings");
    if (auto m = monic(g, ord)) basis.push_back(*m);
  }
  interreduce(basis, ring, ord);

  std::deque<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> done;
  auto queue_pairs_with = [&](int j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  };
  for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(static_cast<int>(j));

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Monomial li = *basis[i].leading_monomial(ord);
    Monomial lj = *basis[j].leading_monomial(ord);
    Monomial lcm = lcm_of(li, lj);
    // coprime criterion
    if (lcm == li * lj) {
      done.emplace(i, j);
      continue;
    }
    // chain criterion: a third leading term dividing the lcm, both side pairs done
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (!basis[k].leading_monomial(ord)->divides(lcm)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min<int>(a, b), std::max<int>(a, b)); };
      if (done.count(key(i, static_cast<int>(k))) && done.count(key(j, static_cast<int>(k))))
        skip = true;
    }
    done.emplace(i, j);
    if (skip) continue;

    Polynomial s = basis[i].times_monomial(li.quotient_of(lcm), true) -
                   basis[j].times_monomial(lj.quotient_of(lcm), true);
    Polynomial r = as_system(ring, ord, basis).reduce(s);
    if (auto m = monic(r, ord)) {
      basis.push_back(*m);
      queue_pairs_with(static_cast<int>(basis.size()) - 1);
    }
  }

  interreduce(basis, ring, ord);
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial(ord)->compare(*b.leading_monomial(ord), ord) == Ordering::less;
  });
  ReductionSystem rs = as_system(ring, ord, basis);
  rs.set_reduced(true);
  return rs;
}

}  // namespace homres
