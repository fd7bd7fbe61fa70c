#include <algorithm>

#include "homres/reduction_system.hpp"

namespace homres {

namespace {

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

}  // namespace

ReductionSystem noncomm_complete(const std::vector<Polynomial>& gens, MonomialOrder ord,
                                 int degree_bound) {
  Ring ring = gens.empty() ? Ring{0, false, {}} : gens.front().ring();
  if (ring.commutative) throw context_mismatch("noncomm_complete needs a word ring");
  for (const auto& g : gens)
    if (g.degree() > degree_bound)
      throw domain_error("degree bound below generator degree");

  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (auto m = monic(g, ord)) basis.push_back(*m);
  interreduce(basis, ring, ord);

  // Resolve overlap (diamond) ambiguities; any overlap word above the bound
  // marks the system as merely truncated-complete.
  bool truncated = false;
  bool again = true;
  while (again) {
    again = false;
    truncated = false;
    ReductionSystem rs = as_system(ring, ord, basis);
    for (std::size_t i = 0; i < basis.size() && !again; ++i) {
      for (std::size_t j = 0; j < basis.size() && !again; ++j) {
        const Monomial u = *basis[i].leading_monomial(ord);
        const Monomial v = *basis[j].leading_monomial(ord);
        // proper overlaps: nonempty proper suffix of u equals prefix of v
        for (int k = 1; k < std::min(u.degree(), v.degree()) && !again; ++k) {
          if (!(u.subword(u.degree() - k, k) == v.subword(0, k))) continue;
          int wdeg = u.degree() + v.degree() - k;
          if (wdeg > degree_bound) {
            truncated = true;
            continue;
          }
          // w = u * (v minus its k-prefix); two one-step reductions of w
          Monomial vtail = v.subword(k, v.degree() - k);
          Monomial upre = u.subword(0, u.degree() - k);
          Polynomial left = (Polynomial(ring, u, Scalar(1, ring.field)) - basis[i])
                                .times_monomial(vtail, false);
          Polynomial right = (Polynomial(ring, v, Scalar(1, ring.field)) - basis[j])
                                 .times_monomial(upre, true);
          Polynomial r = rs.reduce(left - right);
          if (auto m = monic(r, ord)) {
            basis.push_back(*m);
            interreduce(basis, ring, ord);
            again = true;
          }
        }
      }
    }
  }

  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial(ord)->compare(*b.leading_monomial(ord), ord) == Ordering::less;
  });
  ReductionSystem rs = as_system(ring, ord, basis);
  rs.set_reduced(true);
  if (truncated) rs.set_complete_up_to_degree(degree_bound);
  return rs;
}

}  // namespace homres
