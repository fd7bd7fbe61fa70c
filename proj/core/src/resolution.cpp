#include "homres/resolution.hpp"

namespace homres {

ResolutionComplex build_resolution(const ReductionSystem& R, Flavor flavor, int D, int d) {
  ResolutionComplex out;
  out.cells = enumerate_chains(R, flavor, D, d);
  int n = R.ring().n;
  out.cx.add_cell(0, Cell{"[]", std::vector<int>(n, 0)});
  std::map<BarTuple, int> index;
  index.emplace(BarTuple{}, 0);
  for (int i = 1; i <= D; ++i)
    for (const auto& e : out.cells.chains[i]) {
      std::vector<int> mdeg(n, 0);
      for (const auto& w : e) {
        auto wm = w.multidegree(n);
        for (int v = 0; v < n; ++v) mdeg[v] += wm[v];
      }
      index[e] = out.cx.add_cell(i, Cell{bar_label(e), mdeg});
    }
  out.minimal = true;
  for (int i = 1; i <= D; ++i)
    for (const auto& e : out.cells.chains[i]) {
      for (const auto& [f, c] : reduction_differential(out.cells, e)) {
        out.cx.add_entry(i, index.at(e), index.at(f), c);
        if (!c.constant_term().is_zero()) out.minimal = false;
      }
    }
  if (auto w = out.cx.check_boundary_squared())
    throw domain_error("resolution boundary does not square to zero at " + w->src + " -> " +
                       w->dst + " (" + w->coeff + ")");
  return out;
}

TypeIIWitness type_ii_possible(const ReductionSystem& R, Flavor flavor, int D, int d) {
  if (flavor == Flavor::Commutative) return scan_chains_for_type_ii(enumerate_chains(R, flavor, D, d));
  // local pattern: standard words w1, w2, w3, a standard reduction term w4
  // of w2*w3, and minimal generators m1, m2, m3 of the initial ideal placed
  // as suffixes: w1*w2 ends in m1 (spanning the junction), w2*w3 ends in
  // m2, and w1*w4 ends in m3
  TypeIIWitness out;
  const Ring& ring = R.ring();
  Scalar one(1, ring.field);
  auto mingen = R.min_gen_initial();
  // nonempty words a with a*w in the generating set, indexed by w
  auto junction_prefixes = [&](const Monomial& w) {
    std::vector<Monomial> as;
    for (const auto& m : mingen)
      if (w.degree() < m.degree() && w.is_suffix_of(m))
        as.push_back(m.subword(0, m.degree() - w.degree()));
    return as;
  };
  for (const auto& m2 : mingen) {
    for (int cut = 1; cut < m2.degree(); ++cut) {
      Monomial u2 = m2.subword(0, cut);
      Monomial w3 = m2.subword(cut, m2.degree() - cut);
      if (!R.is_standard(w3)) continue;
      // w2 runs over standard words ending in u2
      for (int deg = u2.degree(); deg + w3.degree() <= d - 1; ++deg) {
        for (const auto& w2 : R.standard_monomials(deg)) {
          if (!u2.is_suffix_of(w2)) continue;
          Polynomial nf = R.normal_form(Polynomial(ring, w2 * w3, one));
          auto a1s = junction_prefixes(w2);
          if (a1s.empty()) continue;
          for (const auto& [w4, coeff] : nf.terms()) {
            if (w4.is_one()) continue;
            for (const auto& a3 : junction_prefixes(w4)) {
              for (const auto& a1 : a1s) {
                // w1 needs both a1 and a3 as suffixes; the longer of the
                // two works iff they are nested and it is standard
                const Monomial& w1 = a1.degree() >= a3.degree() ? a1 : a3;
                const Monomial& shorter = a1.degree() >= a3.degree() ? a3 : a1;
                if (!shorter.is_suffix_of(w1) || !R.is_standard(w1)) continue;
                if (w1.degree() + w2.degree() + w3.degree() > d) continue;
                out.possible = true;
                out.detail = {BarTuple{w1, w2, w3}, BarTuple{w1, w4}};
                return out;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace homres
