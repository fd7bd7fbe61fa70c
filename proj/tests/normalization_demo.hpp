#pragma once

// Demonstration builders for the Morse engine: the *unnormalized* one- and
// two-sided complexes over a basis W = {1} u standard monomials, together
// with the acyclic matching that contracts runs of 1-entries.  The Morse
// complex of that matching reproduces the normalized complex cell for cell
// and coefficient for coefficient, which the tests verify directly.

#include <map>
#include <vector>

#include "homres/hochschild.hpp"
#include "homres/morse.hpp"

namespace demo {

using namespace homres;

template <class C>
struct UnnormalizedComplex {
  BasedComplex<C> cx;
  std::vector<std::vector<BarTuple>> tuples;      // per homological degree
  std::map<BarTuple, std::pair<int, int>> index;  // tuple -> (degree, index)
  Matching matching;                              // contraction of 1-runs
};

namespace impl {

// tuples over W (which contains 1), lengths 1..L, internal degree <= d
inline void enumerate_with_units(const std::vector<Monomial>& W, int L, int d, BarTuple& cur,
                                 int deg, std::vector<std::vector<BarTuple>>& out) {
  if (!cur.empty()) out[cur.size()].push_back(cur);
  if (static_cast<int>(cur.size()) == L) return;
  for (const auto& w : W) {
    if (deg + w.degree() > d) continue;
    cur.push_back(w);
    enumerate_with_units(W, L, d, cur, deg + w.degree(), out);
    cur.pop_back();
  }
}

template <class C>
void fill_cells_and_matching(const ReductionSystem& R, int L, int d, UnnormalizedComplex<C>& U) {
  std::vector<Monomial> W;
  W.push_back(Monomial::one(R.ring()));
  for (const auto& m : R.standard_basis_up_to(d)) W.push_back(m);
  U.tuples.resize(L + 1);
  BarTuple cur;
  enumerate_with_units(W, L, d, cur, 0, U.tuples);
  U.tuples[0].push_back(BarTuple{});
  int n = R.ring().n;
  for (int i = 0; i <= L; ++i)
    for (const auto& t : U.tuples[i]) {
      std::vector<int> mdeg(n, 0);
      for (const auto& w : t) {
        auto wm = w.multidegree(n);
        for (int v = 0; v < n; ++v) mdeg[v] += wm[v];
      }
      U.index.emplace(t, std::make_pair(i, U.cx.add_cell(i, Cell{bar_label(t), mdeg})));
    }
  // the matching: in the run of 1-entries starting at the first 1, an even
  // run is the upper cell of an edge, matched to the tuple with one 1 of
  // the run removed (an odd run); 1-free tuples stay critical
  for (int i = 1; i <= L; ++i)
    for (const auto& t : U.tuples[i]) {
      int p = -1;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (t[j].is_one()) {
          p = static_cast<int>(j);
          break;
        }
      if (p < 0) continue;
      int run = 0;
      for (std::size_t j = p; j < t.size() && t[j].is_one(); ++j) ++run;
      if (run % 2) continue;  // odd run: the lower cell of its edge
      BarTuple lower = t;
      lower.erase(lower.begin() + p);
      U.matching.edges.push_back(
          MatchEdge{i, U.index.at(t).second, U.index.at(lower).second});
    }
}

}  // namespace impl

/// One-sided unnormalized complex: coefficients in A, with the extra faces
/// the unit basis element creates (a head face of weight 1, the constant
/// component of every merge landing on a 1-entry, and a unit tail face).
inline UnnormalizedComplex<QuotientElem> unnormalized_one_sided(const ReductionSystem& R, int L,
                                                                int d) {
  UnnormalizedComplex<QuotientElem> U;
  impl::fill_cells_and_matching(R, L, d, U);
  const Ring& ring = R.ring();
  Scalar one(1, ring.field);
  Monomial munit = Monomial::one(ring);
  for (int i = 1; i <= L; ++i)
    for (std::size_t s = 0; s < U.tuples[i].size(); ++s) {
      const BarTuple& t = U.tuples[i][s];
      BarTuple head(t.begin() + 1, t.end());
      U.cx.add_entry(i, static_cast<int>(s), U.index.at(head).second,
                     QuotientElem::of_monomial(t[0], &R));
      for (int j = 1; j < i; ++j) {
        Polynomial nf = R.normal_form(Polynomial(ring, t[j - 1] * t[j], one));
        Scalar sign((j % 2) ? -1 : 1, ring.field);
        for (const auto& [v, a] : nf.terms()) {
          BarTuple f(t.begin(), t.begin() + (j - 1));
          f.push_back(v.is_one() ? munit : v);
          f.insert(f.end(), t.begin() + (j + 1), t.end());
          U.cx.add_entry(i, static_cast<int>(s), U.index.at(f).second,
                         QuotientElem::of_scalar(sign * a, &R));
        }
      }
      if (t.back().is_one()) {  // augmentation of the last entry
        BarTuple init(t.begin(), t.end() - 1);
        U.cx.add_entry(i, static_cast<int>(s), U.index.at(init).second,
                       QuotientElem::of_scalar(Scalar((i % 2) ? -1 : 1, ring.field), &R));
      }
    }
  return U;
}

/// Two-sided unnormalized complex: coefficients in A (x) A^op, with both
/// peel faces always present.
inline UnnormalizedComplex<BimoduleElem> unnormalized_two_sided(const ReductionSystem& R, int L,
                                                                int d) {
  UnnormalizedComplex<BimoduleElem> U;
  impl::fill_cells_and_matching(R, L, d, U);
  const Ring& ring = R.ring();
  Scalar one(1, ring.field);
  Monomial munit = Monomial::one(ring);
  Polynomial punit = Polynomial::constant(ring, one);
  for (int i = 1; i <= L; ++i)
    for (std::size_t s = 0; s < U.tuples[i].size(); ++s) {
      const BarTuple& t = U.tuples[i][s];
      BarTuple head(t.begin() + 1, t.end());
      U.cx.add_entry(i, static_cast<int>(s), U.index.at(head).second,
                     BimoduleElem::tensor(Polynomial(ring, t[0], one), punit, &R));
      BarTuple init(t.begin(), t.end() - 1);
      Scalar psign((i % 2) ? -1 : 1, ring.field);
      U.cx.add_entry(i, static_cast<int>(s), U.index.at(init).second,
                     BimoduleElem::tensor(Polynomial::constant(ring, psign),
                                          Polynomial(ring, t.back(), one), &R));
      for (int j = 1; j < i; ++j) {
        Polynomial nf = R.normal_form(Polynomial(ring, t[j - 1] * t[j], one));
        Scalar sign((j % 2) ? -1 : 1, ring.field);
        for (const auto& [v, a] : nf.terms()) {
          BarTuple f(t.begin(), t.begin() + (j - 1));
          f.push_back(v.is_one() ? munit : v);
          f.insert(f.end(), t.begin() + (j + 1), t.end());
          U.cx.add_entry(i, static_cast<int>(s), U.index.at(f).second,
                         BimoduleElem::of_scalar(sign * a, &R));
        }
      }
    }
  return U;
}

/// Compares the Morse complex of the 1-run matching, cell for cell and
/// coefficient for coefficient, against a directly constructed normalized
/// complex up to homological degree D.  Returns an empty string on success
/// and a diagnostic otherwise.
template <class C, class Norm>
std::string compare_contraction(const UnnormalizedComplex<C>& U, const MorseData<C>& M,
                                const Norm& N, int D) {
  for (int i = 0; i <= D; ++i) {
    std::map<std::string, int> im, in;
    for (std::size_t ms = 0; ms < M.critical[i].size(); ++ms)
      im[U.cx.cells(i)[M.critical[i][ms]].label] = static_cast<int>(ms);
    for (int s = 0; s < N.cx.rank(i); ++s) in[N.cx.cells(i)[s].label] = s;
    if (im.size() != in.size()) return "cell mismatch in degree " + std::to_string(i);
    for (const auto& [label, s] : in)
      if (!im.count(label)) return "missing critical cell " + label;
    if (i == 0) continue;
    for (const auto& [label, ms] : im) {
      std::map<std::string, std::string> a, b;
      for (const auto& [dst, c] : M.morse.column(i, ms))
        a[M.morse.cells(i - 1)[dst].label] = coeff_str(c);
      for (const auto& [dst, c] : N.cx.column(i, in.at(label)))
        b[N.cx.cells(i - 1)[dst].label] = coeff_str(c);
      if (a != b) return "differential mismatch at " + label;
    }
  }
  return "";
}

}  // namespace demo
