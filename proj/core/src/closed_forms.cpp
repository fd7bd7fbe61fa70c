#include <algorithm>
#include <functional>

#include "homres/closed_forms.hpp"

namespace homres {

bool initial_is_complete_intersection(const ReductionSystem& R) {
  auto gens = R.min_gen_initial();
  int n = R.ring().n;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    auto ma = gens[a].multidegree(n);
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      auto mb = gens[b].multidegree(n);
      for (int v = 0; v < n; ++v)
        if (ma[v] > 0 && mb[v] > 0) return false;
    }
  }
  return true;
}

namespace {

// the critical two-cell attached to a minimal generator: head variable
// split off
BarTuple generator_pair(const Ring& ring, const Monomial& m) {
  Monomial x = Monomial::variable(ring, m.least_variable());
  return BarTuple{x, x.quotient_of(m)};
}

}  // namespace

std::string ci_cell_label(const CIcell& c, const ReductionSystem& R) {
  auto gens = R.min_gen_initial();
  // tokens sorted by descending head index; a generator pair precedes a
  // bare variable with the same head
  std::vector<std::tuple<int, int, BarTuple>> tokens;  // (key, var-flag, letters)
  for (int i : c.I) tokens.emplace_back(i, 1, BarTuple{Monomial::variable(R.ring(), i)});
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int l = 0; l < c.powers[j]; ++l)
      tokens.emplace_back(gens[j].least_variable(), 0, generator_pair(R.ring(), gens[j]));
  std::stable_sort(tokens.begin(), tokens.end(),
                   [](const auto& a, const auto& b) {
                     if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
                     return std::get<1>(a) < std::get<1>(b);
                   });
  BarTuple word;
  for (auto& [k, f, t] : tokens) word.insert(word.end(), t.begin(), t.end());
  return bar_label(word);
}

CIResolution complete_intersection_resolution(const ReductionSystem& R, int D, int d) {
  const Ring& ring = R.ring();
  if (!ring.commutative)
    throw domain_error("closed-form resolution needs a commutative quotient");
  if (!initial_is_complete_intersection(R))
    throw domain_error("initial ideal is not a complete intersection");
  auto gens = R.min_gen_initial();
  for (const auto& m : gens)
    if (m.degree() < 2) throw domain_error("degree-one relation in the closed form");
  int n = ring.n;
  int s = static_cast<int>(gens.size());
  Scalar one(1, ring.field);

  CIResolution out;
  out.mingen = gens;
  out.cells.resize(D + 1);

  // enumerate basis elements e_I t^L within the truncation
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> I;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) I.push_back(v);
    int r = static_cast<int>(I.size());
    if (r > D || r > d) continue;
    std::vector<int> L(s, 0);
    std::function<void(int, int, int)> rec = [&](int j, int hom, int internal) {
      if (j == s) {
        out.cells[hom].push_back(CIcell{I, L});
        return;
      }
      rec(j + 1, hom, internal);
      for (int l = 1;; ++l) {
        if (hom + 2 * l > D || internal + l * gens[j].degree() > d) break;
        L[j] = l;
        rec(j + 1, hom + 2 * l, internal + l * gens[j].degree());
      }
      L[j] = 0;
    };
    rec(0, r, r);
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  for (int hom = 0; hom <= D; ++hom)
    for (const auto& c : out.cells[hom]) {
      std::vector<int> mdeg(n, 0);
      for (int v : c.I) mdeg[v] += 1;
      for (int j = 0; j < s; ++j)
        if (c.powers[j] > 0) {
          auto gm = gens[j].multidegree(n);
          for (int v = 0; v < n; ++v) mdeg[v] += c.powers[j] * gm[v];
        }
      index[{c.I, c.powers}] =
          out.cx.add_cell(hom, Cell{ci_cell_label(c, R), mdeg});
    }

  // transfer polynomials: T[j][p] collects the terms of the full generator
  // polynomial whose largest variable is p, divided by x_p
  std::vector<Polynomial> f(s, Polynomial(ring));
  for (int j = 0; j < s; ++j) {
    f[j] = Polynomial(ring, gens[j], one);
    for (const auto& rule : R.rules())
      if (rule.lhs == gens[j]) {
        f[j] = f[j] - rule.rhs;
        break;
      }
  }
  std::vector<std::vector<Polynomial>> T(s, std::vector<Polynomial>(n, Polynomial(ring)));
  for (int j = 0; j < s; ++j)
    for (const auto& [alpha, c] : f[j].terms()) {
      if (alpha.is_one()) continue;
      auto ad = alpha.multidegree(n);
      int p = n - 1;
      while (ad[p] == 0) --p;
      Monomial xp = Monomial::variable(ring, p);
      T[j][p] = T[j][p] + Polynomial(ring, xp.quotient_of(alpha), c);
    }

  for (int hom = 1; hom <= D; ++hom)
    for (const auto& c : out.cells[hom]) {
      int src = index.at({c.I, c.powers});
      int r = static_cast<int>(c.I.size());
      // exterior part: drop one e_i, coefficient x_i, sign by the number of
      // larger indices present
      for (int pos = 0; pos < r; ++pos) {
        std::vector<int> I2 = c.I;
        I2.erase(I2.begin() + pos);
        Scalar sign((r - 1 - pos) % 2 ? -1 : 1, ring.field);
        QuotientElem coeff(
            Polynomial(ring, Monomial::variable(ring, c.I[pos]), sign), &R);
        out.cx.add_entry(hom, src, index.at({I2, c.powers}), coeff);
      }
      // divided-power part: lower one t_j, insert e_p with the transfer
      // coefficient
      for (int j = 0; j < s; ++j) {
        if (c.powers[j] == 0) continue;
        std::vector<int> L2 = c.powers;
        L2[j] -= 1;
        for (int p = 0; p < n; ++p) {
          if (std::find(c.I.begin(), c.I.end(), p) != c.I.end()) continue;
          if (T[j][p].is_zero()) continue;
          std::vector<int> I2 = c.I;
          I2.insert(std::lower_bound(I2.begin(), I2.end(), p), p);
          int below = static_cast<int>(std::count_if(c.I.begin(), c.I.end(),
                                                     [&](int i) { return i < p; }));
          Scalar sign((r + below) % 2 ? -1 : 1, ring.field);
          QuotientElem coeff(T[j][p].scale(sign), &R);
          if (coeff.is_zero()) continue;
          out.cx.add_entry(hom, src, index.at({I2, L2}), coeff);
        }
      }
    }

  if (auto w = out.cx.check_boundary_squared())
    throw domain_error("closed-form boundary does not square to zero at " + w->src + " -> " +
                       w->dst + " (" + w->coeff + ")");
  return out;
}

}  // namespace homres
