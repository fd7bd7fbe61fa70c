#include "homres/bar.hpp"

namespace homres {

std::string bar_label(const BarTuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "|";
    s += t[i].str();
  }
  return s + "]";
}

int internal_degree(const BarTuple& t) {
  int d = 0;
  for (const auto& w : t) d += w.degree();
  return d;
}

namespace {

// tuples of standard monomials, lengths 1..D, total degree <= d, in
// length-major enumeration order
void enumerate_tuples(const std::vector<Monomial>& G, int D, int d, BarTuple& cur, int deg,
                      std::vector<std::vector<BarTuple>>& out) {
  if (!cur.empty()) out[cur.size()].push_back(cur);
  if (static_cast<int>(cur.size()) == D) return;
  for (const auto& w : G) {
    if (deg + w.degree() > d) continue;
    cur.push_back(w);
    enumerate_tuples(G, D, d, cur, deg + w.degree(), out);
    cur.pop_back();
  }
}

}  // namespace

BarComplex normalized_bar(const ReductionSystem& R, int D, int d) {
  if (R.complete_up_to_degree() < d) throw incomplete_basis("reduction system not complete for the requested truncation", d);
  BarComplex B;
  B.system = &R;
  B.max_hdeg = D;
  B.max_internal = d;
  B.tuples.resize(D + 1);
  auto G = R.standard_basis_up_to(d);
  BarTuple cur;
  enumerate_tuples(G, D, d, cur, 0, B.tuples);
  B.tuples[0].push_back(BarTuple{});

  for (int i = 0; i <= D; ++i)
    for (const auto& t : B.tuples[i]) {
      std::vector<int> mdeg(R.ring().n, 0);
      for (const auto& w : t) {
        auto wm = w.multidegree(R.ring().n);
        for (int v = 0; v < R.ring().n; ++v) mdeg[v] += wm[v];
      }
      B.index.emplace(t, std::make_pair(i, B.cx.add_cell(i, Cell{bar_label(t), mdeg})));
    }

  const Ring& ring = R.ring();
  Scalar one(1, ring.field), minus(-1, ring.field);
  for (int i = 1; i <= D; ++i) {
    for (std::size_t s = 0; s < B.tuples[i].size(); ++s) {
      const BarTuple& t = B.tuples[i][s];
      // leading face: w_1 [w_2|...|w_i]
      BarTuple head(t.begin() + 1, t.end());
      auto hd = B.find(head);
      B.cx.add_entry(i, static_cast<int>(s), hd->second, QuotientElem::of_monomial(t[0], &R));
      // merge faces
      for (int j = 1; j < i; ++j) {
        Polynomial prod(ring, t[j - 1] * t[j], one);
        Polynomial nf = R.normal_form(prod);
        Scalar sign = (j % 2) ? minus : one;
        for (const auto& [nu, a] : nf.terms()) {
          if (nu.is_one()) continue;  // normalized: the constant part is dropped
          BarTuple u;
          u.reserve(i - 1);
          u.insert(u.end(), t.begin(), t.begin() + (j - 1));
          u.push_back(nu);
          u.insert(u.end(), t.begin() + (j + 1), t.end());
          auto tgt = B.find(u);
          if (!tgt) throw domain_error("bar truncation not closed under the differential");
          B.cx.add_entry(i, static_cast<int>(s), tgt->second,
                         QuotientElem::of_scalar(sign * a, &R));
        }
      }
    }
  }
  return B;
}

}  // namespace homres
