#include <algorithm>
#include <functional>
#include <set>

#include "homres/hochschild.hpp"
#include "match_oracle.hpp"

namespace homres {

// ---------------------------------------------------------------------------
// BimoduleElem
// ---------------------------------------------------------------------------

BimoduleElem::BimoduleElem(const Bimodule& b, const ReductionSystem* rs) : rs_(rs) {
  const Ring& ring = rs->ring();
  Scalar one(1, ring.field);
  b_ = Bimodule(ring);
  for (const auto& [k, c] : b.terms()) {
    Polynomial l = rs->normal_form(Polynomial(ring, k.first, one));
    Polynomial r = rs->normal_form(Polynomial(ring, k.second, one));
    for (const auto& [lm, lc] : l.terms())
      for (const auto& [rm, rc] : r.terms()) b_.add_term(lm, rm, c * lc * rc);
  }
}

BimoduleElem BimoduleElem::tensor(const Polynomial& p, const Polynomial& q,
                                  const ReductionSystem* rs) {
  return BimoduleElem(Bimodule(p, q), rs);
}

BimoduleElem BimoduleElem::of_scalar(const Scalar& c, const ReductionSystem* rs) {
  const Ring& ring = rs->ring();
  return tensor(Polynomial::constant(ring, c),
                Polynomial::constant(ring, Scalar(1, ring.field)), rs);
}

BimoduleElem BimoduleElem::operator+(const BimoduleElem& o) const {
  BimoduleElem out = *this;
  out.b_ = b_ + o.b_;  // sums of reduced forms stay reduced
  if (!out.rs_) out.rs_ = o.rs_;
  return out;
}

BimoduleElem BimoduleElem::operator*(const BimoduleElem& o) const {
  const ReductionSystem* rs = rs_ ? rs_ : o.rs_;
  return BimoduleElem(b_ * o.b_, rs);
}

BimoduleElem BimoduleElem::operator-() const {
  BimoduleElem out = *this;
  out.b_ = -b_;
  return out;
}

BimoduleElem coeff_unit_inverse(const BimoduleElem& c) {
  if (!c.is_unit()) throw domain_error("inverse of a non-unit two-sided coefficient");
  return BimoduleElem::of_scalar(c.constant_term().inverse(), c.system());
}

// ---------------------------------------------------------------------------
// Normalized two-sided complex
// ---------------------------------------------------------------------------

namespace {

// tuples of standard monomials, lengths 1..D, total degree <= d, in the
// same length-major enumeration order as the one-sided complex (so that
// matchings computed there apply index-for-index)
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

HochschildComplex normalized_hochschild(const ReductionSystem& R, int D, int d) {
  if (R.complete_up_to_degree() < d)
    throw incomplete_basis("reduction system not complete for the requested truncation", d);
  HochschildComplex H;
  H.system = &R;
  H.max_hdeg = D;
  H.max_internal = d;
  H.tuples.resize(D + 1);
  auto G = R.standard_basis_up_to(d);
  BarTuple cur;
  enumerate_tuples(G, D, d, cur, 0, H.tuples);
  H.tuples[0].push_back(BarTuple{});

  int n = R.ring().n;
  for (int i = 0; i <= D; ++i)
    for (const auto& t : H.tuples[i]) {
      std::vector<int> mdeg(n, 0);
      for (const auto& w : t) {
        auto wm = w.multidegree(n);
        for (int v = 0; v < n; ++v) mdeg[v] += wm[v];
      }
      H.index.emplace(t, std::make_pair(i, H.cx.add_cell(i, Cell{bar_label(t), mdeg})));
    }

  const Ring& ring = R.ring();
  Scalar one(1, ring.field), minus(-1, ring.field);
  Polynomial punit = Polynomial::constant(ring, one);
  for (int i = 1; i <= D; ++i) {
    for (std::size_t s = 0; s < H.tuples[i].size(); ++s) {
      const BarTuple& t = H.tuples[i][s];
      // left peel: (w_1 (x) 1)[w_2|...|w_i]
      BarTuple head(t.begin() + 1, t.end());
      H.cx.add_entry(i, static_cast<int>(s), H.find(head)->second,
                     BimoduleElem::tensor(Polynomial(ring, t[0], one), punit, &R));
      // right peel: (-1)^i (1 (x) w_i)[w_1|...|w_{i-1}]
      BarTuple init(t.begin(), t.end() - 1);
      Scalar psign = (i % 2) ? minus : one;
      H.cx.add_entry(i, static_cast<int>(s), H.find(init)->second,
                     BimoduleElem::tensor(Polynomial::constant(ring, psign),
                                          Polynomial(ring, t[i - 1], one), &R));
      // merge faces
      for (int j = 1; j < i; ++j) {
        Polynomial nf = R.normal_form(Polynomial(ring, t[j - 1] * t[j], one));
        Scalar sign = (j % 2) ? minus : one;
        for (const auto& [nu, a] : nf.terms()) {
          if (nu.is_one()) continue;  // normalized: the constant part is dropped
          BarTuple u;
          u.reserve(i - 1);
          u.insert(u.end(), t.begin(), t.begin() + (j - 1));
          u.push_back(nu);
          u.insert(u.end(), t.begin() + (j + 1), t.end());
          auto tgt = H.find(u);
          if (!tgt) throw domain_error("two-sided truncation not closed under the differential");
          H.cx.add_entry(i, static_cast<int>(s), tgt->second,
                         BimoduleElem::of_scalar(sign * a, &R));
        }
      }
    }
  }
  return H;
}

// ---------------------------------------------------------------------------
// Two-sided reduction differential
// ---------------------------------------------------------------------------

namespace {

using detail::MatchOracle;
using detail::Status;

// Walks the reduction graph exactly like the one-sided walker, with
// two-sided coefficients: the left peel contributes (w_1 (x) 1), the right
// peel (-1)^l (1 (x) w_l), and merge faces scalars.  Reduction sequences
// compose by multiplication in A (x) A^op (kept in canonical reduced form).
class TwoSidedWalker {
 public:
  explicit TwoSidedWalker(const ChainSet& C)
      : R_(*C.system), oracle_(*C.system), ring_(C.system->ring()) {}

  const std::map<BarTuple, BimoduleElem>& expand(const BarTuple& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    if (!open_.insert(t).second) throw domain_error("cyclic reduction sequence");
    std::map<BarTuple, BimoduleElem> out;
    for (const auto& [f, c] : faces(t)) {
      BarTuple partner;
      switch (oracle_.status(f, &partner)) {
        case Status::Critical:
          add_(out, f, c);
          break;
        case Status::Lower: {
          if (partner == t) break;  // the reversed matched edge of t itself
          BimoduleElem w = BimoduleElem::of_scalar(up_weight(partner, f), &R_);
          for (const auto& [g, cg] : expand(partner)) add_(out, g, (c * cg) * w);
          break;
        }
        case Status::Upper:
          break;  // no outgoing reversed edge: the path dies
      }
    }
    open_.erase(t);
    return memo_[t] = std::move(out);
  }

 private:
  // all faces of the two-sided differential of t with their coefficients
  std::map<BarTuple, BimoduleElem> faces(const BarTuple& t) {
    Scalar one(1, ring_.field);
    std::map<BarTuple, BimoduleElem> out;
    int l = static_cast<int>(t.size());
    if (l == 0) return out;
    Polynomial punit = Polynomial::constant(ring_, one);
    add_(out, BarTuple(t.begin() + 1, t.end()),
         BimoduleElem::tensor(Polynomial(ring_, t[0], one), punit, &R_));
    Scalar psign((l % 2) ? -1 : 1, ring_.field);
    add_(out, BarTuple(t.begin(), t.end() - 1),
         BimoduleElem::tensor(Polynomial::constant(ring_, psign),
                              Polynomial(ring_, t[l - 1], one), &R_));
    for (int i = 1; i < l; ++i) {
      Polynomial nf = R_.normal_form(Polynomial(ring_, t[i - 1] * t[i], one));
      for (const auto& [v, a] : nf.terms()) {
        if (v.is_one()) continue;  // normalized: constants are dropped
        BarTuple f(t.begin(), t.begin() + (i - 1));
        f.push_back(v);
        f.insert(f.end(), t.begin() + (i + 1), t.end());
        add_(out, f, BimoduleElem::of_scalar((i % 2) ? -a : a, &R_));
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  // -1 / [upper : lower], the weight of the reversed matched edge
  Scalar up_weight(const BarTuple& upper, const BarTuple& lower) {
    auto fs = faces(upper);
    auto it = fs.find(lower);
    if (it == fs.end() || !it->second.is_unit())
      throw domain_error("matched edge weight is not a unit");
    return -(it->second.constant_term().inverse());
  }

  static void add_(std::map<BarTuple, BimoduleElem>& out, const BarTuple& f,
                   const BimoduleElem& c) {
    auto [it, fresh] = out.emplace(f, c);
    if (!fresh) it->second = it->second + c;
  }

  const ReductionSystem& R_;
  MatchOracle oracle_;
  const Ring& ring_;
  std::map<BarTuple, std::map<BarTuple, BimoduleElem>> memo_;
  std::set<BarTuple> open_;
};

}  // namespace

std::map<BarTuple, BimoduleElem> hochschild_differential(const ChainSet& C, const BarTuple& e) {
  const ReductionSystem& R = *C.system;
  const Ring& ring = R.ring();
  Scalar one(1, ring.field);
  std::map<BarTuple, BimoduleElem> out;
  if (e.size() == 1) {  // [w] -> (w (x) 1 - 1 (x) w) []
    Polynomial w(ring, e[0], one);
    Polynomial punit = Polynomial::constant(ring, one);
    out.emplace(BarTuple{}, BimoduleElem::tensor(w, punit, &R) +
                                BimoduleElem::tensor(Polynomial::constant(ring, -one), w, &R));
    return out;
  }
  TwoSidedWalker walk(C);
  for (const auto& [f, c] : walk.expand(e))
    if (!c.is_zero()) out.emplace(f, c);
  return out;
}

BimoduleResolution hochschild_resolution(const ReductionSystem& R, Flavor flavor, int D, int d) {
  BimoduleResolution out;
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
      for (const auto& [f, c] : hochschild_differential(out.cells, e)) {
        out.cx.add_entry(i, index.at(e), index.at(f), c);
        if (!c.constant_term().is_zero()) out.minimal = false;
      }
    }
  if (auto w = out.cx.check_boundary_squared())
    throw domain_error("two-sided boundary does not square to zero at " + w->src + " -> " +
                       w->dst + " (" + w->coeff + ")");
  return out;
}

// ---------------------------------------------------------------------------
// Closed form for complete-intersection initial ideals
// ---------------------------------------------------------------------------

BimoduleResolution ci_bimodule_resolution(const ReductionSystem& R, int D, int d) {
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

  BimoduleResolution out;
  out.cells.system = &R;
  out.cells.flavor = Flavor::Commutative;
  out.cells.max_hdeg = D;
  out.cells.max_internal = d;
  out.cells.chains.resize(D + 1);

  // enumerate basis elements e_I t^L within the truncation
  std::vector<std::vector<CIcell>> cells(D + 1);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> I;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) I.push_back(v);
    int r = static_cast<int>(I.size());
    if (r > D || r > d) continue;
    std::vector<int> L(s, 0);
    std::function<void(int, int, int)> rec = [&](int j, int hom, int internal) {
      if (j == s) {
        cells[hom].push_back(CIcell{I, L});
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
    for (const auto& c : cells[hom]) {
      std::vector<int> mdeg(n, 0);
      for (int v : c.I) mdeg[v] += 1;
      for (int j = 0; j < s; ++j)
        if (c.powers[j] > 0) {
          auto gm = gens[j].multidegree(n);
          for (int v = 0; v < n; ++v) mdeg[v] += c.powers[j] * gm[v];
        }
      index[{c.I, c.powers}] = out.cx.add_cell(hom, Cell{ci_cell_label(c, R), mdeg});
    }

  // full relation polynomials f_j = lhs - rhs of the defining rules
  std::vector<Polynomial> f(s, Polynomial(ring));
  for (int j = 0; j < s; ++j) {
    f[j] = Polynomial(ring, gens[j], one);
    for (const auto& rule : R.rules())
      if (rule.lhs == gens[j]) {
        f[j] = f[j] - rule.rhs;
        break;
      }
  }
  // divided-difference transfers: Tr[j][p] sums, over every term c x^alpha
  // of f_j with alpha_p > 0, the telescope
  //   c * sum_{q=0}^{alpha_p - 1} (x^{alpha_{<p}} x_p^q (x) x_p^{alpha_p-1-q} x^{alpha_{>p}}),
  // so that sum_p T(x_p) * Tr[j][p] = f_j (x) 1 - 1 (x) f_j = 0 in the quotient
  std::vector<std::vector<Bimodule>> Tr(s, std::vector<Bimodule>(n, Bimodule(ring)));
  for (int j = 0; j < s; ++j)
    for (const auto& [alpha, c] : f[j].terms()) {
      auto ad = alpha.multidegree(n);
      for (int p = 0; p < n; ++p) {
        if (ad[p] == 0) continue;
        for (int q = 0; q < ad[p]; ++q) {
          std::vector<int> le(n, 0), re(n, 0);
          for (int v = 0; v < p; ++v) le[v] = ad[v];
          le[p] = q;
          re[p] = ad[p] - 1 - q;
          for (int v = p + 1; v < n; ++v) re[v] = ad[v];
          Tr[j][p].add_term(Monomial::commutative(std::move(le)),
                            Monomial::commutative(std::move(re)), c);
        }
      }
    }

  Monomial munit = Monomial::one(ring);
  auto T_of = [&](int v) {
    Bimodule b(ring);
    Monomial x = Monomial::variable(ring, v);
    b.add_term(x, munit, one);
    b.add_term(munit, x, -one);
    return b;
  };

  for (int hom = 1; hom <= D; ++hom)
    for (const auto& c : cells[hom]) {
      int src = index.at({c.I, c.powers});
      int r = static_cast<int>(c.I.size());
      // exterior part: drop one e_i, coefficient T(x_i), sign by the number
      // of larger indices present
      for (int pos = 0; pos < r; ++pos) {
        std::vector<int> I2 = c.I;
        I2.erase(I2.begin() + pos);
        Scalar sign((r - 1 - pos) % 2 ? -1 : 1, ring.field);
        BimoduleElem coeff = BimoduleElem(T_of(c.I[pos]), &R) * BimoduleElem::of_scalar(sign, &R);
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
          if (Tr[j][p].is_zero()) continue;
          std::vector<int> I2 = c.I;
          I2.insert(std::lower_bound(I2.begin(), I2.end(), p), p);
          int below = static_cast<int>(
              std::count_if(c.I.begin(), c.I.end(), [&](int i) { return i < p; }));
          Scalar sign((r + below) % 2 ? -1 : 1, ring.field);
          BimoduleElem coeff = BimoduleElem(Tr[j][p], &R) * BimoduleElem::of_scalar(sign, &R);
          if (coeff.is_zero()) continue;
          out.cx.add_entry(hom, src, index.at({I2, L2}), coeff);
        }
      }
    }

  out.minimal = true;
  for (int hom = 1; hom <= D; ++hom)
    for (int src = 0; src < out.cx.rank(hom); ++src)
      for (const auto& [dst, coeff] : out.cx.column(hom, src))
        if (!coeff.constant_term().is_zero()) out.minimal = false;

  if (auto w = out.cx.check_boundary_squared())
    throw domain_error("closed-form boundary does not square to zero at " + w->src + " -> " +
                       w->dst + " (" + w->coeff + ")");
  return out;
}

BettiTable hh_hilbert(const BimoduleResolution& res) {
  if (!res.minimal)
    throw domain_error("Hilbert data requested from a non-minimal resolution");
  BettiTable tab;
  tab.n = res.cells.system ? res.cells.system->ring().n : 0;
  for (int i = 0; i <= res.cx.max_degree(); ++i)
    for (const auto& cell : res.cx.cells(i)) tab.ranks[{i, cell.multidegree}] += 1;
  return tab;
}

}  // namespace homres
