#include <algorithm>
#include <set>

#include "homres/series.hpp"

namespace homres {

namespace {

const MonomialOrder kOrd{MonomialOrder::DegLex};

Polynomial poly_one(const Ring& ring) {
  return Polynomial::constant(ring, Scalar(1, ring.field));
}

// leading term with respect to deglex (any term order works for exact
// division in a domain)
std::pair<Monomial, Scalar> leading_term(const Polynomial& p) {
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (best->first.compare(it->first, kOrd) == Ordering::less) best = it;
  return *best;
}

// exact quotient p / q in the commutative series ring; throws if the
// division leaves a remainder
Polynomial exact_div(Polynomial p, const Polynomial& q) {
  if (q.is_zero()) throw domain_error("exact division by zero");
  Polynomial out(p.ring());
  auto [qm, qc] = leading_term(q);
  while (!p.is_zero()) {
    auto [pm, pc] = leading_term(p);
    if (!qm.divides(pm)) throw domain_error("division is not exact");
    Monomial m = qm.quotient_of(pm);
    Scalar c = pc / qc;
    out.add_term(m, c);
    p = p - q * Polynomial(p.ring(), m, c);
  }
  return out;
}

// fraction-free (Bareiss) determinant of a square polynomial matrix
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> M, const Ring& ring) {
  int m = static_cast<int>(M.size());
  if (m == 0) return poly_one(ring);
  Polynomial prev = poly_one(ring);
  int sign = 1;
  for (int k = 0; k + 1 < m; ++k) {
    int piv = -1;
    for (int r = k; r < m; ++r)
      if (!M[r][k].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Polynomial(ring);  // singular
    if (piv != k) {
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j)
        M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = Polynomial(ring);
    }
    prev = M[k][k];
  }
  return sign < 0 ? -M[m - 1][m - 1] : M[m - 1][m - 1];
}

// weighted word count of the language of a state graph: every state is
// accepting and carries the weight of reading its own token; `seed` marks
// the states readable first.  F = 1 + sum over nonempty accepted words of
// the product of token weights, solved exactly by Cramer's rule on
// (I - W N) y = w.
RationalSeries transfer_series(const Ring& ring, const std::vector<Polynomial>& weight,
                               const std::vector<char>& seed,
                               const std::vector<std::vector<int>>& next) {
  int m = static_cast<int>(weight.size());
  std::vector<std::vector<Polynomial>> A(m, std::vector<Polynomial>(m, Polynomial(ring)));
  for (int i = 0; i < m; ++i) {
    A[i][i] = poly_one(ring);
    for (int j : next[i]) A[i][j] = A[i][j] - weight[i];
  }
  Polynomial den = bareiss_det(A, ring);
  Polynomial num = den;
  for (int i = 0; i < m; ++i) {
    if (!seed[i]) continue;
    auto Ai = A;
    for (int r = 0; r < m; ++r) Ai[r][i] = weight[r];
    num = num + bareiss_det(Ai, ring);
  }
  RationalSeries out{ring, std::move(num), std::move(den), false};
  // normalize the constant term of the denominator to 1
  Scalar c0 = out.den.constant_term();
  if (c0.is_zero()) throw domain_error("series denominator has zero constant term");
  out.num = out.num.scale(c0.inverse());
  out.den = out.den.scale(c0.inverse());
  return out;
}

// weight of one chain token: x^{multidegree} t^{hom}
Polynomial token_weight(const Ring& sring, const Monomial& w, int n, int hom) {
  auto e = w.multidegree(n);
  e.resize(n + 1, 0);
  e[n] = hom;
  return Polynomial(sring, Monomial::commutative(std::move(e)), Scalar(1, sring.field));
}

}  // namespace

ChainAutomaton build_automaton(const ReductionSystem& R) {
  if (R.ring().commutative)
    throw domain_error("the chain automaton needs a non-commutative quotient");
  ChainAutomaton A;
  A.system = &R;
  auto mingen = R.min_gen_initial();
  std::map<Monomial, int> index;  // entry word -> state (1-based)
  auto state_of = [&](const Monomial& w) {
    auto [it, fresh] = index.emplace(w, static_cast<int>(A.entries.size()) + 1);
    if (fresh) {
      A.entries.push_back(w);
      A.next.emplace_back();
    }
    return it->second;
  };
  // candidate successor entries of a chain ending in `last`: a generator
  // minus a nonempty suffix overlap, standard, attaching minimally
  auto successors = [&](const Monomial& last) {
    std::set<Monomial> cand;
    for (const auto& m : mingen) {
      for (int slen = 1; slen <= std::min(last.degree(), m.degree() - 1); ++slen) {
        if (!m.subword(0, slen).is_suffix_of(last)) continue;
        Monomial v = m.subword(slen, m.degree() - slen);
        if (!R.is_standard(v)) continue;
        bool ok = !R.is_standard(last * v);
        for (int p = 1; ok && p < v.degree(); ++p)
          if (!R.is_standard(last * v.subword(0, p))) ok = false;
        if (ok) cand.insert(v);
      }
    }
    return cand;
  };
  std::vector<Monomial> frontier;
  for (int i = 0; i < R.ring().n; ++i) {
    Monomial x = Monomial::variable(R.ring(), i);
    if (!R.is_standard(x)) continue;
    int s = state_of(x);
    A.seeds.push_back(s);
    frontier.push_back(x);
  }
  std::set<Monomial> done;
  while (!frontier.empty()) {
    Monomial w = frontier.back();
    frontier.pop_back();
    if (!done.insert(w).second) continue;
    int s = index.at(w);
    for (const auto& v : successors(w)) {
      int tgt = state_of(v);
      A.next[s - 1].push_back(tgt - 1);
      if (!done.count(v)) frontier.push_back(v);
    }
  }
  return A;
}

RationalSeries automaton_series(const ChainAutomaton& A) {
  int n = A.system->ring().n;
  Ring sring = series_ring(n);
  int m = static_cast<int>(A.entries.size());
  std::vector<Polynomial> weight;
  for (const auto& w : A.entries) weight.push_back(token_weight(sring, w, n, 1));
  std::vector<char> seed(m, 0);
  for (int s : A.seeds) seed[s - 1] = 1;
  return transfer_series(sring, weight, seed, A.next);
}

RationalSeries commutative_upper_bound(const ReductionSystem& R, int d) {
  if (!R.ring().commutative)
    throw domain_error("the counting bound needs a commutative quotient");
  int n = R.ring().n;
  Ring sring = series_ring(n);
  auto letters = minimal_fully_attached(R, d, d);
  int m = static_cast<int>(letters.size());
  std::vector<Polynomial> weight;
  std::vector<int> head;
  for (const auto& t : letters) {
    Monomial word = Monomial::one(R.ring());
    for (const auto& w : t) word = word * w;
    weight.push_back(token_weight(sring, word, n, static_cast<int>(t.size())));
    head.push_back(t[0].least_variable());
  }
  std::vector<std::vector<int>> next(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (head[j] <= head[i]) next[i].push_back(j);
  std::vector<char> seed(m, 1);
  RationalSeries F = transfer_series(sring, weight, seed, next);
  // multiply by (1 + x_i t) for every standard variable
  for (int i = 0; i < n; ++i) {
    if (!R.is_standard(Monomial::variable(R.ring(), i))) continue;
    Polynomial f = poly_one(sring);
    std::vector<int> e(n + 1, 0);
    e[i] = 1;
    e[n] = 1;
    f.add_term(Monomial::commutative(e), Scalar(1, sring.field));
    F.num = F.num * f;
  }
  F.upper_bound = true;
  return F;
}

}  // namespace homres
