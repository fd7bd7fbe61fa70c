#include <algorithm>

#include "homres/resolution.hpp"

namespace homres {

namespace {

// does b attach minimally to a: ab reducible, but a times any proper prefix
// of b still standard
bool attaches(const ReductionSystem& R, const Monomial& a, const Monomial& b) {
  if (R.is_standard(a * b)) return false;
  for (int p = 1; p < b.degree(); ++p)
    if (!R.is_standard(a * b.subword(0, p))) return false;
  return true;
}

void anick_extend(const ReductionSystem& R, const std::vector<Monomial>& mingen, ChainSet& out,
                  BarTuple& cur, int deg) {
  if (static_cast<int>(cur.size()) == out.max_hdeg) return;
  const Monomial& last = cur.back();
  std::set<Monomial> cand;
  for (const auto& m : mingen) {
    for (int slen = 1; slen <= std::min(last.degree(), m.degree() - 1); ++slen) {
      if (!m.subword(0, slen).is_suffix_of(last)) continue;
      Monomial v = m.subword(slen, m.degree() - slen);
      if (deg + v.degree() > out.max_internal) continue;
      if (R.is_standard(v) && attaches(R, last, v)) cand.insert(v);
    }
  }
  for (const auto& v : cand) {
    cur.push_back(v);
    out.chains[cur.size()].push_back(cur);
    out.member.insert(cur);
    anick_extend(R, mingen, out, cur, deg + v.degree());
    cur.pop_back();
  }
}

struct MfaLetters {
  std::vector<BarTuple> letters;                    // all minimal fully attached tuples
  std::map<int, std::vector<const BarTuple*>> by_head;  // head variable index -> letters
};

// the unique entry extending a minimal fully attached tuple, if any: the
// term-order-least standard monomial admitting a reduction from the last
// entry, subject to the head-variable constraints
std::optional<Monomial> mfa_extension(const ReductionSystem& R, const std::set<BarTuple>& mfa,
                                      const BarTuple& t, int budget) {
  const Monomial& last = t.back();
  int head = t[0].least_variable();
  for (int deg = 1; deg <= budget; ++deg) {
    for (const auto& v : R.standard_monomials(deg)) {
      Monomial prod = last * v;
      bool p = !R.is_standard(prod);
      if (!p && t.size() >= 2) {
        // a strictly larger divisor of the (standard) product re-attaches to
        // the shortened tuple
        for (auto& [u, v2] : divisors(prod, R.order())) {
          if (last.compare(u, R.order()) != Ordering::less) continue;
          BarTuple repl(t.begin(), t.end() - 1);
          repl.push_back(u);
          if (mfa.count(repl)) {
            p = true;
            break;
          }
        }
      }
      if (!p) continue;
      // term-order-least hit; reject it if it violates the head constraints
      if (v.least_variable() < head) return std::nullopt;
      if (v.degree() == 1 && v.least_variable() == head) return std::nullopt;
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<BarTuple> minimal_fully_attached(const ReductionSystem& R, int D, int d) {
  std::vector<BarTuple> out;
  std::set<BarTuple> seen;
  std::vector<BarTuple> frontier;
  for (const auto& m : R.min_gen_initial()) {
    if (m.degree() > d) continue;
    Monomial x = Monomial::variable(R.ring(), m.least_variable());
    frontier.push_back(BarTuple{x, x.quotient_of(m)});
  }
  std::sort(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    // the same-length tuples must all be visible to the re-attachment checks
    for (const auto& t : frontier) seen.insert(t);
    std::vector<BarTuple> next;
    for (const auto& t : frontier) {
      out.push_back(t);
      if (static_cast<int>(t.size()) >= D) continue;
      int budget = d - internal_degree(t);
      if (budget <= 0) continue;
      if (auto v = mfa_extension(R, seen, t, budget)) {
        BarTuple ext = t;
        ext.push_back(*v);
        next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

// tokens of the critical-cell language: either one more variable of a
// strictly decreasing run, or a whole minimal fully attached tuple
void comm_words(const ChainSet& C, const MfaLetters& L, int n, BarTuple& cur, int deg,
                int last_var, int last_head, ChainSet& out) {
  // extend by a variable x_b: runs decrease, and after a fully attached
  // letter with head h only b <= h is allowed
  int var_limit = last_var >= 0 ? last_var : (last_head >= 0 ? last_head + 1 : n);
  for (int b = 0; b < var_limit; ++b) {
    Monomial x = Monomial::variable(C.system->ring(), b);
    if (!C.system->is_standard(x)) continue;
    if (deg + 1 > out.max_internal || static_cast<int>(cur.size()) + 1 > out.max_hdeg) continue;
    cur.push_back(x);
    out.chains[cur.size()].push_back(cur);
    if (!out.member.insert(cur).second)
      throw domain_error("ambiguous critical-cell decomposition");
    comm_words(C, L, n, cur, deg + 1, b, -1, out);
    cur.pop_back();
  }
  // extend by a fully attached letter with head h: h < last variable, or
  // h <= head of the previous letter
  for (const auto& [h, letters] : L.by_head) {
    if (last_var >= 0 && h >= last_var) continue;
    if (last_var < 0 && last_head >= 0 && h > last_head) continue;
    for (const BarTuple* t : letters) {
      int tdeg = internal_degree(*t);
      if (deg + tdeg > out.max_internal ||
          static_cast<int>(cur.size() + t->size()) > out.max_hdeg)
        continue;
      std::size_t base = cur.size();
      cur.insert(cur.end(), t->begin(), t->end());
      out.chains[cur.size()].push_back(cur);
      if (!out.member.insert(cur).second)
        throw domain_error("ambiguous critical-cell decomposition");
      comm_words(C, L, n, cur, deg + tdeg, -1, h, out);
      cur.resize(base);
    }
  }
}

}  // namespace

ChainSet enumerate_chains(const ReductionSystem& R, Flavor flavor, int D, int d) {
  if (R.complete_up_to_degree() < d) throw incomplete_basis("reduction system not complete for the requested truncation", d);
  ChainSet out;
  out.system = &R;
  out.flavor = flavor;
  out.max_hdeg = D;
  out.max_internal = d;
  out.chains.resize(D + 1);
  if (flavor == Flavor::Anick) {
    auto mingen = R.min_gen_initial();
    for (int i = 0; i < R.ring().n; ++i) {
      Monomial x = Monomial::variable(R.ring(), i);
      if (!R.is_standard(x)) continue;
      BarTuple cur{x};
      out.chains[1].push_back(cur);
      out.member.insert(cur);
      anick_extend(R, mingen, out, cur, 1);
    }
  } else {
    MfaLetters L;
    L.letters = minimal_fully_attached(R, D, d);
    for (const auto& t : L.letters) L.by_head[t[0].least_variable()].push_back(&t);
    BarTuple cur;
    comm_words(out, L, R.ring().n, cur, 0, -1, -1, out);
    for (auto& per_degree : out.chains) std::sort(per_degree.begin(), per_degree.end());
  }
  return out;
}

}  // namespace homres
