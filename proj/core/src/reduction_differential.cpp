#include <algorithm>

#include "homres/resolution.hpp"
#include "match_oracle.hpp"

namespace homres {

namespace {

using detail::MatchOracle;
using detail::Status;

// Walks the reduction graph exactly like the Morse path sums: every face of
// the current tuple either lands on a critical cell (a contribution), on a
// matched lower cell (continue through the reversed matched edge with
// weight -1/[upper:lower]), or on a matched upper cell (weight zero).
class Walker {
 public:
  explicit Walker(const ChainSet& C)
      : R_(*C.system), oracle_(*C.system), ring_(C.system->ring()) {}

  // total contribution of all reduction sequences from t to each critical
  // tuple one homological degree down
  const std::map<BarTuple, Polynomial>& expand(const BarTuple& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    if (!open_.insert(t).second) throw domain_error("cyclic reduction sequence");
    std::map<BarTuple, Polynomial> out;
    for (const auto& [f, c] : faces(t)) {
      BarTuple partner;
      switch (oracle_.status(f, &partner)) {
        case Status::Critical:
          add_(out, f, c);
          break;
        case Status::Lower: {
          if (partner == t) break;  // the reversed matched edge of t itself
          Scalar w = up_weight(partner, f);
          for (const auto& [g, cg] : expand(partner))
            add_(out, g, R_.normal_form((c * cg).scale(w)));
          break;
        }
        case Status::Upper:
          break;  // no outgoing reversed edge: the path dies
      }
    }
    open_.erase(t);
    return memo_[t] = std::move(out);
  }

  /// Looks for a merge face landing directly on a critical cell (a Type II
  /// reduction) anywhere in the reachable reduction graph.
  bool find_type_ii(const BarTuple& t, std::vector<BarTuple>& witness) {
    if (!scanned_.insert(t).second) return false;
    for (const auto& [f, c, is_merge] : face_list(t)) {
      BarTuple partner;
      Status s = oracle_.status(f, &partner);
      if (s == Status::Critical && is_merge) {
        witness = {t, f};
        return true;
      }
      if (s == Status::Lower && !(partner == t) && find_type_ii(partner, witness)) return true;
    }
    return false;
  }

 private:
  struct Face {
    BarTuple tuple;
    Polynomial coeff;
    bool is_merge;
  };

  // all faces of the Bar differential of t with their total coefficients:
  // the leading face w_1 [w_2|...] and the merge faces with sign (-1)^i
  std::vector<Face> face_list(const BarTuple& t) {
    Scalar one(1, ring_.field);
    std::vector<Face> out;
    int l = static_cast<int>(t.size());
    if (l == 0) return out;
    out.push_back(Face{BarTuple(t.begin() + 1, t.end()), Polynomial(ring_, t[0], one), false});
    for (int i = 1; i < l; ++i) {
      Polynomial nf = R_.normal_form(Polynomial(ring_, t[i - 1] * t[i], one));
      for (const auto& [v, a] : nf.terms()) {
        if (v.is_one()) continue;  // normalized: constants are dropped
        BarTuple f(t.begin(), t.begin() + (i - 1));
        f.push_back(v);
        f.insert(f.end(), t.begin() + (i + 1), t.end());
        out.push_back(Face{std::move(f), Polynomial::constant(ring_, (i % 2) ? -a : a), true});
      }
    }
    return out;
  }

  std::map<BarTuple, Polynomial> faces(const BarTuple& t) {
    std::map<BarTuple, Polynomial> out;
    for (auto& fc : face_list(t)) add_(out, fc.tuple, fc.coeff);
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

  static void add_(std::map<BarTuple, Polynomial>& out, const BarTuple& f, const Polynomial& c) {
    auto [it, fresh] = out.emplace(f, c);
    if (!fresh) it->second = it->second + c;
  }

  const ReductionSystem& R_;
  MatchOracle oracle_;
  const Ring& ring_;
  std::map<BarTuple, std::map<BarTuple, Polynomial>> memo_;
  std::set<BarTuple> open_;
  std::set<BarTuple> scanned_;
};

}  // namespace

std::map<BarTuple, QuotientElem> reduction_differential(const ChainSet& C, const BarTuple& e) {
  const ReductionSystem& R = *C.system;
  std::map<BarTuple, QuotientElem> out;
  if (e.size() == 1) {  // augmentation [x] -> x * []
    out.emplace(BarTuple{}, QuotientElem::of_monomial(e[0], &R));
    return out;
  }
  Walker walk(C);
  for (const auto& [f, c] : walk.expand(e)) {
    QuotientElem q(c, &R);
    if (!q.is_zero()) out.emplace(f, std::move(q));
  }
  return out;
}

TypeIIWitness scan_chains_for_type_ii(const ChainSet& C) {
  Walker walk(C);
  TypeIIWitness w;
  for (const auto& per_degree : C.chains)
    for (const auto& e : per_degree)
      if (e.size() >= 2 && walk.find_type_ii(e, w.detail)) {
        w.possible = true;
        return w;
      }
  return w;
}

}  // namespace homres
