#include "homres/reduction_system.hpp"

#include <algorithm>

namespace homres {

void ReductionSystem::add_rule(const Monomial& lhs, const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms())
    if (m.compare(lhs, order_) != Ordering::less)
      throw domain_error("rule rhs term not below lhs");
  rules_.push_back(Rule{lhs, rhs});
}

void ReductionSystem::add_rule_unchecked(const Monomial& lhs, const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms())
    if (m.degree() > lhs.degree())
      throw domain_error("rule rhs term above lhs degree");
  rules_.push_back(Rule{lhs, rhs});
}

std::optional<std::pair<int, int>> ReductionSystem::find_reduction(const Monomial& m) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Monomial& l = rules_[i].lhs;
    if (ring_.commutative) {
      if (l.divides(m)) return std::make_pair(static_cast<int>(i), 0);
    } else {
      int pos = l.find_factor_in(m);
      if (pos >= 0) return std::make_pair(static_cast<int>(i), pos);
    }
  }
  return std::nullopt;
}

Polynomial ReductionSystem::normal_form(const Polynomial& p) const {
  if (p.degree() > complete_degree_)
    throw incomplete_basis("normal form beyond completeness bound", p.degree());
  return reduce(p);
}

Polynomial ReductionSystem::reduce(const Polynomial& p) const {
  Polynomial work = p;
  while (true) {
    // rewrite the largest reducible monomial first (deterministic strategy)
    std::optional<Monomial> target;
    std::pair<int, int> hit{};
    for (const auto& [m, c] : work.terms()) {
      if (target && m.compare(*target, order_) != Ordering::greater) continue;
      if (auto h = find_reduction(m)) {
        target = m;
        hit = *h;
      }
    }
    if (!target) return work;
    const Rule& rule = rules_[hit.first];
    Scalar c = work.coefficient(*target);
    Polynomial replacement(ring_);
    if (ring_.commutative) {
      replacement = rule.rhs.times_monomial(rule.lhs.quotient_of(*target), true);
    } else {
      Monomial pre = target->subword(0, hit.second);
      Monomial post = target->subword(hit.second + rule.lhs.degree(),
                                      target->degree() - hit.second - rule.lhs.degree());
      replacement = rule.rhs.times_monomial(pre, true).times_monomial(post, false);
    }
    work.add_term(*target, -c);
    work = work + replacement.scale(c);
  }
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree, MonomialOrder ord) {
  std::vector<Monomial> out;
  if (ring.commutative) {
    std::vector<int> e(ring.n, 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
      if (var == ring.n - 1) {
        e[var] = left;
        out.push_back(Monomial::commutative(e));
        e[var] = 0;
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[var] = k;
        self(self, var + 1, left - k);
      }
      e[var] = 0;
    };
    if (ring.n == 0) {
      if (degree == 0) out.push_back(Monomial::commutative({}));
    } else {
      rec(rec, 0, degree);
    }
  } else {
    std::vector<int> w;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(w.size()) == degree) {
        out.push_back(Monomial::word(w));
        return;
      }
      for (int l = 0; l < ring.n; ++l) {
        w.push_back(l);
        self(self);
        w.pop_back();
      }
    };
    rec(rec);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return a.compare(b, ord) == Ordering::less;
  });
  return out;
}

std::vector<Monomial> ReductionSystem::standard_monomials(int degree) const {
  if (degree > complete_degree_)
    throw incomplete_basis("standard monomials beyond completeness bound", degree);
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(ring_, degree, order_))
    if (is_standard(m)) out.push_back(m);
  return out;
}

std::vector<Monomial> ReductionSystem::standard_basis_up_to(int degree) const {
  std::vector<Monomial> out;
  for (int d = 1; d <= degree; ++d) {
    auto layer = standard_monomials(d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Monomial> ReductionSystem::min_gen_initial() const {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Monomial& m = rules_[i].lhs;
    bool minimal = true;
    for (std::size_t j = 0; j < rules_.size() && minimal; ++j) {
      if (i == j) continue;
      const Monomial& o = rules_[j].lhs;
      if (o == m) {
        minimal = j < i;  // deduplicate, keep the first
        continue;
      }
      bool contains = ring_.commutative ? o.divides(m) : o.find_factor_in(m) >= 0;
      if (contains) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return a.compare(b, order_) == Ordering::less;
  });
  return out;
}

}  // namespace homres
