#include "homres/polynomial.hpp"

#include <algorithm>

namespace homres {

Polynomial::Polynomial(Ring ring, const Monomial& m, const Scalar& c) : ring_(std::move(ring)) {
  add_term(m, c);
}

Polynomial Polynomial::constant(const Ring& ring, const Scalar& c) {
  return Polynomial(ring, Monomial::one(ring), c);
}

Polynomial Polynomial::variable(const Ring& ring, int i) {
  return Polynomial(ring, Monomial::variable(ring, i), Scalar(1, ring.field));
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return Scalar(0, ring_.field);
  return it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_(o);
  Polynomial r(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, c0] : terms_) r.terms_.emplace(m, c0 * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, bool on_left) const {
  Polynomial r(ring_);
  for (const auto& [m0, c] : terms_) r.add_term(on_left ? m * m0 : m0 * m, c);
  return r;
}

std::optional<Monomial> Polynomial::leading_monomial(MonomialOrder ord) const {
  std::optional<Monomial> best;
  for (const auto& [m, c] : terms_)
    if (!best || best->compare(m, ord) == Ordering::less) best = m;
  return best;
}

Scalar Polynomial::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return Scalar(0, ring_.field);
}

bool Polynomial::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // print highest-degree terms first, structural order as tiebreak
  std::vector<const std::pair<const Monomial, Scalar>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    if (a->first.degree() != b->first.degree()) return a->first.degree() > b->first.degree();
    return b->first < a->first;
  });
  std::string s;
  bool first = true;
  for (auto* t : ts) {
    const auto& [m, c] = *t;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (m.is_one()) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += m.str();
    }
    first = false;
  }
  return s;
}

}  // namespace homres
