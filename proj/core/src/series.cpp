#include <algorithm>
#include <sstream>

#include "homres/series.hpp"

namespace homres {

Ring series_ring(int n) { return Ring{n + 1, true, Field{0}}; }

namespace {

Polynomial poly_one(const Ring& ring) {
  return Polynomial::constant(ring, Scalar(1, ring.field));
}

Polynomial truncate_poly(const Polynomial& p, int total_degree) {
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= total_degree) out.add_term(m, c);
  return out;
}

std::string print_term(const Monomial& m, int n) {
  std::ostringstream os;
  auto e = m.multidegree(n + 1);
  bool first = true;
  for (int v = 0; v <= n; ++v) {
    if (e[v] == 0) continue;
    if (!first) os << " ";
    first = false;
    if (v < n)
      os << "x" << (v + 1);
    else
      os << "t";
    if (e[v] > 1) os << "^" << e[v];
  }
  return os.str();
}

std::string print_poly(const Polynomial& p, int n) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Scalar a = c;
    if (first) {
      if (a.value() < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (a.value() < 0 ? " - " : " + ");
      if (a.value() < 0) a = -a;
    }
    first = false;
    std::string mono = print_term(m, n);
    if (!a.is_one() || mono.empty()) {
      os << a.str();
      if (!mono.empty()) os << " ";
    }
    os << mono;
  }
  return os.str();
}

}  // namespace

std::string RationalSeries::str() const {
  int n = ring.n - 1;
  return "(" + print_poly(num, n) + ") / (" + print_poly(den, n) + ")";
}

RationalSeries series_constant(int n, long c) {
  Ring ring = series_ring(n);
  return RationalSeries{ring, Polynomial::constant(ring, Scalar(c, ring.field)),
                        poly_one(ring), false};
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries{a.ring, a.num * b.den + b.num * a.den, a.den * b.den,
                        a.upper_bound || b.upper_bound};
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries{a.ring, a.num * b.num, a.den * b.den,
                        a.upper_bound || b.upper_bound};
}

long BettiTable::total(int i) const {
  long out = 0;
  for (const auto& [key, r] : ranks)
    if (key.first == i) out += r;
  return out;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  for (const auto& [key, r] : ranks) {
    os << key.first << " ";
    for (int v = 0; v < n; ++v) os << key.second[v] << (v + 1 < n ? "," : "");
    os << " " << r << "\n";
  }
  return os.str();
}

BettiTable series_truncate(const RationalSeries& S, int total_degree) {
  const Ring& ring = S.ring;
  int n = ring.n - 1;
  Scalar c0 = S.den.constant_term();
  if (c0.is_zero()) throw domain_error("series denominator has zero constant term");
  Polynomial den = S.den.scale(c0.inverse());
  Polynomial num = S.num.scale(c0.inverse());
  // den = 1 + D; invert by the truncated geometric series
  Polynomial D = den - poly_one(ring);
  Polynomial inv = poly_one(ring);
  for (int k = 0; k < total_degree; ++k)
    inv = truncate_poly(poly_one(ring) - D * inv, total_degree);
  Polynomial taylor = truncate_poly(num * inv, total_degree);
  BettiTable tab;
  tab.n = n;
  for (const auto& [m, c] : taylor.terms()) {
    auto e = m.multidegree(n + 1);
    int hdeg = e[n];
    e.resize(n);
    bigrat v = c.value();
    if (denominator(v) != 1) throw domain_error("series coefficient is not an integer");
    long r = numerator(v).convert_to<long>();
    if (r != 0) tab.ranks[{hdeg, e}] += r;
  }
  return tab;
}

BettiTable restrict_total(const BettiTable& tab, int T) {
  BettiTable out;
  out.n = tab.n;
  for (const auto& [key, r] : tab.ranks) {
    int total = key.first;
    for (int v : key.second) total += v;
    if (total <= T) out.ranks[key] = r;
  }
  return out;
}

BettiTable chain_table(const ChainSet& C) {
  int n = C.system->ring().n;
  BettiTable tab;
  tab.n = n;
  tab.ranks[{0, std::vector<int>(n, 0)}] = 1;
  for (std::size_t i = 1; i < C.chains.size(); ++i)
    for (const auto& e : C.chains[i]) {
      std::vector<int> mdeg(n, 0);
      for (const auto& w : e) {
        auto wm = w.multidegree(n);
        for (int v = 0; v < n; ++v) mdeg[v] += wm[v];
      }
      tab.ranks[{static_cast<int>(i), mdeg}] += 1;
    }
  return tab;
}

RationalSeries closed_form_series(ClosedForm kind, int n, const std::vector<Monomial>& lead) {
  Ring sring = series_ring(n);
  Polynomial num = poly_one(sring);
  Polynomial den = poly_one(sring);
  auto one_plus_xt = [&](int i) {
    Polynomial f = poly_one(sring);
    std::vector<int> e(n + 1, 0);
    e[i] = 1;
    e[n] = 1;
    f.add_term(Monomial::commutative(e), Scalar(1, sring.field));
    return f;
  };
  auto one_minus = [&](const std::vector<int>& mdeg, int hom) {
    Polynomial f = poly_one(sring);
    std::vector<int> e = mdeg;
    e.resize(n + 1, 0);
    e[n] = hom;
    f.add_term(Monomial::commutative(e), Scalar(-1, sring.field));
    return f;
  };
  switch (kind) {
    case ClosedForm::CompleteIntersection:
      for (int i = 0; i < n; ++i) num = num * one_plus_xt(i);
      for (const auto& mo : lead) den = den * one_minus(mo.multidegree(n), 2);
      break;
    case ClosedForm::Cartan:
    case ClosedForm::ExteriorHochschild:
      for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        den = den * one_minus(e, 1);
      }
      break;
    case ClosedForm::PolynomialHochschild:
      for (int i = 0; i < n; ++i) num = num * one_plus_xt(i);
      break;
  }
  return RationalSeries{sring, std::move(num), std::move(den), false};
}

}  // namespace homres
