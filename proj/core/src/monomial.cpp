#include "homres/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace homres {

Monomial Monomial::one(const Ring& ring) {
  Monomial m;
  m.word_ = !ring.commutative;
  if (ring.commutative) m.d_.assign(ring.n, 0);
  return m;
}

Monomial Monomial::variable(const Ring& ring, int i) {
  if (i < 0 || i >= ring.n) throw domain_error("variable index out of range");
  Monomial m = one(ring);
  if (ring.commutative)
    m.d_[i] = 1;
  else
    m.d_.push_back(i);
  return m;
}

Monomial Monomial::commutative(std::vector<int> exponents) {
  Monomial m;
  m.d_ = std::move(exponents);
  m.word_ = false;
  return m;
}

Monomial Monomial::word(std::vector<int> letters) {
  Monomial m;
  m.d_ = std::move(letters);
  m.word_ = true;
  return m;
}

bool Monomial::is_one() const {
  if (word_) return d_.empty();
  return std::all_of(d_.begin(), d_.end(), [](int e) { return e == 0; });
}

int Monomial::degree() const {
  if (word_) return static_cast<int>(d_.size());
  return std::accumulate(d_.begin(), d_.end(), 0);
}

int Monomial::least_variable() const {
  if (is_one()) throw domain_error("least_variable of 1");
  if (word_) return *std::min_element(d_.begin(), d_.end());
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (d_[i] > 0) return static_cast<int>(i);
  throw domain_error("unreachable");
}

std::vector<int> Monomial::multidegree(int n) const {
  if (!word_) return d_;
  std::vector<int> md(n, 0);
  for (int l : d_) ++md[l];
  return md;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (word_ != o.word_) throw context_mismatch("mixed commutative/word monomials");
  Monomial r = *this;
  if (word_) {
    r.d_.insert(r.d_.end(), o.d_.begin(), o.d_.end());
  } else {
    if (d_.size() != o.d_.size()) throw context_mismatch("different variable counts");
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (word_ || o.word_) throw domain_error("divides is commutative-only; use find_factor_in");
  if (d_.size() != o.d_.size()) throw context_mismatch("different variable counts");
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (d_[i] > o.d_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  if (!divides(o)) throw domain_error("not a divisor");
  Monomial r = o;
  for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= d_[i];
  return r;
}

int Monomial::find_factor_in(const Monomial& o) const {
  if (!word_ || !o.word_) throw domain_error("find_factor_in is word-only");
  if (d_.empty()) return 0;
  if (d_.size() > o.d_.size()) return -1;
  auto it = std::search(o.d_.begin(), o.d_.end(), d_.begin(), d_.end());
  if (it == o.d_.end()) return -1;
  return static_cast<int>(it - o.d_.begin());
}

Monomial Monomial::subword(int from, int len) const {
  if (!word_) throw domain_error("subword is word-only");
  return word(std::vector<int>(d_.begin() + from, d_.begin() + from + len));
}

bool Monomial::is_prefix_of(const Monomial& o) const {
  if (!word_ || !o.word_) throw domain_error("is_prefix_of is word-only");
  if (d_.size() > o.d_.size()) return false;
  return std::equal(d_.begin(), d_.end(), o.d_.begin());
}

bool Monomial::is_suffix_of(const Monomial& o) const {
  if (!word_ || !o.word_) throw domain_error("is_suffix_of is word-only");
  if (d_.size() > o.d_.size()) return false;
  return std::equal(d_.rbegin(), d_.rend(), o.d_.rbegin());
}

Ordering Monomial::compare(const Monomial& o, MonomialOrder ord) const {
  if (word_ != o.word_) throw context_mismatch("mixed commutative/word monomials");
  int da = degree(), db = o.degree();
  if (da != db) return da < db ? Ordering::less : Ordering::greater;
  if (word_) {
    // degree-then-left-lex, letter x1 largest: smaller index = bigger letter
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] != o.d_[i]) return d_[i] < o.d_[i] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
  }
  if (d_.size() != o.d_.size()) throw context_mismatch("different variable counts");
  if (ord.kind == MonomialOrder::DegLex) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] != o.d_[i]) return d_[i] > o.d_[i] ? Ordering::greater : Ordering::less;
    }
  } else {  // DegRevLex
    for (std::size_t i = d_.size(); i-- > 0;) {
      if (d_[i] != o.d_[i]) return d_[i] < o.d_[i] ? Ordering::greater : Ordering::less;
    }
  }
  return Ordering::equal;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (word_ != o.word_) return word_ <=> o.word_;
  if (d_.size() != o.d_.size()) return d_.size() <=> o.d_.size();
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (d_[i] != o.d_[i]) return d_[i] <=> o.d_[i];
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  auto var = [](int i) { return "x" + std::to_string(i + 1); };
  if (word_) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (i) s += " ";
      s += var(d_[i]);
    }
  } else {
    bool first = true;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] == 0) continue;
      if (!first) s += "*";
      s += var(static_cast<int>(i));
      if (d_[i] > 1) s += "^" + std::to_string(d_[i]);
      first = false;
    }
  }
  return s;
}

std::vector<std::pair<Monomial, Monomial>> divisors(const Monomial& w, MonomialOrder ord) {
  if (w.is_one()) throw domain_error("divisors of 1");
  std::vector<std::pair<Monomial, Monomial>> out;
  if (w.is_word()) {
    int len = w.degree();
    for (int l = 1; l <= len; ++l)
      out.emplace_back(w.subword(0, l), w.subword(l, len - l));
  } else {
    const auto& e = w.data();
    // enumerate all sub-exponent vectors u != 0
    std::vector<int> u(e.size(), 0);
    while (true) {
      // increment odometer
      std::size_t i = 0;
      while (i < e.size() && u[i] == e[i]) u[i++] = 0;
      if (i == e.size()) break;
      ++u[i];
      Monomial mu = Monomial::commutative(u);
      out.emplace_back(mu, mu.quotient_of(w));
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return a.first.compare(b.first, ord) == Ordering::less;
  });
  return out;
}

}  // namespace homres
