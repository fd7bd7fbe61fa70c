#include "homres/based_complex.hpp"

namespace homres {

Bimodule::Bimodule(const Polynomial& left, const Polynomial& right) : ring_(left.ring()) {
  if (!(left.ring() == right.ring())) throw context_mismatch("bimodule factors in different rings");
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms()) add_term(ml, mr, cl * cr);
}

Bimodule Bimodule::left_of(const Polynomial& p) {
  return Bimodule(p, Polynomial::constant(p.ring(), Scalar(1, p.ring().field)));
}

Bimodule Bimodule::right_of(const Polynomial& q) {
  return Bimodule(Polynomial::constant(q.ring(), Scalar(1, q.ring().field)), q);
}

void Bimodule::add_term(const Monomial& l, const Monomial& r, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Bimodule Bimodule::operator+(const Bimodule& o) const {
  Bimodule out = *this;
  if (out.ring_.n == 0) out.ring_ = o.ring_;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
  return out;
}

Bimodule Bimodule::operator*(const Bimodule& o) const {
  Bimodule out(ring_.n != 0 ? ring_ : o.ring_);
  // (a (x) b)(c (x) d) = ac (x) db
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      out.add_term(k1.first * k2.first, k2.second * k1.second, c1 * c2);
  return out;
}

Bimodule Bimodule::operator-() const {
  Bimodule out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Scalar Bimodule::constant_term() const {
  for (const auto& [k, c] : terms_)
    if (k.first.is_one() && k.second.is_one()) return c;
  return Scalar(0, ring_.field);
}

bool Bimodule::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.first.is_one() &&
         terms_.begin()->first.second.is_one();
}

Bimodule coeff_unit_inverse(const Bimodule& c) {
  if (!c.is_unit()) throw domain_error("inverse of a non-unit bimodule coefficient");
  Bimodule out(c.ring());
  out.add_term(Monomial::one(c.ring()), Monomial::one(c.ring()), c.constant_term().inverse());
  return out;
}

std::string Bimodule::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (cs != "1") s += cs + "*";
    s += k.first.str() + "(x)" + k.second.str();
    first = false;
  }
  return s;
}

namespace {

// rank of a dense Scalar matrix by row-reduction
int dense_rank(std::vector<std::vector<Scalar>>& m) {
  int rank = 0;
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Scalar inv = m[rank][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int differential_rank(const BasedComplex<Scalar>& cx, int deg) {
  if (deg <= 0 || deg > cx.max_degree()) return 0;
  int rows = cx.rank(deg - 1), cols = cx.rank(deg);
  if (rows == 0 || cols == 0) return 0;
  Scalar zero;
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, zero));
  for (int s = 0; s < cols; ++s)
    for (const auto& [dst, c] : cx.column(deg, s)) m[dst][s] = c;
  return dense_rank(m);
}

std::vector<int> homology_ranks(const BasedComplex<Scalar>& cx) {
  std::vector<int> out;
  for (int i = 0; i <= cx.max_degree(); ++i) {
    int dim = cx.rank(i);
    int rank_in = differential_rank(cx, i);       // rank of d_i : C_i -> C_{i-1}
    int rank_out = differential_rank(cx, i + 1);  // rank of d_{i+1}
    out.push_back(dim - rank_in - rank_out);
  }
  return out;
}

}  // namespace homres
