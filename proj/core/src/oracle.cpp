#include <sstream>

#include "homres/oracle.hpp"

namespace homres {

long TorTable::total(int i) const {
  long out = 0;
  for (const auto& [key, r] : ranks)
    if (key.first == i) out += r;
  return out;
}

std::string TorTable::str() const {
  std::ostringstream os;
  for (const auto& [key, r] : ranks)
    os << key.first << " " << key.second << " " << r << "\n";
  return os.str();
}

TorTable aggregate_internal(const BettiTable& tab) {
  TorTable out;
  for (const auto& [key, r] : tab.ranks) {
    int deg = 0;
    for (int v : key.second) deg += v;
    out.ranks[{key.first, deg}] += r;
  }
  return out;
}

namespace {

using Vec = std::vector<Scalar>;

// rules must preserve total degree for the stratification to be a grading
void require_graded(const ReductionSystem& R) {
  for (const auto& rule : R.rules())
    for (const auto& [m, c] : rule.rhs.terms())
      if (m.degree() != rule.lhs.degree())
        throw domain_error("brute-force Betti numbers need a degree-graded quotient");
}

// kernel of the linear map sending source basis vector t to cols[t] (length
// rows), by exact row reduction of the augmented transpose
std::vector<Vec> kernel_basis(const std::vector<Vec>& cols, int rows, Field f) {
  int c = static_cast<int>(cols.size());
  std::vector<std::pair<int, Vec>> echelon;  // (pivot < rows, normalized row)
  std::vector<Vec> ker;
  for (int t = 0; t < c; ++t) {
    Vec v(rows + c, Scalar(f));
    for (int j = 0; j < rows; ++j) v[j] = cols[t][j];
    v[rows + t] = Scalar(1, f);
    for (const auto& [p, row] : echelon) {
      if (v[p].is_zero()) continue;
      Scalar s = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= s * row[j];
    }
    int piv = -1;
    for (int j = 0; j < rows; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) {
      ker.emplace_back(v.begin() + rows, v.end());
    } else {
      Scalar s = v[piv].inverse();
      for (auto& x : v) x *= s;
      echelon.emplace_back(piv, std::move(v));
    }
  }
  return ker;
}

// incremental span for the Nakayama quotient: new kernel vectors count as
// minimal generators only modulo multiples of earlier generators
class Span {
 public:
  // reduces v in place; true iff a nonzero remainder survives
  bool reduce(Vec& v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p].is_zero()) continue;
      Scalar s = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= s * row[j];
    }
    for (const auto& x : v)
      if (!x.is_zero()) return true;
    return false;
  }

  void add(Vec v) {
    int piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) return;
    Scalar s = v[piv].inverse();
    for (auto& x : v) x *= s;
    rows_.emplace_back(piv, std::move(v));
  }

 private:
  std::vector<std::pair<int, Vec>> rows_;
};

// a free module over the ground algebra: generator degrees plus the
// differential column of each generator (target generator -> ground element)
template <class Key>
struct FreeModule {
  using Elem = std::vector<std::pair<Key, Scalar>>;
  std::vector<int> gen_degree;
  std::vector<std::map<int, Elem>> cols;
};

// Generic stratified minimal-resolution builder.  The ground algebra G
// provides: Key, field(), basis(degree) (the k-basis of the ground algebra
// in that degree), mult(a, b) (the product of two basis elements as a
// ground element), aug_rows(degree) and aug(key, degree) (the augmentation
// F_0 -> coefficient module, stratum by stratum).
template <class G>
TorTable resolve(const G& g, int D, int d) {
  using Key = typename G::KeyT;
  using Elem = typename FreeModule<Key>::Elem;
  Field f = g.field();
  TorTable tab;
  tab.ranks[{0, 0}] = 1;

  FreeModule<Key> cur;  // F_0: one generator in degree 0
  cur.gen_degree = {0};
  bool cur_is_aug = true;
  std::vector<int> target_degrees;  // generator degrees of the module cur maps into

  for (int i = 1; i <= D; ++i) {
    FreeModule<Key> next;
    for (int j = 1; j <= d; ++j) {
      // stratum basis of the current module in degree j
      std::vector<std::pair<int, Key>> basis;
      std::map<std::pair<int, Key>, int> index;
      for (std::size_t t = 0; t < cur.gen_degree.size(); ++t) {
        int rem = j - cur.gen_degree[t];
        if (rem < 0) continue;
        for (const auto& m : g.basis(rem)) {
          index[{static_cast<int>(t), m}] = static_cast<int>(basis.size());
          basis.emplace_back(static_cast<int>(t), m);
        }
      }
      if (basis.empty()) continue;
      int dim = static_cast<int>(basis.size());

      // target stratum and the matrix columns of the differential
      int rows;
      std::map<std::pair<int, Key>, int> tindex;
      if (cur_is_aug) {
        rows = g.aug_rows(j);
      } else {
        rows = 0;
        for (std::size_t s = 0; s < target_degrees.size(); ++s) {
          int rem = j - target_degrees[s];
          if (rem < 0) continue;
          for (const auto& m : g.basis(rem)) tindex[{static_cast<int>(s), m}] = rows++;
        }
      }
      std::vector<Vec> cols;
      cols.reserve(dim);
      for (const auto& [t, m] : basis) {
        Vec col(rows, Scalar(f));
        if (cur_is_aug) {
          for (const auto& [r, c] : g.aug(m, j)) col[r] += c;
        } else {
          for (const auto& [s, poly] : cur.cols[t])
            for (const auto& [k, c] : poly)
              for (const auto& [k2, c2] : g.mult(m, k)) col[tindex.at({s, k2})] += c * c2;
        }
        cols.push_back(std::move(col));
      }
      auto ker = kernel_basis(cols, rows, f);
      if (ker.empty()) continue;

      // span of multiples of the generators already chosen for F_i
      Span span;
      for (std::size_t u = 0; u < next.gen_degree.size(); ++u) {
        int rem = j - next.gen_degree[u];
        if (rem < 1) continue;
        for (const auto& m1 : g.basis(rem)) {
          Vec v(dim, Scalar(f));
          for (const auto& [t, poly] : next.cols[u])
            for (const auto& [k, c] : poly)
              for (const auto& [k2, c2] : g.mult(m1, k)) v[index.at({t, k2})] += c * c2;
          if (span.reduce(v)) span.add(std::move(v));
        }
      }
      for (auto& v : ker) {
        if (!span.reduce(v)) continue;
        // a new minimal generator of the kernel
        std::map<int, Elem> col;
        for (int b = 0; b < dim; ++b) {
          if (v[b].is_zero()) continue;
          col[basis[b].first].emplace_back(basis[b].second, v[b]);
        }
        next.gen_degree.push_back(j);
        next.cols.push_back(std::move(col));
        tab.ranks[{i, j}] += 1;
        span.add(std::move(v));
      }
    }
    if (next.gen_degree.empty()) break;
    target_degrees = cur.gen_degree;
    cur = std::move(next);
    cur_is_aug = false;
  }
  return tab;
}

// ground algebra A itself, acting on the residue field
class GroundA {
 public:
  using KeyT = Monomial;

  explicit GroundA(const ReductionSystem& R) : R_(R) {}

  Field field() const { return R_.ring().field; }

  const std::vector<Monomial>& basis(int deg) const {
    auto it = basis_.find(deg);
    if (it == basis_.end()) it = basis_.emplace(deg, R_.standard_monomials(deg)).first;
    return it->second;
  }

  std::vector<std::pair<Monomial, Scalar>> mult(const Monomial& a, const Monomial& b) const {
    Polynomial nf =
        R_.normal_form(Polynomial(R_.ring(), a * b, Scalar(1, field())));
    return {nf.terms().begin(), nf.terms().end()};
  }

  int aug_rows(int deg) const { return deg == 0 ? 1 : 0; }

  std::vector<std::pair<int, Scalar>> aug(const Monomial&, int deg) const {
    if (deg != 0) return {};
    return {{0, Scalar(1, field())}};
  }

 private:
  const ReductionSystem& R_;
  mutable std::map<int, std::vector<Monomial>> basis_;
};

// the enveloping algebra A (x) A^op, acting on A
class GroundEnv {
 public:
  using KeyT = std::pair<Monomial, Monomial>;

  explicit GroundEnv(const ReductionSystem& R) : R_(R) {}

  Field field() const { return R_.ring().field; }

  const std::vector<KeyT>& basis(int deg) const {
    auto it = basis_.find(deg);
    if (it == basis_.end()) {
      std::vector<KeyT> out;
      for (int a = 0; a <= deg; ++a)
        for (const auto& u : a_basis(a))
          for (const auto& v : a_basis(deg - a)) out.emplace_back(u, v);
      it = basis_.emplace(deg, std::move(out)).first;
    }
    return it->second;
  }

  // (u (x) v)(u2 (x) v2) = u u2 (x) v2 v: the right factors compose in A^op
  std::vector<std::pair<KeyT, Scalar>> mult(const KeyT& a, const KeyT& b) const {
    Polynomial left =
        R_.normal_form(Polynomial(R_.ring(), a.first * b.first, Scalar(1, field())));
    Polynomial right =
        R_.normal_form(Polynomial(R_.ring(), b.second * a.second, Scalar(1, field())));
    std::vector<std::pair<KeyT, Scalar>> out;
    for (const auto& [lm, lc] : left.terms())
      for (const auto& [rm, rc] : right.terms()) out.emplace_back(KeyT{lm, rm}, lc * rc);
    return out;
  }

  int aug_rows(int deg) const { return static_cast<int>(a_basis(deg).size()); }

  // augmentation A (x) A^op -> A, u (x) v -> uv
  std::vector<std::pair<int, Scalar>> aug(const KeyT& key, int deg) const {
    Polynomial nf = R_.normal_form(
        Polynomial(R_.ring(), key.first * key.second, Scalar(1, field())));
    std::vector<std::pair<int, Scalar>> out;
    const auto& idx = a_index(deg);
    for (const auto& [m, c] : nf.terms()) out.emplace_back(idx.at(m), c);
    return out;
  }

 private:
  const std::vector<Monomial>& a_basis(int deg) const {
    auto it = abasis_.find(deg);
    if (it == abasis_.end()) it = abasis_.emplace(deg, R_.standard_monomials(deg)).first;
    return it->second;
  }
  const std::map<Monomial, int>& a_index(int deg) const {
    auto it = aindex_.find(deg);
    if (it == aindex_.end()) {
      std::map<Monomial, int> idx;
      const auto& b = a_basis(deg);
      for (std::size_t i = 0; i < b.size(); ++i) idx[b[i]] = static_cast<int>(i);
      it = aindex_.emplace(deg, std::move(idx)).first;
    }
    return it->second;
  }

  const ReductionSystem& R_;
  mutable std::map<int, std::vector<KeyT>> basis_;
  mutable std::map<int, std::vector<Monomial>> abasis_;
  mutable std::map<int, std::map<Monomial, int>> aindex_;
};

}  // namespace

TorTable tor_residue_field(const ReductionSystem& R, int D, int d) {
  if (R.complete_up_to_degree() < d)
    throw incomplete_basis("reduction system not complete for the oracle truncation", d);
  require_graded(R);
  GroundA g(R);
  return resolve(g, D, d);
}

TorTable tor_bimodule(const ReductionSystem& R, int D, int d) {
  if (R.complete_up_to_degree() < d)
    throw incomplete_basis("reduction system not complete for the oracle truncation", d);
  require_graded(R);
  GroundEnv g(R);
  return resolve(g, D, d);
}

}  // namespace homres
