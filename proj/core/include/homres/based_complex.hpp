#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homres/polynomial.hpp"

namespace homres {

// ---------------------------------------------------------------------------
// Coefficient domains.  A complex is generic over its coefficients; the three
// instances used here are Scalar (field), Polynomial (free A-modules) and
// Bimodule (free A (x) A^op-modules).  The generic code touches coefficients
// only through the small overload set below.
// ---------------------------------------------------------------------------

inline bool coeff_is_zero(const Scalar& c) { return c.is_zero(); }
inline bool coeff_is_unit(const Scalar& c) { return !c.is_zero(); }
inline Scalar coeff_unit_inverse(const Scalar& c) { return c.inverse(); }
inline Scalar coeff_neg(const Scalar& c) { return -c; }
inline std::string coeff_str(const Scalar& c) { return c.str(); }
inline Scalar coeff_specialize(const Scalar& c) { return c; }

inline bool coeff_is_zero(const Polynomial& c) { return c.is_zero(); }
inline bool coeff_is_unit(const Polynomial& c) { return c.is_unit(); }
inline Polynomial coeff_unit_inverse(const Polynomial& c) {
  if (!c.is_unit()) throw domain_error("inverse of a non-unit coefficient");
  return Polynomial::constant(c.ring(), c.constant_term().inverse());
}
inline Polynomial coeff_neg(const Polynomial& c) { return -c; }
inline std::string coeff_str(const Polynomial& c) { return c.str(); }
inline Scalar coeff_specialize(const Polynomial& c) { return c.constant_term(); }

/// Element of A (x) A^op: a finite sum of pairs p (x) q.  Multiplication is
/// (a (x) b)(c (x) d) = ac (x) db (the right factors compose in A^op).
class Bimodule {
 public:
  Bimodule() = default;
  explicit Bimodule(Ring ring) : ring_(std::move(ring)) {}
  Bimodule(const Polynomial& left, const Polynomial& right);

  static Bimodule left_of(const Polynomial& p);   // p (x) 1
  static Bimodule right_of(const Polynomial& q);  // 1 (x) q

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<Monomial, Monomial>, Scalar>& terms() const { return terms_; }

  void add_term(const Monomial& l, const Monomial& r, const Scalar& c);
  Bimodule operator+(const Bimodule& o) const;
  Bimodule operator*(const Bimodule& o) const;
  Bimodule operator-() const;
  bool operator==(const Bimodule& o) const { return terms_ == o.terms_; }

  /// Constant term 1 (x) 1 — killing both tensor factors.
  Scalar constant_term() const;
  bool is_unit() const;

  std::string str() const;

 private:
  Ring ring_;
  std::map<std::pair<Monomial, Monomial>, Scalar> terms_;
};

inline bool coeff_is_zero(const Bimodule& c) { return c.is_zero(); }
inline bool coeff_is_unit(const Bimodule& c) { return c.is_unit(); }
Bimodule coeff_unit_inverse(const Bimodule& c);
inline Bimodule coeff_neg(const Bimodule& c) { return -c; }
inline std::string coeff_str(const Bimodule& c) { return c.str(); }
inline Scalar coeff_specialize(const Bimodule& c) { return c.constant_term(); }

// ---------------------------------------------------------------------------
// Based chain complex.
// ---------------------------------------------------------------------------

/// A cell: opaque interned label plus optional multidegree bookkeeping.
struct Cell {
  std::string label;
  std::vector<int> multidegree;  // empty when untracked
};

/// Failure witness for the d*d = 0 check: the source cell and one target with
/// nonzero composite coefficient.
struct BoundaryWitness {
  int degree = 0;
  std::string src;
  std::string dst;
  std::string coeff;
};

/// Chain complex of free modules with distinguished bases X_i and sparse
/// differential stored column-wise (per source cell).  Degrees run 0..D.
template <class C>
class BasedComplex {
 public:
  using Entry = std::pair<int, C>;  // (target index in degree-1, coefficient)

  int max_degree() const { return static_cast<int>(cells_.size()) - 1; }
  int rank(int deg) const {
    return in_range_(deg) ? static_cast<int>(cells_[deg].size()) : 0;
  }
  const std::vector<Cell>& cells(int deg) const {
    static const std::vector<Cell> empty;
    return in_range_(deg) ? cells_[deg] : empty;
  }

  int add_cell(int deg, Cell cell) {
    if (deg < 0) throw domain_error("negative homological degree");
    if (static_cast<int>(cells_.size()) <= deg) {
      cells_.resize(deg + 1);
      diff_.resize(deg + 1);
    }
    cells_[deg].push_back(std::move(cell));
    diff_[deg].emplace_back();
    return static_cast<int>(cells_[deg].size()) - 1;
  }

  void add_entry(int deg, int src, int dst, C coeff) {
    if (coeff_is_zero(coeff)) return;
    if (deg <= 0 || deg > max_degree()) throw domain_error("entry degree out of range");
    if (dst < 0 || dst >= rank(deg - 1)) throw domain_error("entry target does not exist");
    auto& col = diff_[deg][src];
    for (auto& [t, c] : col) {
      if (t == dst) {
        c = c + coeff;
        prune_(col);
        return;
      }
    }
    col.emplace_back(dst, std::move(coeff));
  }

  const std::vector<Entry>& column(int deg, int src) const {
    static const std::vector<Entry> empty;
    if (!in_range_(deg) || src >= rank(deg)) return empty;
    return diff_[deg][src];
  }

  /// Exact check of d o d = 0; returns the first failure found.
  std::optional<BoundaryWitness> check_boundary_squared() const {
    for (int i = 2; i <= max_degree(); ++i) {
      for (int s = 0; s < rank(i); ++s) {
        std::map<int, C> acc;
        for (const auto& [mid, c1] : column(i, s))
          for (const auto& [dst, c2] : column(i - 1, mid)) {
            auto it = acc.find(dst);
            if (it == acc.end())
              acc.emplace(dst, c1 * c2);
            else
              it->second = it->second + c1 * c2;
          }
        for (const auto& [dst, c] : acc)
          if (!coeff_is_zero(c))
            return BoundaryWitness{i, cells_[i][s].label, cells_[i - 2][dst].label,
                                   coeff_str(c)};
      }
    }
    return std::nullopt;
  }

 private:
  bool in_range_(int deg) const { return deg >= 0 && deg < static_cast<int>(cells_.size()); }
  static void prune_(std::vector<Entry>& col) {
    std::erase_if(col, [](const Entry& e) { return coeff_is_zero(e.second); });
  }

  std::vector<std::vector<Cell>> cells_;              // per degree
  std::vector<std::vector<std::vector<Entry>>> diff_;  // per degree, per source
};

/// k (x)_A -, killing the variables: every coefficient replaced by its
/// constant part.  Works for Polynomial and Bimodule complexes (and is the
/// identity on Scalar ones).
template <class C>
BasedComplex<Scalar> specialize(const BasedComplex<C>& cx) {
  BasedComplex<Scalar> out;
  for (int i = 0; i <= cx.max_degree(); ++i)
    for (const auto& cell : cx.cells(i)) out.add_cell(i, cell);
  for (int i = 1; i <= cx.max_degree(); ++i)
    for (int s = 0; s < cx.rank(i); ++s)
      for (const auto& [dst, c] : cx.column(i, s)) out.add_entry(i, s, dst, coeff_specialize(c));
  return out;
}

/// Homology ranks dim H_i over the field, by exact Gaussian elimination.
std::vector<int> homology_ranks(const BasedComplex<Scalar>& cx);

/// Rank of the sparse Scalar matrix d_deg (exact Gaussian elimination).
int differential_rank(const BasedComplex<Scalar>& cx, int deg);

/// Line-based serialization: `deg src_label dst_label coeff` per entry.
template <class C>
std::string dump_complex(const BasedComplex<C>& cx) {
  std::string out;
  for (int i = 1; i <= cx.max_degree(); ++i)
    for (int s = 0; s < cx.rank(i); ++s)
      for (const auto& [dst, c] : cx.column(i, s))
        out += std::to_string(i) + " " + cx.cells(i)[s].label + " " +
               cx.cells(i - 1)[dst].label + " " + coeff_str(c) + "\n";
  return out;
}

}  // namespace homres
