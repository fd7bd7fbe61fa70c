#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "homres/errors.hpp"
#include "homres/scalar.hpp"

namespace homres {

/// Ring context shared by all monomials and polynomials of one computation:
/// k[x_1..x_n] (commutative) or k<x_1..x_n> (free, Word monomials).
struct Ring {
  int n = 0;
  bool commutative = true;
  Field field;
  bool operator==(const Ring&) const = default;
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// Monomial order: always refines total degree; x_1 > x_2 > ... > x_n.
/// DegRevLex is only meaningful in the commutative case.
struct MonomialOrder {
  enum Kind { DegLex, DegRevLex } kind = DegLex;
};

/// Immutable monomial: exponent vector (commutative) or word of letters.
/// Letters/variables are 0-based indices internally, printed as x1..xn.
class Monomial {
 public:
  Monomial() = default;  // the identity monomial 1 (commutative, n = 0 vector)

  static Monomial one(const Ring& ring);
  static Monomial variable(const Ring& ring, int i);
  static Monomial commutative(std::vector<int> exponents);
  static Monomial word(std::vector<int> letters);

  bool is_word() const { return word_; }
  bool is_one() const;
  int degree() const;
  const std::vector<int>& data() const { return d_; }

  /// Least variable index (0-based) dividing/occurring in the monomial; w != 1.
  int least_variable() const;

  /// Multidegree as an exponent vector of length n (counts letters for words).
  std::vector<int> multidegree(int n) const;

  Monomial operator*(const Monomial& o) const;

  /// Commutative only: does *this divide o componentwise?
  bool divides(const Monomial& o) const;
  /// Commutative quotient o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  /// Word only: first position where *this occurs as a factor of o, or -1.
  int find_factor_in(const Monomial& o) const;
  /// Word only: contiguous subword [from, from+len).
  Monomial subword(int from, int len) const;
  bool is_prefix_of(const Monomial& o) const;
  bool is_suffix_of(const Monomial& o) const;

  Ordering compare(const Monomial& o, MonomialOrder ord) const;

  /// Structural total order (for deterministic containers, not the term order).
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;

  std::string str() const;

 private:
  std::vector<int> d_;
  bool word_ = false;
};

/// All factorizations w = u * v with u != 1, sorted by `ord` on u.
/// Commutative: unordered divisor pairs; Word: (prefix, suffix) splits.
std::vector<std::pair<Monomial, Monomial>> divisors(const Monomial& w, MonomialOrder ord);

}  // namespace homres
