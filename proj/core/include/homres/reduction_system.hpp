#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "homres/polynomial.hpp"

namespace homres {

/// Rewriting rule lhs -> rhs with lhs the leading monomial of lhs - rhs,
/// i.e. every monomial of rhs is strictly below lhs in the term order.
struct Rule {
  Monomial lhs;
  Polynomial rhs;
};

/// A reduction system (Groebner basis presented as a rewriting system).
/// `complete_up_to_degree`: all S-polynomials/overlaps of total degree up to
/// this bound reduce to zero; kUnboundedDegree means fully complete.
class ReductionSystem {
 public:
  static constexpr int kUnboundedDegree = std::numeric_limits<int>::max();

  ReductionSystem(Ring ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool reduced() const { return reduced_; }
  int complete_up_to_degree() const { return complete_degree_; }
  bool fully_complete() const { return complete_degree_ == kUnboundedDegree; }

  /// Construction helpers; `add_rule` keeps no completeness promise.
  void add_rule(const Monomial& lhs, const Polynomial& rhs);

  /// For explicitly supplied, already-confluent rule sets whose orienting
  /// degree order is not one of the built-in orders (e.g. sorting orders of
  /// toric ideals): checks only that no rhs term exceeds the lhs in degree,
  /// which is all the degree-compatibility arguments need.  The caller
  /// asserts the system is a Groebner basis for some degree order.
  void add_rule_unchecked(const Monomial& lhs, const Polynomial& rhs);
  void set_complete_up_to_degree(int d) { complete_degree_ = d; }
  void set_reduced(bool r) { reduced_ = r; }

  /// Rule index whose lhs divides m (commutative) / occurs in m (word),
  /// plus the occurrence position for words.  nullopt if m is standard.
  std::optional<std::pair<int, int>> find_reduction(const Monomial& m) const;

  bool is_standard(const Monomial& m) const { return !find_reduction(m).has_value(); }

  /// Canonical normal form; requires deg p <= complete_up_to_degree.
  Polynomial normal_form(const Polynomial& p) const;

  /// Reduction without the completeness guard (used during completion).
  Polynomial reduce(const Polynomial& p) const;

  /// All standard monomials of the exact degree given (degree >= 0).
  std::vector<Monomial> standard_monomials(int degree) const;

  /// Standard monomials of degree 1..d, the k-basis G of the augmentation
  /// ideal of the quotient, in increasing term order.
  std::vector<Monomial> standard_basis_up_to(int degree) const;

  /// Minimal monomial generators of the initial ideal (antichain of the lhs
  /// under divisibility / factor containment).
  std::vector<Monomial> min_gen_initial() const;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Rule> rules_;
  bool reduced_ = false;
  int complete_degree_ = kUnboundedDegree;
};

/// Commutative Buchberger completion to the reduced Groebner basis.
ReductionSystem buchberger(const std::vector<Polynomial>& gens, MonomialOrder ord);

/// Non-commutative overlap completion, truncated at `degree_bound`: all
/// overlap ambiguities of total degree <= degree_bound resolve to zero.  If
/// every ambiguity closes below the bound the system is flagged fully
/// complete.
ReductionSystem noncomm_complete(const std::vector<Polynomial>& gens, MonomialOrder ord,
                                 int degree_bound);

/// All monomials of the ring of the exact degree given, in increasing order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree, MonomialOrder ord);

}  // namespace homres
