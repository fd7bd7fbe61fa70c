// The unnormalized one- and two-sided complexes over W = {1} u standard
// monomials, contracted along the 1-run matching, reproduce the directly
// constructed normalized complexes cell for cell and coefficient for
// coefficient.

#include "doctest.h"
#include "homres/bar.hpp"
#include "normalization_demo.hpp"
#include "systems.hpp"

using namespace homres;
using namespace testsys;
using namespace demo;

namespace {

// k<x,y> / (xy): standard monomials are the words y^a x^b
ReductionSystem one_relation_word() {
  Ring r = word_ring(2);
  return noncomm_complete({parse_polynomial("x1 x2", r)}, MonomialOrder{MonomialOrder::DegLex},
                          8);
}

void check_one_sided(const ReductionSystem& R, int D, int d) {
  auto U = unnormalized_one_sided(R, D + 1, d);
  auto violation = validate_matching(U.cx, U.matching);
  if (violation) {
    CAPTURE(violation->condition);
    CAPTURE(violation->detail);
    REQUIRE(!violation);
  }
  auto M = morse_complex(U.cx, U.matching, QuotientElem::of_scalar(Scalar(1, R.ring().field), &R));
  BarComplex N = normalized_bar(R, D + 1, d);
  std::string diag = compare_contraction(U, M, N, D);
  CAPTURE(diag);
  CHECK(diag.empty());
}

void check_two_sided(const ReductionSystem& R, int D, int d) {
  auto U = unnormalized_two_sided(R, D + 1, d);
  auto violation = validate_matching(U.cx, U.matching);
  if (violation) {
    CAPTURE(violation->condition);
    CAPTURE(violation->detail);
    REQUIRE(!violation);
  }
  auto M = morse_complex(U.cx, U.matching, BimoduleElem::of_scalar(Scalar(1, R.ring().field), &R));
  HochschildComplex N = normalized_hochschild(R, D + 1, d);
  std::string diag = compare_contraction(U, M, N, D);
  CAPTURE(diag);
  CHECK(diag.empty());
}

}  // namespace

TEST_CASE("unnormalized complex: unit faces and cell counts for k[x]/(x^2)") {
  ReductionSystem R = comm_quotient(1, {"x1^2"});
  auto U = unnormalized_one_sided(R, 3, 3);
  // W = {1, x}: 2^i tuples of length i
  REQUIRE(U.tuples[1].size() == 2);
  REQUIRE(U.tuples[2].size() == 4);
  REQUIRE(U.tuples[3].size() == 8);
  // boundary squared holds already before contraction
  CHECK(!U.cx.check_boundary_squared());

  Monomial x = Monomial::commutative({1});
  Monomial u = Monomial::one(R.ring());
  auto idx = [&](const BarTuple& t) { return U.index.at(t).second; };
  auto col = [&](const BarTuple& t) {
    std::map<int, QuotientElem> out;
    auto [deg, s] = U.index.at(t);
    for (const auto& [dst, c] : U.cx.column(deg, s)) {
      auto it = out.find(dst);
      if (it == out.end())
        out.emplace(dst, c);
      else
        it->second = it->second + c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  };
  // d[1] = 1*[] - [] = 0 (head face minus augmentation tail face)
  CHECK(col({u}).empty());
  // d[x|1] = x*[] ... merge x*1=x gives -[x], tail face -[x]; total x[] - 2[x]? no:
  //   head: x (x) -> [1]; merge j=1: nf(x*1)=x -> -[x]; tail: +(-1)^2 [x].
  // Recompute explicitly against the implementation's faces:
  {
    auto c = col({x, u});
    // faces: head (weight x) -> [1]; merge -> -[x]; tail -> +[x]; the last two cancel
    REQUIRE(c.size() == 1);
    CHECK(c.at(idx({u})) == QuotientElem::of_monomial(x, &R));
  }
  // the matching pairs [1|1] above [1] with a unit accumulated weight
  {
    auto c = col({u, u});
    REQUIRE(c.count(idx({u})));
    CHECK(c.at(idx({u})).is_unit());
  }
}

TEST_CASE("contraction reproduces normalized one-sided complex: k[x]/(x^2)") {
  check_one_sided(comm_quotient(1, {"x1^2"}), 4, 5);
}

TEST_CASE("contraction reproduces normalized one-sided complex: k<x,y>/(xy)") {
  check_one_sided(one_relation_word(), 4, 5);
}

TEST_CASE("contraction reproduces normalized two-sided complex: k[x]/(x^2)") {
  check_two_sided(comm_quotient(1, {"x1^2"}), 4, 5);
}

TEST_CASE("contraction reproduces normalized two-sided complex: k<x,y>/(xy)") {
  check_two_sided(one_relation_word(), 4, 5);
}
