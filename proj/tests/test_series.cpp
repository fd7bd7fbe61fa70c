#include <vector>

#include "doctest.h"
#include "homres/series.hpp"
#include "systems.hpp"

using namespace homres;
using namespace testsys;

namespace {

// x^mdeg t^hom as a one-term polynomial over series_ring(n)
Polynomial xt(const Ring& sring, std::vector<int> mdeg, int hom) {
  int n = sring.n - 1;
  mdeg.resize(n + 1, 0);
  mdeg[n] = hom;
  return Polynomial(sring, Monomial::commutative(std::move(mdeg)), Scalar(1, sring.field));
}

RationalSeries frac(int n, const Polynomial& num, const Polynomial& den) {
  return RationalSeries{series_ring(n), num, den, false};
}

Polynomial sone(const Ring& sring) {
  return Polynomial::constant(sring, Scalar(1, sring.field));
}

// chain counts and series expansion agree on the common truncation window
void check_series_vs_chains(const ReductionSystem& R, Flavor fl, const RationalSeries& S,
                            int T) {
  auto chains = enumerate_chains(R, fl, T, T);
  auto expect = restrict_total(chain_table(chains), T);
  auto got = series_truncate(S, T);
  CHECK(got == expect);
  if (!(got == expect)) {
    MESSAGE("series table:\n" << got.str());
    MESSAGE("chain table:\n" << expect.str());
  }
}

}  // namespace

TEST_CASE("series truncation: goldens") {
  Ring s1 = series_ring(1);
  // 1/(1 - x t): coefficients 1 on x^i t^i
  auto geo = frac(1, sone(s1), sone(s1) - xt(s1, {1}, 1));
  auto tab = series_truncate(geo, 6);
  REQUIRE(tab.ranks.size() == 4);
  for (int i = 0; i <= 3; ++i) CHECK(tab.ranks.at({i, {i}}) == 1);

  // (1 + x t)/(1 - x^2 t^2) expands to the same table
  auto same = frac(1, sone(s1) + xt(s1, {1}, 1), sone(s1) - xt(s1, {2}, 2));
  CHECK(series_truncate(same, 6) == tab);

  // prod (1 + x_i t) for n = 2
  Ring s2 = series_ring(2);
  auto prod = frac(2, (sone(s2) + xt(s2, {1, 0}, 1)) * (sone(s2) + xt(s2, {0, 1}, 1)),
                   sone(s2));
  auto ptab = series_truncate(prod, 6);
  REQUIRE(ptab.ranks.size() == 4);
  CHECK(ptab.ranks.at({0, {0, 0}}) == 1);
  CHECK(ptab.ranks.at({1, {1, 0}}) == 1);
  CHECK(ptab.ranks.at({1, {0, 1}}) == 1);
  CHECK(ptab.ranks.at({2, {1, 1}}) == 1);
  CHECK(ptab.total(1) == 2);

  // zero constant term in the denominator is rejected
  CHECK_THROWS_AS(series_truncate(frac(1, sone(s1), xt(s1, {1}, 1)), 3), domain_error);
}

TEST_CASE("series arithmetic and printing") {
  Ring s1 = series_ring(1);
  auto a = frac(1, sone(s1), sone(s1) - xt(s1, {1}, 1));
  auto sum = series_add(a, series_constant(1, -1));
  // 1/(1-xt) - 1 = xt/(1-xt)
  auto tab = series_truncate(sum, 6);
  CHECK(tab.ranks.size() == 3);
  CHECK(tab.ranks.count({0, {0}}) == 0);
  CHECK(tab.ranks.at({1, {1}}) == 1);
  CHECK(series_constant(1, 1).str() == "(1) / (1)");
  CHECK(a.str() == "(1) / (1 - x1 t)");
}

TEST_CASE("chain automaton: one-letter language") {
  // single relation x^2: chains are [x|x|...|x], series 1/(1 - x t)
  auto R = noncomm_complete({parse_polynomial("x1 x1", word_ring(1))},
                            MonomialOrder{MonomialOrder::DegLex}, 10);
  auto A = build_automaton(R);
  REQUIRE(A.entries.size() == 1);
  REQUIRE(A.seeds == std::vector<int>{1});
  REQUIRE(A.next[0] == std::vector<int>{0});
  auto S = automaton_series(A);
  CHECK(S.str() == "(1) / (1 - x1 t)");
  check_series_vs_chains(R, Flavor::Anick, S, 8);
}

TEST_CASE("chain automaton: series equals enumeration to degree 8") {
  auto run = [](const ReductionSystem& R) {
    auto S = automaton_series(build_automaton(R));
    check_series_vs_chains(R, Flavor::Anick, S, 8);
  };
  run(twisted_cubic());
  run(commutators(2));
  run(commutators(3));
  run(exterior(2));
  run(exterior(3));
  run(infinite_gb(10));
}

TEST_CASE("chain automaton: twisted cubic rank sequence") {
  auto S = automaton_series(build_automaton(twisted_cubic()));
  auto tab = series_truncate(S, 10);
  std::vector<long> want{1, 4, 9, 18, 36, 72};
  for (int i = 0; i <= 5; ++i) CHECK(tab.total(i) == want[i]);
}

TEST_CASE("chain automaton: rejects commutative input") {
  CHECK_THROWS_AS(build_automaton(comm_quotient(1, {"x1^2"})), domain_error);
  CHECK_THROWS_AS(commutative_upper_bound(twisted_cubic(), 4), domain_error);
}

TEST_CASE("commutative counting bound equals enumeration on the truncation") {
  auto run = [](const ReductionSystem& R) {
    auto S = commutative_upper_bound(R, 8);
    CHECK(S.upper_bound);
    check_series_vs_chains(R, Flavor::Commutative, S, 8);
  };
  run(comm_quotient(1, {"x1^2"}));
  run(comm_quotient(2, {"x1^2", "x1 x2"}));
  run(comm_quotient(2, {"x1^2", "x2^2"}));
  run(comm_quotient(4, {"x1 x3", "x2 x4"}));
  run(comm_quotient(3, {"x1^2 - x2^2", "x3^2"}));
  run(comm_quotient(2, {"x1^2 - x2"}));
}

TEST_CASE("complete-intersection closed form matches the counting bound") {
  auto R = comm_quotient(3, {"x1^2 - x2^2", "x3^2"});
  auto cf = closed_form_series(ClosedForm::CompleteIntersection, 3, R.min_gen_initial());
  CHECK(series_truncate(cf, 8) == series_truncate(commutative_upper_bound(R, 8), 8));
  check_series_vs_chains(R, Flavor::Commutative, cf, 8);

  // the displayed form for m = {x^2, y^3}
  auto R2 = comm_quotient(2, {"x1^2", "x2^3"});
  auto cf2 = closed_form_series(ClosedForm::CompleteIntersection, 2, R2.min_gen_initial());
  CHECK(cf2.str() ==
        "(1 + x2 t + x1 t + x1 x2 t^2) / (1 - x2^3 t^2 - x1^2 t^2 + x1^2 x2^3 t^4)");
  check_series_vs_chains(R2, Flavor::Commutative, cf2, 8);
}

TEST_CASE("divided-power closed form matches the exterior-algebra automaton") {
  for (int n = 1; n <= 3; ++n) {
    auto cf = closed_form_series(ClosedForm::Cartan, n);
    auto S = automaton_series(build_automaton(exterior(n)));
    CHECK(series_truncate(cf, 8) == series_truncate(S, 8));
  }
}
