#include <vector>

#include "doctest.h"
#include "homres/oracle.hpp"
#include "systems.hpp"

using namespace homres;
using namespace testsys;

namespace {

// (homological degree, internal degree) window common to two tables
TorTable window(const TorTable& t, int D, int d) {
  TorTable out;
  for (const auto& [key, r] : t.ranks)
    if (key.first <= D && key.second <= d) out.ranks[key] = r;
  return out;
}

void check_oracle_vs_resolution(const ReductionSystem& R, Flavor fl, int D, int d) {
  auto res = build_resolution(R, fl, D, d);
  REQUIRE(res.minimal);
  auto tor = tor_residue_field(R, D, d);
  auto cells = cell_counts(res.cx, D);
  CHECK(window(tor, D, d) == window(cells, D, d));
  if (!(window(tor, D, d) == window(cells, D, d))) {
    MESSAGE("oracle:\n" << tor.str());
    MESSAGE("cells:\n" << cells.str());
  }
}

// polynomial ring with no relations (buchberger cannot infer the ring from
// an empty generator list)
ReductionSystem free_comm(int n) {
  return ReductionSystem(comm_ring(n), MonomialOrder{MonomialOrder::DegLex});
}

}  // namespace

TEST_CASE("oracle: polynomial ring is Koszul") {
  auto R = free_comm(2);
  auto tor = tor_residue_field(R, 4, 4);
  TorTable want;
  want.ranks = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
  CHECK(tor == want);
}

TEST_CASE("oracle: dual numbers have one Tor class per degree") {
  auto R = comm_quotient(1, {"x1^2"});
  auto tor = tor_residue_field(R, 4, 6);
  TorTable want;
  for (int i = 0; i <= 4; ++i) want.ranks[{i, i}] = 1;
  CHECK(tor == want);
}

TEST_CASE("oracle: twisted cubic rank sequence") {
  auto tor = tor_residue_field(twisted_cubic(), 5, 5);
  std::vector<long> want{1, 4, 9, 18, 36, 72};
  for (int i = 0; i <= 5; ++i) CHECK(tor.total(i) == want[i]);
}

TEST_CASE("oracle equals the minimal resolutions of the bar machine") {
  check_oracle_vs_resolution(comm_quotient(2, {"x1^2", "x1 x2"}), Flavor::Commutative, 4, 6);
  check_oracle_vs_resolution(comm_quotient(4, {"x1 x3", "x2 x4"}), Flavor::Commutative, 4, 4);
  check_oracle_vs_resolution(twisted_cubic(), Flavor::Anick, 4, 4);
  check_oracle_vs_resolution(exterior(2), Flavor::Anick, 4, 4);
}

TEST_CASE("oracle: rejects ungraded and incomplete input") {
  CHECK_THROWS_AS(tor_residue_field(comm_quotient(2, {"x1^2 - x2"}), 3, 3), domain_error);
  CHECK_THROWS_AS(tor_residue_field(infinite_gb(4), 3, 6), incomplete_basis);
}

TEST_CASE("oracle: total Betti numbers are order-independent") {
  auto a = tor_residue_field(comm_quotient(4, {"x1 x3", "x2 x4"}), 4, 4);
  auto b = tor_residue_field(comm_quotient(4, {"x1 x2", "x3 x4"}), 4, 4);
  for (int i = 0; i <= 4; ++i) CHECK(a.total(i) == b.total(i));
}

TEST_CASE("oracle matches the complete-intersection closed form") {
  auto R = comm_quotient(3, {"x1^2 - x2^2", "x3^2"});
  auto cf = closed_form_series(ClosedForm::CompleteIntersection, 3, R.min_gen_initial());
  auto tor = tor_residue_field(R, 8, 8);
  auto series_tab = aggregate_internal(series_truncate(cf, 8));
  // common window: homological + internal degree <= 8
  TorTable a, b;
  for (const auto& [key, r] : tor.ranks)
    if (key.first + key.second <= 8) a.ranks[key] = r;
  for (const auto& [key, r] : series_tab.ranks)
    if (key.first + key.second <= 8) b.ranks[key] = r;
  CHECK(a == b);
}

TEST_CASE("bimodule oracle: small closed forms") {
  // k[x]: one bimodule relation class
  auto tor1 = tor_bimodule(free_comm(1), 3, 3);
  TorTable want1;
  want1.ranks = {{{0, 0}, 1}, {{1, 1}, 1}};
  CHECK(tor1 == want1);

  // k[x,y]: binomial pattern 1, 2, 1
  auto tor2 = tor_bimodule(free_comm(2), 3, 3);
  CHECK(tor2.total(0) == 1);
  CHECK(tor2.total(1) == 2);
  CHECK(tor2.total(2) == 1);
  CHECK(tor2.total(3) == 0);

  // exterior algebra on one letter: one class in every degree
  auto tor3 = tor_bimodule(exterior(1), 4, 5);
  for (int i = 0; i <= 4; ++i) CHECK(tor3.total(i) == 1);
}
