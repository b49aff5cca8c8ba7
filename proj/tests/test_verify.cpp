#include <set>

#include "doctest.h"
#include "omconf/axioms.hpp"
#include "omconf/construct.hpp"
#include "omconf/induce.hpp"
#include "omconf/verify.hpp"

using namespace omconf;

TEST_CASE("ordered set partition counts follow the recurrence") {
  CHECK(ordered_set_partition_count(1) == 1);
  CHECK(ordered_set_partition_count(2) == 3);
  CHECK(ordered_set_partition_count(3) == 13);
  CHECK(ordered_set_partition_count(4) == 75);
  CHECK(ordered_set_partition_count(8) == 545835);

  std::uint64_t seen = 0;
  for_each_ordered_set_partition(4, [&](const std::vector<std::uint32_t>& blocks) {
    ++seen;
    std::uint32_t all = 0;
    for (std::uint32_t b : blocks) {
      CHECK(b != 0);
      CHECK((all & b) == 0);
      all |= b;
    }
    CHECK(all == 0b1111);
  });
  CHECK(seen == 75);
}

TEST_CASE("state order enumeration is exact and distinct") {
  auto orders = enumerate_state_orders(3);
  CHECK(orders.size() == 13);
  std::set<std::vector<int>> distinct;
  for (const StateWeakOrder& o : orders) {
    distinct.insert(o.levels);
    CHECK(StateWeakOrder::from_levels(o.levels) == o);  // already compressed
  }
  CHECK(distinct.size() == 13);

  std::uint64_t event_orders = 0;
  for_each_event_weak_order(2, [&](const std::vector<int>&) { ++event_orders; });
  CHECK(event_orders == 75);  // 2^2 = 4 events
}

TEST_CASE("backtracking search matches the lift on weak-order basics") {
  StateSpace abc = letter_space(3);
  BasicRelation chain(3);  // a > b > c > bottom
  for (int x = 0; x < 4; ++x)
    for (int y = x; y < 4; ++y) chain.set_geq(x, y, true);
  auto found = om_relations_consistent_with(chain, abc, 5);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == induce_possibility(PossibilityDistribution(abc, {3, 2, 1})).matrix());
  CHECK(found[0] == simply_generate(chain, abc).matrix());

  BasicRelation flat(3);  // all states equivalent, strictly above bottom
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) flat.set_geq(x, y, true);
  for (int s = 0; s < 3; ++s) flat.set_geq(s, flat.bottom(), true);
  auto ffound = om_relations_consistent_with(flat, abc, 5);
  REQUIRE(ffound.size() == 1);
  EventRelation frel(abc, ffound[0]);
  CHECK(frel.query(abc.event_of({"a"}), abc.event_of({"b", "c"})) == Verdict::Equivalent);
  CHECK(frel.query(abc.event_of({"a"}), Event::empty(3)) == Verdict::StrictGreater);
}

TEST_CASE("leximax disagreement scan is empty exactly for big-stepped inputs") {
  StateSpace abc = letter_space(3);
  ProbabilityDistribution good(abc, {Rational(4, 7), Rational(2, 7), Rational(1, 7)});
  CHECK(leximax_prob_disagreements(good).empty());
  ProbabilityDistribution bad(abc, {Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  auto diff = leximax_prob_disagreements(bad);
  REQUIRE_FALSE(diff.empty());
  CHECK(diff[0].first.index() == 6);   // {b,c}
  CHECK(diff[0].second.index() == 1);  // {a}
}

TEST_CASE("theorem suites pass at desk scale") {
  CHECK(verify_theorem_1(3).pass());
  CHECK(verify_theorem_2(4, 10, 1).pass());
  CHECK(verify_theorem_3(3).pass());
  CHECK(verify_theorem_4(3).pass());
  CHECK(verify_theorem_5(3).pass());
  CHECK(verify_theorem_6(3, false, 0, 0).pass());
  CHECK(verify_theorem_6(4, true, 25, 9).pass());
  CHECK(verify_props(3, 5).pass());
}

TEST_CASE("theorem reports are deterministic and never serialize timings") {
  TheoremReport a = verify_theorem_2(5, 40, 77);
  TheoremReport b = verify_theorem_2(5, 40, 77);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.text() == b.text());
  CHECK(a.to_json().dump().find("elapsed") == std::string::npos);
  CHECK(a.seed == 77);

  TheoremReport p1 = verify_props(3, 11), p2 = verify_props(3, 11);
  CHECK(p1.to_json().dump() == p2.to_json().dump());
}

TEST_CASE("run_theorem dispatches by name") {
  CHECK(run_theorem("6", 3, "exhaustive", 0, 0).theorem == "6");
  CHECK(run_theorem("props", 3, "exhaustive", 0, 1).theorem == "props");
  CHECK_THROWS_AS(run_theorem("7", 3, "exhaustive", 0, 0), Error);
}

TEST_CASE("generators produce valid objects deterministically") {
  StateSpace abcd = letter_space(4);
  Rng r1(123), r2(123);
  for (int i = 0; i < 20; ++i) {
    ProbabilityDistribution p = random_probability(abcd, r1);
    ProbabilityDistribution q = random_probability(abcd, r2);
    CHECK(p == q);
    ProbabilityDistribution b = random_big_stepped(abcd, r1);
    CHECK(check_big_stepped(b).pass);
    (void)random_big_stepped(abcd, r2);
    BasicRelation basic = random_basic(4, r1);
    CHECK_FALSE(basic.validate().has_value());
    (void)random_basic(4, r2);
  }
}

TEST_CASE("theorem 1 structure predicates") {
  StateSpace abc = letter_space(3);
  EventRelation det = induce_probability(
      ProbabilityDistribution(abc, {Rational(1), Rational(0), Rational(0)}));
  CHECK(structure_clo_ok(det));
  CHECK(structure_neg_ok(det));
  CHECK(singleton_pattern(det) == "1:|2");

  EventRelation big = induce_probability(big_stepped_from_order(StateWeakOrder{{3, 2, 1}}, abc));
  CHECK(singleton_pattern(big) == "3:>>|0");
  CHECK(structure_neg_ok(big));
}
