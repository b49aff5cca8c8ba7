#include "doctest.h"
#include "omconf/axioms.hpp"
#include "omconf/construct.hpp"
#include "omconf/induce.hpp"
#include "omconf/verify.hpp"

using namespace omconf;

TEST_CASE("state weak order compresses levels") {
  StateWeakOrder o = StateWeakOrder::from_levels({7, 3, 3, 1});
  CHECK(o.levels == std::vector<int>{3, 2, 2, 1});
  CHECK(o.class_count() == 3);
  CHECK_THROWS_AS(StateWeakOrder::from_levels({}), Error);
}

TEST_CASE("canonical big-stepped probabilities") {
  StateSpace abcd = letter_space(4);
  ProbabilityDistribution p =
      big_stepped_from_order(StateWeakOrder{{3, 2, 2, 1}}, abcd);
  CHECK(p.weights() == std::vector<Rational>{Rational(6, 11), Rational(2, 11),
                                             Rational(2, 11), Rational(1, 11)});
  CHECK(check_big_stepped(p).pass);

  StateSpace abc = letter_space(3);
  ProbabilityDistribution lin = big_stepped_from_order(StateWeakOrder{{3, 2, 1}}, abc);
  CHECK(lin.weights() ==
        std::vector<Rational>{Rational(4, 7), Rational(2, 7), Rational(1, 7)});

  CHECK_THROWS_AS(big_stepped_from_order(StateWeakOrder{{1, 0}}, letter_space(2)), Error);
  CHECK_THROWS_AS(big_stepped_from_order(StateWeakOrder{{1, 2}}, abc), Error);
}

TEST_CASE("big-stepped check skips zero weights and finds the failing state") {
  StateSpace abc = letter_space(3);
  BigSteppedVerdict bad =
      check_big_stepped(ProbabilityDistribution(abc, {Rational(1, 2), Rational(3, 10),
                                                      Rational(1, 5)}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness_state == 0);  // 1/2 does not exceed 3/10 + 1/5

  CHECK(check_big_stepped(ProbabilityDistribution(abc, {Rational(2, 3), Rational(1, 3),
                                                        Rational(0)}))
            .pass);
  // Uniform is trivially big-stepped: no state is strictly lighter.
  CHECK(check_big_stepped(ProbabilityDistribution(abc, {Rational(1, 3), Rational(1, 3),
                                                        Rational(1, 3)}))
            .pass);
}

TEST_CASE("ordinal projection of a probability") {
  StateSpace abcd = letter_space(4);
  ProbabilityDistribution p(abcd, {Rational(6, 11), Rational(2, 11), Rational(2, 11),
                                   Rational(1, 11)});
  CHECK(possibility_from_prob(p).levels() == std::vector<int>{3, 2, 2, 1});

  StateSpace abc = letter_space(3);
  ProbabilityDistribution z(abc, {Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK(possibility_from_prob(z).levels() == std::vector<int>{1, 1, 0});
}

TEST_CASE("lexicographic scaling makes every state outweigh later blocks") {
  StateSpace abc = letter_space(3);
  Partition part(abc, {abc.event_of({"a"}), abc.event_of({"b", "c"})});
  ProbabilityDistribution p = lexico_scale(part, {Rational(1), Rational(2), Rational(1)});
  CHECK(p.weights() ==
        std::vector<Rational>{Rational(4, 7), Rational(2, 7), Rational(1, 7)});

  // The defining inequality, rechecked here.
  Rational below;
  for (int b = part.block_count() - 1; b >= 0; --b) {
    for (int s = 0; s < 3; ++s)
      if (part.blocks()[b].contains(s)) CHECK(p.weight(s) > below);
    below += p.of(part.blocks()[b]);
  }

  CHECK_THROWS_AS(lexico_scale(part, {Rational(1), Rational(0), Rational(1)}), Error);
  CHECK_THROWS_AS(lexico_scale(part, {Rational(1), Rational(2)}), Error);

  // In-block proportions survive the scaling.
  Partition one_block(abc, {Event::full(3)});
  ProbabilityDistribution q =
      lexico_scale(one_block, {Rational(3), Rational(2), Rational(1)});
  CHECK(q.weights() ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)});
}

TEST_CASE("singleton level extraction") {
  StateSpace abc = letter_space(3);
  EventRelation rel =
      induce_probability(big_stepped_from_order(StateWeakOrder{{2, 1, 2}}, abc));
  CHECK(singleton_levels(rel) == std::vector<int>{2, 1, 2});

  // States carrying zero weight sit at level 0.
  ProbabilityDistribution z(abc, {Rational(2, 3), Rational(1, 3), Rational(0)});
  CHECK(singleton_levels(induce_probability(z)) == std::vector<int>{2, 1, 0});

  EventRelation incomplete(abc);  // no pair set: singleton vs empty undecided
  CHECK_THROWS_AS((void)singleton_levels(incomplete), Error);
}

TEST_CASE("big-stepped representation round-trips") {
  StateSpace abcd = letter_space(4);
  for (const StateWeakOrder& o : enumerate_state_orders(4)) {
    ProbabilityDistribution p = big_stepped_from_order(o, abcd);
    EventRelation rel = induce_probability(p);
    RepresentResult res = represent_big_stepped(rel);
    REQUIRE(res.status == RepresentResult::Status::Represented);
    CHECK(induce_probability(*res.dist) == rel);
  }
}

TEST_CASE("non-big-stepped relations are rejected with the blocking axiom") {
  StateSpace abc = letter_space(3);
  SUBCASE("COM failure") {
    ProbabilityDistribution p(abc, {Rational(2, 5), Rational(3, 10), Rational(3, 10)});
    RepresentResult res = represent_big_stepped(induce_probability(p));
    CHECK(res.status == RepresentResult::Status::NotRepresentable);
    CHECK(res.blocking.find("COM") != std::string::npos);
  }
  SUBCASE("ADD failure") {
    EventRelation poss = induce_possibility(PossibilityDistribution(abc, {3, 2, 1}));
    RepresentResult res = represent_big_stepped(poss);
    CHECK(res.status == RepresentResult::Status::NotRepresentable);
    CHECK(res.blocking.find("ADD") != std::string::npos);
  }
  SUBCASE("incompleteness") {
    EventRelation none(abc);
    RepresentResult res = represent_big_stepped(none);
    CHECK(res.status == RepresentResult::Status::NotRepresentable);
  }
}
