#include "doctest.h"
#include "omconf/axioms.hpp"
#include "omconf/construct.hpp"
#include "omconf/induce.hpp"
#include "omconf/verify.hpp"
#include "support.hpp"

using namespace omconf;
using omconf::testing::replay_violation;

namespace {

const StateSpace& abc() {
  static StateSpace space = letter_space(3);
  return space;
}

EventRelation poss321() {
  return induce_possibility(PossibilityDistribution(abc(), {3, 2, 1}));
}

}  // namespace

TEST_CASE("possibility relations pass the confidence axioms but fail ADD") {
  EventRelation rel = poss321();
  CHECK(check_confidence(rel).all_pass());
  AxiomVerdict add = check_preadditivity(rel);
  CHECK_FALSE(add.pass);
  // The first violating triple in canonical scan order is ({a}, {}, {b}).
  REQUIRE(add.witness.size() == 3);
  CHECK(add.witness[0].index() == 1);
  CHECK(add.witness[1].index() == 0);
  CHECK(add.witness[2].index() == 2);
  CHECK(replay_violation(rel, add.axiom, add.witness));
  // Drowning violates too: c < b strictly, yet both tie once a joins them.
  CHECK(replay_violation(rel, "ADD",
                         {rel.event(1), rel.event(4), rel.event(2)}));
}

TEST_CASE("NEG fails for a non-big-stepped probability at the drowning triple") {
  ProbabilityDistribution p(abc(), {Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  EventRelation rel = induce_probability(p);
  AxiomVerdict neg = check_NEG(rel);
  REQUIRE_FALSE(neg.pass);
  CHECK(neg.witness[0].index() == 1);  // {a}
  CHECK(neg.witness[1].index() == 2);  // {b}
  CHECK(neg.witness[2].index() == 4);  // {c}
  CHECK(replay_violation(rel, neg.axiom, neg.witness));
  CHECK(check_NEG(poss321()).pass);
}

TEST_CASE("CLO fails for necessity with tied top levels") {
  EventRelation rel = induce_necessity(PossibilityDistribution(abc(), {2, 2, 1}));
  AxiomVerdict clo = check_CLO(rel);
  REQUIRE_FALSE(clo.pass);
  CHECK(replay_violation(rel, clo.axiom, clo.witness));
  CHECK(check_CLO(poss321()).pass);
}

TEST_CASE("CCS and QUAL hold for possibility and fail for a mid probability") {
  EventRelation rel = poss321();
  CHECK(check_CCS(rel).pass);
  CHECK(check_QUAL(rel).pass);

  ProbabilityDistribution p(abc(), {Rational(2, 5), Rational(3, 10), Rational(3, 10)});
  EventRelation prel = induce_probability(p);
  AxiomVerdict qual = check_QUAL(prel);
  CHECK_FALSE(qual.pass);
  if (!qual.pass) CHECK(replay_violation(prel, qual.axiom, qual.witness));
}

TEST_CASE("OM bundles the confidence axioms with NEG and CLO") {
  CHECK(check_OM(poss321()).pass);
  EventRelation nec = induce_necessity(PossibilityDistribution(abc(), {2, 2, 1}));
  AxiomVerdict om = check_OM(nec);
  REQUIRE_FALSE(om.pass);
  CHECK(om.axiom == "OM(CLO)");
  CHECK(replay_violation(nec, om.axiom, om.witness));
}

TEST_CASE("COM holds for big-stepped relations and fails otherwise") {
  StateSpace abcd = letter_space(4);
  ProbabilityDistribution big(abcd, {Rational(6, 11), Rational(2, 11), Rational(2, 11),
                                     Rational(1, 11)});
  CHECK(check_COM(induce_probability(big)).pass);

  ProbabilityDistribution mid(abc(), {Rational(2, 5), Rational(3, 10), Rational(3, 10)});
  EventRelation rel = induce_probability(mid);
  AxiomVerdict com = check_COM(rel);
  REQUIRE_FALSE(com.pass);
  CHECK(replay_violation(rel, com.axiom, com.witness));
}

TEST_CASE("CPOM holds for discrimax and fails for uniform probability") {
  for (const StateWeakOrder& o : enumerate_state_orders(3)) {
    EventRelation disc = induce_discrimax(PossibilityDistribution(abc(), o.levels));
    CHECK(check_CPOM(disc, CpomReading::Verdict).pass);
    CHECK(check_CPOM(disc, CpomReading::StrictOnly).pass);
  }
  ProbabilityDistribution uni(abc(), {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  EventRelation rel = induce_probability(uni);
  AxiomVerdict cpom = check_CPOM(rel, CpomReading::Verdict);
  REQUIRE_FALSE(cpom.pass);
  CHECK(replay_violation(rel, cpom.axiom, cpom.witness, nullptr, CpomReading::Verdict));
}

TEST_CASE("COM_P against a partition order") {
  Partition part(abc(), {abc().event_of({"a"}), abc().event_of({"b", "c"})});
  auto [p, rel] = induce_lexicographic(part, {Rational(1), Rational(1), Rational(1)});
  CHECK(check_COM_P(rel, part).pass);

  // A probability ignoring the partition order violates COM_P.
  ProbabilityDistribution wrong(abc(), {Rational(1, 5), Rational(2, 5), Rational(2, 5)});
  EventRelation wrel = induce_probability(wrong);
  AxiomVerdict com_p = check_COM_P(wrel, part);
  REQUIRE_FALSE(com_p.pass);
  CHECK(replay_violation(wrel, com_p.axiom, com_p.witness, &part));
}

TEST_CASE("classification profiles match the formalisms") {
  Classification poss = classify(poss321());
  CHECK(poss.confidence_relation);
  CHECK(poss.om_relation);
  CHECK(poss.comparative_possibility);
  CHECK(poss.weak_order);
  CHECK_FALSE(poss.preadditive);
  CHECK_FALSE(poss.comparative_probability);

  StateSpace abcd = letter_space(4);
  ProbabilityDistribution big(abcd, {Rational(6, 11), Rational(2, 11), Rational(2, 11),
                                     Rational(1, 11)});
  Classification prob = classify(induce_probability(big));
  CHECK(prob.comparative_probability);
  CHECK(prob.com);
  CHECK(prob.big_stepped_representable);

  Classification disc =
      classify(induce_discrimax(PossibilityDistribution(abc(), {2, 2, 1})));
  CHECK(disc.confidence_relation);
  CHECK(disc.preadditive);
  CHECK(disc.cpom);
  CHECK(disc.complete);
  CHECK_FALSE(disc.transitive);  // indifference is intransitive here
}

TEST_CASE("confidence checker agrees with the monotone-levels shortcut at n=2") {
  StateSpace ab = letter_space(2);
  for_each_event_weak_order(2, [&](const std::vector<int>& levels) {
    EventRelation rel = relation_from_event_levels(ab, levels);
    bool shortcut = levels[3] > levels[0];
    for (std::uint32_t a = 0; a < 4 && shortcut; ++a)
      for (int i = 0; i < 2; ++i)
        if (levels[a | (1u << i)] < levels[a]) { shortcut = false; break; }
    CHECK(shortcut == check_confidence(rel).all_pass());
  });
}

TEST_CASE("every emitted witness replays as a violation") {
  // Sweep all n=3 orders through every induced relation and axiom check,
  // replaying each failing witness against the definitions.
  int replayed = 0;
  for (const StateWeakOrder& o : enumerate_state_orders(3)) {
    PossibilityDistribution pi(abc(), o.levels);
    ProbabilityDistribution p = big_stepped_from_order(o, abc());
    std::vector<EventRelation> rels{induce_possibility(pi), induce_necessity(pi),
                                    induce_discrimax(pi), induce_leximax(pi),
                                    induce_probability(p)};
    for (const EventRelation& rel : rels) {
      std::vector<AxiomVerdict> verdicts{check_complete(rel),      check_transitive(rel),
                                         check_preadditivity(rel), check_NEG(rel),
                                         check_CLO(rel),           check_CCS(rel),
                                         check_QUAL(rel)};
      ConfidenceVerdicts conf = check_confidence(rel);
      for (const AxiomVerdict* v : {&conf.reflexive, &conf.non_trivial, &conf.consistent,
                                    &conf.quasi_transitive, &conf.monotonic})
        verdicts.push_back(*v);
      try {
        verdicts.push_back(check_COM(rel));
        verdicts.push_back(check_CPOM(rel));
      } catch (const Error&) {
      }
      for (const AxiomVerdict& v : verdicts)
        if (!v.pass) {
          ++replayed;
          CHECK(replay_violation(rel, v.axiom, v.witness));
        }
    }
  }
  CHECK(replayed > 0);
}
