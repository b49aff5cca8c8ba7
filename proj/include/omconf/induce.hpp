#pragma once

#include <utility>

#include "omconf/core.hpp"

namespace omconf {

// Relation builders over the full powerset, one per formalism.

// A >= B iff Pi(A) >= Pi(B). Complete and transitive.
EventRelation induce_possibility(const PossibilityDistribution& pi);

// A >= B iff Pi(complement B) >= Pi(complement A). No numeric 1-x is ever
// computed; complements are compared on the reversed scale.
EventRelation induce_necessity(const PossibilityDistribution& pi);

// A >= B iff P(A) >= P(B). Complete, transitive, preadditive.
EventRelation induce_probability(const ProbabilityDistribution& p);

// A >= B iff Pi(A \ B) >= Pi(B \ A). Complete and quasi-transitive; the
// symmetric part may be intransitive.
EventRelation induce_discrimax(const PossibilityDistribution& pi);

// Descending-sorted confidence vectors compared lexicographically.
EventRelation induce_leximax(const PossibilityDistribution& pi);
EventRelation induce_leximax(const ProbabilityDistribution& p);

// Restriction of an event relation to singletons and the empty set. Throws
// (with the violation named in the message) when the restriction breaks the
// basic-relation axioms.
BasicRelation basic_from_relation(const EventRelation& rel);
std::string basic_violation_str(const BasicViolation& v, const StateSpace& space);

// Strict lifting: A > B iff every member of B is strictly dominated by some
// member of A; never {} > A, and A > {} iff some member of A is strictly
// above bottom. Completed symmetrically (A = B iff neither side dominates).
EventRelation simply_generate(const BasicRelation& basic, const StateSpace& space);
bool lifted_strict(const BasicRelation& basic, const Event& a, const Event& b);

// Index (1-based) of the first partition block meeting A. Undefined for {}.
int rank(const Event& a, const Partition& part);

// Union of all blocks meeting A; {}* = {}.
Event upper_approx(const Event& a, const Partition& part);

// OM-relation generated from a partition's block ordering: strictly above
// exactly when the rank is strictly smaller (with {} never above anything and
// everything nonempty above {}); completed symmetrically.
EventRelation induce_om_partition(const Partition& part);

// Scaled lexicographic probability (see construct.hpp) together with its
// probability relation; the relation is checked against COM_P.
std::pair<ProbabilityDistribution, EventRelation> induce_lexicographic(
    const Partition& part, const std::vector<Rational>& weights);

}  // namespace omconf
