#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "omconf/core.hpp"

namespace omconf {

// Plausibility weak order on states: level per state, higher = more plausible,
// levels occupying a contiguous range 1..k.
struct StateWeakOrder {
  std::vector<int> levels;

  int n() const { return (int)levels.size(); }
  int class_count() const;
  static StateWeakOrder from_levels(std::vector<int> raw);  // compresses to 1..k

  friend bool operator==(const StateWeakOrder&, const StateWeakOrder&) = default;
};

// Canonical big-stepped probability realizing a state weak order: class values
// bottom-up v_k = 1, v_i = 1 + sum_{j>i} |C_j| v_j, then normalized.
ProbabilityDistribution big_stepped_from_order(const StateWeakOrder& order,
                                               const StateSpace& space);

struct BigSteppedVerdict {
  bool pass = true;
  int witness_state = -1;  // first failing state in index order
};

// Each positive-weight state must strictly outweigh the total of all strictly
// smaller weights. Zero-weight states are skipped.
BigSteppedVerdict check_big_stepped(const ProbabilityDistribution& p);

// Ordinally equivalent possibility levels: rank of distinct positive weights,
// zero weight -> level 0.
PossibilityDistribution possibility_from_prob(const ProbabilityDistribution& p);

// Block masses chosen bottom-up so every state of block i strictly outweighs
// the total mass of all later blocks; in-block proportions preserved.
ProbabilityDistribution lexico_scale(const Partition& part,
                                     const std::vector<Rational>& weights);

struct RepresentResult {
  enum class Status { Represented, NotRepresentable, TheoremCounterexample };
  Status status = Status::NotRepresentable;
  std::optional<ProbabilityDistribution> dist;
  std::string blocking;  // failed precondition, when NotRepresentable
  std::optional<std::pair<Event, Event>> disagreement;  // when TheoremCounterexample
};

class EventRelation;

// Extracts the singleton order from a relation passing the big-stepped
// representability profile and rebuilds it as a probability relation. A
// relation that passes the axioms but is not reproduced is reported as a
// theorem counterexample, never ignored.
RepresentResult represent_big_stepped(const EventRelation& rel);

// Singleton order of a relation whose restriction to singletons is complete
// and transitive: states equivalent to {} get level 0, the rest ranks 1..k.
std::vector<int> singleton_levels(const EventRelation& rel);

}  // namespace omconf
