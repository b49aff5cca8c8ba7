#pragma once

// Shared helper for the unit and acceptance suites: replay an axiom witness
// against the definitional condition, independently of the checker that
// produced it.

#include <string>
#include <vector>

#include "omconf/axioms.hpp"
#include "omconf/core.hpp"
#include "omconf/induce.hpp"

namespace omconf::testing {

inline bool replay_violation(const EventRelation& rel, const std::string& axiom_in,
                             const std::vector<Event>& w,
                             const Partition* part = nullptr,
                             CpomReading reading = CpomReading::Verdict) {
  std::string axiom = axiom_in;
  if (axiom.rfind("OM(", 0) == 0) axiom = axiom.substr(3, axiom.size() - 4);
  auto strict = [&](const Event& x, const Event& y) { return rel.strict(x, y); };
  auto equiv = [&](const Event& x, const Event& y) { return rel.equiv(x, y); };
  const int n = rel.n();
  Event full = Event::full(n), empty = Event::empty(n);

  if (axiom == "REFLEXIVE") return w.size() == 1 && !rel.geq(w[0], w[0]);
  if (axiom == "NON_TRIVIAL") return !strict(full, empty);
  if (axiom == "CONSISTENT")
    return w.size() == 1 && (!rel.geq(full, w[0]) || !rel.geq(w[0], empty));
  if (axiom == "QUASI_TRANSITIVE")
    return w.size() == 3 && strict(w[0], w[1]) && strict(w[1], w[2]) && !strict(w[0], w[2]);
  if (axiom == "MONOTONIC")
    return w.size() == 3 &&
           ((rel.geq(w[0], w[1]) && !rel.geq(w[0].unite(w[2]), w[1])) ||
            (rel.geq(w[0], w[1].unite(w[2])) && !rel.geq(w[0], w[1])));
  if (axiom == "COMPLETE")
    return w.size() == 2 && !rel.geq(w[0], w[1]) && !rel.geq(w[1], w[0]);
  if (axiom == "TRANSITIVE")
    return w.size() == 3 && rel.geq(w[0], w[1]) && rel.geq(w[1], w[2]) &&
           !rel.geq(w[0], w[2]);
  if (axiom == "ADD")
    return w.size() == 3 && w[0].disjoint_with(w[1].unite(w[2])) &&
           rel.geq(w[1], w[2]) != rel.geq(w[0].unite(w[1]), w[0].unite(w[2]));
  if (axiom == "NEG")
    return w.size() == 3 && w[0].disjoint_with(w[1]) && w[0].disjoint_with(w[2]) &&
           w[1].disjoint_with(w[2]) && strict(w[0], w[1]) && strict(w[0], w[2]) &&
           !strict(w[0], w[1].unite(w[2]));
  if (axiom == "CLO")
    return w.size() == 3 && equiv(w[0], w[1]) && rel.geq(w[0], w[2]) &&
           !equiv(w[0], w[1].unite(w[2]));
  if (axiom == "CCS")
    return w.size() == 3 && w[0].disjoint_with(w[1]) && w[0].disjoint_with(w[2]) &&
           w[1].disjoint_with(w[2]) && strict(w[0].unite(w[2]), w[1]) &&
           strict(w[0].unite(w[1]), w[2]) && !strict(w[0], w[1].unite(w[2]));
  if (axiom == "QUAL")
    return w.size() == 3 && strict(w[0].unite(w[2]), w[1]) &&
           strict(w[0].unite(w[1]), w[2]) && !strict(w[0], w[1].unite(w[2]));
  if (axiom == "COM") {
    BasicRelation basic = basic_from_relation(rel);
    return w.size() == 2 && lifted_strict(basic, w[0], w[1]) && !strict(w[0], w[1]);
  }
  if (axiom == "CPOM") {
    BasicRelation basic = basic_from_relation(rel);
    if (w.size() != 2 || !w[0].disjoint_with(w[1])) return false;
    bool lab = lifted_strict(basic, w[0], w[1]);
    if (reading == CpomReading::StrictOnly) return lab != strict(w[0], w[1]);
    bool lba = lifted_strict(basic, w[1], w[0]);
    return lab != strict(w[0], w[1]) || (!lab && !lba) != equiv(w[0], w[1]);
  }
  if (axiom == "COM_P") {
    if (!part || w.size() != 2) return false;
    EventRelation om = induce_om_partition(*part);
    return om.strict(w[0], w[1]) && !strict(w[0], w[1]);
  }
  return false;
}

}  // namespace omconf::testing
