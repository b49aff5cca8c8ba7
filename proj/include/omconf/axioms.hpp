#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omconf/core.hpp"

namespace omconf {

// Outcome of one axiom check. On failure the witness is the lexicographically
// smallest violating tuple under canonical event indices, so golden files and
// reruns always agree.
struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::vector<Event> witness;  // violating pair/triple, present iff !pass
};

struct ConfidenceVerdicts {
  AxiomVerdict reflexive, non_trivial, consistent, quasi_transitive, monotonic;
  bool all_pass() const {
    return reflexive.pass && non_trivial.pass && consistent.pass &&
           quasi_transitive.pass && monotonic.pass;
  }
  // The first failing sub-verdict, if any.
  const AxiomVerdict* first_failure() const;
};

ConfidenceVerdicts check_confidence(const EventRelation& rel);
AxiomVerdict check_complete(const EventRelation& rel);
AxiomVerdict check_transitive(const EventRelation& rel);
AxiomVerdict check_preadditivity(const EventRelation& rel);
AxiomVerdict check_NEG(const EventRelation& rel);
AxiomVerdict check_CLO(const EventRelation& rel);
AxiomVerdict check_CCS(const EventRelation& rel);
AxiomVerdict check_QUAL(const EventRelation& rel);

// Confidence axioms + NEG on the strict part + CLO on the symmetric part.
// The witness is taken from the first failing component.
AxiomVerdict check_OM(const EventRelation& rel);

// CPOM mixes strict and non-strict symbols in its source; the default reading
// requires verdict coincidence on disjoint pairs, the strict-only reading
// compares strict parts only. Both coincide on complete relations.
enum class CpomReading { Verdict, StrictOnly };

AxiomVerdict check_COM(const EventRelation& rel);
AxiomVerdict check_CPOM(const EventRelation& rel, CpomReading reading = CpomReading::Verdict);
AxiomVerdict check_COM_P(const EventRelation& rel, const Partition& part);

struct Classification {
  bool confidence_relation = false;
  bool complete = false;
  bool transitive = false;
  bool weak_order = false;
  bool preadditive = false;
  bool neg = false;
  bool clo = false;
  bool ccs = false;
  bool qual = false;
  bool om_relation = false;
  bool comparative_probability = false;
  bool comparative_possibility = false;
  bool com = false;
  bool cpom = false;
  bool big_stepped_representable = false;
  std::optional<bool> com_p;  // only when a partition was supplied
};

Classification classify(const EventRelation& rel, const Partition* part = nullptr,
                        CpomReading reading = CpomReading::Verdict);

}  // namespace omconf
