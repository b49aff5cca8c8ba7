#include "omconf/axioms.hpp"

#include "omconf/induce.hpp"

namespace omconf {

namespace {

Event ev(const EventRelation& rel, std::uint32_t i) { return rel.event(i); }

AxiomVerdict fail(const char* axiom, const EventRelation& rel,
                  std::initializer_list<std::uint32_t> tuple) {
  AxiomVerdict v;
  v.axiom = axiom;
  v.pass = false;
  for (std::uint32_t i : tuple) v.witness.push_back(ev(rel, i));
  return v;
}

AxiomVerdict ok(const char* axiom) { return AxiomVerdict{axiom, true, {}}; }

}  // namespace

const AxiomVerdict* ConfidenceVerdicts::first_failure() const {
  for (const AxiomVerdict* v :
       {&reflexive, &non_trivial, &consistent, &quasi_transitive, &monotonic})
    if (!v->pass) return v;
  return nullptr;
}

ConfidenceVerdicts check_confidence(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  const std::uint32_t full = side - 1;
  ConfidenceVerdicts out{ok("REFLEXIVE"), ok("NON_TRIVIAL"), ok("CONSISTENT"),
                         ok("QUASI_TRANSITIVE"), ok("MONOTONIC")};

  for (std::uint32_t a = 0; a < side; ++a)
    if (!rel.geq_index(a, a)) { out.reflexive = fail("REFLEXIVE", rel, {a}); break; }

  if (!(rel.geq_index(full, 0) && !rel.geq_index(0, full)))
    out.non_trivial = fail("NON_TRIVIAL", rel, {full, 0});

  for (std::uint32_t a = 0; a < side; ++a)
    if (!rel.geq_index(full, a) || !rel.geq_index(a, 0)) {
      out.consistent = fail("CONSISTENT", rel, {a});
      break;
    }

  auto strict = [&](std::uint32_t a, std::uint32_t b) {
    return rel.geq_index(a, b) && !rel.geq_index(b, a);
  };
  for (std::uint32_t a = 0; a < side && out.quasi_transitive.pass; ++a)
    for (std::uint32_t b = 0; b < side && out.quasi_transitive.pass; ++b) {
      if (!strict(a, b)) continue;
      for (std::uint32_t c = 0; c < side; ++c)
        if (strict(b, c) && !strict(a, c)) {
          out.quasi_transitive = fail("QUASI_TRANSITIVE", rel, {a, b, c});
          break;
        }
    }

  for (std::uint32_t a = 0; a < side && out.monotonic.pass; ++a)
    for (std::uint32_t b = 0; b < side && out.monotonic.pass; ++b)
      for (std::uint32_t c = 0; c < side; ++c) {
        if ((rel.geq_index(a, b) && !rel.geq_index(a | c, b)) ||
            (rel.geq_index(a, b | c) && !rel.geq_index(a, b))) {
          out.monotonic = fail("MONOTONIC", rel, {a, b, c});
          break;
        }
      }
  return out;
}

AxiomVerdict check_complete(const EventRelation& rel) {
  require_cap(rel.n(), pair_scan_cap(), "pairwise scan");
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      if (!rel.geq_index(a, b) && !rel.geq_index(b, a))
        return fail("COMPLETE", rel, {a, b});
  return ok("COMPLETE");
}

AxiomVerdict check_transitive(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      if (!rel.geq_index(a, b)) continue;
      for (std::uint32_t c = 0; c < side; ++c)
        if (rel.geq_index(b, c) && !rel.geq_index(a, c))
          return fail("TRANSITIVE", rel, {a, b, c});
    }
  return ok("TRANSITIVE");
}

AxiomVerdict check_preadditivity(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      for (std::uint32_t c = 0; c < side; ++c) {
        if (a & (b | c)) continue;
        if (rel.geq_index(b, c) != rel.geq_index(a | b, a | c))
          return fail("ADD", rel, {a, b, c});
      }
  return ok("ADD");
}

AxiomVerdict check_NEG(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  auto strict = [&](std::uint32_t x, std::uint32_t y) {
    return rel.geq_index(x, y) && !rel.geq_index(y, x);
  };
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      if ((a & b) || !strict(a, b)) continue;
      for (std::uint32_t c = 0; c < side; ++c) {
        if ((a & c) || (b & c)) continue;
        if (strict(a, c) && !strict(a, b | c)) return fail("NEG", rel, {a, b, c});
      }
    }
  return ok("NEG");
}

AxiomVerdict check_CLO(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  auto equiv = [&](std::uint32_t x, std::uint32_t y) {
    return rel.geq_index(x, y) && rel.geq_index(y, x);
  };
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      if (!equiv(a, b)) continue;
      for (std::uint32_t c = 0; c < side; ++c)
        if (rel.geq_index(a, c) && !equiv(a, b | c)) return fail("CLO", rel, {a, b, c});
    }
  return ok("CLO");
}

AxiomVerdict check_CCS(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  auto strict = [&](std::uint32_t x, std::uint32_t y) {
    return rel.geq_index(x, y) && !rel.geq_index(y, x);
  };
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      if (a & b) continue;
      for (std::uint32_t c = 0; c < side; ++c) {
        if ((a & c) || (b & c)) continue;
        if (strict(a | c, b) && strict(a | b, c) && !strict(a, b | c))
          return fail("CCS", rel, {a, b, c});
      }
    }
  return ok("CCS");
}

AxiomVerdict check_QUAL(const EventRelation& rel) {
  require_cap(rel.n(), triple_scan_cap(), "triple scan");
  const std::uint32_t side = rel.side();
  auto strict = [&](std::uint32_t x, std::uint32_t y) {
    return rel.geq_index(x, y) && !rel.geq_index(y, x);
  };
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      for (std::uint32_t c = 0; c < side; ++c)
        if (strict(a | c, b) && strict(a | b, c) && !strict(a, b | c))
          return fail("QUAL", rel, {a, b, c});
  return ok("QUAL");
}

AxiomVerdict check_OM(const EventRelation& rel) {
  ConfidenceVerdicts conf = check_confidence(rel);
  if (const AxiomVerdict* f = conf.first_failure())
    return AxiomVerdict{"OM(" + f->axiom + ")", false, f->witness};
  AxiomVerdict neg = check_NEG(rel);
  if (!neg.pass) return AxiomVerdict{"OM(NEG)", false, neg.witness};
  AxiomVerdict clo = check_CLO(rel);
  if (!clo.pass) return AxiomVerdict{"OM(CLO)", false, clo.witness};
  return ok("OM");
}

AxiomVerdict check_COM(const EventRelation& rel) {
  BasicRelation basic = basic_from_relation(rel);
  require_cap(rel.n(), pair_scan_cap(), "pairwise scan");
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      if (lifted_strict(basic, rel.event(a), rel.event(b)) &&
          !(rel.geq_index(a, b) && !rel.geq_index(b, a)))
        return fail("COM", rel, {a, b});
  return ok("COM");
}

AxiomVerdict check_CPOM(const EventRelation& rel, CpomReading reading) {
  BasicRelation basic = basic_from_relation(rel);
  require_cap(rel.n(), pair_scan_cap(), "pairwise scan");
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      if (a & b) continue;
      bool lift_ab = lifted_strict(basic, rel.event(a), rel.event(b));
      bool rel_strict = rel.geq_index(a, b) && !rel.geq_index(b, a);
      if (reading == CpomReading::StrictOnly) {
        if (lift_ab != rel_strict) return fail("CPOM", rel, {a, b});
      } else {
        bool lift_ba = lifted_strict(basic, rel.event(b), rel.event(a));
        bool lift_eq = !lift_ab && !lift_ba;
        bool rel_eq = rel.geq_index(a, b) && rel.geq_index(b, a);
        if (lift_ab != rel_strict || lift_eq != rel_eq) return fail("CPOM", rel, {a, b});
      }
    }
  return ok("CPOM");
}

AxiomVerdict check_COM_P(const EventRelation& rel, const Partition& part) {
  if (!(part.space() == rel.space()))
    throw Error(Errc::SpaceMismatch, "partition over a different space");
  require_cap(rel.n(), pair_scan_cap(), "pairwise scan");
  EventRelation om = induce_om_partition(part);
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      if (om.geq_index(a, b) && !om.geq_index(b, a) &&
          !(rel.geq_index(a, b) && !rel.geq_index(b, a)))
        return fail("COM_P", rel, {a, b});
  return ok("COM_P");
}

Classification classify(const EventRelation& rel, const Partition* part, CpomReading reading) {
  Classification c;
  c.confidence_relation = check_confidence(rel).all_pass();
  c.complete = check_complete(rel).pass;
  c.transitive = check_transitive(rel).pass;
  c.weak_order = c.complete && c.transitive;
  c.preadditive = check_preadditivity(rel).pass;
  c.neg = check_NEG(rel).pass;
  c.clo = check_CLO(rel).pass;
  c.ccs = check_CCS(rel).pass;
  c.qual = check_QUAL(rel).pass;
  c.om_relation = c.confidence_relation && c.neg && c.clo;
  c.comparative_probability = c.confidence_relation && c.complete && c.transitive && c.preadditive;
  c.comparative_possibility = c.complete && c.transitive && c.om_relation;
  try {
    c.com = check_COM(rel).pass;
    c.cpom = check_CPOM(rel, reading).pass;
  } catch (const Error&) {
    // Singleton restriction is not a basic relation; COM/CPOM cannot hold.
    c.com = false;
    c.cpom = false;
  }
  c.big_stepped_representable = c.confidence_relation && c.weak_order && c.preadditive && c.com;
  if (part) c.com_p = check_COM_P(rel, *part).pass;
  return c;
}

}  // namespace omconf
