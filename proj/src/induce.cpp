#include "omconf/induce.hpp"

#include <algorithm>

#include "omconf/axioms.hpp"
#include "omconf/construct.hpp"

namespace omconf {

namespace {

// Pi(A) for every event index, by peeling the lowest bit.
std::vector<int> possibility_table(const PossibilityDistribution& pi) {
  const int n = pi.space().n();
  std::vector<int> table(1u << n, 0);
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    std::uint32_t low = a & (a - 1);
    int bit = __builtin_ctz(a);
    table[a] = std::max(table[low], pi.level(bit));
  }
  return table;
}

std::vector<Rational> probability_table(const ProbabilityDistribution& p) {
  const int n = p.space().n();
  std::vector<Rational> table(1u << n);
  for (std::uint32_t a = 1; a < (1u << n); ++a) {
    std::uint32_t low = a & (a - 1);
    int bit = __builtin_ctz(a);
    table[a] = table[low] + p.weight(bit);
  }
  return table;
}

template <typename Value>
EventRelation leximax_relation(const StateSpace& space, const std::vector<Value>& per_state) {
  require_cap(space.n(), matrix_cap(), "full relation matrix");
  const int n = space.n();
  const std::uint32_t side = 1u << n;
  // Descending-sorted confidence vector per event; absent states contribute
  // the scale bottom.
  std::vector<std::vector<Value>> sorted(side);
  for (std::uint32_t a = 0; a < side; ++a) {
    std::vector<Value> v(n, Value{});
    int k = 0;
    for (int i = 0; i < n; ++i)
      if ((a >> i) & 1u) v[k++] = per_state[i];
    std::sort(v.begin(), v.end(), [](const Value& x, const Value& y) { return y < x; });
    sorted[a] = std::move(v);
  }
  EventRelation rel(space);
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      // geq iff the first differing component favors a (or no difference).
      bool geq = true;
      for (int i = 0; i < n; ++i) {
        if (sorted[a][i] == sorted[b][i]) continue;
        geq = sorted[b][i] < sorted[a][i];
        break;
      }
      rel.set_geq_index(a, b, geq);
    }
  return rel;
}

}  // namespace

EventRelation induce_possibility(const PossibilityDistribution& pi) {
  auto table = possibility_table(pi);
  EventRelation rel(pi.space());
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      rel.set_geq_index(a, b, table[a] >= table[b]);
  return rel;
}

EventRelation induce_necessity(const PossibilityDistribution& pi) {
  auto table = possibility_table(pi);
  EventRelation rel(pi.space());
  const std::uint32_t side = rel.side();
  const std::uint32_t full = side - 1;
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      rel.set_geq_index(a, b, table[full & ~b] >= table[full & ~a]);
  return rel;
}

EventRelation induce_probability(const ProbabilityDistribution& p) {
  auto table = probability_table(p);
  EventRelation rel(p.space());
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      rel.set_geq_index(a, b, table[a] >= table[b]);
  return rel;
}

EventRelation induce_discrimax(const PossibilityDistribution& pi) {
  auto table = possibility_table(pi);
  EventRelation rel(pi.space());
  const std::uint32_t side = rel.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      rel.set_geq_index(a, b, table[a & ~b] >= table[b & ~a]);
  return rel;
}

EventRelation induce_leximax(const PossibilityDistribution& pi) {
  return leximax_relation(pi.space(), pi.levels());
}

EventRelation induce_leximax(const ProbabilityDistribution& p) {
  return leximax_relation(p.space(), p.weights());
}

std::string basic_violation_str(const BasicViolation& v, const StateSpace& space) {
  auto name = [&](int i) {
    return i < 0 ? std::string("?") : i == space.n() ? std::string("_|_") : space.name(i);
  };
  std::string out = std::string(errc_name(v.code)) + " at (" + name(v.x);
  if (v.y >= 0) out += ", " + name(v.y);
  if (v.z >= 0) out += ", " + name(v.z);
  out += ")";
  return out;
}

BasicRelation basic_from_relation(const EventRelation& rel) {
  const int n = rel.n();
  BasicRelation basic(n);
  Event empty = Event::empty(n);
  auto single = [&](int i) { return Event::of_bits(1u << i, n); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) basic.set_geq(x, y, rel.geq(single(x), single(y)));
    basic.set_geq(x, basic.bottom(), rel.geq(single(x), empty));
    basic.set_geq(basic.bottom(), x, rel.geq(empty, single(x)));
  }
  basic.set_geq(basic.bottom(), basic.bottom(), true);
  if (auto v = basic.validate())
    throw Error(v->code, "singleton restriction is not a basic relation: " +
                             basic_violation_str(*v, rel.space()));
  return basic;
}

bool lifted_strict(const BasicRelation& basic, const Event& a, const Event& b) {
  if (a.is_empty()) return false;
  const int n = basic.n();
  if (b.is_empty()) {
    for (int s = 0; s < n; ++s)
      if (a.contains(s) && basic.strict(s, basic.bottom())) return true;
    return false;
  }
  for (int t = 0; t < n; ++t) {
    if (!b.contains(t)) continue;
    bool dominated = false;
    for (int s = 0; s < n; ++s)
      if (a.contains(s) && basic.strict(s, t)) { dominated = true; break; }
    if (!dominated) return false;
  }
  return true;
}

EventRelation simply_generate(const BasicRelation& basic, const StateSpace& space) {
  if (basic.n() != space.n())
    throw Error(Errc::SpaceMismatch, "basic relation size differs from the state space");
  EventRelation rel(space);
  const std::uint32_t side = rel.side();
  std::vector<std::uint8_t> strict((std::size_t)side * side, 0);
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      strict[(std::size_t)a * side + b] =
          lifted_strict(basic, rel.event(a), rel.event(b)) ? 1 : 0;
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b) {
      bool ab = strict[(std::size_t)a * side + b];
      bool ba = strict[(std::size_t)b * side + a];
      rel.set_geq_index(a, b, ab || (!ab && !ba));
    }
  return rel;
}

int rank(const Event& a, const Partition& part) {
  if (a.is_empty()) throw Error(Errc::RankUndefined, "rank of the empty event");
  for (int b = 0; b < part.block_count(); ++b)
    if (!part.blocks()[b].disjoint_with(a)) return b + 1;
  throw Error(Errc::InternalInvariant, "partition does not cover the event");
}

Event upper_approx(const Event& a, const Partition& part) {
  Event out = Event::empty(a.width);
  for (const Event& block : part.blocks())
    if (!block.disjoint_with(a)) out = out.unite(block);
  return out;
}

EventRelation induce_om_partition(const Partition& part) {
  EventRelation rel(part.space());
  const std::uint32_t side = rel.side();
  std::vector<int> rk(side, 0);  // 0 marks the empty event
  for (std::uint32_t a = 1; a < side; ++a) rk[a] = rank(rel.event(a), part);
  auto strict = [&](std::uint32_t a, std::uint32_t b) {
    if (a == 0) return false;
    if (b == 0) return true;
    return rk[a] < rk[b];
  };
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      rel.set_geq_index(a, b, !strict(b, a));
  return rel;
}

std::pair<ProbabilityDistribution, EventRelation> induce_lexicographic(
    const Partition& part, const std::vector<Rational>& weights) {
  ProbabilityDistribution p = lexico_scale(part, weights);
  EventRelation rel = induce_probability(p);
  AxiomVerdict com_p = check_COM_P(rel, part);
  if (!com_p.pass)
    throw Error(Errc::InternalInvariant,
                "lexicographic relation violates COM_P; scaling is broken");
  return {std::move(p), std::move(rel)};
}

}  // namespace omconf
