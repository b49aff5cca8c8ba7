#include "omconf/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "omconf/axioms.hpp"
#include "omconf/induce.hpp"

namespace omconf {

int StateWeakOrder::class_count() const {
  return (int)std::set<int>(levels.begin(), levels.end()).size();
}

StateWeakOrder StateWeakOrder::from_levels(std::vector<int> raw) {
  if (raw.empty()) throw Error(Errc::InvalidArgument, "state order needs at least one state");
  std::set<int> distinct(raw.begin(), raw.end());
  std::map<int, int> compress;
  int next = 1;
  for (int l : distinct) compress[l] = next++;
  for (int& l : raw) l = compress[l];
  return StateWeakOrder{std::move(raw)};
}

namespace {

// Integer class values per distinct level: bottom class 1, each higher class
// one more than the total weight below it.
std::map<int, long long> class_values(const std::vector<int>& levels) {
  std::map<int, long long> count;
  for (int l : levels)
    if (l > 0) ++count[l];
  std::map<int, long long> value;
  long long below = 0;
  for (auto& [level, cnt] : count) {  // ascending level order
    value[level] = 1 + below;
    below += cnt * value[level];
  }
  return value;
}

ProbabilityDistribution prob_from_levels(const StateSpace& space,
                                         const std::vector<int>& levels) {
  auto value = class_values(levels);
  long long total = 0;
  for (int l : levels)
    if (l > 0) total += value[l];
  if (total == 0)
    throw Error(Errc::InvalidArgument, "no state with a positive level");
  std::vector<Rational> weights;
  weights.reserve(levels.size());
  for (int l : levels) weights.emplace_back(l > 0 ? value[l] : 0, total);
  return ProbabilityDistribution(space, std::move(weights));
}

}  // namespace

ProbabilityDistribution big_stepped_from_order(const StateWeakOrder& order,
                                               const StateSpace& space) {
  if (order.n() != space.n())
    throw Error(Errc::SpaceMismatch, "order size differs from the state space");
  for (int l : order.levels)
    if (l < 1) throw Error(Errc::InvalidArgument, "state order levels must be >= 1");
  return prob_from_levels(space, order.levels);
}

BigSteppedVerdict check_big_stepped(const ProbabilityDistribution& p) {
  const int n = p.space().n();
  for (int s = 0; s < n; ++s) {
    const Rational& w = p.weight(s);
    if (w.is_zero()) continue;
    Rational below;
    for (int t = 0; t < n; ++t)
      if (p.weight(t) < w) below += p.weight(t);
    if (!(w > below)) return BigSteppedVerdict{false, s};
  }
  return BigSteppedVerdict{};
}

PossibilityDistribution possibility_from_prob(const ProbabilityDistribution& p) {
  std::set<Rational> positive;
  for (const Rational& w : p.weights())
    if (!w.is_zero()) positive.insert(w);
  std::map<Rational, int> level;
  int next = 1;
  for (const Rational& w : positive) level[w] = next++;
  std::vector<int> levels;
  levels.reserve(p.space().n());
  for (const Rational& w : p.weights()) levels.push_back(w.is_zero() ? 0 : level[w]);
  return PossibilityDistribution(p.space(), std::move(levels));
}

ProbabilityDistribution lexico_scale(const Partition& part,
                                     const std::vector<Rational>& weights) {
  const int n = part.space().n();
  if ((int)weights.size() != n)
    throw Error(Errc::InvalidArgument, "one weight per state required");
  for (const Rational& w : weights)
    if (!(w.sign() > 0))
      throw Error(Errc::InvalidArgument, "in-block weights must be positive");

  std::vector<Rational> mass(n);
  Rational later_total;  // total mass of already-processed (later) blocks
  for (int b = part.block_count() - 1; b >= 0; --b) {
    const Event& block = part.blocks()[b];
    Rational min_w;
    bool have_min = false;
    for (int s = 0; s < n; ++s)
      if (block.contains(s) && (!have_min || weights[s] < min_w)) {
        min_w = weights[s];
        have_min = true;
      }
    // Scale so the lightest state of this block strictly exceeds everything
    // below it; one extra unit of min_w gives the strict margin.
    Rational scale = later_total.is_zero() ? Rational(1)
                                           : later_total / min_w + Rational(1);
    for (int s = 0; s < n; ++s)
      if (block.contains(s)) {
        mass[s] = scale * weights[s];
        later_total += mass[s];
      }
  }
  Rational total;
  for (const Rational& m : mass) total += m;
  for (Rational& m : mass) m /= total;
  ProbabilityDistribution p(part.space(), std::move(mass));

  // The quoted condition, exactly: p(s) > P(all later blocks) for every s.
  Rational below;
  for (int b = part.block_count() - 1; b >= 0; --b) {
    const Event& block = part.blocks()[b];
    for (int s = 0; s < n; ++s)
      if (block.contains(s) && !(p.weight(s) > below))
        throw Error(Errc::InternalInvariant, "lexicographic scaling failed");
    below += p.of(block);
  }
  return p;
}

std::vector<int> singleton_levels(const EventRelation& rel) {
  const int n = rel.n();
  Event empty = Event::empty(n);
  auto single = [&](int i) { return Event::of_bits(1u << i, n); };
  std::vector<int> positive;
  for (int s = 0; s < n; ++s) {
    Verdict v = rel.query(single(s), empty);
    if (v == Verdict::Incomparable)
      throw Error(Errc::InvalidArgument, "singleton restriction is not complete");
    if (v == Verdict::StrictGreater) positive.push_back(s);
  }
  std::vector<int> order = positive;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return rel.strict(single(y), single(x));  // ascending plausibility
  });
  std::vector<int> levels(n, 0);
  int level = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || rel.strict(single(order[i]), single(order[i - 1]))) ++level;
    levels[order[i]] = level;
  }
  return levels;
}

RepresentResult represent_big_stepped(const EventRelation& rel) {
  RepresentResult out;
  auto block = [&out](const std::string& axiom, const std::vector<Event>& witness,
                      const StateSpace& space) {
    out.status = RepresentResult::Status::NotRepresentable;
    out.blocking = axiom;
    for (const Event& e : witness) out.blocking += " " + space.event_str(e);
  };

  ConfidenceVerdicts conf = check_confidence(rel);
  if (const AxiomVerdict* f = conf.first_failure()) {
    block(f->axiom, f->witness, rel.space());
    return out;
  }
  for (AxiomVerdict v : {check_complete(rel), check_transitive(rel), check_preadditivity(rel)})
    if (!v.pass) {
      block(v.axiom, v.witness, rel.space());
      return out;
    }
  try {
    AxiomVerdict com = check_COM(rel);
    if (!com.pass) {
      block(com.axiom, com.witness, rel.space());
      return out;
    }
  } catch (const Error& e) {
    out.status = RepresentResult::Status::NotRepresentable;
    out.blocking = e.what();
    return out;
  }

  ProbabilityDistribution p = prob_from_levels(rel.space(), singleton_levels(rel));
  EventRelation rebuilt = induce_probability(p);
  if (!(rebuilt == rel)) {
    const std::uint32_t side = rel.side();
    for (std::uint32_t a = 0; a < side; ++a)
      for (std::uint32_t b = 0; b < side; ++b)
        if (rebuilt.geq_index(a, b) != rel.geq_index(a, b)) {
          out.status = RepresentResult::Status::TheoremCounterexample;
          out.disagreement = {rel.event(a), rel.event(b)};
          out.dist = std::move(p);
          return out;
        }
  }
  out.status = RepresentResult::Status::Represented;
  out.dist = std::move(p);
  return out;
}

}  // namespace omconf
