#include "omconf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "omconf/axioms.hpp"
#include "omconf/induce.hpp"

namespace omconf {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

json event_json(const StateSpace& space, const Event& e) {
  return json{{"index", e.index()}, {"set", space.event_str(e)}};
}

json pair_json(const StateSpace& space, const Event& a, const Event& b) {
  return json{{"a", event_json(space, a)}, {"b", event_json(space, b)}};
}

}  // namespace

json TheoremReport::to_json() const {
  json j{{"theorem", theorem},
         {"search_space", search_space},
         {"instances", instances},
         {"counterexamples", counterexamples},
         {"extra", extra}};
  if (seed) j["seed"] = *seed;
  return j;
}

std::string TheoremReport::text() const {
  std::string out;
  out += "theorem: " + theorem + "\n";
  out += "search space: " + search_space + "\n";
  if (seed) out += "seed: " + std::to_string(*seed) + "\n";
  out += "instances: " + std::to_string(instances) + "\n";
  out += "counterexamples: " + std::to_string(counterexamples.size()) + "\n";
  for (const json& c : counterexamples) out += "  " + c.dump() + "\n";
  if (!extra.empty()) out += "extra: " + extra.dump() + "\n";
  out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::uint64_t ordered_set_partition_count(int k) {
  std::vector<std::uint64_t> a(k + 1, 0);
  a[0] = 1;
  std::vector<std::vector<std::uint64_t>> choose(k + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int i = 0; i <= k; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }
  for (int m = 1; m <= k; ++m)
    for (int j = 1; j <= m; ++j) a[m] += choose[m][j] * a[m - j];
  return a[k];
}

namespace {

void osp_rec(std::uint32_t remaining, std::vector<std::uint32_t>& blocks,
             const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (!remaining) {
    fn(blocks);
    return;
  }
  for (std::uint32_t s = remaining;; s = (s - 1) & remaining) {
    blocks.push_back(s);
    osp_rec(remaining & ~s, blocks, fn);
    blocks.pop_back();
    if (s == (remaining & (std::uint32_t)-(std::int32_t)remaining)) break;  // lowest bit last
  }
}

}  // namespace

void for_each_ordered_set_partition(
    int k, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (k < 1 || k > 8)
    throw Error(Errc::SizeCapExceeded, "ordered set partitions limited to 1 <= k <= 8");
  std::vector<std::uint32_t> blocks;
  osp_rec((1u << k) - 1u, blocks, fn);
}

void for_each_state_order(int n, const std::function<void(const StateWeakOrder&)>& fn) {
  for_each_ordered_set_partition(n, [&](const std::vector<std::uint32_t>& blocks) {
    const int k = (int)blocks.size();
    std::vector<int> levels(n, 0);
    for (int b = 0; b < k; ++b)
      for (int i = 0; i < n; ++i)
        if ((blocks[b] >> i) & 1u) levels[i] = k - b;  // first block most plausible
    fn(StateWeakOrder{std::move(levels)});
  });
}

std::vector<StateWeakOrder> enumerate_state_orders(int n) {
  std::vector<StateWeakOrder> out;
  for_each_state_order(n, [&](const StateWeakOrder& o) { out.push_back(o); });
  return out;
}

void for_each_event_weak_order(int n,
                               const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1 || n > 3)
    throw Error(Errc::SizeCapExceeded, "event weak order enumeration limited to n <= 3");
  const int k = 1 << n;
  for_each_ordered_set_partition(k, [&](const std::vector<std::uint32_t>& blocks) {
    const int kb = (int)blocks.size();
    std::vector<int> levels(k, 0);
    for (int b = 0; b < kb; ++b)
      for (int e = 0; e < k; ++e)
        if ((blocks[b] >> e) & 1u) levels[e] = kb - b;
    fn(levels);
  });
}

EventRelation relation_from_event_levels(const StateSpace& space,
                                         const std::vector<int>& levels) {
  EventRelation rel(space);
  const std::uint32_t side = rel.side();
  if (levels.size() != side)
    throw Error(Errc::InvalidArgument, "one level per event required");
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      rel.set_geq_index(a, b, levels[a] >= levels[b]);
  return rel;
}

// ---------------------------------------------------------------------------
// Theorem-1 singleton structure.

namespace {

// Singletons strictly above {}, sorted by decreasing confidence, plus the
// count of singletons equivalent to {}.
struct SingletonProfile {
  std::vector<int> positive;  // state indices, most confident first
  int zero_count = 0;
};

SingletonProfile singleton_profile(const EventRelation& rel) {
  const int n = rel.n();
  Event empty = Event::empty(n);
  auto single = [&](int i) { return Event::of_bits(1u << i, n); };
  SingletonProfile prof;
  for (int s = 0; s < n; ++s) {
    if (rel.equiv(single(s), empty))
      ++prof.zero_count;
    else
      prof.positive.push_back(s);
  }
  std::stable_sort(prof.positive.begin(), prof.positive.end(), [&](int x, int y) {
    return rel.strict(single(x), single(y));
  });
  return prof;
}

}  // namespace

std::string singleton_pattern(const EventRelation& rel) {
  SingletonProfile prof = singleton_profile(rel);
  auto single = [&](int i) { return Event::of_bits(1u << i, rel.n()); };
  std::string steps;
  for (std::size_t i = 0; i + 1 < prof.positive.size(); ++i)
    steps += rel.strict(single(prof.positive[i]), single(prof.positive[i + 1])) ? '>' : '~';
  return std::to_string(prof.positive.size()) + ":" + steps + "|" +
         std::to_string(prof.zero_count);
}

bool structure_clo_ok(const EventRelation& rel) {
  // Strictly decreasing prefix of singletons, remainder equivalent to {}.
  SingletonProfile prof = singleton_profile(rel);
  auto single = [&](int i) { return Event::of_bits(1u << i, rel.n()); };
  for (std::size_t i = 0; i + 1 < prof.positive.size(); ++i)
    if (!rel.strict(single(prof.positive[i]), single(prof.positive[i + 1]))) return false;
  return true;
}

bool structure_neg_ok(const EventRelation& rel) {
  // Strict prefix followed by at most three weakly-ordered singletons above
  // {}; remainder equivalent to {}.
  SingletonProfile prof = singleton_profile(rel);
  auto single = [&](int i) { return Event::of_bits(1u << i, rel.n()); };
  const int m = (int)prof.positive.size();
  for (int i = 0; i + 1 < m; ++i) {
    bool is_strict = rel.strict(single(prof.positive[i]), single(prof.positive[i + 1]));
    if (!is_strict && i < m - 3) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Shared exhaustive scan over event weak orders (theorems 1, 4 and 6).

namespace {

struct CorpusScan {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t confidence = 0;
  std::uint64_t comparative_probability = 0;
  // Theorem 1
  std::uint64_t clo_count = 0, neg_count = 0;
  std::vector<json> thm1_counterexamples;
  std::map<std::string, std::uint64_t> taxonomy_clo, taxonomy_neg;
  // Theorem 4
  std::uint64_t om_count = 0;
  std::vector<json> thm4_counterexamples;
  std::set<std::vector<std::uint8_t>> om_matrices;
  // Theorem 6
  std::uint64_t com_count = 0, represented = 0;
  std::vector<json> thm6_counterexamples;
};

// Fast confidence prefilter for level-induced weak orders: for a complete
// transitive relation, the Def. 1 axioms reduce to subset-monotone levels
// plus S strictly above {} (cross-checked against the full checkers in the
// test suite).
bool levels_confidence(int n, const std::vector<int>& levels) {
  const std::uint32_t side = 1u << n;
  if (!(levels[side - 1] > levels[0])) return false;
  for (std::uint32_t a = 0; a < side; ++a)
    for (int i = 0; i < n; ++i) {
      std::uint32_t b = a | (1u << i);
      if (levels[b] < levels[a]) return false;
    }
  return true;
}

const CorpusScan& corpus_scan(int n) {
  static std::map<int, CorpusScan> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  CorpusScan scan;
  scan.n = n;
  StateSpace space = letter_space(n);
  for_each_event_weak_order(n, [&](const std::vector<int>& levels) {
    ++scan.total;
    if (!levels_confidence(n, levels)) return;
    ++scan.confidence;
    EventRelation rel = relation_from_event_levels(space, levels);

    bool add = check_preadditivity(rel).pass;
    bool neg = check_NEG(rel).pass;
    bool clo = check_CLO(rel).pass;

    // Theorem 4 converse: complete transitive OM-relations are exactly the
    // possibility-induced ones.
    if (neg && clo) {
      ++scan.om_count;
      scan.om_matrices.insert(rel.matrix());
      try {
        PossibilityDistribution pi(space, singleton_levels(rel));
        if (!(induce_possibility(pi) == rel))
          scan.thm4_counterexamples.push_back(
              json{{"kind", "om_weak_order_not_possibility"}, {"levels", levels}});
      } catch (const Error& e) {
        scan.thm4_counterexamples.push_back(
            json{{"kind", "om_weak_order_without_levels"},
                 {"levels", levels},
                 {"error", e.what()}});
      }
    }

    if (!add) return;
    ++scan.comparative_probability;

    // Theorem 1: singleton structure of comparative probabilities that also
    // satisfy CLO (resp. NEG).
    if (clo) {
      ++scan.clo_count;
      ++scan.taxonomy_clo[singleton_pattern(rel)];
      if (!structure_clo_ok(rel))
        scan.thm1_counterexamples.push_back(json{{"kind", "clo_structure"},
                                                 {"levels", levels},
                                                 {"pattern", singleton_pattern(rel)}});
    }
    if (neg) {
      ++scan.neg_count;
      ++scan.taxonomy_neg[singleton_pattern(rel)];
      if (!structure_neg_ok(rel))
        scan.thm1_counterexamples.push_back(json{{"kind", "neg_structure"},
                                                 {"levels", levels},
                                                 {"pattern", singleton_pattern(rel)}});
    }

    // Theorem 6 converse: preadditive weak orders satisfying COM are exactly
    // the big-stepped ones.
    bool com = false;
    try {
      com = check_COM(rel).pass;
    } catch (const Error& e) {
      scan.thm6_counterexamples.push_back(
          json{{"kind", "basic_rejected"}, {"levels", levels}, {"error", e.what()}});
      return;
    }
    if (com) {
      ++scan.com_count;
      RepresentResult rep = represent_big_stepped(rel);
      if (rep.status == RepresentResult::Status::Represented)
        ++scan.represented;
      else
        scan.thm6_counterexamples.push_back(
            json{{"kind", rep.status == RepresentResult::Status::TheoremCounterexample
                              ? "not_reproduced"
                              : "axioms_disagree"},
                 {"levels", levels},
                 {"blocking", rep.blocking}});
    }
  });
  return cache.emplace(n, std::move(scan)).first->second;
}

std::string order_str(const StateWeakOrder& o) {
  std::string s;
  for (std::size_t i = 0; i < o.levels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(o.levels[i]);
  }
  return s;
}

// Possibility distributions at size n: every state weak order, once with all
// levels positive and once with the bottom class demoted to level 0.
std::vector<PossibilityDistribution> possibility_corpus(int n) {
  StateSpace space = letter_space(n);
  std::vector<PossibilityDistribution> out;
  for (const StateWeakOrder& o : enumerate_state_orders(n)) {
    out.emplace_back(space, o.levels);
    if (o.class_count() >= 2) {
      std::vector<int> demoted = o.levels;
      for (int& l : demoted) --l;
      out.emplace_back(space, demoted);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pruned backtracking for Theorem 3's uniqueness direction.

namespace {

class OmSearch {
public:
  OmSearch(const BasicRelation& basic, const StateSpace& space, int limit)
      : basic_(basic), n_(space.n()), side_(1u << n_), space_(space), limit_(limit),
        geq_((std::size_t)side_ * side_, Unknown) {}

  std::vector<std::vector<std::uint8_t>> run() {
    if (!init()) return {};
    if (propagate()) search();
    return std::move(found_);
  }

private:
  static constexpr std::int8_t False = 0, True = 1, Unknown = -1;

  std::int8_t cell(std::uint32_t a, std::uint32_t b) const {
    return geq_[(std::size_t)a * side_ + b];
  }
  // Returns false on contradiction.
  bool assign(std::uint32_t a, std::uint32_t b, std::int8_t v) {
    std::int8_t& c = geq_[(std::size_t)a * side_ + b];
    if (c == v) return true;
    if (c != Unknown) return false;
    c = v;
    dirty_ = true;
    return true;
  }

  bool init() {
    const std::uint32_t full = side_ - 1;
    for (std::uint32_t a = 0; a < side_; ++a) {
      if (!assign(a, a, True)) return false;
      if (!assign(full, a, True)) return false;
      if (!assign(a, 0, True)) return false;
    }
    if (!assign(0, full, False)) return false;
    // Pin the singleton restriction to the basic relation (Def. 11).
    for (int s = 0; s < n_; ++s) {
      std::uint32_t es = 1u << s;
      for (int t = 0; t < n_; ++t)
        if (!assign(es, 1u << t, basic_.geq(s, t) ? True : False)) return false;
      if (!assign(es, 0, basic_.geq(s, basic_.bottom()) ? True : False)) return false;
      if (!assign(0, es, basic_.geq(basic_.bottom(), s) ? True : False)) return false;
    }
    return true;
  }

  bool strict_known(std::uint32_t a, std::uint32_t b) const {
    return cell(a, b) == True && cell(b, a) == False;
  }
  bool equiv_known(std::uint32_t a, std::uint32_t b) const {
    return cell(a, b) == True && cell(b, a) == True;
  }

  // Forward closure of completeness, monotonicity, quasi-transitivity, NEG
  // and CLO; false on contradiction.
  bool propagate() {
    do {
      dirty_ = false;
      for (std::uint32_t a = 0; a < side_; ++a)
        for (std::uint32_t b = 0; b < side_; ++b) {
          if (cell(a, b) == False && !assign(b, a, True)) return false;  // completeness
          for (std::uint32_t c = 0; c < side_; ++c) {
            // Monotonicity, both forms with their contrapositives.
            if (cell(a, b) == True && !assign(a | c, b, True)) return false;
            if (cell(a | c, b) == False && !assign(a, b, False)) return false;
            if (cell(a, b | c) == True && !assign(a, b, True)) return false;
            if (cell(a, b) == False && !assign(a, b | c, False)) return false;
            // Quasi-transitivity of the strict part.
            if (strict_known(a, b) && strict_known(b, c)) {
              if (!assign(a, c, True) || !assign(c, a, False)) return false;
            }
            // NEG on pairwise disjoint triples.
            if (!(a & b) && !(a & c) && !(b & c) && strict_known(a, b) &&
                strict_known(a, c)) {
              if (!assign(a, b | c, True) || !assign(b | c, a, False)) return false;
            }
            // CLO on all triples.
            if (equiv_known(a, b) && cell(a, c) == True) {
              if (!assign(a, b | c, True) || !assign(b | c, a, True)) return false;
            }
          }
        }
    } while (dirty_);
    return true;
  }

  void search() {
    if ((int)found_.size() >= limit_) return;
    for (std::uint32_t a = 0; a < side_; ++a)
      for (std::uint32_t b = 0; b < side_; ++b)
        if (cell(a, b) == Unknown) {
          for (std::int8_t v : {True, False}) {
            std::vector<std::int8_t> saved = geq_;
            if (assign(a, b, v) && propagate()) search();
            geq_ = std::move(saved);
            if ((int)found_.size() >= limit_) return;
          }
          return;
        }
    accept();
  }

  void accept() {
    std::vector<std::uint8_t> m(geq_.size());
    for (std::size_t i = 0; i < geq_.size(); ++i) m[i] = geq_[i] == True ? 1 : 0;
    EventRelation rel(space_, m);
    if (!check_confidence(rel).all_pass()) return;
    if (!check_NEG(rel).pass || !check_CLO(rel).pass) return;
    found_.push_back(std::move(m));
  }

  const BasicRelation& basic_;
  int n_;
  std::uint32_t side_;
  StateSpace space_;
  int limit_;
  std::vector<std::int8_t> geq_;
  std::vector<std::vector<std::uint8_t>> found_;
  bool dirty_ = false;
};

// Every complete basic relation on n states (plus bottom), by odometer over
// the pair verdicts, filtered by the basic-relation axioms.
std::vector<BasicRelation> enumerate_complete_basics(int n) {
  std::vector<std::pair<int, int>> pairs;  // element indices, bottom = n
  for (int x = 0; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);
  std::vector<BasicRelation> out;
  std::vector<int> digit(pairs.size(), 0);
  for (;;) {
    BasicRelation basic(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [x, y] = pairs[i];
      // 0: x > y, 1: y > x, 2: x ~ y
      basic.set_geq(x, y, digit[i] != 1);
      basic.set_geq(y, x, digit[i] != 0);
    }
    if (!basic.validate()) out.push_back(basic);
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) break;
    ++digit[i];
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> om_relations_consistent_with(
    const BasicRelation& basic, const StateSpace& space, int limit) {
  return OmSearch(basic, space, limit).run();
}

std::vector<std::pair<Event, Event>> leximax_prob_disagreements(
    const ProbabilityDistribution& p) {
  EventRelation lex = induce_leximax(p);
  EventRelation prob = induce_probability(p);
  std::vector<std::pair<Event, Event>> out;
  const std::uint32_t side = lex.side();
  for (std::uint32_t a = 0; a < side; ++a)
    for (std::uint32_t b = 0; b < side; ++b)
      if (lex.geq_index(a, b) != prob.geq_index(a, b))
        out.emplace_back(lex.event(a), lex.event(b));
  return out;
}

// ---------------------------------------------------------------------------
// Theorem suites.

TheoremReport verify_theorem_1(int n) {
  auto t0 = Clock::now();
  if (n > 3) throw Error(Errc::SizeCapExceeded, "theorem 1 scan limited to n <= 3");
  const CorpusScan& scan = corpus_scan(n);
  TheoremReport rep;
  rep.theorem = "1";
  rep.search_space =
      "all event weak orders at n=" + std::to_string(n) + " (ordered set partitions of 2^n events)";
  rep.instances = scan.total;
  rep.counterexamples = scan.thm1_counterexamples;
  rep.extra = json{{"confidence_relations", scan.confidence},
                   {"comparative_probabilities", scan.comparative_probability},
                   {"clo_qualifying", scan.clo_count},
                   {"neg_qualifying", scan.neg_count},
                   {"taxonomy_clo", scan.taxonomy_clo},
                   {"taxonomy_neg", scan.taxonomy_neg}};
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport verify_theorem_2(int n, int samples, std::uint64_t seed) {
  auto t0 = Clock::now();
  TheoremReport rep;
  rep.theorem = "2";
  rep.seed = seed;
  rep.search_space = "state weak orders exhaustive to n=" + std::to_string(std::min(n, 4)) +
                     ", sampled big-stepped distributions above";

  // Converse: the canonical big-stepped probability of every order matches
  // the leximax relation of the same levels, pairwise.
  for (int m = 1; m <= std::min(n, 4); ++m) {
    StateSpace space = letter_space(m);
    for (const StateWeakOrder& o : enumerate_state_orders(m)) {
      ++rep.instances;
      ProbabilityDistribution p = big_stepped_from_order(o, space);
      PossibilityDistribution pi(space, o.levels);
      if (!(induce_probability(p) == induce_leximax(pi)))
        rep.counterexamples.push_back(
            json{{"kind", "converse_disagreement"}, {"n", m}, {"order", order_str(o)}});
    }
  }

  // Forward: sampled big-stepped distributions at the larger sizes.
  Rng rng(seed);
  for (int m = 5; m <= std::min(n, 6); ++m) {
    StateSpace space = letter_space(m);
    for (int i = 0; i < samples; ++i) {
      ++rep.instances;
      ProbabilityDistribution p = random_big_stepped(space, rng);
      auto bad = leximax_prob_disagreements(p);
      if (!bad.empty())
        rep.counterexamples.push_back(json{{"kind", "forward_disagreement"},
                                           {"n", m},
                                           {"pair", pair_json(space, bad[0].first, bad[0].second)}});
    }
  }

  // Negative control: a non-big-stepped distribution must disagree somewhere.
  {
    StateSpace space = letter_space(3);
    ProbabilityDistribution control(space,
                                    {Rational(1, 2), Rational(3, 10), Rational(1, 5)});
    auto bad = leximax_prob_disagreements(control);
    rep.extra["negative_control_disagreements"] = bad.size();
    if (bad.empty())
      rep.counterexamples.push_back(json{{"kind", "negative_control_vacuous"}});
    else
      rep.extra["negative_control_first"] = pair_json(space, bad[0].first, bad[0].second);
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport verify_theorem_3(int n) {
  auto t0 = Clock::now();
  TheoremReport rep;
  rep.theorem = "3";
  rep.search_space = "state-order basics to n=" + std::to_string(std::min(n, 4)) +
                     "; all complete basics at n=" + std::to_string(std::min(n, 3)) +
                     " by backtracking";

  // Direction 1: the simply-generated relation of every basic relation coming
  // from a state weak order (all strictly positive, or the bottom class tied
  // with the empty set) is an OM-relation consistent with it.
  for (int m = 1; m <= std::min(n, 4); ++m) {
    StateSpace space = letter_space(m);
    std::vector<BasicRelation> basics;
    for (const StateWeakOrder& o : enumerate_state_orders(m))
      for (int tied_bottom = 0; tied_bottom < 2; ++tied_bottom) {
        if (tied_bottom && o.class_count() < 2) continue;
        BasicRelation basic(m);
        for (int s = 0; s < m; ++s) {
          int ls = o.levels[s] - tied_bottom;
          for (int t = 0; t < m; ++t)
            basic.set_geq(s, t, ls >= o.levels[t] - tied_bottom);
          basic.set_geq(s, basic.bottom(), true);
          basic.set_geq(basic.bottom(), s, ls == 0);
        }
        basics.push_back(std::move(basic));
      }
    for (const BasicRelation& basic : basics) {
      ++rep.instances;
      EventRelation lifted = simply_generate(basic, space);
      AxiomVerdict om = check_OM(lifted);
      if (!om.pass) {
        rep.counterexamples.push_back(json{{"kind", "lifted_not_om"},
                                           {"n", m},
                                           {"axiom", om.axiom}});
        continue;
      }
      // Def. 11 consistency on singletons.
      bool consistent = true;
      Event empty = Event::empty(m);
      for (int s = 0; s < m && consistent; ++s) {
        Event es = Event::of_bits(1u << s, m);
        for (int t = 0; t < m; ++t) {
          Event et = Event::of_bits(1u << t, m);
          if (lifted.geq(es, et) != basic.geq(s, t)) { consistent = false; break; }
        }
        if (lifted.geq(es, empty) != basic.geq(s, basic.bottom()) ||
            lifted.geq(empty, es) != basic.geq(basic.bottom(), s))
          consistent = false;
      }
      if (!consistent)
        rep.counterexamples.push_back(json{{"kind", "lifted_inconsistent"}, {"n", m}});
    }
  }

  // Direction 2, over every complete basic relation at n=3: pruned
  // backtracking must find at most one consistent OM-relation; exactly one,
  // equal to the lift, when the lift passes the OM axioms, and none at all
  // when it does not. Degenerate basics (states tied with the empty set but
  // strictly ordered among themselves, or no state above it) fall in the
  // second bucket and double as negative controls for the search.
  {
    const int m = std::min(n, 3);
    StateSpace space = letter_space(m);
    std::uint64_t basics = 0, unique = 0, none = 0;
    for (const BasicRelation& basic : enumerate_complete_basics(m)) {
      ++basics;
      auto found = om_relations_consistent_with(basic, space, 2);
      EventRelation lifted = simply_generate(basic, space);
      bool lift_om = check_OM(lifted).pass;
      if (found.size() > 1)
        rep.counterexamples.push_back(
            json{{"kind", "uniqueness"}, {"n", m}, {"found", found.size()}});
      else if (lift_om && (found.size() != 1 || found[0] != lifted.matrix()))
        rep.counterexamples.push_back(json{{"kind", "lift_om_but_not_found"}, {"n", m}});
      else if (!lift_om && !found.empty())
        rep.counterexamples.push_back(
            json{{"kind", "consistent_om_despite_bad_lift"}, {"n", m}});
      else if (lift_om)
        ++unique;
      else
        ++none;
    }
    rep.extra["backtracking_basics"] = basics;
    rep.extra["backtracking_unique_matches"] = unique;
    rep.extra["backtracking_without_consistent_om"] = none;
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport verify_theorem_4(int n) {
  auto t0 = Clock::now();
  TheoremReport rep;
  rep.theorem = "4";
  rep.search_space = "possibility distributions to n=" + std::to_string(std::min(n, 4)) +
                     "; event weak orders at n=3";

  // Forward: every possibility relation is a complete transitive OM-relation.
  for (int m = 1; m <= std::min(n, 4); ++m) {
    for (const PossibilityDistribution& pi : possibility_corpus(m)) {
      ++rep.instances;
      EventRelation rel = induce_possibility(pi);
      if (!check_complete(rel).pass || !check_transitive(rel).pass || !check_OM(rel).pass)
        rep.counterexamples.push_back(
            json{{"kind", "possibility_not_om"}, {"n", m}, {"levels", pi.levels()}});
    }
  }

  // Converse and cross-count at n=3: qualifying event weak orders are exactly
  // the possibility-induced relations.
  if (n >= 3) {
    const CorpusScan& scan = corpus_scan(3);
    rep.instances += scan.total;
    for (const json& c : scan.thm4_counterexamples) rep.counterexamples.push_back(c);

    std::set<std::vector<std::uint8_t>> pi_matrices;
    for (const PossibilityDistribution& pi : possibility_corpus(3))
      pi_matrices.insert(induce_possibility(pi).matrix());
    rep.extra["om_weak_orders"] = scan.om_count;
    rep.extra["pi_induced_distinct"] = pi_matrices.size();
    rep.extra["state_orders_n3"] = ordered_set_partition_count(3);
    if (pi_matrices != scan.om_matrices)
      rep.counterexamples.push_back(json{{"kind", "cross_count_mismatch"},
                                         {"om_weak_orders", scan.om_matrices.size()},
                                         {"pi_induced", pi_matrices.size()}});
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport verify_theorem_5(int n) {
  auto t0 = Clock::now();
  TheoremReport rep;
  rep.theorem = "5";
  rep.search_space = "state weak orders to n=" + std::to_string(std::min(n, 4)) +
                     ", constraint propagation converse";
  std::uint64_t cpom_verdict_pass = 0, cpom_strict_pass = 0, free_pairs = 0;

  for (int m = 1; m <= std::min(n, 4); ++m) {
    StateSpace space = letter_space(m);
    const std::uint32_t side = 1u << m;
    for (const StateWeakOrder& o : enumerate_state_orders(m)) {
      ++rep.instances;
      PossibilityDistribution pi(space, o.levels);
      EventRelation rel = induce_discrimax(pi);

      // Forward: the axiom profile of Theorem 5.
      bool conf = check_confidence(rel).all_pass();
      bool add = check_preadditivity(rel).pass;
      bool complete = check_complete(rel).pass;
      bool cpom_v = check_CPOM(rel, CpomReading::Verdict).pass;
      bool cpom_s = check_CPOM(rel, CpomReading::StrictOnly).pass;
      if (cpom_v) ++cpom_verdict_pass;
      if (cpom_s) ++cpom_strict_pass;
      bool singleton_weak = true;
      try {
        singleton_levels(rel);
      } catch (const Error&) {
        singleton_weak = false;
      }
      if (!(conf && add && complete && cpom_v && singleton_weak))
        rep.counterexamples.push_back(
            json{{"kind", "forward_profile"}, {"n", m}, {"order", order_str(o)}});

      // Converse: CPOM pins every disjoint pair to the lifted verdict and ADD
      // pins every remaining pair through its disjoint reduction; the pinned
      // relation must be the discrimax relation, with no free pairs.
      BasicRelation basic(m);
      for (int s = 0; s < m; ++s) {
        for (int t = 0; t < m; ++t) basic.set_geq(s, t, o.levels[s] >= o.levels[t]);
        basic.set_geq(s, basic.bottom(), true);
        basic.set_geq(basic.bottom(), s, false);
      }
      bool mismatch = false;
      for (std::uint32_t a = 0; a < side && !mismatch; ++a)
        for (std::uint32_t b = 0; b < side; ++b) {
          std::uint32_t d = a & ~b, e = b & ~a;
          bool pinned_geq =
              !lifted_strict(basic, Event::of_bits(e, m), Event::of_bits(d, m));
          if (pinned_geq != rel.geq_index(a, b)) { mismatch = true; break; }
        }
      if (mismatch)
        rep.counterexamples.push_back(
            json{{"kind", "converse_mismatch"}, {"n", m}, {"order", order_str(o)}});
    }
  }
  rep.extra = json{{"cpom_verdict_reading_pass", cpom_verdict_pass},
                   {"cpom_strict_reading_pass", cpom_strict_pass},
                   {"free_pairs", free_pairs}};
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport verify_theorem_6(int n, bool sampled, int samples, std::uint64_t seed) {
  auto t0 = Clock::now();
  TheoremReport rep;
  rep.theorem = "6";

  if (!sampled) {
    if (n > 3) throw Error(Errc::SizeCapExceeded, "theorem 6 exhaustive scan limited to n <= 3");
    const CorpusScan& scan = corpus_scan(n);
    rep.search_space = "all event weak orders at n=" + std::to_string(n);
    rep.instances = scan.total;
    rep.counterexamples = scan.thm6_counterexamples;
    rep.extra = json{{"comparative_probabilities", scan.comparative_probability},
                     {"com_qualifying", scan.com_count},
                     {"represented", scan.represented}};
  } else {
    rep.seed = seed;
    rep.search_space = "sampled big-stepped distributions to n=" + std::to_string(std::min(n, 6));
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
      int m = 2 + (i % (std::max(std::min(n, 6), 2) - 1));
      StateSpace space = letter_space(m);
      ProbabilityDistribution p = random_big_stepped(space, rng);
      ++rep.instances;
      EventRelation rel = induce_probability(p);
      bool ok = check_confidence(rel).all_pass() && check_preadditivity(rel).pass &&
                check_COM(rel).pass;
      if (!ok)
        rep.counterexamples.push_back(json{{"kind", "big_stepped_profile"}, {"n", m}});
    }
  }

  // Negative control: a preadditive weak order failing COM is excluded and
  // not representable.
  {
    StateSpace space = letter_space(3);
    ProbabilityDistribution control(space,
                                    {Rational(2, 5), Rational(3, 10), Rational(3, 10)});
    EventRelation rel = induce_probability(control);
    bool com = check_COM(rel).pass;
    RepresentResult res = represent_big_stepped(rel);
    rep.extra["negative_control_com"] = com;
    rep.extra["negative_control_representable"] =
        res.status == RepresentResult::Status::Represented;
    if (com || res.status == RepresentResult::Status::Represented)
      rep.counterexamples.push_back(json{{"kind", "negative_control_vacuous"}});
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport verify_props(int n, std::uint64_t seed) {
  auto t0 = Clock::now();
  TheoremReport rep;
  rep.theorem = "props";
  rep.seed = seed;
  rep.search_space = "state weak orders to n=" + std::to_string(std::min(n, 4)) +
                     ", lexicographic structures to n=6";
  std::uint64_t drowning_witnesses = 0;

  for (int m = 1; m <= std::min(n, 4); ++m) {
    StateSpace space = letter_space(m);
    const std::uint32_t side = 1u << m;
    for (const StateWeakOrder& o : enumerate_state_orders(m)) {
      ++rep.instances;
      PossibilityDistribution pi(space, o.levels);
      EventRelation poss = induce_possibility(pi);
      EventRelation nec = induce_necessity(pi);
      EventRelation disc = induce_discrimax(pi);
      ProbabilityDistribution p = big_stepped_from_order(o, space);
      EventRelation prob = induce_probability(p);

      auto counter = [&](const char* kind) {
        rep.counterexamples.push_back(json{{"kind", kind}, {"n", m}, {"order", order_str(o)}});
      };

      // Prop. 1: strict monotonicity and the subset ordering, on every
      // monotonic confidence relation in the corpus.
      for (const EventRelation* rel : {&poss, &nec, &disc, &prob}) {
        bool ok = check_confidence(*rel).all_pass();
        for (std::uint32_t a = 0; a < side && ok; ++a)
          for (std::uint32_t b = 0; b < side && ok; ++b) {
            if ((a & b) == b && a != b && !rel->geq_index(a, b)) ok = false;
            bool sab = rel->geq_index(a, b) && !rel->geq_index(b, a);
            if (!sab) continue;
            for (std::uint32_t c = 0; c < side; ++c) {
              bool s1 = rel->geq_index(a | c, b) && !rel->geq_index(b, a | c);
              if (!s1) { ok = false; break; }
            }
          }
        if (!ok) { counter("prop1"); break; }
      }

      // Prop. 2: NEG and CLO on pairwise disjoint triples of the discrimax
      // relation.
      {
        bool ok = true;
        for (std::uint32_t a = 0; a < side && ok; ++a)
          for (std::uint32_t b = 0; b < side && ok; ++b) {
            if (a & b) continue;
            for (std::uint32_t c = 0; c < side; ++c) {
              if ((a & c) || (b & c)) continue;
              bool sab = disc.geq_index(a, b) && !disc.geq_index(b, a);
              bool sac = disc.geq_index(a, c) && !disc.geq_index(c, a);
              bool eab = disc.geq_index(a, b) && disc.geq_index(b, a);
              bool ebc_u = disc.geq_index(a, b | c) && !disc.geq_index(b | c, a);
              if (sab && sac && !ebc_u) { ok = false; break; }
              if (eab && disc.geq_index(a, c) &&
                  !(disc.geq_index(a, b | c) && disc.geq_index(b | c, a))) {
                ok = false;
                break;
              }
            }
          }
        if (!ok) counter("prop2");
      }

      // Prop. 3: discrimax refines possibility and necessity, and coincides
      // with possibility on disjoint pairs.
      {
        bool ok = true;
        for (std::uint32_t a = 0; a < side && ok; ++a)
          for (std::uint32_t b = 0; b < side; ++b) {
            bool sp = poss.geq_index(a, b) && !poss.geq_index(b, a);
            bool sn = nec.geq_index(a, b) && !nec.geq_index(b, a);
            bool sd = disc.geq_index(a, b) && !disc.geq_index(b, a);
            if ((sp || sn) && !sd) { ok = false; break; }
            if (!(a & b) && disc.geq_index(a, b) != poss.geq_index(a, b)) { ok = false; break; }
            if (sd && poss.geq_index(a, b) && poss.geq_index(b, a)) ++drowning_witnesses;
          }
        if (!ok) counter("prop3");
      }

      // Prop. 4: the big-stepped probability refines discrimax.
      // Prop. 5: and possibility (via the ordinally equivalent levels).
      {
        bool ok4 = true, ok5 = true;
        EventRelation poss5 = induce_possibility(possibility_from_prob(p));
        for (std::uint32_t a = 0; a < side; ++a)
          for (std::uint32_t b = 0; b < side; ++b) {
            bool sd = disc.geq_index(a, b) && !disc.geq_index(b, a);
            bool sp5 = poss5.geq_index(a, b) && !poss5.geq_index(b, a);
            bool spr = prob.geq_index(a, b) && !prob.geq_index(b, a);
            if (sd && !spr) ok4 = false;
            if (sp5 && !spr) ok5 = false;
          }
        if (!ok4) counter("prop4");
        if (!ok5) counter("prop5");
      }

      // Prop. 6: every relation in the corpus induces a valid basic relation.
      for (const EventRelation* rel : {&poss, &nec, &disc, &prob}) {
        try {
          basic_from_relation(*rel);
        } catch (const Error&) {
          counter("prop6");
          break;
        }
      }
    }
  }

  // COM_P over lexicographic structures: every scaled lexicographic
  // probability satisfies COM_P for its own partition, and its block masses
  // are linearly big-stepped.
  {
    Rng rng(seed);
    std::uint64_t structures = 0;
    for (int m = 2; m <= 6; ++m) {
      StateSpace space = letter_space(m);
      for_each_ordered_set_partition(m, [&](const std::vector<std::uint32_t>& blocks) {
        std::vector<Event> evs;
        for (std::uint32_t b : blocks) evs.push_back(Event::of_bits(b, m));
        Partition part(space, evs);
        for (int variant = 0; variant < 2; ++variant) {
          std::vector<Rational> w(m, Rational(1));
          if (variant == 1)
            for (int s = 0; s < m; ++s) w[s] = Rational(rng.uniform(1, 5));
          ++structures;
          ++rep.instances;
          ProbabilityDistribution p = lexico_scale(part, w);
          EventRelation rel = induce_probability(p);
          if (!check_COM_P(rel, part).pass)
            rep.counterexamples.push_back(json{{"kind", "com_p"}, {"n", m}});
          // Block masses strictly dominate all later blocks.
          Rational below;
          for (int b = part.block_count() - 1; b >= 0; --b) {
            Rational mass = p.of(part.blocks()[b]);
            if (!(mass > below)) {
              rep.counterexamples.push_back(json{{"kind", "block_masses_not_big_stepped"},
                                                 {"n", m}});
              break;
            }
            below += mass;
          }
        }
      });
    }
    rep.extra["lexicographic_structures"] = structures;
  }

  // Experimental, never a gate: the end-of-lifting conjecture for incomplete
  // basic relations, sampled.
  {
    Rng rng(seed + 1);
    int sampled = 0, om_ok = 0;
    StateSpace space = letter_space(3);
    for (int i = 0; i < 50; ++i) {
      BasicRelation basic = random_basic(3, rng);
      int x = rng.uniform(0, 2), y = rng.uniform(0, 2);
      if (x != y) {
        basic.set_geq(x, y, false);
        basic.set_geq(y, x, false);
      }
      if (basic.validate()) continue;
      ++sampled;
      if (check_OM(simply_generate(basic, space)).pass) ++om_ok;
    }
    rep.extra["incomplete_basic_conjecture"] =
        json{{"sampled", sampled}, {"simply_generated_om", om_ok}};
  }

  rep.extra["drowning_witnesses"] = drowning_witnesses;
  if (drowning_witnesses == 0)
    rep.counterexamples.push_back(json{{"kind", "prop3_vacuous"}});
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremReport run_theorem(const std::string& which, int n, const std::string& mode,
                          int samples, std::uint64_t seed) {
  bool sampled = mode == "sampled";
  if (which == "1") return verify_theorem_1(n);
  if (which == "2") return verify_theorem_2(n, samples, seed);
  if (which == "3") return verify_theorem_3(n);
  if (which == "4") return verify_theorem_4(n);
  if (which == "5") return verify_theorem_5(n);
  if (which == "6") return verify_theorem_6(n, sampled, samples, seed);
  if (which == "props") return verify_props(n, seed);
  throw Error(Errc::InvalidArgument, "unknown theorem '" + which + "'");
}

// ---------------------------------------------------------------------------
// Generators.

ProbabilityDistribution random_probability(const StateSpace& space, Rng& rng) {
  const int n = space.n();
  for (;;) {
    std::vector<long long> w(n);
    long long total = 0;
    for (int s = 0; s < n; ++s) {
      w[s] = rng.uniform(0, 20);
      total += w[s];
    }
    if (total == 0) continue;
    std::vector<Rational> weights;
    for (int s = 0; s < n; ++s) weights.emplace_back(w[s], total);
    return ProbabilityDistribution(space, std::move(weights));
  }
}

ProbabilityDistribution random_big_stepped(const StateSpace& space, Rng& rng) {
  const int n = space.n();
  for (;;) {
    std::vector<int> raw(n);
    for (int s = 0; s < n; ++s) raw[s] = rng.uniform(1, n);
    StateWeakOrder order = StateWeakOrder::from_levels(raw);
    // Random class values with the big-stepped margin built in: each class
    // value exceeds the total weight strictly below it.
    std::map<int, long long> count;
    for (int l : order.levels) ++count[l];
    std::map<int, long long> value;
    long long below = 0;
    for (auto& [level, cnt] : count) {
      value[level] = below + rng.uniform(1, 9);
      below += cnt * value[level];
    }
    std::vector<Rational> weights;
    for (int l : order.levels) weights.emplace_back(value[l], below);
    ProbabilityDistribution p(space, std::move(weights));
    if (check_big_stepped(p).pass) return p;  // construction guarantees; verify anyway
  }
}

BasicRelation random_basic(int n, Rng& rng) {
  for (;;) {
    BasicRelation basic(n);
    std::vector<int> level(n);
    for (int s = 0; s < n; ++s) level[s] = rng.uniform(0, 3);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) basic.set_geq(s, t, level[s] >= level[t]);
      basic.set_geq(s, basic.bottom(), true);
      basic.set_geq(basic.bottom(), s, level[s] == 0);
    }
    // A few random ties keep the stream from being purely transitive.
    int ties = rng.uniform(0, n);
    for (int i = 0; i < ties; ++i) {
      int x = rng.uniform(0, n - 1), y = rng.uniform(0, n - 1);
      BasicRelation saved = basic;
      basic.set_geq(x, y, true);
      basic.set_geq(y, x, true);
      if (basic.validate()) basic = saved;
    }
    if (!basic.validate()) return basic;
  }
}

}  // namespace omconf
