#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "omconf/construct.hpp"
#include "omconf/core.hpp"

namespace omconf {

// Machine-readable outcome of one theorem suite. Elapsed time is kept for
// human display only and never serialized, so identical invocations produce
// byte-identical reports.
struct TheoremReport {
  std::string theorem;
  std::string search_space;
  std::uint64_t instances = 0;
  std::vector<nlohmann::json> counterexamples;
  std::optional<std::uint64_t> seed;
  long long elapsed_ms = 0;
  nlohmann::json extra;

  bool pass() const { return counterexamples.empty(); }
  nlohmann::json to_json() const;
  std::string text() const;
};

// Ordered set partitions ("weak orders") of k distinguishable elements.
// a(k) = sum_j C(k,j) a(k-j): 13 at k=3, 75 at k=4, 545835 at k=8.
std::uint64_t ordered_set_partition_count(int k);
void for_each_ordered_set_partition(
    int k, const std::function<void(const std::vector<std::uint32_t>&)>& fn);

// Every plausibility weak order on n states, yielded once, deterministically.
void for_each_state_order(int n, const std::function<void(const StateWeakOrder&)>& fn);
std::vector<StateWeakOrder> enumerate_state_orders(int n);  // n <= 8

// Every complete transitive relation on the powerset, as a level per event
// index (higher = more confident). n <= 3.
void for_each_event_weak_order(int n, const std::function<void(const std::vector<int>&)>& fn);
EventRelation relation_from_event_levels(const StateSpace& space,
                                         const std::vector<int>& levels);

// Theorem-1 singleton structure predicates and the taxonomy key reported for
// every qualifying comparative probability.
std::string singleton_pattern(const EventRelation& rel);
bool structure_clo_ok(const EventRelation& rel);
bool structure_neg_ok(const EventRelation& rel);

// Pruned backtracking over complete monotonic relations consistent with a
// basic relation; returns the matrices of those passing the OM axioms, up to
// `limit` of them.
std::vector<std::vector<std::uint8_t>> om_relations_consistent_with(
    const BasicRelation& basic, const StateSpace& space, int limit);

// Pairs on which the leximax relation of p and the probability relation of p
// disagree (empty exactly when they coincide).
std::vector<std::pair<Event, Event>> leximax_prob_disagreements(
    const ProbabilityDistribution& p);

TheoremReport verify_theorem_1(int n);
TheoremReport verify_theorem_2(int n, int samples, std::uint64_t seed);
TheoremReport verify_theorem_3(int n);
TheoremReport verify_theorem_4(int n);
TheoremReport verify_theorem_5(int n);
TheoremReport verify_theorem_6(int n, bool sampled, int samples, std::uint64_t seed);
TheoremReport verify_props(int n, std::uint64_t seed);

// Dispatch by CLI name: "1".."6" or "props".
TheoremReport run_theorem(const std::string& which, int n, const std::string& mode,
                          int samples, std::uint64_t seed);

// Deterministic generator streams.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return lo + (int)(eng_() % (std::uint64_t)(hi - lo + 1)); }
  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

ProbabilityDistribution random_probability(const StateSpace& space, Rng& rng);
ProbabilityDistribution random_big_stepped(const StateSpace& space, Rng& rng);
BasicRelation random_basic(int n, Rng& rng);

}  // namespace omconf
