#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omconf/rational.hpp"

namespace omconf {

enum class Errc {
  SpaceMismatch,
  SizeCapExceeded,
  InvalidArgument,
  UnknownState,
  WeightsNotNormalized,
  BadPartition,
  DuplicateAssignment,
  ParseError,
  RankUndefined,
  NonTrivialityViolated,
  ConsistencyViolated,
  QuasiTransitivityViolated,
  ReflexivityViolated,
  InternalInvariant,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// Size caps. OMCONF_MAX_N may lower (never raise) them.
int env_cap();
int space_cap();        // states in a StateSpace (24)
int matrix_cap();       // full 2^n x 2^n relation matrices (12)
int pair_scan_cap();    // pairwise checks over the powerset (12)
int triple_scan_cap();  // triple scans over the powerset (8)
void require_cap(int n, int cap, const char* what);

// A subset of the state space as a fixed-width bit vector. Bit i corresponds
// to state index i; the canonical index of an event is its bit pattern.
struct Event {
  std::uint32_t bits = 0;
  int width = 0;

  static Event empty(int n) { return Event{0u, n}; }
  static Event full(int n) { return Event{n >= 32 ? ~0u : ((1u << n) - 1u), n}; }
  static Event of_bits(std::uint32_t b, int n);

  std::uint32_t index() const { return bits; }
  bool contains(int i) const { return (bits >> i) & 1u; }
  bool is_empty() const { return bits == 0; }
  int count() const { return __builtin_popcount(bits); }

  Event complement() const { return Event{~bits & full(width).bits, width}; }
  Event unite(const Event& b) const { check(b); return Event{bits | b.bits, width}; }
  Event intersect(const Event& b) const { check(b); return Event{bits & b.bits, width}; }
  Event minus(const Event& b) const { check(b); return Event{bits & ~b.bits, width}; }
  bool subset_of(const Event& b) const { check(b); return (bits & ~b.bits) == 0; }
  bool disjoint_with(const Event& b) const { check(b); return (bits & b.bits) == 0; }

  friend bool operator==(const Event&, const Event&) = default;

private:
  void check(const Event& b) const {
    if (width != b.width) throw Error(Errc::SpaceMismatch, "events over different spaces");
  }
};

// Ordered list of distinct state labels; fixes the bit layout of every Event.
class StateSpace {
public:
  explicit StateSpace(std::vector<std::string> names);
  int n() const { return (int)names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index_of(const std::string& name) const;  // -1 if absent

  Event event_of(const std::vector<std::string>& members) const;
  std::string event_str(const Event& e) const;  // "{a,b}"

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

private:
  std::vector<std::string> names_;
};

// Convenience: n single-letter states a, b, c, ...
StateSpace letter_space(int n);

// Ordinal level per state. 0 means impossible; only the order of levels is
// meaningful. At least one state must have a positive level (Pi(S) is top).
class PossibilityDistribution {
public:
  PossibilityDistribution(StateSpace space, std::vector<int> levels);
  const StateSpace& space() const { return space_; }
  int level(int state) const { return levels_.at(state); }
  const std::vector<int>& levels() const { return levels_; }

  // Pi(A) = max over members; 0 for the empty event.
  int of(const Event& a) const;

  friend bool operator==(const PossibilityDistribution&, const PossibilityDistribution&) = default;

private:
  StateSpace space_;
  std::vector<int> levels_;
};

// Exact rational weight per state, summing to one.
class ProbabilityDistribution {
public:
  ProbabilityDistribution(StateSpace space, std::vector<Rational> weights);
  const StateSpace& space() const { return space_; }
  const Rational& weight(int state) const { return weights_.at(state); }
  const std::vector<Rational>& weights() const { return weights_; }

  // P(A), exact.
  Rational of(const Event& a) const;

  friend bool operator==(const ProbabilityDistribution&, const ProbabilityDistribution&) = default;

private:
  StateSpace space_;
  std::vector<Rational> weights_;
};

// Ordered blocks of pairwise-disjoint nonempty events covering S,
// most plausible block first.
class Partition {
public:
  Partition(StateSpace space, std::vector<Event> blocks);
  const StateSpace& space() const { return space_; }
  const std::vector<Event>& blocks() const { return blocks_; }
  int block_count() const { return (int)blocks_.size(); }
  int block_of(int state) const { return block_of_.at(state); }  // 0-based

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  StateSpace space_;
  std::vector<Event> blocks_;
  std::vector<int> block_of_;
};

enum class Verdict { StrictGreater, Equivalent, StrictLess, Incomparable };
const char* verdict_name(Verdict v);

struct BasicViolation {
  Errc code;
  int x = -1, y = -1, z = -1;  // element indices; bottom() for the empty set
};

// Reflexive quasi-transitive relation on states plus a bottom element that
// stands for the empty set (index n).
class BasicRelation {
public:
  explicit BasicRelation(int n);
  int n() const { return n_; }
  int bottom() const { return n_; }

  bool geq(int x, int y) const { return geq_[(std::size_t)x * (n_ + 1) + y] != 0; }
  void set_geq(int x, int y, bool v) { geq_[(std::size_t)x * (n_ + 1) + y] = v ? 1 : 0; }
  bool strict(int x, int y) const { return geq(x, y) && !geq(y, x); }
  bool equiv(int x, int y) const { return geq(x, y) && geq(y, x); }
  bool complete() const;

  // nullopt when the relation satisfies the basic-relation axioms.
  std::optional<BasicViolation> validate() const;

  friend bool operator==(const BasicRelation&, const BasicRelation&) = default;

private:
  int n_;
  std::vector<std::uint8_t> geq_;
};

// The at-least-as-confident relation on the full powerset, stored as a square
// boolean matrix indexed by canonical event index. No axiom is assumed at
// construction.
class EventRelation {
public:
  explicit EventRelation(StateSpace space);
  EventRelation(StateSpace space, std::vector<std::uint8_t> geq);

  const StateSpace& space() const { return space_; }
  int n() const { return space_.n(); }
  std::uint32_t side() const { return 1u << space_.n(); }

  bool geq(const Event& a, const Event& b) const { return geq_index(a.index(), b.index()); }
  bool geq_index(std::uint32_t a, std::uint32_t b) const {
    return geq_[(std::size_t)a * side_ + b] != 0;
  }
  void set_geq(const Event& a, const Event& b, bool v) {
    geq_[(std::size_t)a.index() * side_ + b.index()] = v ? 1 : 0;
  }
  void set_geq_index(std::uint32_t a, std::uint32_t b, bool v) {
    geq_[(std::size_t)a * side_ + b] = v ? 1 : 0;
  }

  bool strict(const Event& a, const Event& b) const { return geq(a, b) && !geq(b, a); }
  bool equiv(const Event& a, const Event& b) const { return geq(a, b) && geq(b, a); }
  bool incomparable(const Event& a, const Event& b) const { return !geq(a, b) && !geq(b, a); }
  Verdict query(const Event& a, const Event& b) const;

  Event event(std::uint32_t index) const { return Event::of_bits(index, space_.n()); }
  const std::vector<std::uint8_t>& matrix() const { return geq_; }

  friend bool operator==(const EventRelation&, const EventRelation&) = default;

private:
  StateSpace space_;
  std::uint32_t side_;
  std::vector<std::uint8_t> geq_;
};

}  // namespace omconf
