#pragma once

#include <optional>
#include <string>

#include "omconf/construct.hpp"
#include "omconf/core.hpp"

namespace omconf {

// Parsed distribution file: a state space plus whichever sections were
// present. Line format, '#' starts a comment:
//   states a b c
//   poss a=3 b=2 c=1
//   prob a=1/2 b=3/10 c=1/5
//   partition a | b c
struct DistributionFile {
  StateSpace space;
  std::optional<PossibilityDistribution> poss;
  std::optional<ProbabilityDistribution> prob;
  std::optional<Partition> partition;

  friend bool operator==(const DistributionFile&, const DistributionFile&) = default;
};

DistributionFile parse_distribution(const std::string& text);
std::string render_distribution(const DistributionFile& f);

// Relation file: plain-text envelope, bit-exact and diffable.
//   n 2
//   states a b
//   geq 1000
//   ... one row per event, canonical index order, column = B's index
struct RelationFile {
  StateSpace space;
  EventRelation rel;

  friend bool operator==(const RelationFile&, const RelationFile&) = default;
};

RelationFile parse_relation(const std::string& text);
std::string render_relation(const RelationFile& f);

// "a > b = c > d", whitespace-insensitive. Returns the states in order of
// appearance together with their plausibility levels.
struct ParsedOrder {
  StateSpace space;
  StateWeakOrder order;
};
ParsedOrder parse_order(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace omconf
