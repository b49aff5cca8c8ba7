#include "omconf/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace omconf {

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    std::string den = text.substr(slash + 1);
    std::int64_t d = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range '" + text + "'");
  }
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SpaceMismatch: return "SPACE_MISMATCH";
    case Errc::SizeCapExceeded: return "SIZE_CAP_EXCEEDED";
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::UnknownState: return "UNKNOWN_STATE";
    case Errc::WeightsNotNormalized: return "WEIGHTS_NOT_NORMALIZED";
    case Errc::BadPartition: return "BAD_PARTITION";
    case Errc::DuplicateAssignment: return "DUPLICATE_ASSIGNMENT";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::RankUndefined: return "RANK_UNDEFINED";
    case Errc::NonTrivialityViolated: return "NON_TRIVIALITY_VIOLATED";
    case Errc::ConsistencyViolated: return "CONSISTENCY_VIOLATED";
    case Errc::QuasiTransitivityViolated: return "QUASI_TRANSITIVITY_VIOLATED";
    case Errc::ReflexivityViolated: return "REFLEXIVITY_VIOLATED";
    case Errc::InternalInvariant: return "INTERNAL_INVARIANT";
  }
  return "UNKNOWN";
}

int env_cap() {
  const char* v = std::getenv("OMCONF_MAX_N");
  if (!v) return 1 << 30;
  int x = std::atoi(v);
  return x > 0 ? x : 1 << 30;
}

int space_cap() { return std::min(24, env_cap()); }
int matrix_cap() { return std::min(12, env_cap()); }
int pair_scan_cap() { return std::min(12, env_cap()); }
int triple_scan_cap() { return std::min(8, env_cap()); }

void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw Error(Errc::SizeCapExceeded,
                std::string(what) + " limited to n <= " + std::to_string(cap) +
                    ", got n = " + std::to_string(n));
}

Event Event::of_bits(std::uint32_t b, int n) {
  if (n < 0 || n > 31 || (b & ~full(n).bits))
    throw Error(Errc::InvalidArgument, "event bits exceed the space width");
  return Event{b, n};
}

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(Errc::InvalidArgument, "state space needs at least one state");
  require_cap((int)names_.size(), space_cap(), "state space");
  std::set<std::string> seen;
  for (const auto& s : names_) {
    if (s.empty()) throw Error(Errc::InvalidArgument, "empty state label");
    if (!seen.insert(s).second)
      throw Error(Errc::InvalidArgument, "duplicate state label '" + s + "'");
  }
}

int StateSpace::index_of(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Event StateSpace::event_of(const std::vector<std::string>& members) const {
  Event e = Event::empty(n());
  for (const auto& m : members) {
    int i = index_of(m);
    if (i < 0) throw Error(Errc::UnknownState, "unknown state '" + m + "'");
    e.bits |= 1u << i;
  }
  return e;
}

std::string StateSpace::event_str(const Event& e) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n(); ++i)
    if (e.contains(i)) {
      if (!first) out += ",";
      out += names_[i];
      first = false;
    }
  out += "}";
  return out;
}

StateSpace letter_space(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, (char)('a' + i)));
  return StateSpace(std::move(names));
}

PossibilityDistribution::PossibilityDistribution(StateSpace space, std::vector<int> levels)
    : space_(std::move(space)), levels_(std::move(levels)) {
  if ((int)levels_.size() != space_.n())
    throw Error(Errc::InvalidArgument, "one level per state required");
  int top = 0;
  for (int l : levels_) {
    if (l < 0) throw Error(Errc::InvalidArgument, "possibility levels must be >= 0");
    top = std::max(top, l);
  }
  if (top == 0)
    throw Error(Errc::InvalidArgument, "at least one state must have a positive level");
}

int PossibilityDistribution::of(const Event& a) const {
  if (a.width != space_.n()) throw Error(Errc::SpaceMismatch, "event over a different space");
  int m = 0;
  for (int i = 0; i < space_.n(); ++i)
    if (a.contains(i)) m = std::max(m, levels_[i]);
  return m;
}

ProbabilityDistribution::ProbabilityDistribution(StateSpace space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if ((int)weights_.size() != space_.n())
    throw Error(Errc::InvalidArgument, "one weight per state required");
  Rational sum;
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw Error(Errc::InvalidArgument, "negative probability weight");
    sum += w;
  }
  if (sum != Rational(1)) {
    Rational deficit = Rational(1) - sum;
    throw Error(Errc::WeightsNotNormalized,
                "weights sum to " + sum.str() + ", deficit " + deficit.str());
  }
}

Rational ProbabilityDistribution::of(const Event& a) const {
  if (a.width != space_.n()) throw Error(Errc::SpaceMismatch, "event over a different space");
  Rational sum;
  for (int i = 0; i < space_.n(); ++i)
    if (a.contains(i)) sum += weights_[i];
  return sum;
}

Partition::Partition(StateSpace space, std::vector<Event> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)), block_of_(space_.n(), -1) {
  std::uint32_t covered = 0;
  for (int b = 0; b < (int)blocks_.size(); ++b) {
    const Event& e = blocks_[b];
    if (e.width != space_.n()) throw Error(Errc::SpaceMismatch, "block over a different space");
    if (e.is_empty()) throw Error(Errc::BadPartition, "empty block");
    if (covered & e.bits) throw Error(Errc::BadPartition, "overlapping blocks");
    covered |= e.bits;
    for (int i = 0; i < space_.n(); ++i)
      if (e.contains(i)) block_of_[i] = b;
  }
  if (covered != Event::full(space_.n()).bits)
    throw Error(Errc::BadPartition, "blocks do not cover the state space");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::StrictGreater: return "STRICT_GREATER";
    case Verdict::Equivalent: return "EQUIVALENT";
    case Verdict::StrictLess: return "STRICT_LESS";
    case Verdict::Incomparable: return "INCOMPARABLE";
  }
  return "UNKNOWN";
}

BasicRelation::BasicRelation(int n) : n_(n), geq_((std::size_t)(n + 1) * (n + 1), 0) {
  if (n < 1) throw Error(Errc::InvalidArgument, "basic relation needs at least one state");
  for (int i = 0; i <= n; ++i) set_geq(i, i, true);
}

bool BasicRelation::complete() const {
  for (int x = 0; x <= n_; ++x)
    for (int y = 0; y <= n_; ++y)
      if (!geq(x, y) && !geq(y, x)) return false;
  return true;
}

std::optional<BasicViolation> BasicRelation::validate() const {
  const int m = n_ + 1;
  for (int x = 0; x < m; ++x)
    if (!geq(x, x)) return BasicViolation{Errc::ReflexivityViolated, x};
  for (int s = 0; s < n_; ++s)
    if (!geq(s, bottom())) return BasicViolation{Errc::ConsistencyViolated, s, bottom()};
  for (int s = 0; s < n_; ++s)
    if (strict(bottom(), s)) return BasicViolation{Errc::NonTrivialityViolated, bottom(), s};
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (strict(x, y) && strict(y, z) && !strict(x, z))
          return BasicViolation{Errc::QuasiTransitivityViolated, x, y, z};
  return std::nullopt;
}

EventRelation::EventRelation(StateSpace space)
    : space_(std::move(space)), side_(1u << space_.n()) {
  require_cap(space_.n(), matrix_cap(), "full relation matrix");
  geq_.assign((std::size_t)side_ * side_, 0);
}

EventRelation::EventRelation(StateSpace space, std::vector<std::uint8_t> geq)
    : space_(std::move(space)), side_(1u << space_.n()), geq_(std::move(geq)) {
  require_cap(space_.n(), matrix_cap(), "full relation matrix");
  if (geq_.size() != (std::size_t)side_ * side_)
    throw Error(Errc::InvalidArgument, "relation matrix has the wrong size");
}

Verdict EventRelation::query(const Event& a, const Event& b) const {
  bool ab = geq(a, b), ba = geq(b, a);
  if (ab && ba) return Verdict::Equivalent;
  if (ab) return Verdict::StrictGreater;
  if (ba) return Verdict::StrictLess;
  return Verdict::Incomparable;
}

}  // namespace omconf
