// Command-line front end: induce relations from distribution files, check and
// classify relations against the axioms, compare events, construct big-stepped
// and lexicographic probabilities, and run the theorem verification suites.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "omconf/axioms.hpp"
#include "omconf/construct.hpp"
#include "omconf/core.hpp"
#include "omconf/induce.hpp"
#include "omconf/io.hpp"
#include "omconf/verify.hpp"

namespace {

using nlohmann::json;
using namespace omconf;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // axiom violation or counterexample found
constexpr int kExitUsage = 2;  // bad flags or unparsable input

struct Output {
  std::string format = "text";  // or "report"
  std::string out_path;         // empty = stdout

  void emit(const std::string& text, const json& report) const {
    std::string payload = format == "report" ? report.dump(2) + "\n" : text;
    if (out_path.empty())
      std::cout << payload;
    else
      write_file(out_path, payload);
  }
};

json witness_json(const StateSpace& space, const std::vector<Event>& witness) {
  json arr = json::array();
  for (const Event& e : witness)
    arr.push_back(json{{"index", e.index()}, {"set", space.event_str(e)}});
  return arr;
}

json verdict_json(const StateSpace& space, const AxiomVerdict& v) {
  json j{{"axiom", v.axiom}, {"pass", v.pass}};
  if (!v.pass) j["witness"] = witness_json(space, v.witness);
  return j;
}

std::string verdict_text(const StateSpace& space, const AxiomVerdict& v) {
  std::string line = v.axiom + ": " + (v.pass ? "pass" : "FAIL");
  if (!v.pass) {
    line += "  witness:";
    for (const Event& e : v.witness) line += " " + space.event_str(e);
  }
  return line + "\n";
}

CpomReading reading_of(const std::string& s) {
  return s == "strict" ? CpomReading::StrictOnly : CpomReading::Verdict;
}

// Builds the relation named by --kind from a distribution file.
EventRelation induce_kind(const DistributionFile& dist, const std::string& kind) {
  auto need_poss = [&]() -> const PossibilityDistribution& {
    if (!dist.poss) throw Error(Errc::InvalidArgument, "kind needs a poss section");
    return *dist.poss;
  };
  auto need_prob = [&]() -> const ProbabilityDistribution& {
    if (!dist.prob) throw Error(Errc::InvalidArgument, "kind needs a prob section");
    return *dist.prob;
  };
  if (kind == "possibility") return induce_possibility(need_poss());
  if (kind == "necessity") return induce_necessity(need_poss());
  if (kind == "probability") return induce_probability(need_prob());
  if (kind == "discrimax") return induce_discrimax(need_poss());
  if (kind == "leximax")
    return dist.prob ? induce_leximax(*dist.prob) : induce_leximax(need_poss());
  if (kind == "lifted") {
    // Lift the basic relation read off the possibility levels.
    const PossibilityDistribution& pi = need_poss();
    EventRelation poss = induce_possibility(pi);
    return simply_generate(basic_from_relation(poss), pi.space());
  }
  if (kind == "lexicographic") {
    if (!dist.partition)
      throw Error(Errc::InvalidArgument, "kind needs a partition section");
    std::vector<Rational> w(dist.space.n(), Rational(1));
    if (dist.prob) w = dist.prob->weights();
    return induce_lexicographic(*dist.partition, w).second;
  }
  throw Error(Errc::InvalidArgument, "unknown kind '" + kind + "'");
}

// The relation a subcommand operates on: --rel wins, else --dist with --kind.
struct RelationInput {
  std::string rel_path, dist_path, kind;
  std::optional<DistributionFile> dist;  // filled when --dist was used

  EventRelation load() {
    if (!rel_path.empty()) return parse_relation(read_file(rel_path)).rel;
    if (dist_path.empty())
      throw Error(Errc::InvalidArgument, "need --rel or --dist with --kind");
    dist = parse_distribution(read_file(dist_path));
    if (kind.empty()) throw Error(Errc::InvalidArgument, "--dist needs --kind");
    return induce_kind(*dist, kind);
  }
};

std::vector<AxiomVerdict> run_axiom(const EventRelation& rel, const std::string& axiom,
                                    CpomReading reading, const Partition* part) {
  auto com_p = [&]() -> AxiomVerdict {
    if (!part)
      throw Error(Errc::InvalidArgument, "COMP needs a --dist file with a partition");
    return check_COM_P(rel, *part);
  };
  if (axiom == "DEF1") {
    ConfidenceVerdicts c = check_confidence(rel);
    return {c.reflexive, c.non_trivial, c.consistent, c.quasi_transitive, c.monotonic};
  }
  if (axiom == "ADD") return {check_preadditivity(rel)};
  if (axiom == "NEG") return {check_NEG(rel)};
  if (axiom == "CLO") return {check_CLO(rel)};
  if (axiom == "CCS") return {check_CCS(rel)};
  if (axiom == "QUAL") return {check_QUAL(rel)};
  if (axiom == "OM") return {check_OM(rel)};
  if (axiom == "COM") return {check_COM(rel)};
  if (axiom == "CPOM") return {check_CPOM(rel, reading)};
  if (axiom == "COMP") return {com_p()};
  if (axiom == "ALL") {
    std::vector<AxiomVerdict> out = run_axiom(rel, "DEF1", reading, part);
    for (const char* a : {"ADD", "NEG", "CLO", "CCS", "QUAL", "COM", "CPOM"}) {
      try {
        for (AxiomVerdict& v : run_axiom(rel, a, reading, part)) out.push_back(std::move(v));
      } catch (const Error& e) {
        out.push_back(AxiomVerdict{std::string(a) + " (" + e.what() + ")", false, {}});
      }
    }
    out.push_back(check_complete(rel));
    out.push_back(check_transitive(rel));
    if (part) out.push_back(com_p());
    return out;
  }
  throw Error(Errc::InvalidArgument, "unknown axiom '" + axiom + "'");
}

json classification_json(const Classification& c) {
  json j{{"confidence_relation", c.confidence_relation},
         {"complete", c.complete},
         {"transitive", c.transitive},
         {"weak_order", c.weak_order},
         {"preadditive", c.preadditive},
         {"neg", c.neg},
         {"clo", c.clo},
         {"ccs", c.ccs},
         {"qual", c.qual},
         {"om_relation", c.om_relation},
         {"comparative_probability", c.comparative_probability},
         {"comparative_possibility", c.comparative_possibility},
         {"com", c.com},
         {"cpom", c.cpom},
         {"big_stepped_representable", c.big_stepped_representable}};
  if (c.com_p) j["com_p"] = *c.com_p;
  return j;
}

Event event_of_csv(const StateSpace& space, const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return space.event_of(names);
}

int real_main(int argc, char** argv) {
  CLI::App app{"order-of-magnitude confidence relations toolkit"};
  app.require_subcommand(1);

  Output output;
  RelationInput input;
  std::string axiom = "ALL", cpom_reading = "verdict";
  std::string a_str, b_str, order_str, theorem = "6", mode = "exhaustive";
  int n = 3, samples = 1000;
  std::uint64_t seed = 1;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", output.out_path, "output path, stdout if omitted");
    cmd->add_option("--format", output.format, "text or report")
        ->check(CLI::IsMember({"text", "report"}));
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--rel", input.rel_path, "relation file");
    cmd->add_option("--dist", input.dist_path, "distribution file");
    cmd->add_option("--kind", input.kind, "relation to induce from --dist");
  };

  CLI::App* induce = app.add_subcommand("induce", "build a relation from a distribution");
  induce->add_option("--dist", input.dist_path, "distribution file")->required();
  induce->add_option("--kind", input.kind, "formalism")->required();
  add_output(induce);

  CLI::App* check = app.add_subcommand("check", "check axioms, exit 1 on violation");
  add_input(check);
  check->add_option("--axiom", axiom, "axiom or ALL");
  check->add_option("--cpom-reading", cpom_reading, "verdict or strict")
      ->check(CLI::IsMember({"verdict", "strict"}));
  add_output(check);

  CLI::App* classify_cmd = app.add_subcommand("classify", "full axiom profile");
  add_input(classify_cmd);
  classify_cmd->add_option("--cpom-reading", cpom_reading, "verdict or strict")
      ->check(CLI::IsMember({"verdict", "strict"}));
  add_output(classify_cmd);

  CLI::App* compare = app.add_subcommand("compare", "query one event pair");
  add_input(compare);
  compare->add_option("--a", a_str, "first event, comma-separated names")->required();
  compare->add_option("--b", b_str, "second event")->required();
  add_output(compare);

  CLI::App* construct = app.add_subcommand(
      "construct", "build a big-stepped or lexicographic probability");
  construct->add_option("--order", order_str, "state order, e.g. \"a > b = c\"");
  construct->add_option("--dist", input.dist_path,
                        "distribution file with a partition (lexicographic)");
  add_output(construct);
  CLI::App* big = construct->add_subcommand("big-stepped", "from --order");
  CLI::App* lexico = construct->add_subcommand("lexicographic", "from --dist partition");
  big->fallthrough();
  lexico->fallthrough();

  CLI::App* verify = app.add_subcommand("verify", "run a theorem suite");
  verify->add_option("--theorem", theorem, "1..6 or props")
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "props"}));
  verify->add_option("--n", n, "state count");
  verify->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--samples", samples, "sample count in sampled mode");
  verify->add_option("--seed", seed, "generator seed");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;  // --help exits cleanly
  }

  if (induce->parsed()) {
    DistributionFile dist = parse_distribution(read_file(input.dist_path));
    EventRelation rel = induce_kind(dist, input.kind);
    RelationFile rf{dist.space, rel};
    std::string text = render_relation(rf);
    output.emit(text, json{{"command", "induce"},
                           {"inputs", {{"dist", input.dist_path}, {"kind", input.kind}}},
                           {"relation", text}});
    return kExitPass;
  }

  if (check->parsed() || classify_cmd->parsed()) {
    EventRelation rel = input.load();
    const Partition* part =
        input.dist && input.dist->partition ? &*input.dist->partition : nullptr;
    if (classify_cmd->parsed()) {
      Classification c = classify(rel, part, reading_of(cpom_reading));
      json j = classification_json(c);
      std::string text;
      for (auto& [key, value] : j.items())
        text += key + ": " + (value.get<bool>() ? "yes" : "no") + "\n";
      output.emit(text, json{{"command", "classify"},
                             {"inputs", {{"rel", input.rel_path}, {"dist", input.dist_path}}},
                             {"classification", j}});
      return kExitPass;
    }
    std::vector<AxiomVerdict> verdicts =
        run_axiom(rel, axiom, reading_of(cpom_reading), part);
    bool all = true;
    std::string text;
    json jv = json::array();
    for (const AxiomVerdict& v : verdicts) {
      all = all && v.pass;
      text += verdict_text(rel.space(), v);
      jv.push_back(verdict_json(rel.space(), v));
    }
    output.emit(text, json{{"command", "check"},
                           {"inputs",
                            {{"rel", input.rel_path},
                             {"dist", input.dist_path},
                             {"axiom", axiom},
                             {"cpom_reading", cpom_reading}}},
                           {"verdicts", jv}});
    return all ? kExitPass : kExitFail;
  }

  if (compare->parsed()) {
    EventRelation rel = input.load();
    Event a = event_of_csv(rel.space(), a_str);
    Event b = event_of_csv(rel.space(), b_str);
    Verdict v = rel.query(a, b);
    std::string text = rel.space().event_str(a) + " " + verdict_name(v) + " " +
                       rel.space().event_str(b) + "\n";
    output.emit(text, json{{"command", "compare"},
                           {"inputs", {{"a", a_str}, {"b", b_str}}},
                           {"verdict", verdict_name(v)}});
    return kExitPass;
  }

  if (construct->parsed()) {
    DistributionFile out_file{letter_space(1), std::nullopt, std::nullopt, std::nullopt};
    if (big->parsed() || (!lexico->parsed() && !order_str.empty())) {
      if (order_str.empty()) throw Error(Errc::InvalidArgument, "big-stepped needs --order");
      ParsedOrder parsed = parse_order(order_str);
      ProbabilityDistribution p = big_stepped_from_order(parsed.order, parsed.space);
      out_file = DistributionFile{parsed.space, std::nullopt, p, std::nullopt};
    } else {
      if (input.dist_path.empty())
        throw Error(Errc::InvalidArgument, "lexicographic needs --dist with a partition");
      DistributionFile dist = parse_distribution(read_file(input.dist_path));
      if (!dist.partition)
        throw Error(Errc::InvalidArgument, "lexicographic needs a partition section");
      std::vector<Rational> w(dist.space.n(), Rational(1));
      if (dist.prob) w = dist.prob->weights();
      ProbabilityDistribution p = lexico_scale(*dist.partition, w);
      out_file = DistributionFile{dist.space, std::nullopt, p, dist.partition};
    }
    std::string text = render_distribution(out_file);
    output.emit(text, json{{"command", "construct"},
                           {"inputs", {{"order", order_str}, {"dist", input.dist_path}}},
                           {"distribution", text}});
    return kExitPass;
  }

  if (verify->parsed()) {
    TheoremReport rep = run_theorem(theorem, n, mode, samples, seed);
    json j = rep.to_json();
    j["command"] = "verify";
    j["inputs"] = json{{"theorem", theorem}, {"n", n}, {"mode", mode}, {"samples", samples}};
    output.emit(rep.text(), j);
    return rep.pass() ? kExitPass : kExitFail;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return real_main(argc, argv);
  } catch (const omconf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
