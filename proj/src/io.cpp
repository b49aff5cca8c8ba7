#include "omconf/io.hpp"

#include <fstream>
#include <sstream>

namespace omconf {

namespace {

Error at_line(Errc code, int line, const std::string& msg) {
  return Error(code, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

// "name=value"; the value substring is returned untouched.
std::pair<std::string, std::string> split_assignment(const std::string& tok, int line) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
    throw at_line(Errc::ParseError, line, "expected name=value, got '" + tok + "'");
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

int state_index(const StateSpace& space, const std::string& name, int line) {
  int i = space.index_of(name);
  if (i < 0) throw at_line(Errc::UnknownState, line, "unknown state '" + name + "'");
  return i;
}

}  // namespace

DistributionFile parse_distribution(const std::string& text) {
  std::optional<StateSpace> space;
  std::optional<std::vector<int>> levels;
  std::optional<std::vector<Rational>> weights;
  std::optional<std::vector<Event>> blocks;
  int prob_line = 0, part_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<std::string> tok = tokens_of(raw);
    if (tok.empty()) continue;
    const std::string& head = tok[0];

    if (head == "states") {
      if (space) throw at_line(Errc::ParseError, line, "duplicate states line");
      if (tok.size() < 2) throw at_line(Errc::ParseError, line, "states line needs names");
      try {
        space.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const Error& e) {
        throw at_line(Errc::ParseError, line, e.what());
      }
      continue;
    }
    if (!space) throw at_line(Errc::ParseError, line, "states line must come first");

    if (head == "poss" || head == "prob") {
      bool is_poss = head == "poss";
      if ((is_poss && levels) || (!is_poss && weights))
        throw at_line(Errc::ParseError, line, "duplicate " + head + " line");
      std::vector<bool> seen(space->n(), false);
      std::vector<int> lv(space->n(), 0);
      std::vector<Rational> wt(space->n());
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto [name, value] = split_assignment(tok[i], line);
        int s = state_index(*space, name, line);
        if (seen[s])
          throw at_line(Errc::DuplicateAssignment, line, "state '" + name + "' assigned twice");
        seen[s] = true;
        try {
          if (is_poss)
            lv[s] = std::stoi(value);
          else
            wt[s] = Rational::parse(value);
        } catch (const std::exception&) {
          throw at_line(Errc::ParseError, line, "bad value '" + value + "'");
        }
        if (is_poss && lv[s] < 0)
          throw at_line(Errc::ParseError, line, "negative level '" + value + "'");
      }
      if (is_poss)
        levels = std::move(lv);
      else {
        weights = std::move(wt);
        prob_line = line;
      }
      continue;
    }

    if (head == "partition") {
      if (blocks) throw at_line(Errc::ParseError, line, "duplicate partition line");
      blocks.emplace();
      std::vector<std::string> members;
      auto flush = [&] {
        if (members.empty())
          throw at_line(Errc::BadPartition, line, "empty partition block");
        blocks->push_back(space->event_of(members));
        members.clear();
      };
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == "|")
          flush();
        else {
          state_index(*space, tok[i], line);
          members.push_back(tok[i]);
        }
      }
      flush();
      part_line = line;
      continue;
    }

    throw at_line(Errc::ParseError, line, "unknown directive '" + head + "'");
  }

  if (!space) throw Error(Errc::ParseError, "no states line");
  DistributionFile out{*space, std::nullopt, std::nullopt, std::nullopt};
  if (levels) out.poss.emplace(*space, std::move(*levels));
  if (weights) {
    try {
      out.prob.emplace(*space, std::move(*weights));
    } catch (const Error& e) {
      throw at_line(e.code(), prob_line, e.what());
    }
  }
  if (blocks) {
    try {
      out.partition.emplace(*space, std::move(*blocks));
    } catch (const Error& e) {
      throw at_line(e.code(), part_line, e.what());
    }
  }
  return out;
}

std::string render_distribution(const DistributionFile& f) {
  std::string out = "states";
  for (const std::string& name : f.space.names()) out += " " + name;
  out += "\n";
  if (f.poss) {
    out += "poss";
    for (int s = 0; s < f.space.n(); ++s)
      out += " " + f.space.name(s) + "=" + std::to_string(f.poss->level(s));
    out += "\n";
  }
  if (f.prob) {
    out += "prob";
    for (int s = 0; s < f.space.n(); ++s)
      out += " " + f.space.name(s) + "=" + f.prob->weight(s).str();
    out += "\n";
  }
  if (f.partition) {
    out += "partition";
    for (int b = 0; b < f.partition->block_count(); ++b) {
      if (b) out += " |";
      const Event& block = f.partition->blocks()[b];
      for (int s = 0; s < f.space.n(); ++s)
        if (block.contains(s)) out += " " + f.space.name(s);
    }
    out += "\n";
  }
  return out;
}

RelationFile parse_relation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  int n = -1;
  std::optional<StateSpace> space;
  std::vector<std::string> rows;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<std::string> tok = tokens_of(raw);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (tok.size() != 2) throw at_line(Errc::ParseError, line, "n line needs one value");
      try {
        n = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw at_line(Errc::ParseError, line, "bad n '" + tok[1] + "'");
      }
    } else if (tok[0] == "states") {
      try {
        space.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const Error& e) {
        throw at_line(Errc::ParseError, line, e.what());
      }
    } else if (tok[0] == "geq") {
      if (tok.size() != 2) throw at_line(Errc::ParseError, line, "geq line needs one row");
      rows.push_back(tok[1]);
    } else {
      throw at_line(Errc::ParseError, line, "unknown directive '" + tok[0] + "'");
    }
  }
  if (n < 0 || !space) throw Error(Errc::ParseError, "relation file needs n and states");
  if (space->n() != n) throw Error(Errc::ParseError, "states count differs from n");
  require_cap(n, matrix_cap(), "full relation matrix");
  const std::uint32_t side = 1u << n;
  if (rows.size() != side)
    throw Error(Errc::ParseError, "expected " + std::to_string(side) + " geq rows, got " +
                                      std::to_string(rows.size()));
  std::vector<std::uint8_t> geq((std::size_t)side * side, 0);
  for (std::uint32_t a = 0; a < side; ++a) {
    if (rows[a].size() != side)
      throw Error(Errc::ParseError, "row " + std::to_string(a) + " has wrong length");
    for (std::uint32_t b = 0; b < side; ++b) {
      char c = rows[a][b];
      if (c != '0' && c != '1')
        throw Error(Errc::ParseError, "row " + std::to_string(a) + " has non-binary cell");
      geq[(std::size_t)a * side + b] = c == '1';
    }
  }
  return RelationFile{*space, EventRelation(*space, std::move(geq))};
}

std::string render_relation(const RelationFile& f) {
  std::string out = "n " + std::to_string(f.space.n()) + "\nstates";
  for (const std::string& name : f.space.names()) out += " " + name;
  out += "\n";
  const std::uint32_t side = f.rel.side();
  for (std::uint32_t a = 0; a < side; ++a) {
    out += "geq ";
    for (std::uint32_t b = 0; b < side; ++b) out += f.rel.geq_index(a, b) ? '1' : '0';
    out += "\n";
  }
  return out;
}

ParsedOrder parse_order(const std::string& text) {
  // Pad the separators so "a>b=c" and "a > b = c" tokenize the same way.
  std::string padded;
  for (char c : text) {
    if (c == '>' || c == '=') {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  std::istringstream in(padded);
  std::vector<std::string> names;
  std::vector<int> group;  // group index per state, 0 = most plausible
  std::string tok;
  int g = 0;
  bool expect_name = true;
  while (in >> tok) {
    if (tok == ">" || tok == "=") {
      if (expect_name) throw Error(Errc::ParseError, "misplaced '" + tok + "' in order");
      if (tok == ">") ++g;
      expect_name = true;
    } else {
      if (!expect_name)
        throw Error(Errc::ParseError, "missing '>' or '=' before '" + tok + "'");
      names.push_back(tok);
      group.push_back(g);
      expect_name = false;
    }
  }
  if (names.empty() || expect_name) throw Error(Errc::ParseError, "incomplete order string");
  StateSpace space{names};
  std::vector<int> levels(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) levels[i] = g + 1 - group[i];
  return ParsedOrder{std::move(space), StateWeakOrder{std::move(levels)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

}  // namespace omconf
