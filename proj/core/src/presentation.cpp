#include "fpres/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace fpres {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::monoid: return "monoid";
    case Kind::group: return "group";
    case Kind::inverse: return "inverse";
  }
  return "?";
}

Kind kind_from_string(const std::string& s, int line) {
  if (s == "monoid") return Kind::monoid;
  if (s == "group") return Kind::group;
  if (s == "inverse") return Kind::inverse;
  throw ParseError(line, "unknown kind '" + s + "'");
}

namespace {

void check_word(const Word& w, const Presentation& p, int line) {
  const Alphabet a(p.generators);
  for (const Symbol& s : w.syms) {
    if (!a.contains(s.name)) throw ParseError(line, "unknown generator '" + s.name + "'");
    if (p.kind == Kind::monoid && s.sign < 0)
      throw ParseError(line, "negative symbol '" + to_string(s) +
                                 "' in monoid-kind relation");
  }
}

void check_generator_name(const std::string& name, int line) {
  if (name.empty()) throw ParseError(line, "empty generator name");
  if (name == "1") throw ParseError(line, "'1' is reserved for the empty word");
  if (name == "eps") throw ParseError(line, "'eps' is reserved for automata epsilons");
  if (name.find('^') != std::string::npos ||
      name.find_first_of(" \t\r\n") != std::string::npos)
    throw ParseError(line, "generator name '" + name + "' contains '^' or whitespace");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

void validate(const Presentation& p) {
  Alphabet a(p.generators);  // rejects duplicates
  for (const std::string& g : p.generators) check_generator_name(g, 0);
  for (const auto& [lhs, rhs] : p.relations) {
    check_word(lhs, p, 0);
    check_word(rhs, p, 0);
  }
}

bool is_special(const Presentation& p) {
  return std::all_of(p.relations.begin(), p.relations.end(),
                     [](const auto& r) { return r.second.empty(); });
}

bool is_positive(const Presentation& p) {
  return std::all_of(p.relations.begin(), p.relations.end(), [](const auto& r) {
    return r.first.positive() && r.second.positive();
  });
}

std::vector<FormatLine> format_lines(const std::string& text) {
  std::vector<FormatLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(number, "malformed line (expected 'key: value'): " + line);
    out.push_back(FormatLine{number, trim(line.substr(0, colon)), trim(line.substr(colon + 1))});
  }
  return out;
}

std::vector<std::string> parse_generator_list(const FormatLine& line) {
  std::istringstream in(line.value);
  std::vector<std::string> gens;
  for (std::string tok; in >> tok;) {
    check_generator_name(tok, line.number);
    gens.push_back(tok);
  }
  return gens;
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_kind = false, have_gens = false;
  for (const FormatLine& line : format_lines(text)) {
    if (line.key == "kind") {
      if (have_kind) throw ParseError(line.number, "duplicate kind line");
      p.kind = kind_from_string(line.value, line.number);
      have_kind = true;
    } else if (line.key == "gens") {
      if (!have_kind) throw ParseError(line.number, "gens before kind");
      if (have_gens) throw ParseError(line.number, "duplicate gens line");
      p.generators = parse_generator_list(line);
      have_gens = true;
    } else if (line.key == "rel") {
      if (!have_gens) throw ParseError(line.number, "rel before gens");
      auto eq = line.value.find('=');
      if (eq == std::string::npos)
        throw ParseError(line.number, "malformed relation (missing '='): " + line.value);
      Word lhs = parse_word(line.value.substr(0, eq), line.number);
      Word rhs = parse_word(line.value.substr(eq + 1), line.number);
      check_word(lhs, p, line.number);
      check_word(rhs, p, line.number);
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
    } else {
      throw ParseError(line.number, "malformed line (unknown key '" + line.key + "')");
    }
  }
  if (!have_kind) throw ParseError(0, "missing kind line");
  if (!have_gens) throw ParseError(0, "missing gens line");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "kind: " + to_string(p.kind) + "\n";
  out += "gens:";
  for (const std::string& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& [lhs, rhs] : p.relations)
    out += "rel: " + to_string(lhs) + " = " + to_string(rhs) + "\n";
  return out;
}

}  // namespace fpres
