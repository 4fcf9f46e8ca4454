#include "fpres/word.hpp"

#include <algorithm>
#include <sstream>

namespace fpres {

bool Word::positive() const {
  return std::all_of(syms.begin(), syms.end(), [](const Symbol& s) { return s.sign > 0; });
}

Word& Word::operator*=(const Word& rhs) {
  syms.insert(syms.end(), rhs.syms.begin(), rhs.syms.end());
  return *this;
}

Word& Word::operator*=(const Symbol& s) {
  syms.push_back(s);
  return *this;
}

Word Word::factor(std::size_t from, std::size_t len) const {
  const auto first = syms.begin() + static_cast<std::ptrdiff_t>(from);
  return Word(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(len)));
}

Word operator*(Word lhs, const Word& rhs) {
  lhs *= rhs;
  return lhs;
}

Word operator*(Word lhs, const Symbol& rhs) {
  lhs *= rhs;
  return lhs;
}

Word pow(const Word& w, int k) {
  const Word base = k < 0 ? invert_word(w) : w;
  Word out;
  for (int i = 0, n = k < 0 ? -k : k; i < n; ++i) out *= base;
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.syms.reserve(w.size());
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it)
    out.syms.push_back(Symbol{it->name, -it->sign});
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.syms.reserve(w.size());
  for (const Symbol& s : w.syms) {
    if (!out.syms.empty() && out.syms.back().name == s.name &&
        out.syms.back().sign == -s.sign) {
      out.syms.pop_back();
    } else {
      out.syms.push_back(s);
    }
  }
  return out;
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  Word acc;
  for (const Symbol& s : w.syms) {
    acc *= s;
    out.push_back(acc);
  }
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.syms.begin(), p.syms.end(), w.syms.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() &&
         std::equal(s.syms.rbegin(), s.syms.rend(), w.syms.rbegin());
}

std::vector<Word> self_overlaps(const Word& w) {
  if (!w.positive()) throw std::invalid_argument("self_overlaps: word must be positive");
  std::vector<Word> out;
  for (std::size_t len = 1; len + 1 <= w.size(); ++len) {
    Word p = w.factor(0, len);
    if (is_suffix(p, w)) out.push_back(std::move(p));
  }
  return out;
}

OverlapReport overlap_report(const std::vector<Word>& ws) {
  std::vector<Word> words = ws;
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const Word& w : words) {
    if (w.empty() || !w.positive())
      throw std::invalid_argument("overlap_report: words must be positive and nonempty");
  }

  OverlapReport report;
  for (const Word& w : words) {
    auto borders = self_overlaps(w);
    if (!borders.empty()) report.self_overlaps.emplace(w, std::move(borders));
  }
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u == v) continue;
      // nonempty prefix of u equal to a nonempty suffix of v
      for (std::size_t len = 1; len <= std::min(u.size(), v.size()); ++len) {
        Word p = u.factor(0, len);
        if (is_suffix(p, v)) report.cross_overlaps.push_back({u, v, std::move(p)});
      }
    }
  }
  return report;
}

bool is_overlap_free(const std::vector<Word>& ws) {
  return overlap_report(ws).overlap_free();
}

Alphabet::Alphabet(std::vector<std::string> n) : names(std::move(n)) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j])
        throw std::invalid_argument("alphabet: duplicate generator '" + names[i] + "'");
    }
  }
}

bool Alphabet::contains(const std::string& name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t Alphabet::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

bool shortlex_less(const Word& u, const Word& v, const Alphabet& a) {
  if (u.size() != v.size()) return u.size() < v.size();
  auto rank = [&a](const Symbol& s) {
    return 2 * a.index(s.name) + (s.sign < 0 ? 1 : 0);
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto ru = rank(u[i]), rv = rank(v[i]);
    if (ru != rv) return ru < rv;
  }
  return false;
}

std::string to_string(const Symbol& s) {
  return s.sign < 0 ? s.name + "^-1" : s.name;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

namespace {

Symbol symbol_from_token(const std::string& tok, int line) {
  std::string name = tok;
  int sign = +1;
  if (auto pos = tok.find('^'); pos != std::string::npos) {
    if (tok.substr(pos) != "^-1")
      throw ParseError(line, "bad exponent in token '" + tok + "' (only ^-1 is allowed)");
    name = tok.substr(0, pos);
    sign = -1;
  }
  if (name.empty()) throw ParseError(line, "empty symbol token");
  return Symbol{name, sign};
}

}  // namespace

Word parse_word(const std::string& text, int line) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "1") return Word{};
  Word out;
  for (const std::string& tok : tokens) {
    if (tok == "1") throw ParseError(line, "'1' denotes the empty word and must stand alone");
    out *= symbol_from_token(tok, line);
  }
  return out;
}

Word parse_word_compact(const std::string& text, const Alphabet& a) {
  std::istringstream in(text);
  Word out;
  bool any = false;
  for (std::string tok; in >> tok;) {
    any = true;
    if (tok == "1") continue;
    std::string name = tok;
    int sign = +1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      sign = -1;
      if (tok.substr(pos) != "^-1") throw ParseError(0, "bad exponent in token '" + tok + "'");
    }
    if (a.contains(name)) {
      out *= Symbol{name, sign};
      continue;
    }
    if (sign < 0) throw ParseError(0, "unknown generator '" + name + "'");
    for (char c : name) {
      std::string letter(1, c);
      if (!a.contains(letter))
        throw ParseError(0, "unknown generator '" + letter + "' in token '" + tok + "'");
      out *= Symbol{letter, +1};
    }
  }
  if (!any) return Word{};
  return out;
}

}  // namespace fpres
