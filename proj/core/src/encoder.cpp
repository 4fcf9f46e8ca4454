#include "fpres/encoder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fpres/transform.hpp"

namespace fpres {

namespace {

void check_input(const EncodingInput& in) {
  Alphabet a(in.alphabet);
  if (in.q.empty()) throw std::invalid_argument("construction: q must be nonempty");
  auto check = [&a](const Word& w, const char* what) {
    if (!w.positive()) throw std::invalid_argument(std::string(what) + " must be positive");
    for (const Symbol& s : w.syms) a.index(s.name);
  };
  check(in.q, "q");
  if (in.x.size() != in.x_inverse.size())
    throw std::invalid_argument("construction: one inverse witness per member of X required");
  for (const Word& w : in.x) {
    if (w.empty()) throw std::invalid_argument("construction: members of X must be nonempty");
    check(w, "member of X");
  }
  for (const Word& w : in.x_inverse) {
    if (w.empty()) throw std::invalid_argument("construction: witnesses must be nonempty");
    check(w, "inverse witness");
  }
}

Presentation special_monoid(const std::vector<std::string>& alphabet, const Word& q) {
  Presentation p{Kind::monoid, alphabet, {}};
  p.relations.emplace_back(q, Word{});
  return p;
}

// Certifies u = 1 in <A | q = 1>: by unique normal forms when {q -> 1}
// completes within the limits, else by bounded derivation search.
struct UnitChecker {
  Presentation monoid;
  std::optional<CompleteSystem> complete;
  WitnessBound bound;

  UnitChecker(const std::vector<std::string>& alphabet, const Word& q,
              const WitnessBound& b)
      : monoid(special_monoid(alphabet, q)), bound(b) {
    auto kb = knuth_bendix(make_rewrite_system(Alphabet(alphabet), {Rule{q, Word{}}}),
                           CompletionLimits{32, 4 * q.size() + 8, 200'000});
    if (kb.completed) complete = CompleteSystem::certify(std::move(kb.system));
  }

  bool is_identity(const Word& u, std::string* how = nullptr) const {
    if (complete) {
      if (how) *how = "normal form under completed {q -> 1}";
      return complete->normal_form(u).empty();
    }
    if (how) *how = "bounded derivation from q = 1";
    return derivation_reaches(monoid, u, Word{}, bound.max_word_length, bound.max_steps);
  }
};

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

Word substitute_letter(const Word& w, const std::string& letter, const Word& replacement) {
  Word out;
  for (const Symbol& s : w.syms) {
    if (s.name == letter && s.sign > 0)
      out *= replacement;
    else
      out *= s;
  }
  return out;
}

}  // namespace

EncodingOutput construction51(const EncodingInput& in, const WitnessBound& bound) {
  check_input(in);
  const std::string distinguished = in.q[0].name;

  UnitChecker checker(in.alphabet, in.q, bound);
  EncodingOutput out;
  for (std::size_t i = 0; i < in.x.size(); ++i) {
    std::string how;
    if (!checker.is_identity(in.x[i] * in.x_inverse[i], &how) ||
        !checker.is_identity(in.x_inverse[i] * in.x[i]))
      throw std::invalid_argument("construction: witness for " + to_string(in.x[i]) +
                                  " is uncertified");
    out.certificates.push_back(to_string(in.x[i]) + " * " + to_string(in.x_inverse[i]) +
                               " = 1 and " + to_string(in.x_inverse[i]) + " * " +
                               to_string(in.x[i]) + " = 1 (" + how + ")");
  }

  std::set<std::string> taken(in.alphabet.begin(), in.alphabet.end());
  out.x_name = fresh_name("x", taken);
  taken.insert(out.x_name);
  out.t_name = fresh_name("t", taken);

  const Word tx = Word::letter(out.t_name) * Word::letter(out.x_name);
  out.r = substitute_letter(in.q, distinguished, tx);
  out.s = out.r.factor(1, out.r.size() - 1);
  for (std::size_t i = 0; i < in.x.size(); ++i) {
    out.z.push_back(substitute_letter(in.x[i], distinguished, tx));
    out.zbar.push_back(substitute_letter(in.x_inverse[i], distinguished, tx));
  }

  Word second;
  for (std::size_t i = 0; i < out.z.size(); ++i) {
    second *= Word::letter(out.t_name) * out.z[i] * out.s;
    second *= Word::letter(out.t_name) * out.zbar[i] * out.s;
  }

  std::vector<std::string> gens;
  for (const std::string& g : in.alphabet)
    if (g != distinguished) gens.push_back(g);
  gens.push_back(out.x_name);
  gens.push_back(out.t_name);

  Presentation h{Kind::group, gens, {}};
  h.relations.emplace_back(out.r, Word{});
  h.relations.emplace_back(second, Word{});
  validate(h);
  out.h_group = h;
  out.m_inverse = h;
  out.m_inverse.kind = Kind::inverse;
  return out;
}

std::optional<Word> find_inverse_witness(const std::vector<std::string>& alphabet,
                                         const Word& q, const Word& w,
                                         const WitnessBound& bound) {
  Alphabet a(alphabet);
  if (q.empty() || !q.positive() || !w.positive())
    throw std::invalid_argument("find_inverse_witness: q and w must be positive");
  UnitChecker checker(alphabet, q, bound);

  // Shortlex enumeration of positive candidates.
  std::vector<Word> level;
  level.reserve(alphabet.size());
  for (const std::string& g : alphabet) level.push_back(Word::letter(g));
  for (std::size_t len = 1; len <= bound.max_word_length; ++len) {
    for (const Word& cand : level) {
      if (checker.is_identity(w * cand) && checker.is_identity(cand * w)) return cand;
    }
    std::vector<Word> next;
    next.reserve(level.size() * alphabet.size());
    for (const Word& cand : level)
      for (const std::string& g : alphabet) next.push_back(cand * Word::letter(g));
    level = std::move(next);
  }
  return std::nullopt;
}

Word quasi_positive_relator(const Word& u, const Word& v) {
  if (u.empty() || v.empty() || !u.positive() || !v.positive())
    throw std::invalid_argument("quasi_positive_relator: u, v must be positive and nonempty");
  return free_reduce(v * u * invert_word(v));
}

Presentation two_relator_inverse_form(const Word& u, const Word& v) {
  if (u.empty() || v.empty() || !u.positive() || !v.positive())
    throw std::invalid_argument("two_relator_inverse_form: u, v must be positive and "
                                "nonempty");
  std::vector<std::string> gens;
  std::set<std::string> taken;
  for (const Word* w : {&u, &v}) {
    for (const Symbol& s : w->syms) {
      if (taken.insert(s.name).second) gens.push_back(s.name);
    }
  }
  std::string t = fresh_name("t", taken);
  gens.push_back(t);

  Presentation p{Kind::inverse, gens, {}};
  p.relations.emplace_back(u * Word::letter(t), Word{});
  p.relations.emplace_back(v * Word::letter(t), Word{});
  return p;
}

std::vector<Word> prefix_generators(const std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const Word& r : relators) {
    for (Word& p : prefixes(r)) {
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& lhs, const Word& rhs) {
    return lhs.size() < rhs.size();
  });
  return out;
}

Word unsubstitute(const Word& w, const std::string& t_name, const std::string& x_name,
                  const std::string& letter) {
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (i + 1 < w.size() && w[i].name == t_name && w[i].sign > 0 &&
        w[i + 1].name == x_name && w[i + 1].sign > 0) {
      out *= Word::letter(letter);
      i += 2;
    } else {
      out *= w[i];
      ++i;
    }
  }
  return out;
}

EncodingFile parse_encoding_input(const std::string& text) {
  std::string presentation_text;
  std::vector<std::pair<std::string, int>> x_lines, xbar_lines;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      auto b = raw.find_first_not_of(" \t\r");
      if (b != std::string::npos && raw.compare(b, 2, "x:") == 0)
        x_lines.emplace_back(raw.substr(b + 2), number);
      else if (b != std::string::npos && raw.compare(b, 5, "xbar:") == 0)
        xbar_lines.emplace_back(raw.substr(b + 5), number);
      else
        presentation_text += raw + "\n";
    }
  }
  Presentation p = parse_presentation(presentation_text);
  if (p.kind != Kind::monoid || !is_special(p) || p.relations.size() != 1)
    throw ParseError(0, "construction input must be a special monoid presentation with one "
                        "relator");
  if (x_lines.empty()) throw ParseError(0, "construction input needs at least one x: line");
  if (!xbar_lines.empty() && xbar_lines.size() != x_lines.size())
    throw ParseError(0, "either no xbar: lines or exactly one per x: line");

  EncodingFile file;
  file.input.alphabet = p.generators;
  file.input.q = p.relations[0].first;
  const Alphabet a(p.generators);
  for (std::size_t i = 0; i < x_lines.size(); ++i) {
    Word w = parse_word(x_lines[i].first, x_lines[i].second);
    for (const Symbol& s : w.syms) a.index(s.name);
    file.input.x.push_back(std::move(w));
    if (!xbar_lines.empty()) {
      Word wb = parse_word(xbar_lines[i].first, xbar_lines[i].second);
      for (const Symbol& s : wb.syms) a.index(s.name);
      file.input.x_inverse.push_back(std::move(wb));
      file.witness_given.push_back(true);
    } else {
      file.input.x_inverse.push_back(Word{});
      file.witness_given.push_back(false);
    }
  }
  return file;
}

}  // namespace fpres
