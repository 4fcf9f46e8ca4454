#include "fpres/rewrite.hpp"

#include <algorithm>
#include <deque>

#include "fpres/presentation.hpp"

namespace fpres {

namespace {

void check_positive_over(const Word& w, const Alphabet& a, const char* what) {
  for (const Symbol& s : w.syms) {
    if (s.sign < 0)
      throw std::invalid_argument(std::string(what) + ": negative symbol " + to_string(s));
    a.index(s.name);  // throws on unknown generator
  }
}

}  // namespace

RewriteSystem make_rewrite_system(Alphabet alphabet, std::vector<Rule> rules) {
  for (const Rule& r : rules) {
    check_positive_over(r.lhs, alphabet, "rule lhs");
    check_positive_over(r.rhs, alphabet, "rule rhs");
    if (r.lhs.empty()) throw std::invalid_argument("rule lhs must be nonempty");
    if (!shortlex_less(r.rhs, r.lhs, alphabet))
      throw std::invalid_argument("unorientable rule: " + to_string(r.lhs) + " -> " +
                                  to_string(r.rhs));
  }
  return RewriteSystem{std::move(alphabet), std::move(rules)};
}

namespace {

// First rule (in listed order) whose lhs is a suffix of `stack`, cheapened
// by a first-symbol/length precheck.
std::optional<std::size_t> suffix_match(const RewriteSystem& rs,
                                        const std::vector<Symbol>& stack) {
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const Word& lhs = rs.rules[i].lhs;
    const std::size_t len = lhs.size();
    if (len > stack.size()) continue;
    if (stack[stack.size() - len] != lhs[0]) continue;
    if (std::equal(lhs.syms.begin(), lhs.syms.end(),
                   stack.end() - static_cast<std::ptrdiff_t>(len)))
      return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> try_normal_form(const RewriteSystem& rs, const Word& w,
                                    std::size_t budget) {
  check_positive_over(w, rs.alphabet, "normal_form input");
  std::vector<Symbol> stack;
  std::deque<Symbol> pending(w.syms.begin(), w.syms.end());
  std::size_t steps = 0;
  while (!pending.empty()) {
    stack.push_back(pending.front());
    pending.pop_front();
    if (auto hit = suffix_match(rs, stack)) {
      if (++steps > budget) return std::nullopt;
      const Rule& rule = rs.rules[*hit];
      stack.resize(stack.size() - rule.lhs.size());
      // Re-feed the replacement so redexes created inside it are still
      // found left to right.
      pending.insert(pending.begin(), rule.rhs.syms.begin(), rule.rhs.syms.end());
    }
  }
  return Word(std::move(stack));
}

Word normal_form(const RewriteSystem& rs, const Word& w, std::size_t budget) {
  auto nf = try_normal_form(rs, w, budget);
  if (!nf) throw BudgetExceeded("normal_form: step budget exceeded on " + to_string(w));
  return *nf;
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& rs) {
  std::vector<CriticalPair> out;
  const auto& rules = rs.rules;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      // Proper and whole-word overlaps: l1 = u s, l2 = s v, s nonempty.
      for (std::size_t slen = 1; slen <= std::min(l1.size(), l2.size()); ++slen) {
        Word s = l1.factor(l1.size() - slen, slen);
        if (!is_prefix(s, l2)) continue;
        Word u = l1.factor(0, l1.size() - slen);
        Word v = l2.factor(slen, l2.size() - slen);
        if (i == j && u.empty() && v.empty()) continue;  // trivial total self-overlap
        CriticalPair cp;
        cp.rule1 = i;
        cp.rule2 = j;
        cp.source = u * s * v;
        cp.left_descendant = rules[i].rhs * v;
        cp.right_descendant = u * rules[j].rhs;
        cp.ctx_u = std::move(u);
        cp.ctx_s = std::move(s);
        cp.ctx_v = std::move(v);
        out.push_back(std::move(cp));
      }
      // Proper interior containment: l1 = u l2 v with u, v nonempty.
      if (l2.size() >= l1.size()) continue;
      for (std::size_t pos = 1; pos + l2.size() < l1.size(); ++pos) {
        if (l1.factor(pos, l2.size()) != l2) continue;
        CriticalPair cp;
        cp.rule1 = i;
        cp.rule2 = j;
        cp.containment = true;
        cp.ctx_u = l1.factor(0, pos);
        cp.ctx_s = l2;
        cp.ctx_v = l1.factor(pos + l2.size(), l1.size() - pos - l2.size());
        cp.source = l1;
        cp.left_descendant = rules[i].rhs;
        cp.right_descendant = cp.ctx_u * rules[j].rhs * cp.ctx_v;
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

ConfluenceVerdict is_locally_confluent(const RewriteSystem& rs, std::size_t budget) {
  for (const CriticalPair& cp : critical_pairs(rs)) {
    auto left = try_normal_form(rs, cp.left_descendant, budget);
    auto right = try_normal_form(rs, cp.right_descendant, budget);
    if (!left || !right)
      return ConfluenceVerdict{ConfluenceVerdict::Kind::budget_exceeded, cp};
    if (*left != *right)
      return ConfluenceVerdict{ConfluenceVerdict::Kind::counterexample, cp};
  }
  return ConfluenceVerdict{};
}

namespace {

// Orients u = v by shortlex; nullopt when the words are equal.
std::optional<Rule> orient(Word u, Word v, const Alphabet& a) {
  if (u == v) return std::nullopt;
  if (shortlex_less(u, v, a)) std::swap(u, v);
  return Rule{std::move(u), std::move(v)};
}

}  // namespace

CompletionResult knuth_bendix(const RewriteSystem& start, const CompletionLimits& limits) {
  const Alphabet& a = start.alphabet;
  RewriteSystem rs{a, {}};
  std::deque<std::pair<Word, Word>> equations;
  for (const Rule& r : start.rules) equations.emplace_back(r.lhs, r.rhs);

  CompletionResult result;
  auto add_pairs_with = [&](const Rule& fresh) {
    RewriteSystem probe{a, rs.rules};
    probe.rules.push_back(fresh);
    const std::size_t fresh_idx = probe.rules.size() - 1;
    for (const CriticalPair& cp : critical_pairs(probe)) {
      if (cp.rule1 == fresh_idx || cp.rule2 == fresh_idx)
        equations.emplace_back(cp.left_descendant, cp.right_descendant);
    }
  };

  auto exhausted = [&]() {
    result.completed = false;
    result.system = std::move(rs);  // partial
    return std::move(result);
  };

  while (!equations.empty()) {
    auto [u, v] = equations.front();
    equations.pop_front();
    ++result.pairs_processed;

    auto nu = try_normal_form(rs, u, limits.step_budget);
    auto nv = try_normal_form(rs, v, limits.step_budget);
    if (!nu || !nv) return exhausted();  // step budget
    auto rule = orient(std::move(*nu), std::move(*nv), a);
    if (!rule) continue;  // joinable

    if (rule->lhs.size() > limits.max_lhs_length) return exhausted();
    if (rs.rules.size() + 1 > limits.max_rules) return exhausted();

    // Interreduce: rules whose lhs the new rule rewrites go back into the
    // equation queue; surviving rhs's are renormalized lazily via the
    // normal-form calls above.
    RewriteSystem with_new{a, {*rule}};
    std::vector<Rule> kept;
    for (Rule& old : rs.rules) {
      if (try_normal_form(with_new, old.lhs, limits.step_budget) != old.lhs)
        equations.emplace_back(old.lhs, old.rhs);
      else
        kept.push_back(std::move(old));
    }
    rs.rules = std::move(kept);
    add_pairs_with(*rule);
    rs.rules.push_back(*rule);
  }

  // Final tidy: renormalize every rhs against the full system. A rule can
  // never reduce its own rhs (the rhs is shortlex-smaller than the lhs),
  // so this preserves completeness and the normal forms.
  for (Rule& r : rs.rules) {
    auto nf = try_normal_form(rs, r.rhs, limits.step_budget);
    if (!nf) return exhausted();
    r.rhs = std::move(*nf);
  }
  result.completed = true;
  result.system = std::move(rs);
  return result;
}

RewriteSystem fcrs(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("fcrs: require m, n >= 1");
  const Word a = Word::letter("a");
  const Word b = Word::letter("b");
  const Word ban = b * pow(a, n);   // b a^n
  const Word anb = pow(a, n) * b;   // a^n b

  std::vector<Rule> rules;
  rules.push_back(Rule{pow(ban, m) * pow(anb, m) * a, a});
  for (int i = 1; i <= m; ++i) {
    rules.push_back(Rule{pow(ban, m) * pow(anb, m - i) * pow(a, n) * a,
                         pow(anb, m - i) * pow(a, n) * pow(anb, m) * a});
  }
  return make_rewrite_system(Alphabet({"a", "b"}), std::move(rules));
}

std::optional<CompleteSystem> CompleteSystem::certify(RewriteSystem rs, std::size_t budget) {
  rs = make_rewrite_system(rs.alphabet, rs.rules);  // re-check orientation
  if (!is_locally_confluent(rs, budget).confluent()) return std::nullopt;
  return CompleteSystem(std::move(rs));
}

Word CompleteSystem::normal_form(const Word& w, std::size_t budget) const {
  return fpres::normal_form(rs_, w, budget);
}

CompleteSystem certified_fcrs(int m, int n) {
  auto cs = CompleteSystem::certify(fcrs(m, n));
  if (!cs) throw std::runtime_error("fcrs(" + std::to_string(m) + "," + std::to_string(n) +
                                    ") failed local-confluence certification");
  return *cs;
}

RewriteSystem parse_rewrite_system(const std::string& text) {
  std::optional<Alphabet> alphabet;
  std::vector<Rule> rules;
  bool have_kind = false;
  for (const FormatLine& line : format_lines(text)) {
    if (line.key == "kind") {
      if (line.value != "rewriting")
        throw ParseError(line.number, "expected kind: rewriting, got '" + line.value + "'");
      have_kind = true;
    } else if (line.key == "gens") {
      alphabet = Alphabet(parse_generator_list(line));
    } else if (line.key == "rule") {
      if (!alphabet) throw ParseError(line.number, "rule before gens");
      auto arrow = line.value.find("->");
      if (arrow == std::string::npos)
        throw ParseError(line.number, "malformed rule (missing '->'): " + line.value);
      rules.push_back(Rule{parse_word(line.value.substr(0, arrow), line.number),
                           parse_word(line.value.substr(arrow + 2), line.number)});
    } else {
      throw ParseError(line.number, "malformed line (unknown key '" + line.key + "')");
    }
  }
  if (!have_kind) throw ParseError(0, "missing kind line");
  if (!alphabet) throw ParseError(0, "missing gens line");
  return make_rewrite_system(std::move(*alphabet), std::move(rules));
}

std::string serialize_rewrite_system(const RewriteSystem& rs) {
  std::string out = "kind: rewriting\n";
  out += "gens:";
  for (const std::string& g : rs.alphabet.names) out += " " + g;
  out += "\n";
  for (const Rule& r : rs.rules)
    out += "rule: " + to_string(r.lhs) + " -> " + to_string(r.rhs) + "\n";
  return out;
}

}  // namespace fpres
