#include "fpres/fsa.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

#include "fpres/presentation.hpp"

namespace fpres {

void Fsa::add_transition(std::size_t from, std::optional<Symbol> sym, std::size_t to) {
  if (sym) add_symbol(*sym);
  transitions.push_back(Transition{from, std::move(sym), to});
}

void Fsa::add_symbol(const Symbol& s) {
  if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end())
    alphabet.push_back(s);
}

void Fsa::validate() const {
  for (const Transition& t : transitions) {
    if (t.from >= state_count || t.to >= state_count)
      throw std::invalid_argument("fsa: transition references undeclared state");
    if (t.sym && std::find(alphabet.begin(), alphabet.end(), *t.sym) == alphabet.end())
      throw std::invalid_argument("fsa: transition references undeclared symbol");
  }
  for (std::size_t q : initial)
    if (q >= state_count) throw std::invalid_argument("fsa: undeclared initial state");
  for (std::size_t q : final)
    if (q >= state_count) throw std::invalid_argument("fsa: undeclared final state");
}

namespace {

using StateSet = std::set<std::size_t>;

// Outgoing-edge index; every per-word loop goes through this.
struct Index {
  const Fsa& f;
  std::vector<std::vector<const Fsa::Transition*>> by_from;

  explicit Index(const Fsa& fsa) : f(fsa), by_from(fsa.state_count) {
    for (const auto& t : f.transitions) by_from[t.from].push_back(&t);
  }

  StateSet closure(StateSet states) const {
    std::deque<std::size_t> queue(states.begin(), states.end());
    while (!queue.empty()) {
      std::size_t q = queue.front();
      queue.pop_front();
      for (const auto* t : by_from[q])
        if (!t->sym && states.insert(t->to).second) queue.push_back(t->to);
    }
    return states;
  }

  StateSet step(const StateSet& states, const Symbol& s) const {
    StateSet next;
    for (std::size_t q : states)
      for (const auto* t : by_from[q])
        if (t->sym && *t->sym == s) next.insert(t->to);
    return closure(std::move(next));
  }
};

StateSet eps_closure(const Fsa& f, StateSet states) {
  return Index(f).closure(std::move(states));
}

StateSet step(const Fsa& f, const StateSet& states, const Symbol& s) {
  return Index(f).step(states, s);
}

StateSet run(const Fsa& f, const Word& w) {
  Index index(f);
  StateSet cur = index.closure(f.initial);
  for (const Symbol& s : w.syms) cur = index.step(cur, s);
  return cur;
}

bool any_final(const Fsa& f, const StateSet& states) {
  return std::any_of(states.begin(), states.end(),
                     [&f](std::size_t q) { return f.final.count(q) > 0; });
}

// Copies g's states into f with an offset; returns the offset.
std::size_t splice(Fsa& f, const Fsa& g) {
  std::size_t offset = f.state_count;
  f.state_count += g.state_count;
  for (const Symbol& s : g.alphabet) f.add_symbol(s);
  for (const auto& t : g.transitions)
    f.transitions.push_back({t.from + offset, t.sym, t.to + offset});
  return offset;
}

}  // namespace

bool accepts(const Fsa& f, const Word& w) { return any_final(f, run(f, w)); }

Fsa singleton(const Word& w) { return finite_language({w}); }

Fsa finite_language(const std::vector<Word>& ws) {
  Fsa f;
  std::size_t start = f.add_state();
  f.initial.insert(start);
  for (const Word& w : ws) {
    std::size_t cur = start;
    for (const Symbol& s : w.syms) {
      std::size_t next = f.add_state();
      f.add_transition(cur, s, next);
      cur = next;
    }
    f.final.insert(cur);
  }
  return f;
}

Fsa empty_language(std::vector<Symbol> alphabet) {
  Fsa f;
  f.add_state();
  f.initial.insert(0);
  f.alphabet = std::move(alphabet);
  return f;
}

Fsa union_of(const Fsa& f, const Fsa& g) {
  Fsa out;
  std::size_t off_f = splice(out, f);
  std::size_t off_g = splice(out, g);
  std::size_t start = out.add_state();
  out.initial.insert(start);
  for (std::size_t q : f.initial) out.add_transition(start, std::nullopt, q + off_f);
  for (std::size_t q : g.initial) out.add_transition(start, std::nullopt, q + off_g);
  for (std::size_t q : f.final) out.final.insert(q + off_f);
  for (std::size_t q : g.final) out.final.insert(q + off_g);
  return out;
}

Fsa concat(const Fsa& f, const Fsa& g) {
  Fsa out;
  std::size_t off_f = splice(out, f);
  std::size_t off_g = splice(out, g);
  for (std::size_t q : f.initial) out.initial.insert(q + off_f);
  for (std::size_t q : f.final)
    for (std::size_t r : g.initial) out.add_transition(q + off_f, std::nullopt, r + off_g);
  for (std::size_t q : g.final) out.final.insert(q + off_g);
  return out;
}

Fsa star(const Fsa& f) {
  Fsa out;
  std::size_t off = splice(out, f);
  std::size_t hub = out.add_state();
  out.initial.insert(hub);
  out.final.insert(hub);
  for (std::size_t q : f.initial) out.add_transition(hub, std::nullopt, q + off);
  for (std::size_t q : f.final) out.add_transition(q + off, std::nullopt, hub);
  return out;
}

Fsa plus_of(const Fsa& f) { return concat(f, star(f)); }

Fsa reverse(const Fsa& f) {
  Fsa out;
  out.state_count = f.state_count;
  out.alphabet = f.alphabet;
  for (const auto& t : f.transitions) out.transitions.push_back({t.to, t.sym, t.from});
  out.initial = f.final;
  out.final = f.initial;
  return out;
}

Fsa hom_image(const Fsa& f, const std::map<Symbol, Word>& h) {
  for (const Symbol& s : f.alphabet)
    if (!h.count(s))
      throw std::invalid_argument("hom_image: map not total, missing " + to_string(s));
  Fsa out;
  out.state_count = f.state_count;
  out.initial = f.initial;
  out.final = f.final;
  for (const auto& t : f.transitions) {
    if (!t.sym) {
      out.add_transition(t.from, std::nullopt, t.to);
      continue;
    }
    const Word& image = h.at(*t.sym);
    if (image.empty()) {
      out.add_transition(t.from, std::nullopt, t.to);
      continue;
    }
    std::size_t cur = t.from;
    for (std::size_t i = 0; i + 1 < image.size(); ++i) {
      std::size_t mid = out.add_state();
      out.add_transition(cur, image[i], mid);
      cur = mid;
    }
    out.add_transition(cur, image[image.size() - 1], t.to);
  }
  return out;
}

Fsa inverse_hom_image(const Fsa& f, const std::map<Symbol, Word>& h,
                      const std::vector<Symbol>& domain) {
  for (const Symbol& s : domain)
    if (!h.count(s))
      throw std::invalid_argument("inverse_hom_image: map not total, missing " + to_string(s));
  Index index(f);
  Fsa out;
  out.state_count = f.state_count;
  out.alphabet = domain;
  out.initial = index.closure(f.initial);
  out.final = f.final;
  for (std::size_t q = 0; q < f.state_count; ++q) {
    StateSet from = index.closure({q});
    for (const Symbol& c : domain) {
      StateSet reach = from;
      for (const Symbol& s : h.at(c).syms) reach = index.step(reach, s);
      for (std::size_t r : reach) out.transitions.push_back({q, c, r});
    }
  }
  return out;
}

Fsa letter_quotient(const Fsa& f, Side side, const Symbol& sym) {
  Fsa out = f;
  if (side == Side::left) {
    out.initial = step(f, eps_closure(f, f.initial), sym);
  } else {
    // states from which one `sym` step (plus ε-moves) reaches a final state
    StateSet finals;
    for (std::size_t q = 0; q < f.state_count; ++q)
      if (any_final(f, step(f, eps_closure(f, {q}), sym))) finals.insert(q);
    out.final = std::move(finals);
  }
  return out;
}

Fsa determinize(const Fsa& f) {
  Index index(f);
  std::map<StateSet, std::size_t> ids;
  Fsa out;
  out.alphabet = f.alphabet;
  StateSet start = index.closure(f.initial);
  ids[start] = out.add_state();
  out.initial.insert(0);
  std::deque<StateSet> queue{start};
  while (!queue.empty()) {
    StateSet cur = queue.front();
    queue.pop_front();
    std::size_t cur_id = ids.at(cur);
    if (any_final(f, cur)) out.final.insert(cur_id);
    for (const Symbol& s : f.alphabet) {
      StateSet next = index.step(cur, s);
      auto [it, fresh] = ids.emplace(next, out.state_count);
      if (fresh) {
        out.add_state();
        queue.push_back(next);
      }
      out.transitions.push_back({cur_id, s, it->second});
    }
  }
  return out;
}

namespace {

std::vector<Symbol> merged_alphabet(const Fsa& f, const Fsa& g) {
  std::vector<Symbol> all = f.alphabet;
  for (const Symbol& s : g.alphabet)
    if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
  return all;
}

Fsa with_alphabet(Fsa f, const std::vector<Symbol>& alphabet) {
  for (const Symbol& s : alphabet) f.add_symbol(s);
  return f;
}

}  // namespace

Fsa intersect(const Fsa& f, const Fsa& g) {
  const std::vector<Symbol> alphabet = merged_alphabet(f, g);
  Fsa df = determinize(with_alphabet(f, alphabet));
  Fsa dg = determinize(with_alphabet(g, alphabet));
  Fsa out;
  out.alphabet = alphabet;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  auto id_of = [&](std::size_t a, std::size_t b) {
    auto [it, fresh] = ids.emplace(std::make_pair(a, b), out.state_count);
    if (fresh) out.add_state();
    return std::make_pair(it->second, fresh);
  };
  auto dstep = [](const Fsa& d, std::size_t q, const Symbol& s) {
    for (const auto& t : d.transitions)
      if (t.from == q && t.sym && *t.sym == s) return t.to;
    throw std::logic_error("determinized automaton is not complete");
  };
  std::size_t fi = *df.initial.begin(), gi = *dg.initial.begin();
  auto [start, fresh0] = id_of(fi, gi);
  out.initial.insert(start);
  std::deque<std::pair<std::size_t, std::size_t>> queue{{fi, gi}};
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    std::size_t cur = ids.at({a, b});
    if (df.final.count(a) && dg.final.count(b)) out.final.insert(cur);
    for (const Symbol& s : alphabet) {
      std::size_t na = dstep(df, a, s), nb = dstep(dg, b, s);
      auto [nid, fresh] = id_of(na, nb);
      if (fresh) queue.push_back({na, nb});
      out.transitions.push_back({cur, s, nid});
    }
  }
  return out;
}

Fsa complement(const Fsa& f, const std::vector<Symbol>& alphabet) {
  Fsa d = determinize(with_alphabet(f, alphabet));
  Fsa out = d;
  out.final.clear();
  for (std::size_t q = 0; q < d.state_count; ++q)
    if (!d.final.count(q)) out.final.insert(q);
  return out;
}

bool is_empty(const Fsa& f) {
  StateSet seen = eps_closure(f, f.initial);
  std::deque<std::size_t> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    if (f.final.count(q)) return false;
    for (const auto& t : f.transitions)
      if (t.from == q && seen.insert(t.to).second) queue.push_back(t.to);
  }
  return true;
}

bool equal_language(const Fsa& f, const Fsa& g) {
  const std::vector<Symbol> alphabet = merged_alphabet(f, g);
  return is_empty(intersect(f, complement(g, alphabet))) &&
         is_empty(intersect(g, complement(f, alphabet)));
}

std::vector<Word> enumerate_language(const Fsa& f, std::size_t max_len) {
  // States from which some final state is reachable; prefixes whose state
  // set misses all of them are dead and not explored further.
  std::vector<bool> productive(f.state_count, false);
  {
    std::deque<std::size_t> queue(f.final.begin(), f.final.end());
    for (std::size_t q : f.final) productive[q] = true;
    while (!queue.empty()) {
      std::size_t q = queue.front();
      queue.pop_front();
      for (const auto& t : f.transitions) {
        if (t.to == q && !productive[t.from]) {
          productive[t.from] = true;
          queue.push_back(t.from);
        }
      }
    }
  }
  auto alive = [&productive](const StateSet& states) {
    return std::any_of(states.begin(), states.end(),
                       [&productive](std::size_t q) { return productive[q]; });
  };

  Index index(f);
  std::vector<Word> out;
  struct Item {
    Word w;
    StateSet states;
  };
  std::deque<Item> queue{{Word{}, index.closure(f.initial)}};
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (any_final(f, item.states)) out.push_back(item.w);
    if (item.w.size() == max_len) continue;
    for (const Symbol& s : f.alphabet) {
      StateSet next = index.step(item.states, s);
      if (!next.empty() && alive(next)) queue.push_back({item.w * s, next});
    }
  }
  return out;
}

const Word& LetterWordTable::at(const Symbol& i, const Symbol& j) const {
  auto it = entries.find({i, j});
  if (it == entries.end())
    throw std::invalid_argument("letter-word table missing entry (" + to_string(i) + ", " +
                                to_string(j) + ")");
  return it->second;
}

Fsa phi_transform(const Fsa& f, const LetterWordTable& table) {
  // Precondition: no accepted word of length <= 1.
  std::vector<Word> short_words{Word{}};
  for (const Symbol& s : f.alphabet) short_words.push_back(Word::letter(s.name, s.sign));
  if (!is_empty(intersect(f, finite_language(short_words))))
    throw std::invalid_argument("phi_transform: language contains a word of length < 2");

  // sigma: a -> aa
  std::map<Symbol, Word> doubling;
  for (const Symbol& s : f.alphabet) {
    Word d;
    d *= s;
    d *= s;
    doubling[s] = d;
  }
  Fsa l1 = hom_image(f, doubling);

  // g: delete the last letter, then the first.
  Fsa no_last = empty_language(l1.alphabet);
  for (const Symbol& s : f.alphabet)
    no_last = union_of(no_last, letter_quotient(l1, Side::right, s));
  Fsa l2 = empty_language(no_last.alphabet);
  for (const Symbol& s : f.alphabet)
    l2 = union_of(l2, letter_quotient(no_last, Side::left, s));

  // theta^{-1}: pair letters c_{i,j} -> a_i a_j.
  std::vector<Symbol> pair_alphabet;
  std::map<Symbol, Word> theta;
  std::map<Symbol, Word> gamma;
  for (const Symbol& i : f.alphabet) {
    for (const Symbol& j : f.alphabet) {
      Symbol c{"pair[" + to_string(i) + "," + to_string(j) + "]", +1};
      pair_alphabet.push_back(c);
      Word ij;
      ij *= i;
      ij *= j;
      theta[c] = ij;
      gamma[c] = table.at(i, j);
    }
  }
  Fsa l3 = inverse_hom_image(l2, theta, pair_alphabet);

  // rho then gamma.
  return hom_image(reverse(l3), gamma);
}

Fsa omega_language() {
  const Fsa a = singleton(Word::letter("a"));
  const Fsa b = singleton(Word::letter("b"));
  const Fsa c = singleton(Word::letter("c"));
  const Fsa d = singleton(Word::letter("d"));
  // a ( d (cb)+ a )* d c+
  Fsa cb_plus = plus_of(concat(c, b));
  Fsa loop = star(concat(concat(d, cb_plus), a));
  return concat(concat(concat(a, loop), d), plus_of(c));
}

Fsa build_qbar(const Fsa& q, const LetterWordTable& witnesses, const Word& u2) {
  if (accepts(q, Word{}))
    throw std::invalid_argument("build_qbar: language must not contain the empty word");
  return phi_transform(concat(q, singleton(u2)), witnesses);
}

MembershipResult rational_membership(const Fsa& f, const Word& w) {
  if (accepts(f, w)) return {Membership::yes, w};
  return {Membership::no, std::nullopt};
}

MembershipResult rational_membership(const Fsa& f, const Word& w, const CompleteSystem& cs,
                                     std::size_t depth) {
  for (const Symbol& s : f.alphabet) {
    if (s.sign < 0 || !cs.system().alphabet.contains(s.name))
      throw std::invalid_argument(
          "rational_membership: automaton alphabet must be positive over the "
          "rewriting alphabet");
  }
  const Word target = cs.normal_form(w);

  Index index(f);
  struct Item {
    std::size_t state;
    Word nf;
    Word witness;
  };
  std::set<std::pair<std::size_t, Word>> seen;
  std::deque<Item> queue;
  for (std::size_t q : index.closure(f.initial)) {
    if (seen.emplace(q, Word{}).second) queue.push_back({q, Word{}, Word{}});
  }
  bool exhausted = true;
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (f.final.count(item.state) && item.nf == target) {
      // Re-verify the witness independently of the search bookkeeping.
      if (cs.normal_form(item.witness) == target) return {Membership::yes, item.witness};
    }
    if (item.witness.size() >= depth) {
      exhausted = false;
      continue;
    }
    for (const auto* t : index.by_from[item.state]) {
      if (!t->sym) continue;
      Word next_witness = item.witness * *t->sym;
      Word next_nf = cs.normal_form(item.nf * *t->sym);
      for (std::size_t r : index.closure({t->to})) {
        if (seen.emplace(r, next_nf).second) queue.push_back({r, next_nf, next_witness});
      }
    }
  }
  // Saturation: every reachable (state, normal form) pair was visited, so
  // the absence of a match is definitive.
  if (exhausted) return {Membership::no, std::nullopt};
  return {Membership::unknown, std::nullopt};
}

Fsa parse_fsa(const std::string& text) {
  Fsa f;
  bool have_states = false;
  auto parse_state = [](const std::string& tok, int line) -> std::size_t {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw ParseError(line, "bad state id '" + tok + "'");
    }
  };
  for (const FormatLine& line : format_lines(text)) {
    if (line.key == "states") {
      if (have_states) throw ParseError(line.number, "duplicate states line");
      f.state_count = parse_state(line.value, line.number);
      have_states = true;
    } else if (line.key == "initial" || line.key == "final") {
      if (!have_states) throw ParseError(line.number, line.key + " before states");
      std::istringstream in(line.value);
      for (std::string tok; in >> tok;) {
        std::size_t q = parse_state(tok, line.number);
        if (q >= f.state_count) throw ParseError(line.number, "state out of range: " + tok);
        (line.key == "initial" ? f.initial : f.final).insert(q);
      }
    } else if (line.key == "trans") {
      if (!have_states) throw ParseError(line.number, "trans before states");
      std::istringstream in(line.value);
      std::string p, sym, q;
      if (!(in >> p >> sym >> q))
        throw ParseError(line.number, "malformed transition: " + line.value);
      std::string extra;
      if (in >> extra) throw ParseError(line.number, "trailing tokens: " + line.value);
      std::size_t from = parse_state(p, line.number);
      std::size_t to = parse_state(q, line.number);
      if (from >= f.state_count || to >= f.state_count)
        throw ParseError(line.number, "state out of range in transition");
      if (sym == "eps") {
        f.add_transition(from, std::nullopt, to);
      } else {
        Word w = parse_word(sym, line.number);
        if (w.size() != 1) throw ParseError(line.number, "bad symbol token '" + sym + "'");
        f.add_transition(from, w[0], to);
      }
    } else {
      throw ParseError(line.number, "malformed line (unknown key '" + line.key + "')");
    }
  }
  if (!have_states) throw ParseError(0, "missing states line");
  return f;
}

std::string serialize_fsa(const Fsa& f) {
  std::string out = "states: " + std::to_string(f.state_count) + "\n";
  out += "initial:";
  for (std::size_t q : f.initial) out += " " + std::to_string(q);
  out += "\nfinal:";
  for (std::size_t q : f.final) out += " " + std::to_string(q);
  out += "\n";
  std::vector<Fsa::Transition> sorted = f.transitions;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& t : sorted) {
    out += "trans: " + std::to_string(t.from) + " " + (t.sym ? to_string(*t.sym) : "eps") +
           " " + std::to_string(t.to) + "\n";
  }
  return out;
}

std::string to_dot(const Fsa& f, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
  for (std::size_t q : f.initial) {
    out += "  start" + std::to_string(q) + " [shape=point];\n";
    out += "  start" + std::to_string(q) + " -> q" + std::to_string(q) + ";\n";
  }
  for (std::size_t q = 0; q < f.state_count; ++q) {
    out += "  q" + std::to_string(q) + " [shape=" +
           (f.final.count(q) ? "doublecircle" : "circle") + "];\n";
  }
  for (const auto& t : f.transitions) {
    out += "  q" + std::to_string(t.from) + " -> q" + std::to_string(t.to) + " [label=\"" +
           (t.sym ? to_string(*t.sym) : "eps") + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace fpres
