#include "fpres/transform.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <sstream>

namespace fpres {

void validate(const Homomorphism& h) {
  validate(h.source);
  validate(h.target);
  const Alphabet target_alphabet = h.target.alphabet();
  for (const std::string& g : h.source.generators) {
    auto it = h.images.find(g);
    if (it == h.images.end())
      throw std::invalid_argument("homomorphism: no image for generator '" + g + "'");
    for (const Symbol& s : it->second.syms) {
      if (!target_alphabet.contains(s.name))
        throw std::invalid_argument("homomorphism: image symbol '" + s.name +
                                    "' is not a target generator");
      if (h.target.kind == Kind::monoid && s.sign < 0)
        throw std::invalid_argument("homomorphism: negative image symbol for monoid target");
    }
  }
}

Word apply(const Homomorphism& h, const Word& w) {
  Word out;
  for (const Symbol& s : w.syms) {
    auto it = h.images.find(s.name);
    if (it == h.images.end())
      throw std::invalid_argument("homomorphism: no image for generator '" + s.name + "'");
    out *= s.sign > 0 ? it->second : invert_word(it->second);
  }
  return out;
}

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::verified: return "verified";
    case CheckVerdict::refuted: return "refuted";
    case CheckVerdict::unverified_within_bound: return "unverified_within_bound";
  }
  return "?";
}

namespace {

std::vector<Word> defining_relators(const Presentation& p) {
  std::vector<Word> out;
  for (const auto& [lhs, rhs] : p.relations) {
    Word r = free_reduce(lhs * invert_word(rhs));
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

// Free reduction interleaved with deletion of factors that spell a target
// relator or its inverse; leftmost match first, relators in listed order.
Word group_canonical(Word w, const std::vector<Word>& relators) {
  std::vector<Word> patterns;
  for (const Word& r : relators) {
    patterns.push_back(r);
    patterns.push_back(invert_word(r));
  }
  w = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const Word& pat : patterns) {
        if (pat.empty() || pos + pat.size() > w.size()) continue;
        if (w.factor(pos, pat.size()) == pat) {
          Word next = w.factor(0, pos);
          next *= w.factor(pos + pat.size(), w.size() - pos - pat.size());
          w = free_reduce(next);
          changed = true;
          break;
        }
      }
    }
  }
  return w;
}

}  // namespace

bool derivation_reaches(const Presentation& p, const Word& from, const Word& to,
                        std::size_t max_word_length, std::size_t max_steps) {
  const bool reduce = p.kind != Kind::monoid;
  auto canon = [reduce](const Word& w) { return reduce ? free_reduce(w) : w; };

  std::vector<std::pair<Word, Word>> moves;
  for (const auto& [lhs, rhs] : p.relations) {
    moves.emplace_back(lhs, rhs);
    moves.emplace_back(rhs, lhs);
  }

  const Word target = canon(to);
  Word start = canon(from);
  if (start == target) return true;

  // Shortest words first so a generous length cap cannot starve a short
  // derivation of the step budget; ties break by discovery order.
  using Entry = std::pair<std::pair<std::size_t, std::size_t>, Word>;
  auto later = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  std::set<Word> seen{start};
  std::size_t discovered = 0;
  queue.push({{start.size(), discovered++}, start});

  std::size_t steps = 0;
  while (!queue.empty() && steps < max_steps) {
    Word cur = queue.top().second;
    queue.pop();
    for (const auto& [pat, repl] : moves) {
      for (std::size_t pos = 0; pos + pat.size() <= cur.size(); ++pos) {
        if (pat.size() > 0 && cur.factor(pos, pat.size()) != pat) continue;
        ++steps;
        Word next = cur.factor(0, pos);
        next *= repl;
        next *= cur.factor(pos + pat.size(), cur.size() - pos - pat.size());
        next = canon(next);
        if (next == target) return true;
        if (next.size() <= max_word_length && seen.insert(next).second)
          queue.push({{next.size(), discovered++}, std::move(next)});
      }
    }
  }
  return false;
}

CheckVerdict check_homomorphism(const Homomorphism& h, const CheckMethod& method) {
  validate(h);
  if (std::holds_alternative<FreeReductionMethod>(method)) {
    if (h.target.kind != Kind::group)
      throw std::invalid_argument("free-reduction check requires a group-kind target");
    const std::vector<Word> relators = defining_relators(h.target);
    bool all = true;
    for (const auto& [lhs, rhs] : h.source.relations) {
      Word image = apply(h, lhs) * invert_word(apply(h, rhs));
      if (!group_canonical(std::move(image), relators).empty()) all = false;
    }
    if (all) return CheckVerdict::verified;
    return relators.empty() ? CheckVerdict::refuted : CheckVerdict::unverified_within_bound;
  }
  if (const auto* rw = std::get_if<RewritingMethod>(&method)) {
    if (rw->system == nullptr)
      throw std::invalid_argument("rewriting check requires a certified system");
    if (h.target.kind == Kind::inverse)
      throw std::invalid_argument("rewriting check is not valid for inverse-kind targets");
    const Alphabet& a = rw->system->system().alphabet;
    for (const std::string& g : h.target.generators)
      if (!a.contains(g))
        throw std::invalid_argument("rewriting system does not cover target generator '" +
                                    g + "'");
    for (const auto& [lhs, rhs] : h.source.relations) {
      if (rw->system->normal_form(apply(h, lhs)) != rw->system->normal_form(apply(h, rhs)))
        return CheckVerdict::refuted;
    }
    return CheckVerdict::verified;
  }
  const auto& ds = std::get<DerivationSearchMethod>(method);
  for (const auto& [lhs, rhs] : h.source.relations) {
    if (!derivation_reaches(h.target, apply(h, lhs), apply(h, rhs), ds.max_word_length,
                            ds.max_steps))
      return CheckVerdict::unverified_within_bound;
  }
  return CheckVerdict::verified;
}

bool check_retraction(const Homomorphism& s, const Homomorphism& rho) {
  if (s.target.generators != rho.source.generators ||
      s.source.generators != rho.target.generators)
    throw std::invalid_argument("check_retraction: maps do not compose");
  for (const std::string& g : s.source.generators) {
    Word round_trip = free_reduce(apply(rho, apply(s, Word::letter(g))));
    if (round_trip != Word::letter(g)) return false;
  }
  return true;
}

PositivizeResult positivize_gmn(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("positivize_gmn: require m, n >= 1");
  const Word x = Word::letter("x"), y = Word::letter("y");
  const Word a = Word::letter("a"), b = Word::letter("b");

  Presentation gmn{Kind::group, {"x", "y"}, {}};
  gmn.relations.emplace_back(pow(x, m) * pow(y, n) * pow(x, m) * pow(y, -n), Word{});

  Presentation positive{Kind::group, {"a", "b"}, {}};
  positive.relations.emplace_back(pow(b * pow(a, n), m) * pow(pow(a, n) * b, m), Word{});

  PositivizeResult out;
  out.forward = Homomorphism{gmn, positive, {{"x", b * pow(a, n)}, {"y", a}}};
  out.backward = Homomorphism{positive, gmn, {{"a", y}, {"b", x * pow(y, -n)}}};
  out.positive = std::move(positive);
  return out;
}

SchreierResult reidemeister_schreier(const Presentation& p,
                                     const std::map<std::string, int>& phi, int modulus) {
  validate(p);
  if (p.kind != Kind::group)
    throw std::invalid_argument("reidemeister_schreier: group-kind presentation required");
  if (modulus < 1) throw std::invalid_argument("reidemeister_schreier: modulus must be >= 1");

  auto residue = [&phi, modulus](const std::string& name) {
    auto it = phi.find(name);
    if (it == phi.end())
      throw std::invalid_argument("reidemeister_schreier: no residue for generator '" + name +
                                  "'");
    int r = it->second % modulus;
    return r < 0 ? r + modulus : r;
  };
  for (const auto& [lhs, rhs] : p.relations) {
    long long sum = 0;
    for (const Symbol& s : lhs.syms) sum += static_cast<long long>(s.sign) * residue(s.name);
    for (const Symbol& s : rhs.syms) sum -= static_cast<long long>(s.sign) * residue(s.name);
    if (((sum % modulus) + modulus) % modulus != 0)
      throw std::invalid_argument(
          "reidemeister_schreier: relator " + to_string(free_reduce(lhs * invert_word(rhs))) +
          " has nonzero residue, the map is not a homomorphism onto Z/" +
          std::to_string(modulus));
  }

  // Transversal: breadth-first over positive generator steps gives the
  // shortlex-least positive representative of each reached coset.
  std::map<int, Word> rep;
  std::vector<int> order;
  std::set<std::pair<int, std::string>> tree_edges;
  rep[0] = Word{};
  order.push_back(0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (const std::string& g : p.generators) {
      int c2 = (c + residue(g)) % modulus;
      if (!rep.count(c2)) {
        rep[c2] = rep[c] * Word::letter(g);
        tree_edges.insert({c, g});
        order.push_back(c2);
        queue.push_back(c2);
      }
    }
  }

  // Schreier generators: t s (ts-bar)^{-1} for non-tree edges.
  struct Gen {
    std::string name;
    Word word;
  };
  std::vector<Gen> gens;
  std::map<std::pair<int, std::string>, std::size_t> gen_at;
  for (int c : order) {
    for (const std::string& g : p.generators) {
      if (tree_edges.count({c, g})) continue;
      int c2 = (c + residue(g)) % modulus;
      Word word = free_reduce(rep[c] * Word::letter(g) * invert_word(rep[c2]));
      gen_at[{c, g}] = gens.size();
      gens.push_back({"u" + std::to_string(gens.size()), std::move(word)});
    }
  }

  // Rewrite t R t^{-1}: scanning R from coset(t) collects exactly the
  // non-tree factors; the t and t^{-1} tails contribute tree edges only.
  auto rewrite_from = [&](int coset, const Word& relator) {
    Word out;
    int c = coset;
    for (const Symbol& s : relator.syms) {
      if (s.sign > 0) {
        if (!tree_edges.count({c, s.name}))
          out *= Symbol{gens[gen_at.at({c, s.name})].name, +1};
        c = (c + residue(s.name)) % modulus;
      } else {
        int c2 = ((c - residue(s.name)) % modulus + modulus) % modulus;
        if (!tree_edges.count({c2, s.name}))
          out *= Symbol{gens[gen_at.at({c2, s.name})].name, -1};
        c = c2;
      }
    }
    return free_reduce(out);
  };

  SchreierResult result;
  result.kernel.kind = Kind::group;
  for (const Gen& g : gens) result.kernel.generators.push_back(g.name);
  std::set<Word> seen_relators;
  for (int c : order) {
    for (const auto& [lhs, rhs] : p.relations) {
      Word relator = free_reduce(lhs * invert_word(rhs));
      Word rewritten = rewrite_from(c, relator);
      if (rewritten.empty()) continue;
      if (seen_relators.insert(rewritten).second)
        result.kernel.relations.emplace_back(std::move(rewritten), Word{});
    }
  }

  result.inclusion.source = result.kernel;
  result.inclusion.target = p;
  for (const Gen& g : gens) result.inclusion.images[g.name] = g.word;
  for (int c : order) result.transversal.push_back(rep[c]);
  return result;
}

Presentation verify_units_decomposition(const Presentation& p,
                                        const std::vector<Word>& pieces) {
  validate(p);
  if (!is_special(p) || p.relations.size() != 1)
    throw std::invalid_argument("units decomposition: special presentation with one relator "
                                "required");
  const Word& relator = p.relations[0].first;

  Word glued;
  for (const Word& piece : pieces) {
    if (piece.empty() || !piece.positive())
      throw std::invalid_argument("units decomposition: pieces must be positive and nonempty");
    glued *= piece;
  }
  if (glued != relator)
    throw std::invalid_argument("units decomposition: pieces do not concatenate to the "
                                "relator");
  if (!is_overlap_free(pieces))
    throw std::invalid_argument("units decomposition: piece set is not overlap-free");

  auto piece_name = [](const Word& piece) {
    std::string name = "b_";
    for (const Symbol& s : piece.syms) name += s.name;
    return name;
  };

  Presentation units;
  units.kind = Kind::monoid;
  Word units_relator;
  for (const Word& piece : pieces) {
    std::string name = piece_name(piece);
    if (std::find(units.generators.begin(), units.generators.end(), name) ==
        units.generators.end())
      units.generators.push_back(name);
    units_relator *= Word::letter(name);
  }
  units.relations.emplace_back(std::move(units_relator), Word{});
  return units;
}

IntMatrix relation_matrix(const Presentation& p) {
  const Alphabet a = p.alphabet();
  IntMatrix m(p.relations.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    for (const Symbol& s : p.relations[r].first.syms) m.at(r, a.index(s.name)) += s.sign;
    for (const Symbol& s : p.relations[r].second.syms) m.at(r, a.index(s.name)) -= s.sign;
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  return abelian_invariants(relation_matrix(p));
}

Homomorphism parse_homomorphism(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::string source_text, target_text;
  std::vector<std::pair<std::string, int>> map_lines;
  int section = 0;  // 0 source, 1 maps, 2 target
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string stripped = raw;
    auto b = stripped.find_first_not_of(" \t\r");
    bool is_map = b != std::string::npos && stripped.compare(b, 4, "map:") == 0;
    bool is_kind = b != std::string::npos && stripped.compare(b, 5, "kind:") == 0;
    if (section == 0 && is_map) section = 1;
    if (section == 1 && is_kind) section = 2;
    if (section == 1 && is_map) {
      map_lines.emplace_back(stripped.substr(b + 4), number);
    } else if (section == 0) {
      source_text += raw + "\n";
    } else if (section == 2) {
      target_text += raw + "\n";
    } else if (b != std::string::npos && stripped[b] != '#') {
      throw ParseError(number, "unexpected line between map block and target block");
    }
  }
  Homomorphism h;
  h.source = parse_presentation(source_text);
  h.target = parse_presentation(target_text);
  for (const auto& [value, line] : map_lines) {
    auto arrow = value.find("->");
    if (arrow == std::string::npos) throw ParseError(line, "malformed map (missing '->')");
    std::string gen_text = value.substr(0, arrow);
    std::istringstream gen_in(gen_text);
    std::string gen;
    if (!(gen_in >> gen)) throw ParseError(line, "malformed map (missing generator)");
    std::string extra;
    if (gen_in >> extra) throw ParseError(line, "malformed map (one generator per line)");
    h.images[gen] = parse_word(value.substr(arrow + 2), line);
  }
  validate(h);
  return h;
}

std::string serialize_homomorphism(const Homomorphism& h) {
  std::string out = serialize_presentation(h.source);
  for (const std::string& g : h.source.generators)
    out += "map: " + g + " -> " + to_string(h.images.at(g)) + "\n";
  out += serialize_presentation(h.target);
  return out;
}

}  // namespace fpres
