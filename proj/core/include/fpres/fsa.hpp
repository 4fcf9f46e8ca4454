/* fsa.hpp -- finite automata over signed alphabets; rational subsets. */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpres/rewrite.hpp"
#include "fpres/word.hpp"

namespace fpres {

/// Nondeterministic finite automaton with ε-moves. States are 0..n-1.
struct Fsa {
  struct Transition {
    std::size_t from = 0;
    std::optional<Symbol> sym;  // nullopt is an ε-move
    std::size_t to = 0;

    auto operator<=>(const Transition&) const = default;
  };

  std::size_t state_count = 0;
  std::vector<Symbol> alphabet;
  std::vector<Transition> transitions;
  std::set<std::size_t> initial;
  std::set<std::size_t> final;

  std::size_t add_state() { return state_count++; }
  void add_transition(std::size_t from, std::optional<Symbol> sym, std::size_t to);
  void add_symbol(const Symbol& s);  // idempotent

  /// Checks that transitions reference declared states and symbols.
  void validate() const;
};

bool accepts(const Fsa& f, const Word& w);

/// A single-word language; the alphabet is the word's symbols.
Fsa singleton(const Word& w);
/// Finite language over the union of the words' symbols.
Fsa finite_language(const std::vector<Word>& ws);
/// The empty language over a given alphabet.
Fsa empty_language(std::vector<Symbol> alphabet = {});

Fsa union_of(const Fsa& f, const Fsa& g);
Fsa concat(const Fsa& f, const Fsa& g);
Fsa star(const Fsa& f);
Fsa plus_of(const Fsa& f);  // f f*
Fsa reverse(const Fsa& f);

/// Image under the homomorphism h (total on f's alphabet).
Fsa hom_image(const Fsa& f, const std::map<Symbol, Word>& h);

/// Preimage: accepts w iff h(w) is in L(f); `domain` is the alphabet of
/// the result and h must be total on it.
Fsa inverse_hom_image(const Fsa& f, const std::map<Symbol, Word>& h,
                      const std::vector<Symbol>& domain);

enum class Side { left, right };

/// Removes one mandatory leading (left) or trailing (right) occurrence of
/// `sym`: left quotient {v : sym v in L}, right quotient {u : u sym in L}.
Fsa letter_quotient(const Fsa& f, Side side, const Symbol& sym);

/// Deterministic automaton over f's alphabet (ε-moves eliminated).
Fsa determinize(const Fsa& f);
Fsa intersect(const Fsa& f, const Fsa& g);
Fsa complement(const Fsa& f, const std::vector<Symbol>& alphabet);
bool is_empty(const Fsa& f);
bool equal_language(const Fsa& f, const Fsa& g);

/// Words of the language with length <= max_len, shortlex-sorted by the
/// automaton's alphabet order.
std::vector<Word> enumerate_language(const Fsa& f, std::size_t max_len);

/// Chosen words b_{i,j} indexed by ordered symbol pairs.
struct LetterWordTable {
  std::map<std::pair<Symbol, Symbol>, Word> entries;

  const Word& at(const Symbol& i, const Symbol& j) const;
};

/// The regularity-preserving map
///   phi(a_{i_1} ... a_{i_k}) = b_{i_{k-1},i_k} ... b_{i_1,i_2},
/// realized as the composite of a doubling homomorphism, end-letter
/// deletion, a pairing inverse homomorphism, reversal and substitution.
/// Requires every accepted word to have length >= 2 (verified by
/// intersecting with the length-<=1 language).
Fsa phi_transform(const Fsa& f, const LetterWordTable& table);

/// Automaton for a(d(cb)+a)*dc+ over {a,b,c,d}.
Fsa omega_language();

/// phi(Q u2) with the supplied witness table; requires ε not in L(q).
Fsa build_qbar(const Fsa& q, const LetterWordTable& witnesses, const Word& u2);

enum class Membership { yes, no, unknown };

struct MembershipResult {
  Membership verdict = Membership::unknown;
  std::optional<Word> witness;  // accepted word equal to the query (yes only)
};

/// Exact membership of w in L(f).
MembershipResult rational_membership(const Fsa& f, const Word& w);

/// Membership of w in the image of L(f) modulo a certified complete
/// system: explores (state, normal form) pairs breadth-first up to words
/// of length `depth`. Answers yes only with a witness that is re-verified
/// by a normal-form equality; answers no when the exploration saturates,
/// and unknown otherwise.
MembershipResult rational_membership(const Fsa& f, const Word& w,
                                     const CompleteSystem& cs, std::size_t depth);

/// File format: "states: n", "initial: i ...", "final: f ...", one
/// "trans: p <sym> q" per edge with "eps" for ε. The alphabet is the set
/// of transition symbols in order of first appearance.
Fsa parse_fsa(const std::string& text);
std::string serialize_fsa(const Fsa& f);

std::string to_dot(const Fsa& f, const std::string& name = "fsa");

}  // namespace fpres
