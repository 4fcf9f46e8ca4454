/* word.hpp -- words over signed generator alphabets. */

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpres {

/// Error raised when an input file or word string is malformed.
/// `line` is 1-based; 0 means "not tied to a line".
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  int line;
};

/// A single signed generator occurrence. `sign` is +1 or -1.
struct Symbol {
  std::string name;
  int sign = +1;

  auto operator<=>(const Symbol&) const = default;
};

/// A finite sequence of symbols. The empty word is the identity.
struct Word {
  std::vector<Symbol> syms;

  Word() = default;
  explicit Word(std::vector<Symbol> s) : syms(std::move(s)) {}

  static Word letter(std::string name, int sign = +1) {
    Word w;
    w.syms.push_back(Symbol{std::move(name), sign});
    return w;
  }

  bool empty() const { return syms.empty(); }
  std::size_t size() const { return syms.size(); }
  const Symbol& operator[](std::size_t i) const { return syms[i]; }

  /// True iff no symbol carries a negative sign (ε is positive).
  bool positive() const;

  Word& operator*=(const Word& rhs);
  Word& operator*=(const Symbol& s);

  /// Subword [from, from+len).
  Word factor(std::size_t from, std::size_t len) const;

  auto operator<=>(const Word&) const = default;
};

Word operator*(Word lhs, const Word& rhs);
Word operator*(Word lhs, const Symbol& rhs);

/// w^k; negative exponents invert.
Word pow(const Word& w, int k);

/// Reverses the word and flips every sign.
Word invert_word(const Word& w);

/// Cancels adjacent s s^{-1} pairs until none remain.
Word free_reduce(const Word& w);

/// All nonempty prefixes in increasing length order; |result| == |w|.
std::vector<Word> prefixes(const Word& w);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

/// Proper nonempty words that are simultaneously a prefix and a suffix
/// of `w` (borders), in increasing length order. Requires `w` positive.
std::vector<Word> self_overlaps(const Word& w);

/// Prefix/suffix matches within a set of positive nonempty words,
/// including borders of a single word.
struct OverlapReport {
  std::map<Word, std::vector<Word>> self_overlaps;
  struct Cross {
    Word first;    // word contributing the prefix
    Word second;   // word contributing the suffix
    Word overlap;  // the common piece
  };
  std::vector<Cross> cross_overlaps;

  bool overlap_free() const { return self_overlaps.empty() && cross_overlaps.empty(); }
};

OverlapReport overlap_report(const std::vector<Word>& ws);

/// True iff no nonempty prefix of a member equals a nonempty suffix of a
/// member. Self-pairs count with proper borders, so {aba} fails.
bool is_overlap_free(const std::vector<Word>& ws);

/// An ordered alphabet; list position is the shortlex precedence.
struct Alphabet {
  std::vector<std::string> names;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> n);

  std::size_t size() const { return names.size(); }
  bool contains(const std::string& name) const;
  std::size_t index(const std::string& name) const;  // throws on unknown name
};

/// Shortlex: length first, then left-to-right by precedence with
/// g ranked before g^{-1}.
bool shortlex_less(const Word& u, const Word& v, const Alphabet& a);

/// Token form: symbols joined by single spaces, inverses as name^-1,
/// the empty word as "1".
std::string to_string(const Symbol& s);
std::string to_string(const Word& w);

/// Parses whitespace-separated symbol tokens; "1" alone denotes ε.
Word parse_word(const std::string& text, int line = 0);

/// CLI convenience: a token that is not a known generator name is split
/// into single-character symbols, so `baaba` reads as b a a b a.
Word parse_word_compact(const std::string& text, const Alphabet& a);

}  // namespace fpres
