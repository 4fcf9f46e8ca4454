/* presentation.hpp -- monoid/group/inverse presentations and their file format. */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fpres/word.hpp"

namespace fpres {

enum class Kind { monoid, group, inverse };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s, int line = 0);

/// A presentation of one of the three kinds. Generator order doubles as
/// the default shortlex precedence.
struct Presentation {
  Kind kind = Kind::monoid;
  std::vector<std::string> generators;
  std::vector<std::pair<Word, Word>> relations;

  Alphabet alphabet() const { return Alphabet(generators); }

  auto operator<=>(const Presentation&) const = default;
};

/// Every relation side is a word over the listed generators; monoid-kind
/// relations contain only positive words; generator names are valid
/// tokens. Throws ParseError (line 0) on violation.
void validate(const Presentation& p);

/// All defining relations have empty right-hand side.
bool is_special(const Presentation& p);

/// Both sides of every relation are positive.
bool is_positive(const Presentation& p);

/// Text format:
///   # comment
///   kind: monoid|group|inverse
///   gens: g1 g2 ...
///   rel: <word> = <word>
/// Words are whitespace-separated tokens, inverses written name^-1 and
/// the empty word written "1".
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

/// Internal line-oriented scanner shared by the presentation, rewriting
/// system and homomorphism formats.
struct FormatLine {
  int number = 0;        // 1-based line number
  std::string key;       // text before the first ':'
  std::string value;     // text after it, trimmed
};
std::vector<FormatLine> format_lines(const std::string& text);

std::vector<std::string> parse_generator_list(const FormatLine& line);

}  // namespace fpres
