/* encoder.hpp -- the two-relator encoding of submonoid membership:
 * positive group/inverse presentations, inverse witnesses, the
 * quasi-positive relator and prefix generating sets. */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpres/presentation.hpp"
#include "fpres/rewrite.hpp"

namespace fpres {

/// A special monoid presentation <A | q = 1> that presents a group, a set
/// X of positive words generating the submonoid of interest, and one
/// positive inverse witness per member of X.
struct EncodingInput {
  std::vector<std::string> alphabet;
  Word q;                             // positive relator; its first letter is distinguished
  std::vector<Word> x;                // w_1 .. w_k
  std::vector<Word> x_inverse;        // wbar_1 .. wbar_k
};

struct WitnessBound {
  std::size_t max_word_length = 24;
  std::size_t max_steps = 200'000;
};

struct EncodingOutput {
  Word r;                       // q with each distinguished letter replaced by t x
  Word s;                       // r minus its first letter; begins with x
  std::vector<Word> z;          // images of the w_i
  std::vector<Word> zbar;       // images of the wbar_i
  std::string x_name, t_name;   // fresh generator names
  Presentation h_group;         // <B, x, t | r = 1, second = 1>
  Presentation m_inverse;       // the same data as an inverse presentation
  std::vector<std::string> certificates;  // one witness certificate per w_i
};

/// Replaces the distinguished letter by t x everywhere in q, the w_i and
/// the wbar_i, and assembles the two-relator group and inverse
/// presentations. Every witness is re-certified (by normal forms when
/// {q -> 1} completes within the limits, else by bounded derivation);
/// an uncertifiable witness is an error.
EncodingOutput construction51(const EncodingInput& in, const WitnessBound& bound = {});

/// Searches positive nonempty words wbar in shortlex order with
/// w wbar = wbar w = 1 certified in <A | q = 1>; nullopt when the bound
/// exhausts.
std::optional<Word> find_inverse_witness(const std::vector<std::string>& alphabet,
                                         const Word& q, const Word& w,
                                         const WitnessBound& bound = {});

/// free_reduce(v u v^{-1}) for positive nonempty u, v.
Word quasi_positive_relator(const Word& u, const Word& v);

/// <A union {t} | u t = 1, v t = 1> as an inverse presentation, with a
/// fresh stable-letter name.
Presentation two_relator_inverse_form(const Word& u, const Word& v);

/// Union of the nonempty prefixes of the relators, deduplicated, in
/// length-then-lexicographic order of appearance.
std::vector<Word> prefix_generators(const std::vector<Word>& relators);

/// Replaces every occurrence of the two-letter factor t x by the single
/// letter; inverse of the construction's substitution.
Word unsubstitute(const Word& w, const std::string& t_name, const std::string& x_name,
                  const std::string& letter);

/// Input file format for the CLI: a presentation block followed by one
/// "x: <word>" line per generator of X and optionally a matching
/// "xbar: <word>" line per witness.
struct EncodingFile {
  EncodingInput input;
  std::vector<bool> witness_given;  // per x entry
};
EncodingFile parse_encoding_input(const std::string& text);

}  // namespace fpres
