/* transform.hpp -- presentation-level transformations and certificates:
 * homomorphism checking, retractions, positivization, Reidemeister-Schreier
 * rewriting, Adian invertible-piece verification, abelianization. */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "fpres/matrix.hpp"
#include "fpres/presentation.hpp"
#include "fpres/rewrite.hpp"

namespace fpres {

/// A map of presentations given on generators. For monoid-kind targets
/// every image must be positive.
struct Homomorphism {
  Presentation source;
  Presentation target;
  std::map<std::string, Word> images;
};

void validate(const Homomorphism& h);

/// Applies the generator map letterwise; negative letters map to the
/// inverted image.
Word apply(const Homomorphism& h, const Word& w);

enum class CheckVerdict { verified, refuted, unverified_within_bound };

std::string to_string(CheckVerdict v);

/// Free reduction on the image plus deletion of factors that spell a
/// defining relator of the target (or its inverse). Complete on free
/// targets; group-kind targets only.
struct FreeReductionMethod {};

/// Normal-form comparison under a certified complete system for the
/// target; complete, so a mismatch refutes.
struct RewritingMethod {
  const CompleteSystem* system = nullptr;
};

/// Breadth-first application of target relations in both directions;
/// a semi-decision, never refutes.
struct DerivationSearchMethod {
  std::size_t max_word_length = 24;
  std::size_t max_steps = 200'000;
};

using CheckMethod = std::variant<FreeReductionMethod, RewritingMethod, DerivationSearchMethod>;

CheckVerdict check_homomorphism(const Homomorphism& h, const CheckMethod& method);

/// True iff rho(s(g)) freely reduces to g for every generator g of s's
/// source. Throws on a composability mismatch.
bool check_retraction(const Homomorphism& s, const Homomorphism& rho);

/// Bounded two-way derivation between words under a presentation's
/// relations; used for witness certification.
bool derivation_reaches(const Presentation& p, const Word& from, const Word& to,
                        std::size_t max_word_length, std::size_t max_steps);

struct PositivizeResult {
  Presentation positive;   // <a,b | (b a^n)^m (a^n b)^m = 1>
  Homomorphism forward;    // x -> b a^n, y -> a
  Homomorphism backward;   // a -> y, b -> x y^{-n}
};

/// Positive presentation of <x,y | x^m y^n x^m y^{-n} = 1> together with
/// the isomorphism pair.
PositivizeResult positivize_gmn(int m, int n);

struct SchreierResult {
  Presentation kernel;      // presentation of the kernel subgroup
  Homomorphism inclusion;   // kernel generators -> words of the ambient group
  std::vector<Word> transversal;
};

/// Kernel presentation for the map onto Z/k sending each generator to the
/// given residue. Transversal: shortlex-least positive coset
/// representatives; generators are the nontrivial t s (ts-bar)^{-1};
/// relators are the rewritten t R t^{-1}, freely reduced, deduplicated.
SchreierResult reidemeister_schreier(const Presentation& p,
                                     const std::map<std::string, int>& phi, int modulus);

/// Checks that `pieces` concatenate to the single relator of the special
/// presentation and form an overlap-free set, then returns the group-of-
/// units presentation on one generator b_<piece> per distinct piece.
Presentation verify_units_decomposition(const Presentation& p,
                                        const std::vector<Word>& pieces);

/// Exponent-sum matrix: one row per relation, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

/// Smith-normal-form invariants of the relation matrix.
AbelianInvariants abelianization(const Presentation& p);

/// Homomorphism file format: source presentation block, "map: g -> <word>"
/// lines, then the target presentation block.
Homomorphism parse_homomorphism(const std::string& text);
std::string serialize_homomorphism(const Homomorphism& h);

}  // namespace fpres
