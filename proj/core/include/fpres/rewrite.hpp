/* rewrite.hpp -- string rewriting over positive alphabets. */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpres/word.hpp"

namespace fpres {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One rewriting rule; `lhs` must exceed `rhs` in the owning system's
/// shortlex order (so every application strictly decreases rank).
struct Rule {
  Word lhs;
  Word rhs;

  auto operator<=>(const Rule&) const = default;
};

/// An ordered rule list over an alphabet whose listing order is the
/// shortlex precedence. The order is well-founded, hence the system is
/// Noetherian by construction.
struct RewriteSystem {
  Alphabet alphabet;
  std::vector<Rule> rules;
};

/// Validates words and rule orientation; throws on an unorientable rule
/// (lhs not strictly shortlex-greater than rhs), quoting the pair.
RewriteSystem make_rewrite_system(Alphabet alphabet, std::vector<Rule> rules);

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Leftmost-innermost reduction to an irreducible word. For a complete
/// system the result is the unique normal form. Counts rule applications
/// against `budget`; nullopt from the try_ form, BudgetExceeded from the
/// throwing form, when the budget runs out.
std::optional<Word> try_normal_form(const RewriteSystem& rs, const Word& w,
                                    std::size_t budget = kDefaultStepBudget);
Word normal_form(const RewriteSystem& rs, const Word& w,
                 std::size_t budget = kDefaultStepBudget);

/// A minimal overlap of two rule left-hand sides together with its two
/// one-step descendants. `ctx_*` is the (u, s, v) decomposition: for a
/// proper overlap source = u s v with lhs1 = us, lhs2 = sv; for
/// containment source = lhs1 = u lhs2 v.
struct CriticalPair {
  std::size_t rule1 = 0;
  std::size_t rule2 = 0;
  Word source;
  Word left_descendant;
  Word right_descendant;
  Word ctx_u, ctx_s, ctx_v;
  bool containment = false;
};

/// Enumerates every overlap (suffix of lhs1 = prefix of lhs2, including
/// whole-word and self-overlap cases) and every proper containment of one
/// lhs inside another. The trivial total self-overlap of a rule with
/// itself is skipped.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& rs);

struct ConfluenceVerdict {
  enum class Kind { confluent, counterexample, budget_exceeded };
  Kind kind = Kind::confluent;
  std::optional<CriticalPair> pair;  // set for counterexample / budget_exceeded

  bool confluent() const { return kind == Kind::confluent; }
};

/// Joins every critical pair within `budget` reduction steps per side.
ConfluenceVerdict is_locally_confluent(const RewriteSystem& rs,
                                       std::size_t budget = kDefaultStepBudget);

struct CompletionLimits {
  std::size_t max_rules = 64;
  std::size_t max_lhs_length = 512;
  std::size_t step_budget = kDefaultStepBudget;
};

struct CompletionResult {
  bool completed = false;     // false: some limit was hit, `system` is partial
  RewriteSystem system;
  std::size_t pairs_processed = 0;
};

/// Knuth-Bendix completion with interreduction. New rules are oriented by
/// shortlex; pending critical pairs are processed in FIFO order.
CompletionResult knuth_bendix(const RewriteSystem& start,
                              const CompletionLimits& limits = {});

/// The complete system for Mon<a,b | bQ_{m,n}a = a>: rule (i)
/// (ba^n)^m (a^n b)^m a -> a and, for 1 <= i <= m, rule (ii)
/// (ba^n)^m (a^n b)^{m-i} a^n a -> (a^n b)^{m-i} a^n (a^n b)^m a,
/// with precedence a < b.
RewriteSystem fcrs(int m, int n);

/// A rewriting system that passed the local-confluence check; Noetherian
/// by rule orientation, hence complete by Newman's lemma. Operations that
/// need unique normal forms take this wrapper instead of a raw system.
class CompleteSystem {
 public:
  static std::optional<CompleteSystem> certify(RewriteSystem rs,
                                               std::size_t budget = kDefaultStepBudget);

  const RewriteSystem& system() const { return rs_; }
  Word normal_form(const Word& w, std::size_t budget = kDefaultStepBudget) const;

 private:
  explicit CompleteSystem(RewriteSystem rs) : rs_(std::move(rs)) {}
  RewriteSystem rs_;
};

/// Certified fcrs(m, n); throws if certification unexpectedly fails.
CompleteSystem certified_fcrs(int m, int n);

/// File format: "kind: rewriting", a gens line, then one
/// "rule: <lhs> -> <rhs>" line per rule.
RewriteSystem parse_rewrite_system(const std::string& text);
std::string serialize_rewrite_system(const RewriteSystem& rs);

}  // namespace fpres
