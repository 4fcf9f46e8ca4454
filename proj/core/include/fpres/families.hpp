/* families.hpp -- the parametric presentations, embedding witnesses and
 * the bounded-ball verification harness. */

#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpres/presentation.hpp"
#include "fpres/report.hpp"
#include "fpres/rewrite.hpp"

namespace fpres {

/// A simple graph on named vertices; edges are commutation relations.
struct TraceGraph {
  std::vector<std::string> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // i < j

  static TraceGraph path(std::vector<std::string> vertices);
  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t vertex_index(const std::string& name) const;
};

enum class Family {
  G,              // Gp<x,y | x^m y^n x^m y^-n = 1>
  M,              // Mon<a,b | (b a^n)^m (a^n b)^m = 1>
  R,              // Mon<a,b | b Q_{m,n} a = a>
  K_target,       // kernel presentation on beta, alpha_0..alpha_{2n-1}
  BS_graph,       // Gp<d, c_0..c_{n-1} | [c_i^m, d] = 1>
  BP3,            // Gp<w0,w1,w2 | [w0,w2] = 1, [w0,w1^m] = 1>
  T_compression,  // the two-generator monoid that compresses onto the units example
  R_tripled,      // R with a -> aaa, b -> bbb
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);
std::vector<std::string> family_names();

Presentation make_family(Family f, int m, int n);

/// (b a^n)^m (a^n b)^m.
Word wmn_word(int m, int n);
/// b Q_{m,n} a, the left side of the defining relation of R.
Word r_relator_lhs(int m, int n);

/// (y x^m y^-1, y^{2n}, x^m, x y^{2n} x^-1) in path order; m, n >= 2.
std::array<Word, 4> p4_group_witnesses(int m, int n);

/// (a (b a^n)^{m-1} b a^{n-1}, a^{2n}, (b a^n)^m, b a^n a^{2n} (b a^n)^{m-1})
/// in path order; every entry factors over {a, ba}; m, n >= 2.
std::array<Word, 4> p4_trace_witnesses(int m, int n);

/// True iff w factors over {a, ba} by the greedy scan (b forces ba).
bool factors_over_a_ba(const Word& w);

/// Shortlex-least word in the swap-closure class of w: two words map to
/// the same result iff they are trace-equivalent over g.
Word foata_normal_form(const TraceGraph& g, const Word& w);

/// The full swap-closure class of w (adjacent-transposition closure).
std::set<Word> trace_class(const TraceGraph& g, const Word& w);

/// An L-relation certificate: p w = a and q a = w in R_{m,n}, both
/// equalities certified by normal forms under the complete system.
struct LWitness {
  Word w;
  Word p;
  Word q;
  std::vector<std::string> certificates;
};

/// Searches for the certificate. Constructive seed candidates derived
/// from the defining relator are tried first (these may be longer than
/// `depth`); plain shortlex enumeration up to `depth` is the fallback.
std::optional<LWitness> l_witness_search(int m, int n, const Word& w, std::size_t depth);

/// Ball check for the trace embedding: over all 4^1..4^L letter
/// sequences, fcrs-normal forms of the witness images coincide exactly on
/// swap-closure classes.
VerificationReport bounded_injectivity(int m, int n, int ball);

}  // namespace fpres
