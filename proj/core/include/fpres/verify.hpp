/* verify.hpp -- the desk-scale verification suites behind `verify ...`. */

#pragma once

#include <cstddef>
#include <vector>

#include "fpres/report.hpp"

namespace fpres {

/// Completion from {b Q_{m,n} a -> a} reaches exactly the m+1 closed-form
/// rules; the system is locally confluent; every critical pair overlaps
/// rule (i) with context s_j = (b a^n)^j b a and joins at a v_{i,j}.
VerificationReport verify_fcrs(int m, int n, std::size_t budget = 1'000'000);

/// Witness commutations match P4 adjacency exactly and the ball census
/// matches swap-closure trace classes.
VerificationReport verify_p4_trace(int m, int n, int ball);

/// Abelianizations: the trace-submonoid host group, A(P4), G_{2,n}, and
/// the toy encoding output against its base group.
VerificationReport verify_p4_group_abelian(int n = 2);

/// L-class witnesses for every word of {a, ba}+ of length <= maxlen, with
/// certificates re-verified by an independent normal-form pass.
VerificationReport verify_l_class(int m, int n, int maxlen, std::size_t depth);

/// Reidemeister-Schreier kernel of G_{m,n} ->> Z/2n matches the expected
/// presentation after the alpha_{i+n}^m = alpha_i^{-m} substitution, and
/// the section/retraction pair verifies.
VerificationReport verify_rs_subgroup(int m, int n);

/// Automaton-level phi against the word-by-word formula on pseudorandom
/// automata; languages compared by bounded enumeration.
VerificationReport verify_phi(int automata_count = 50, int enumeration_length = 12);

/// The gadget language sample and the double-reversal identity.
VerificationReport verify_omega();

/// The toy encoding: output shapes, relator assembly, witness
/// certificates, prefix generators and the quasi-positive relator.
VerificationReport verify_encoder();

/// Byte-stable file-format round trips and the encoding back-substitution.
VerificationReport verify_roundtrip();

struct SuiteParams {
  int ball = 4;
  int lclass_maxlen = 3;
  std::size_t depth = 16;
  std::size_t budget = 1'000'000;
  int phi_automata = 50;
};

/// Every suite at the default desk-scale parameters.
std::vector<VerificationReport> verify_all(const SuiteParams& params = {});

}  // namespace fpres
