// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Each criterion is evaluated from the verification suites at the pinned
// desk-scale parameters; timing bounds are enforced where stated.

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "fpres/hnn.hpp"
#include "fpres/report.hpp"
#include "fpres/verify.hpp"

namespace {

using fpres::VerificationReport;
using Status = fpres::VerificationReport::Status;

// All entries whose id starts with `prefix` exist and PASS.
bool entries_pass(const VerificationReport& report, const std::string& prefix) {
  bool seen = false;
  for (const auto& e : report.entries) {
    if (e.id.rfind(prefix, 0) != 0) continue;
    seen = true;
    if (e.status != Status::PASS) return false;
  }
  return seen;
}

struct Acceptance {
  bool all_ok = true;
  std::vector<std::pair<int, std::string>> lines;

  void criterion(int number, bool ok, const std::string& description) {
    lines.emplace_back(number, std::string(ok ? "PASS" : "FAIL") + " criterion " +
                                   std::to_string(number) + ": " + description);
    all_ok = all_ok && ok;
  }

  void print() {
    std::sort(lines.begin(), lines.end());
    for (const auto& [number, line] : lines) std::printf("%s\n", line.c_str());
  }
};

}  // namespace

int main() {
  Acceptance acc;

  // 1 & 2: completion and confluence at the four parameter pairs.
  {
    bool completion = true, confluence = true, within_time = true;
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      VerificationReport r = fpres::verify_fcrs(m, n);
      completion = completion && entries_pass(r, "fcrs.completion");
      confluence = confluence && entries_pass(r, "fcrs.confluent") &&
                   entries_pass(r, "fcrs.pair-anatomy");
      within_time = within_time && r.elapsed.count() < 10.0;
    }
    acc.criterion(1, completion && within_time,
                  "completion from {bQa -> a} yields the m+1 closed-form rules in < 10 s "
                  "for (m,n) in {2,3}^2");
    acc.criterion(2, confluence,
                  "fcrs(m,n) is locally confluent and every overlap joins at the "
                  "w_{i,j} = a v_{i,j} pattern");
  }

  // 3 & 4: witness commutations and the ball census at (2,2).
  {
    VerificationReport r = fpres::verify_p4_trace(2, 2, 4);
    acc.criterion(3, entries_pass(r, "trace.pair."),
                  "the four witness words commute exactly on P4-adjacent pairs "
                  "(6 pairs, both orders)");
    acc.criterion(4,
                  entries_pass(r, "trace.ball-census") &&
                      entries_pass(r, "trace.witness-factors") && r.elapsed.count() < 60.0,
                  "ball radius 4 (340 sequences): normal-form count equals trace-class "
                  "count in < 60 s");
  }

  // 5 & 10: the kernel presentation and the section/retraction pair.
  {
    VerificationReport r = fpres::verify_rs_subgroup(2, 2);
    acc.criterion(5,
                  entries_pass(r, "rs.generator") && entries_pass(r, "rs.power-relators") &&
                      entries_pass(r, "rs.commutator-relators") &&
                      entries_pass(r, "rs.relator-count"),
                  "Reidemeister-Schreier kernel of G_{2,2} mod 4 matches the expected "
                  "presentation after the alpha_{i+n}^m = alpha_i^{-m} substitution");
    acc.criterion(10,
                  entries_pass(r, "rs.section-verified") &&
                      entries_pass(r, "rs.retraction-verified") &&
                      entries_pass(r, "rs.retraction-identity"),
                  "the maps s and rho verify and rho after s is the identity");
  }

  // 6: abelianizations.
  {
    VerificationReport r = fpres::verify_p4_group_abelian(2);
    acc.criterion(6, entries_pass(r, "abelian."),
                  "abelianizations: host group Z^3, A(P4) Z^4, G_{2,n} Z + Z/4, toy "
                  "encoding = base + Z");
  }

  // 7: L-class witnesses.
  {
    VerificationReport r = fpres::verify_l_class(2, 2, 3, 16);
    acc.criterion(7, entries_pass(r, "lclass."),
                  "L-class witnesses exist for every w in {a,ba}+ of length <= 3, "
                  "certificates re-verified");
  }

  // 8: the phi transform against the word-by-word formula.
  {
    VerificationReport r = fpres::verify_phi(50, 12);
    acc.criterion(8, entries_pass(r, "phi.random-agreement"),
                  "automaton phi equals the displayed formula on 50 random automata, "
                  "enumerated to length 12");
  }

  // 9: the gadget language.
  {
    VerificationReport r = fpres::verify_omega();
    acc.criterion(9, entries_pass(r, "omega."),
                  "the gadget automaton matches a 20-word sample and double reversal "
                  "is an identity");
  }

  // 11: the HNN trace submonoid.
  {
    VerificationReport r = fpres::verify_trace_submonoid(4);
    acc.criterion(11, entries_pass(r, "hnn."),
                  "trace submonoid of the HNN extension: commutations, separations, "
                  "ball census, affine model");
  }

  // 12: file-format round trips and the encoding back-substitution.
  {
    VerificationReport roundtrip = fpres::verify_roundtrip();
    VerificationReport encoder = fpres::verify_encoder();
    acc.criterion(12,
                  entries_pass(roundtrip, "roundtrip.") &&
                      entries_pass(encoder, "encoder.back-substitution"),
                  "presentation/automaton/system files round-trip byte-stably and "
                  "t x -> a recovers the encoding inputs");
  }

  acc.print();
  return acc.all_ok ? 0 : 1;
}
