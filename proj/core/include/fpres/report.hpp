/* report.hpp -- structured pass/fail reports for the verification suites. */

#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace fpres {

struct VerificationReport {
  enum class Status { PASS, FAIL, UNKNOWN };

  struct Entry {
    std::string id;
    Status status = Status::PASS;
    std::string witness;  // FAIL entries always carry a concrete counterexample
  };

  std::string suite;
  std::vector<Entry> entries;
  std::chrono::duration<double> elapsed{0};

  void pass(std::string id, std::string witness = "");
  void fail(std::string id, std::string witness);
  void unknown(std::string id, std::string witness = "");
  void check(bool ok, std::string id, std::string witness);

  bool all_passed() const;
  bool any_failed() const;

  /// 0 all PASS, 1 some FAIL, 2 otherwise (some UNKNOWN).
  int exit_code() const;

  /// One line per entry, sorted by assertion id; deterministic
  /// (the elapsed time is not part of the text).
  std::string to_text() const;
};

std::string to_string(VerificationReport::Status s);

/// Merged exit code over several suites: FAIL dominates UNKNOWN.
int combined_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace fpres
