#include "fpres/report.hpp"

#include <algorithm>

namespace fpres {

void VerificationReport::pass(std::string id, std::string witness) {
  entries.push_back({std::move(id), Status::PASS, std::move(witness)});
}

void VerificationReport::fail(std::string id, std::string witness) {
  entries.push_back({std::move(id), Status::FAIL, std::move(witness)});
}

void VerificationReport::unknown(std::string id, std::string witness) {
  entries.push_back({std::move(id), Status::UNKNOWN, std::move(witness)});
}

void VerificationReport::check(bool ok, std::string id, std::string witness) {
  if (ok)
    pass(std::move(id), std::move(witness));
  else
    fail(std::move(id), std::move(witness));
}

bool VerificationReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.status == Status::PASS; });
}

bool VerificationReport::any_failed() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.status == Status::FAIL; });
}

int VerificationReport::exit_code() const {
  if (any_failed()) return 1;
  if (!all_passed()) return 2;
  return 0;
}

std::string to_string(VerificationReport::Status s) {
  switch (s) {
    case VerificationReport::Status::PASS: return "PASS";
    case VerificationReport::Status::FAIL: return "FAIL";
    case VerificationReport::Status::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

std::string VerificationReport::to_text() const {
  std::vector<Entry> sorted = entries;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Entry& a, const Entry& b) { return a.id < b.id; });
  std::string out = "suite: " + suite + "\n";
  for (const Entry& e : sorted) {
    out += to_string(e.status) + " " + e.id;
    if (!e.witness.empty()) out += ": " + e.witness;
    out += "\n";
  }
  return out;
}

int combined_exit_code(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    int c = r.exit_code();
    if (c == 1) return 1;
    if (c == 2) code = 2;
  }
  return code;
}

}  // namespace fpres
