#pragma once

// Machine-readable verification reports: one row per case with PASS/FAIL/
// SKIPPED, the residual, and the tolerance it was held to. Output is
// deterministic for fixed inputs, seed, and precision.

#include <string>
#include <vector>

#include "selzeta/real.hpp"

namespace selzeta {

struct CaseResult {
  std::string name;
  std::string status;     // PASS | FAIL | SKIPPED
  std::string residual;   // decimal string ("-" when not applicable)
  std::string tolerance;  // decimal string ("-" when not applicable)
  std::string note;       // optional extra (estimates, counts)
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  int exit_code() const {
    for (const auto& c : cases)
      if (c.status == "FAIL") return 1;
    return 0;
  }

  void check(const std::string& name, const Real& residual, const Real& tol,
             const std::string& note = "") {
    CaseResult c;
    c.name = name;
    c.status = residual <= tol ? "PASS" : "FAIL";
    c.residual = residual.str(3);
    c.tolerance = tol.str(3);
    c.note = note;
    cases.push_back(std::move(c));
  }

  void check_exact(const std::string& name, bool ok, const std::string& note = "") {
    cases.push_back(CaseResult{name, ok ? "PASS" : "FAIL", "0", "0", note});
  }

  void skip(const std::string& name, const std::string& why) {
    cases.push_back(CaseResult{name, "SKIPPED", "-", "-", why});
  }

  void merge(const Report& other) {
    for (const auto& c : other.cases) {
      CaseResult copy = c;
      copy.name = other.suite + "/" + copy.name;
      cases.push_back(std::move(copy));
    }
  }

  std::string text() const {
    std::string out;
    for (const auto& c : cases) {
      out += c.name + ": " + c.status;
      if (c.residual != "-") out += " residual=" + c.residual + " tol=" + c.tolerance;
      if (!c.note.empty()) out += " (" + c.note + ")";
      out += "\n";
    }
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& c : cases) {
      if (c.status == "PASS") ++pass;
      if (c.status == "FAIL") ++fail;
      if (c.status == "SKIPPED") ++skipped;
    }
    out += "suite " + suite + ": " + std::to_string(pass) + " passed, " +
           std::to_string(fail) + " failed, " + std::to_string(skipped) + " skipped\n";
    return out;
  }
};

}  // namespace selzeta
