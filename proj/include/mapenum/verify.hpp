#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mapenum/oracle.hpp"

namespace mapenum {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct NamedCheck {
  std::string suite;
  std::string name;
  /// Returns pass/fail and a human-readable detail. Exceptions count as failures.
  std::function<bool(std::string& detail)> run;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
};

/// wick, tetravalent, trivalent, eulerian, topological, connected, symmetry,
/// solver, master-equation, resolvent, twopoint, bijections.
const std::vector<std::string>& suite_names();

/// The checks of one suite, or of every suite for "all".
/// Errc::invalid_argument for an unknown suite.
std::vector<NamedCheck> suite_checks(const std::string& suite, const VerifyOptions& options = {});

/// Runs checks in order, converting exceptions into failures.
std::vector<CheckResult> run_checks(const std::vector<NamedCheck>& checks);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mapenum
