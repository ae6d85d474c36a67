#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mapenum/rational.hpp"

namespace mapenum {

/// {"order": T, "weights": {"3": "1", "4": "2/3"}}; weight values are exact
/// rationals given as strings or JSON integers.
struct WeightFile {
  int order = 10;
  std::map<int, Rat> weights;
};

/// Errc::parse on malformed JSON, unknown keys, or inexact numbers.
WeightFile parse_weight_file(std::string_view json_text);

/// Runs the `mapenum` command line on `args` (program name excluded).
/// Exit codes: 0 success, 1 failed verification, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapenum
