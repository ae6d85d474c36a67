#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mapenum {

enum class Errc {
  invalid_argument,
  invalid_size,
  violates_a,  // alpha is not a fixed-point-free involution
  violates_b,  // <sigma, alpha> is not transitive
  internal,
  out_of_range,
  not_contractive,
  missing_value,
  too_large,
  invalid_profile,
  wrong_class,
  parse,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mapenum
