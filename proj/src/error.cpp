#include "mapenum/error.hpp"

namespace mapenum {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_size: return "invalid-size";
    case Errc::violates_a: return "violates-A";
    case Errc::violates_b: return "violates-B";
    case Errc::internal: return "internal-error";
    case Errc::out_of_range: return "out-of-range";
    case Errc::not_contractive: return "not-contractive";
    case Errc::missing_value: return "missing-value";
    case Errc::too_large: return "too-large";
    case Errc::invalid_profile: return "invalid-profile";
    case Errc::wrong_class: return "wrong-class";
    case Errc::parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace mapenum
