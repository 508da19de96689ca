#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace satorder {

enum class errc {
  invalid_element,
  cycle_detected,
  not_a_set_representation,
  not_parsimonious,
  alpha_not_injective,
  no_maximum,
  too_small,
  not_parallel,
  precondition_violated,
  too_large,
  not_interval_order,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_element: return "InvalidElement";
    case errc::cycle_detected: return "CycleDetected";
    case errc::not_a_set_representation: return "NotASetRepresentation";
    case errc::not_parsimonious: return "NotParsimonious";
    case errc::alpha_not_injective: return "AlphaNotInjective";
    case errc::no_maximum: return "NoMaximum";
    case errc::too_small: return "TooSmall";
    case errc::not_parallel: return "NotParallel";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::too_large: return "TooLarge";
    case errc::not_interval_order: return "NotIntervalOrder";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace satorder
