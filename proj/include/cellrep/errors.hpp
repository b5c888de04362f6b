#pragma once

#include <stdexcept>
#include <string>

namespace cellrep {

enum class Errc {
  invalid_input,
  composition_undefined,
  missing_involution,
  precondition,
  budget_exceeded,
  not_a_based_ring,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::composition_undefined: return "composition-undefined";
    case Errc::missing_involution: return "missing-involution";
    case Errc::precondition: return "precondition";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::not_a_based_ring: return "not-a-based-ring";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cellrep
