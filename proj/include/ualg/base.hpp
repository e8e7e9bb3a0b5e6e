#pragma once

#include <stdexcept>
#include <string>

namespace ualg {

// Error classes map onto the CLI exit-code contract:
// parse -> 1, resource -> 3, everything else semantic -> 2.
enum class ErrorCode {
  domain_mismatch,
  shape,
  index,
  structure,
  precondition,
  resource,
  parse,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Default cap on enumeration work (candidate maps / search nodes).
inline constexpr long long kDefaultBudget = 1'000'000;

}  // namespace ualg
