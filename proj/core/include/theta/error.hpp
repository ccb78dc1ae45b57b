#pragma once

#include <stdexcept>
#include <string>

namespace theta {

enum class ErrorCode {
    not_symmetric,
    not_positive_definite,
    not_integral,
    not_reduced,
    radius_cap_exceeded,
    branch_unresolvable,
    dimension_mismatch,
    non_real_lambda,
    empty_identity,
    bad_prime,
    parse_error,
};

// Single exception type for all library domain errors; the code tells the
// caller (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace theta
