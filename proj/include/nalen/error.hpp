#pragma once

#include <stdexcept>
#include <string>

namespace nalen {

enum class ErrorCode {
  parse_error = 1,
  division_by_zero,
  field_mismatch,
  dimension_mismatch,
  index_out_of_range,
  resource_limit,
  not_restricted_form,
  word_too_short,
  domain_error,
  not_finite_field,
  already_unital,
  internal_consistency,
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace nalen
