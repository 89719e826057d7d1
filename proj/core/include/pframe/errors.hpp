#pragma once

#include <stdexcept>
#include <string>

namespace pframe {

enum class errc {
  not_symmetric,
  no_convergence,
  empty_kernel,
  not_positive_definite,
  unknown_etf,
  domain_error,
  non_smooth_point,
  infeasible_c,
  too_large,
  not_applicable,
  bad_exponent,
  mismatched_dual,
  rank_mismatch,
  degenerate,
  not_certifiable,
  unsupported_degree,
  dimension_mismatch,
  parse_error,
  invariant_violation,
  numerical_failure,
};

const char* errc_name(errc code);

/// Library-wide exception type. code() identifies the failure class so
/// callers (and the CLI exit-code mapping) can dispatch without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace pframe
