#include "pframe/errors.hpp"

namespace pframe {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_symmetric: return "NotSymmetric";
    case errc::no_convergence: return "NoConvergence";
    case errc::empty_kernel: return "EmptyKernel";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::unknown_etf: return "UnknownEtf";
    case errc::domain_error: return "DomainError";
    case errc::non_smooth_point: return "NonSmoothPoint";
    case errc::infeasible_c: return "InfeasibleC";
    case errc::too_large: return "TooLarge";
    case errc::not_applicable: return "NotApplicable";
    case errc::bad_exponent: return "BadExponent";
    case errc::mismatched_dual: return "MismatchedDual";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::degenerate: return "Degenerate";
    case errc::not_certifiable: return "NotCertifiable";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::parse_error: return "ParseError";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::numerical_failure: return "NumericalFailure";
  }
  return "UnknownError";
}

}  // namespace pframe
