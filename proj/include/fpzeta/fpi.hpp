#pragma once

#include "fpzeta/quadrature.hpp"
#include "fpzeta/real.hpp"

namespace fpzeta {

struct FpiValue {
    Real value;
    Real b_used;
    long series_terms = 0;
    QuadResult tail_quad;
    Real error_estimate;
};

/// Finite part of int_0^b dt/(t^{2n+1} sinh t) for 0 < b < pi, evaluated as
///     sum_{k>=0} (2^{2k}-2) B_{2k} b^{2k-2n-1} / ((2k)! (2n+1-2k))
/// with every term retained, including the negative-power leading ones, and
/// truncation once the a-priori term bound drops below 10^{-digits-2}.
/// (The coefficient is (2^{2k}-2) throughout; one displayed form with 2n in
/// the exponent is a typo for 2k, as the surrounding expansion shows.)
/// Throws std::domain_error unless 0 < b < pi; 2k = 2n+1 cannot occur by
/// parity, so no term divides by zero.
Real fpi_csch_finite(unsigned n, const Real& b, int digits);

/// Finite part of int_0^inf dt/(t^{2n+1} sinh t), split at b per the
/// finite-part splitting property: series on [0, b] plus ordinary quadrature
/// on [b, inf). The result is independent of b within the reported
/// error_estimate. cfg.target_abs_tol applies to the finite-part value.
FpiValue fpi_csch_semi_infinite(unsigned n, const Real& b, int digits,
                                const QuadConfig& cfg);

namespace detail {
Real fpi_series(unsigned n, const Real& b, int digits, long* terms_out,
                Real* truncation_bound_out);
}

}  // namespace fpzeta
