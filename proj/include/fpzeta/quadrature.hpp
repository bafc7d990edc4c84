#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "fpzeta/real.hpp"

namespace fpzeta {

/// Analytic tail bound for truncating [a, inf) integrals. The caller
/// supplies the constants:
///   exponential: |f(t)| <= scale * e^{-t} / t^power   for large t
///   algebraic:   |f(t)| <= scale / t^power            for large t (power > 1)
/// log_weight multiplies the bound by an extra (1 + ln t) factor for
/// integrands carrying a logarithm.
struct DecayHint {
    enum class Kind { exponential, algebraic };
    Kind kind = Kind::exponential;
    double power = 0.0;
    double scale = 1.0;
    bool log_weight = false;
};

struct QuadConfig {
    Real target_abs_tol = Real::pow10(-12, 64);
    int max_subdivisions = 4000;
    int panel_order = 31;  // Gauss-Legendre points per panel, >= 5
    DecayHint decay{};
    int digits = 15;  // working decimal precision
    /// Set when the integrand behaves like ln t x (analytic) at t = 0: the
    /// first unit of the range is covered by panels graded toward 0 with
    /// ratio 1/4, and the remaining sliver is bounded, not integrated.
    bool log_graded_origin = false;
};

struct QuadResult {
    Real value;
    Real error_estimate;
    long evaluations = 0;
    Real truncation_point;
};

class ToleranceNotReached : public std::runtime_error {
  public:
    ToleranceNotReached(const std::string& what, QuadResult best_so_far)
        : std::runtime_error(what), best(std::move(best_so_far)) {}
    QuadResult best;
};

using Integrand = std::function<Real(const Real&)>;

/// Adaptive Gauss-Legendre on [a, b]: panels are bisected, worst error
/// first, until the summed per-panel estimates (order vs half order) meet
/// target_abs_tol. Deterministic for fixed input and config.
QuadResult integrate_finite(const Integrand& f, const Real& a, const Real& b,
                            const QuadConfig& cfg);

/// As above on [a, inf): the interval is truncated at the point T where the
/// decay-hint tail bound drops below target_abs_tol/10, covered by panels of
/// geometrically doubling width, then refined adaptively. The tail bound is
/// folded into error_estimate and T is reported as truncation_point.
QuadResult integrate_semi_infinite(const Integrand& f, const Real& a,
                                   const QuadConfig& cfg);

namespace detail {
/// Truncation point chosen for the hint (exposed for tests).
double solve_truncation(const DecayHint& hint, double a, double tol);
}  // namespace detail

}  // namespace fpzeta
