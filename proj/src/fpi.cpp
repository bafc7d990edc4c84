#include "fpzeta/fpi.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "fpzeta/exact.hpp"

namespace fpzeta {

namespace {

void check_b(const Real& b, prec_t bits) {
    if (!(b > 0) || !(b < Real::pi(bits)))
        throw std::domain_error("fpi: b must lie in (0, pi)");
}

// Guard digits covering the cancellation between the series and the tail
// integral when b < 1: both grow like b^{-(2n+1)} while their sum stays O(1).
int series_guard(unsigned n, double b) {
    double g = 0.0;
    if (b < 1.0) g = (2.0 * n + 1) * std::log10(1.0 / b);
    return 8 + static_cast<int>(std::ceil(g));
}

}  // namespace

namespace detail {

Real fpi_series(unsigned n, const Real& b, int digits, long* terms_out,
                Real* truncation_bound_out) {
    const prec_t bits = bits_for_digits(digits);
    const double b_d = b.to_double();
    const double lg_b = std::log10(b_d);

    Real sum(bits);
    Real bw = b.rounded_to(bits);
    Real b2 = bw * bw;
    Real bp = pow_si(bw, -(2 * static_cast<long>(n) + 1));  // b^{2k-2n-1}
    long terms = 0;
    double bound_lg = 0.0;
    for (unsigned k = 0;; ++k) {
        const long denom = 2 * static_cast<long>(n) + 1 - 2 * static_cast<long>(k);
        assert(denom != 0);
        BigRational coeff = BigRational(BigInt(1) << (2 * k), factorial(2 * k)) * bernoulli(2 * k);
        coeff -= BigRational(2, 1) * BigRational(BigInt(1), factorial(2 * k)) * bernoulli(2 * k);
        sum += (coeff / BigRational(denom)).to_real(bits) * bp;
        ++terms;
        // |term| <= 4 (b/pi)^{2k} / (b^{2n+1} |2n+1-2k|)
        bound_lg = std::log10(4.0) + 2.0 * (k + 1) * std::log10(b_d / M_PI) -
                   (2.0 * n + 1) * lg_b - std::log10(std::abs(static_cast<double>(denom) - 2));
        if (k > n && bound_lg < -(digits + 2)) break;
        bp *= b2;
    }
    if (terms_out) *terms_out = terms;
    if (truncation_bound_out) {
        // first omitted bound with geometric slack for the rest of the tail
        *truncation_bound_out = Real(3.0, bits) * Real::pow10(static_cast<long>(bound_lg), bits);
    }
    return sum;
}

}  // namespace detail

Real fpi_csch_finite(unsigned n, const Real& b, int digits) {
    if (n < 1) throw std::domain_error("fpi: n must be >= 1");
    const int dw = digits + series_guard(n, b.to_double());
    check_b(b, bits_for_digits(dw));
    return detail::fpi_series(n, b, dw, nullptr, nullptr).rounded_to(bits_for_digits(digits));
}

FpiValue fpi_csch_semi_infinite(unsigned n, const Real& b, int digits,
                                const QuadConfig& cfg) {
    if (n < 1) throw std::domain_error("fpi: n must be >= 1");
    const int dw = digits + series_guard(n, b.to_double());
    const prec_t bits = bits_for_digits(dw);
    check_b(b, bits);

    FpiValue out;
    out.b_used = b.rounded_to(bits);

    Real trunc_bound(bits);
    Real series = detail::fpi_series(n, b, dw, &out.series_terms, &trunc_bound);

    QuadConfig qc = cfg;
    qc.digits = dw;
    qc.target_abs_tol = cfg.target_abs_tol * Real(0.5, bits);
    const double b_d = b.to_double();
    qc.decay = {DecayHint::Kind::exponential, 2.0 * n + 1,
                3.2 / std::min(1.0, std::pow(b_d, 2.0 * n + 1)), false};
    const long expo = 2 * static_cast<long>(n) + 1;
    out.tail_quad = integrate_semi_infinite(
        [expo, dw](const Real& t) { return csch(t) * pow_si(t, -expo); }, out.b_used, qc);

    out.value = (series + out.tail_quad.value).rounded_to(bits_for_digits(digits));
    out.error_estimate = out.tail_quad.error_estimate + trunc_bound +
                         (abs(series) + abs(out.tail_quad.value)) * Real::pow10(-dw + 1, bits);
    return out;
}

}  // namespace fpzeta
