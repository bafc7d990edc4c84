#include "fpzeta/csch.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "fpzeta/exact.hpp"

namespace fpzeta {

namespace {

class CothPolyTable {
  public:
    const CothPoly& get(unsigned k) {
        {
            std::shared_lock lock(mu_);
            if (k < polys_.size()) return polys_[k];
        }
        std::unique_lock lock(mu_);
        if (polys_.empty()) {
            CothPoly q0;
            q0.coeffs = {BigInt(1)};
            q0.abs_coeff_sum = 1;
            polys_.push_back(std::move(q0));
        }
        while (polys_.size() <= k) {
            const CothPoly& q = polys_.back();
            const unsigned deg = q.degree();
            // Q_{k+1}(u) = -u Q_k(u) - (u^2 - 1) Q_k'(u)
            CothPoly next;
            next.coeffs.assign(deg + 2, BigInt(0));
            for (unsigned j = 0; j <= deg; ++j) {
                next.coeffs[j + 1] -= q.coeffs[j];
                if (j >= 1) {
                    next.coeffs[j + 1] -= BigInt(j) * q.coeffs[j];
                    next.coeffs[j - 1] += BigInt(j) * q.coeffs[j];
                }
            }
            next.abs_coeff_sum = 0;
            for (const BigInt& c : next.coeffs) next.abs_coeff_sum += abs(c);
            polys_.push_back(std::move(next));
        }
        return polys_[k];
    }

  private:
    std::shared_mutex mu_;
    std::vector<CothPoly> polys_;
};

CothPolyTable& poly_table() {
    static CothPolyTable t;
    return t;
}

Real horner(const CothPoly& q, const Real& u, prec_t bits) {
    Real acc(bits);
    for (auto it = q.coeffs.rbegin(); it != q.coeffs.rend(); ++it) {
        mpfr_mul(acc.raw(), acc.raw(), u.raw(), MPFR_RNDN);
        mpfr_add_z(acc.raw(), acc.raw(), it->get_mpz_t(), MPFR_RNDN);
    }
    return acc;
}

}  // namespace

const CothPoly& coth_poly(unsigned k) { return poly_table().get(k); }

BigRational d_t_csch_at_zero(unsigned order) {
    if (order % 2 == 1) return BigRational(0);
    return csch_laurent_coeff(order / 2) * BigRational(factorial(order));
}

namespace detail {

double dtcsch_t_switch() { return 1.0; }

Real dtcsch_series(unsigned order, const Real& t, int digits) {
    // m-th derivative of sum_k c_k t^{2k}: sum over 2k >= m of
    // c_k (2k)!/(2k-m)! t^{2k-m}. Terms first grow like (2k)^m then decay
    // with ratio (t/pi)^2; track the largest term so guard digits can be
    // re-sized when the sum cancels deeply.
    const unsigned m = order;
    const double t_d = t.to_double();
    int guard = 12;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const prec_t bits = bits_for_digits(digits + guard);
        Real sum(bits), maxterm(bits);
        Real t2 = t * Real(1, bits);
        t2 *= t2;
        unsigned k = (m + 1) / 2;
        Real tp = pow_ui(t * Real(1, bits), 2 * k - m);
        const double log10_t2 = 2.0 * std::log10(std::max(t_d, 1e-300));
        double peak_log = -1e9;
        for (;; ++k) {
            BigRational coeff = csch_laurent_coeff(k) *
                                BigRational(factorial(2 * k), factorial(2 * k - m));
            Real term = coeff.to_real(bits) * tp;
            sum += term;
            Real at = abs(term);
            if (at > maxterm) maxterm = at;
            // a-priori size: |c_k| <= 3.3/pi^{2k}
            const double lg = std::log10(3.3) - 2.0 * k * std::log10(M_PI) +
                              mpz_sizeinbase(factorial(2 * k).get_mpz_t(), 10) -
                              mpz_sizeinbase(factorial(2 * k - m).get_mpz_t(), 10) +
                              (2.0 * k - m) * log10_t2 / 2.0;
            peak_log = std::max(peak_log, lg);
            if (k > std::max(m, 4u) && lg < peak_log - (digits + guard + 4)) break;
            tp *= t2;
        }
        if (sum.is_zero() || maxterm.is_zero()) return sum.rounded_to(bits_for_digits(digits));
        const double cancel = (log(maxterm) - log(abs(sum))).to_double() / std::log(10.0);
        if (cancel < guard - 6) return sum.rounded_to(bits_for_digits(digits));
        guard = static_cast<int>(cancel) + 12;
    }
    throw std::runtime_error("dtcsch_series: cancellation guard did not converge");
}

Real dtcsch_closed(unsigned order, const Real& t, int digits) {
    const unsigned m = order;
    const CothPoly& qm = coth_poly(m);
    const CothPoly& qm1 = coth_poly(m > 0 ? m - 1 : 0);
    const double coeff_bits =
        std::max(mpz_sizeinbase(qm.abs_coeff_sum.get_mpz_t(), 2),
                 mpz_sizeinbase(qm1.abs_coeff_sum.get_mpz_t(), 2));
    int guard = static_cast<int>(coeff_bits / 3.32) + 12;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const prec_t bits = bits_for_digits(digits + guard);
        Real tw = t.rounded_to(bits);
        Real u = coth(tw);
        Real s = csch(tw);
        if (m == 0) return (tw * s).rounded_to(bits_for_digits(digits));
        Real a = tw * horner(qm, u, bits);
        Real b = Real(static_cast<long>(m), bits) * horner(qm1, u, bits);
        Real sum = a + b;
        Real scale = abs(a) + abs(b);
        if (sum.is_zero() || scale.is_zero())
            return (s * sum).rounded_to(bits_for_digits(digits));
        const double cancel = (log(scale) - log(abs(sum))).to_double() / std::log(10.0);
        if (cancel < guard - 6)
            return (s * sum).rounded_to(bits_for_digits(digits));
        guard = static_cast<int>(cancel + coeff_bits / 3.32) + 12;
    }
    throw std::runtime_error("dtcsch_closed: cancellation guard did not converge");
}

double subtracted_t_switch(unsigned n) {
    return M_PI * std::pow(10.0, -1.0 / (2.0 * n + 2.0));
}

Real subtracted_series(unsigned n, const Real& t, int digits) {
    const prec_t bits = bits_for_digits(digits + 8);
    const double tsw = subtracted_t_switch(n);
    Real sum(bits);
    Real t2 = t * Real(1, bits);
    t2 *= t2;
    Real tp(1, bits);  // t^{2k-2n-2}, starts at k = n+1
    for (unsigned k = n + 1;; ++k) {
        sum += csch_laurent_coeff(k).to_real(bits) * tp;
        // stop once the switch-radius bound of the next coefficient is below
        // the target: |c_K| tsw^{2K-2n-2} < 10^{-p-2}
        const double lg = std::log10(3.3) - 2.0 * (k + 1) * std::log10(M_PI) +
                          (2.0 * (k + 1) - 2 * n - 2) * std::log10(tsw);
        if (lg < -(digits + 10)) break;
        tp *= t2;
    }
    return sum.rounded_to(bits_for_digits(digits));
}

Real subtracted_direct(unsigned n, const Real& t, int digits) {
    const prec_t bits = bits_for_digits(digits + 10);
    Real tw = t.rounded_to(bits);
    Real bracket = csch(tw);
    Real t2 = tw * tw;
    Real tp = 1 / tw;  // t^{2k-1}
    for (unsigned k = 0; k <= n; ++k) {
        bracket -= csch_laurent_coeff(k).to_real(bits) * tp;
        tp *= t2;
    }
    return (bracket * pow_si(tw, -(2 * static_cast<long>(n) + 1)))
        .rounded_to(bits_for_digits(digits));
}

}  // namespace detail

Real d_t_csch(unsigned order, const Real& t, int digits) {
    if (!(t > 0)) throw std::domain_error("d_t_csch: t must be positive");
    if (t.to_double() < detail::dtcsch_t_switch())
        return detail::dtcsch_series(order, t, digits);
    return detail::dtcsch_closed(order, t, digits);
}

Real subtracted_integrand(unsigned n, const Real& t, int digits) {
    if (n < 1) throw std::domain_error("subtracted_integrand: n must be >= 1");
    if (!(t > 0)) throw std::domain_error("subtracted_integrand: t must be positive");
    if (t.to_double() < detail::subtracted_t_switch(n))
        return detail::subtracted_series(n, t, digits);
    return detail::subtracted_direct(n, t, digits);
}

}  // namespace fpzeta
