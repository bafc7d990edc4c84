#pragma once

#include <vector>

#include "fpzeta/rational.hpp"
#include "fpzeta/real.hpp"

namespace fpzeta {

/// Integer-coefficient polynomial Q_k with d^k/dt^k csch t = csch(t) Q_k(coth t).
/// Q_0 = 1 and Q_{k+1}(u) = -u Q_k(u) - (u^2 - 1) Q_k'(u); Q_k has degree
/// exactly k and only powers u^j with j == k (mod 2).
struct CothPoly {
    std::vector<BigInt> coeffs;  // coeffs[j] = coefficient of u^j
    BigInt abs_coeff_sum;        // sum of |coeffs[j]|, used to size working precision

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

/// Q_k, memoized, safe for concurrent readers.
const CothPoly& coth_poly(unsigned k);

/// d^order/dt^order [ t csch t ] at t > 0.
///
/// Below dtcsch_t_switch() the term-wise differentiated Taylor series of the
/// even function t csch t is used; above it the closed form
/// csch(t) (t Q_order(coth t) + order Q_{order-1}(coth t)). Both branches run
/// at elevated internal precision sized from the observed cancellation, so
/// the result is accurate to ~`digits` regardless of t.
Real d_t_csch(unsigned order, const Real& t, int digits);

/// Exact t -> 0+ limit of d^order/dt^order [ t csch t ]: zero for odd order,
/// -(2^order - 2) B_order for even order.
BigRational d_t_csch_at_zero(unsigned order);

/// [ csch t + sum_{k=0}^{n} (2^{2k}-2) B_{2k} t^{2k-1}/(2k)! ] / t^{2n+1},
/// the integrand whose [0, inf) integral equals the finite part of
/// int dt/(t^{2n+1} sinh t). Equals the csch Laurent tail
/// sum_{k>n} c_k t^{2k-2n-2}, so it tends to c_{n+1} as t -> 0+ and decays
/// like -c_n / t^2 at infinity.
Real subtracted_integrand(unsigned n, const Real& t, int digits);

namespace detail {

/// Switch radius between the series and direct branches of
/// subtracted_integrand: pi * 10^{-1/(2n+2)}. Keeps the direct branch's
/// cancellation below one digit while the series still converges
/// geometrically with ratio 10^{-1/(n+1)}.
double subtracted_t_switch(unsigned n);

Real subtracted_series(unsigned n, const Real& t, int digits);
Real subtracted_direct(unsigned n, const Real& t, int digits);

double dtcsch_t_switch();
Real dtcsch_series(unsigned order, const Real& t, int digits);
Real dtcsch_closed(unsigned order, const Real& t, int digits);

}  // namespace detail

}  // namespace fpzeta
