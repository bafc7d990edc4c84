#pragma once

#include <string>
#include <vector>

#include "fpzeta/rational.hpp"

namespace fpzeta {

/// Exact rational arithmetic shared by every other module: Bernoulli and
/// harmonic numbers, the Laurent coefficients of csch, even-integer zeta
/// values, and the exact summation identities used as regression anchors.
///
/// All tables are memoized and safe for concurrent readers; the first call
/// that extends a table takes a writer lock.

/// B_k with the convention B_1 = -1/2. Odd indices above 1 are zero.
BigRational bernoulli(unsigned k);

/// H_m = sum_{j=1}^{m} 1/j, m >= 1.
BigRational harmonic(unsigned m);

/// k! as an exact integer, memoized.
BigInt factorial(unsigned k);

struct ZetaEvenValue {
    BigRational coefficient;  // rational q with zeta(2n) = q * pi^{2n}
    int pi_power;             // always 2n
};

/// zeta(2n) = (-1)^{n+1} (2pi)^{2n} B_{2n} / (2 (2n)!) expressed as an exact
/// rational multiple of pi^{2n}. The coefficient is positive for all n >= 1.
ZetaEvenValue zeta_even(unsigned n);

/// Coefficient of z^{2k-1} in the Laurent expansion of 1/sinh z about 0,
/// i.e. -(2^{2k}-2) B_{2k} / (2k)!.  c_0 = 1, c_1 = -1/6, c_2 = 7/360, ...
/// The expansion converges for |z| < pi.
BigRational csch_laurent_coeff(unsigned k);

struct IdentityReport {
    bool all_pass = true;
    int first_failing_k = -1;       // -1 when all pass
    std::string failing_identity;   // "a", "b" or "c" when a failure occurred
};

/// Verifies, in exact rational arithmetic for every 2 <= k <= k_max:
///   (a) sum_{l=1}^{k-1} 2^{2l+1} B_{2l} / ((2l)! (2k-2l-1)!) = 4(k-1)/(2k-1)!
///   (b) B_{2k} = [ (2k-1) - (2k)! sum_{l=1}^{k-1} 2^{2l} B_{2l}/((2l)!(2k-2l)!) ]
///                / (2 (2^{2k}-1))
///   (c) (2k)! sum_{l=1}^{k} 2^{2l} B_{2l}/((2l)!(2k-2l)!) = (2k-1) - (2^{2k}-2) B_{2k}
/// Returns all-pass or the first failing k. Throws std::domain_error for
/// k_max < 2 (the sums in (a) would be empty).
///
/// `inject_fault`, when >= 2, perturbs identity (a) at k = inject_fault; it
/// exists so the CLI's fault-injection mode can exercise the failure path.
IdentityReport check_appendix_identities(int k_max, int inject_fault = -1);

}  // namespace fpzeta
