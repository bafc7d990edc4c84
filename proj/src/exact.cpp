#include "fpzeta/exact.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace fpzeta {

namespace {

// Even-index Bernoulli numbers via tangent numbers (Knuth/Buckholtz):
// integer-only recurrence, then B_{2m} = (-1)^{m-1} T_m 2m / (2^{2m}(2^{2m}-1)).
// Much cheaper than the defining recurrence because no rational gcd work
// happens until the final division.
class BernoulliTable {
  public:
    BigRational get(unsigned k) {
        if (k == 0) return BigRational(1);
        if (k == 1) return BigRational(-1, 2);
        if (k % 2 == 1) return BigRational(0);
        const unsigned m = k / 2;
        {
            std::shared_lock lock(mu_);
            if (m < even_.size()) return even_[m];
        }
        std::unique_lock lock(mu_);
        grow(m);
        return even_[m];
    }

  private:
    void grow(unsigned m_needed) {
        if (m_needed < even_.size()) return;
        // Grow in blocks so a scan over k = 0..K costs one rebuild, not K.
        unsigned m_max = even_.empty() ? 64 : static_cast<unsigned>(even_.size() - 1);
        while (m_max < m_needed) m_max *= 2;

        std::vector<BigInt> t(m_max + 1);
        t[1] = 1;
        for (unsigned k = 2; k <= m_max; ++k) t[k] = (k - 1) * t[k - 1];
        for (unsigned k = 2; k <= m_max; ++k)
            for (unsigned j = k; j <= m_max; ++j)
                t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];

        even_.assign(m_max + 1, BigRational(0));
        even_[0] = BigRational(1);
        BigInt four_pow = 1;  // 2^{2m}
        for (unsigned m = 1; m <= m_max; ++m) {
            four_pow *= 4;
            BigInt num = t[m] * (2 * m);
            if (m % 2 == 0) num = -num;
            even_[m] = BigRational(num, four_pow * (four_pow - 1));
        }
    }

    std::shared_mutex mu_;
    std::vector<BigRational> even_;  // even_[m] = B_{2m}
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

class HarmonicTable {
  public:
    BigRational get(unsigned m) {
        {
            std::shared_lock lock(mu_);
            if (m < vals_.size()) return vals_[m];
        }
        std::unique_lock lock(mu_);
        if (vals_.empty()) vals_.push_back(BigRational(0));
        while (vals_.size() <= m) {
            const long j = static_cast<long>(vals_.size());
            vals_.push_back(vals_.back() + BigRational(1, j));
        }
        return vals_[m];
    }

  private:
    std::shared_mutex mu_;
    std::vector<BigRational> vals_;
};

class FactorialTable {
  public:
    BigInt get(unsigned k) {
        {
            std::shared_lock lock(mu_);
            if (k < vals_.size()) return vals_[k];
        }
        std::unique_lock lock(mu_);
        if (vals_.empty()) vals_.push_back(BigInt(1));
        while (vals_.size() <= k)
            vals_.push_back(vals_.back() * static_cast<unsigned long>(vals_.size()));
        return vals_[k];
    }

  private:
    std::shared_mutex mu_;
    std::vector<BigInt> vals_;
};

BigInt pow2(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace

BigRational bernoulli(unsigned k) { return bernoulli_table().get(k); }

BigRational harmonic(unsigned m) {
    if (m < 1) throw std::domain_error("harmonic: m must be >= 1");
    static HarmonicTable table;
    return table.get(m);
}

BigInt factorial(unsigned k) {
    static FactorialTable table;
    return table.get(k);
}

ZetaEvenValue zeta_even(unsigned n) {
    if (n < 1) throw std::domain_error("zeta_even: n must be >= 1");
    BigRational q = BigRational(pow2(2 * n), 2 * factorial(2 * n)) * bernoulli(2 * n);
    if (n % 2 == 0) q = -q;
    return {q, static_cast<int>(2 * n)};
}

BigRational csch_laurent_coeff(unsigned k) {
    return BigRational(-(pow2(2 * k) - 2), factorial(2 * k)) * bernoulli(2 * k);
}

IdentityReport check_appendix_identities(int k_max, int inject_fault) {
    if (k_max < 2) throw std::domain_error("check_appendix_identities: k_max must be >= 2");

    for (int k = 2; k <= k_max; ++k) {
        const unsigned uk = static_cast<unsigned>(k);

        // (a) sum_{l=1}^{k-1} 2^{2l+1} B_{2l} / ((2l)!(2k-2l-1)!) = 4(k-1)/(2k-1)!
        BigRational lhs_a(0);
        for (unsigned l = 1; l + 1 <= uk; ++l)
            lhs_a += BigRational(pow2(2 * l + 1), factorial(2 * l) * factorial(2 * uk - 2 * l - 1)) *
                     bernoulli(2 * l);
        if (k == inject_fault) lhs_a += BigRational(1, 7);
        const BigRational rhs_a(BigInt(4 * (k - 1)), factorial(2 * uk - 1));
        if (lhs_a != rhs_a) return {false, k, "a"};

        // shared inner sum S = sum_{l=1}^{k-1} 2^{2l} B_{2l}/((2l)!(2k-2l)!)
        BigRational s(0);
        for (unsigned l = 1; l + 1 <= uk; ++l)
            s += BigRational(pow2(2 * l), factorial(2 * l) * factorial(2 * uk - 2 * l)) *
                 bernoulli(2 * l);

        // (b) Namias recurrence for B_{2k}
        const BigRational rhs_b =
            (BigRational(2 * k - 1) - BigRational(factorial(2 * uk)) * s) /
            BigRational(2 * (pow2(2 * uk) - 1));
        if (bernoulli(2 * uk) != rhs_b) return {false, k, "b"};

        // (c) extends the sum to l = k
        const BigRational full =
            s + BigRational(pow2(2 * uk), factorial(2 * uk)) * bernoulli(2 * uk);
        const BigRational lhs_c = BigRational(factorial(2 * uk)) * full;
        const BigRational rhs_c =
            BigRational(2 * k - 1) - BigRational(pow2(2 * uk) - 2) * bernoulli(2 * uk);
        if (lhs_c != rhs_c) return {false, k, "c"};
    }
    return {};
}

}  // namespace fpzeta
