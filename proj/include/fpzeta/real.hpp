#pragma once

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpzeta {

using prec_t = mpfr_prec_t;

/// Binary precision that comfortably holds `digits` significant decimal digits.
inline prec_t bits_for_digits(int digits) {
    if (digits < 1) digits = 1;
    return static_cast<prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

/// Configurable-precision real scalar. Each value carries its own MPFR
/// precision; binary operations produce results at the wider of the two
/// operand precisions, so precision never silently degrades mid-expression.
/// All rounding is to-nearest, which keeps results deterministic for a
/// fixed input/precision combination.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(double x, prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x, prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real pi(prec_t bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real ln2(prec_t bits) {
        Real r(bits);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }
    static Real from_string(const std::string& s, prec_t bits) {
        Real r(bits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: cannot parse \"" + s + "\"");
        return r;
    }
    /// 10^e at the given precision.
    static Real pow10(long e, prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    prec_t prec() const { return mpfr_get_prec(v_); }
    Real rounded_to(prec_t bits) const {
        Real r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal string with `digits` significant digits, scientific notation.
    /// Output is locale-independent and round-trips through from_string.
    std::string to_string(int digits) const {
        if (digits < 1) digits = 1;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }

    friend Real operator+(const Real& a, long k) { Real r(a.prec()); mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN); return r; }
    friend Real operator+(long k, const Real& a) { return a + k; }
    friend Real operator-(const Real& a, long k) { Real r(a.prec()); mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN); return r; }
    friend Real operator-(long k, const Real& a) { Real r(a.prec()); mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, long k) { Real r(a.prec()); mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN); return r; }
    friend Real operator*(long k, const Real& a) { return a * k; }
    friend Real operator/(const Real& a, long k) { Real r(a.prec()); mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN); return r; }
    friend Real operator/(long k, const Real& a) { Real r(a.prec()); mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN); return r; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator<(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) < 0; }
    friend bool operator>(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) > 0; }
    friend bool operator<=(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) <= 0; }
    friend bool operator>=(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) >= 0; }
    friend bool operator==(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) == 0; }

    friend Real abs(const Real& a) { Real r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real sqrt(const Real& a) { return un(mpfr_sqrt, a); }
    friend Real exp(const Real& a) { return un(mpfr_exp, a); }
    friend Real log(const Real& a) { return un(mpfr_log, a); }
    friend Real sinh(const Real& a) { return un(mpfr_sinh, a); }
    friend Real cosh(const Real& a) { return un(mpfr_cosh, a); }
    friend Real csch(const Real& a) { return un(mpfr_csch, a); }
    friend Real coth(const Real& a) { return un(mpfr_coth, a); }

    friend Real pow_si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend Real pow_ui(const Real& a, unsigned long e) {
        Real r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    /// m-th root of a non-negative integer value n (e.g. 2^{1/m}).
    static Real root_of_ui(unsigned long n, unsigned long m, prec_t bits) {
        Real r(bits);
        mpfr_set_ui(r.v_, n, MPFR_RNDN);
        mpfr_rootn_ui(r.v_, r.v_, m, MPFR_RNDN);
        return r;
    }

    friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
    friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

  private:
    using mpfr_bin_f = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using mpfr_un_f = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real bin(mpfr_bin_f f, const Real& a, const Real& b) {
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real un(mpfr_un_f f, const Real& a) {
        Real r(a.prec());
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

}  // namespace fpzeta
