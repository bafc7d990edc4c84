#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "fpzeta/real.hpp"

namespace fpzeta {

using BigInt = mpz_class;

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1 after every operation; zero is 0/1. GMP's mpq
/// arithmetic preserves canonical form for canonical operands, so only
/// construction needs an explicit canonicalize.
class BigRational {
  public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}
    BigRational(const BigInt& n) : q_(n) {}
    BigRational(const BigInt& n, const BigInt& d) : q_(n, d) {
        if (sgn(d) == 0) throw std::domain_error("BigRational: zero denominator");
        q_.canonicalize();
    }
    BigRational(long n, long d) : BigRational(BigInt(n), BigInt(d)) {}

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    std::string to_string() const { return q_.get_str(); }

    Real to_real(prec_t bits) const {
        Real r(bits);
        mpfr_set_q(r.raw(), q_.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(a.q_ + b.q_); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(a.q_ - b.q_); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(a.q_ * b.q_); }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(a.q_ / b.q_);
    }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    friend BigRational abs(const BigRational& a) { return BigRational(mpq_class(::abs(a.q_))); }

  private:
    explicit BigRational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

}  // namespace fpzeta
