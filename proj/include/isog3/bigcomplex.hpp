// SPDX-License-Identifier: Apache-2.0
// Arbitrary-precision real and complex numbers on top of MPFR.  New values are
// created at the calling thread's working precision, set with PrecisionScope.
#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

#include "isog3/rational.hpp"

namespace isog3 {

// Decimal digits <-> bits, with a small guard.
mpfr_prec_t digits_to_bits(int digits);
int working_digits();

class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_digits_;
};

class Real {
public:
    Real();
    Real(long v);  // NOLINT(google-explicit-constructor)
    Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Real(double v);
    explicit Real(const Q& v);
    explicit Real(const std::string& decimal);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    Real operator-() const;
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log10 |x|, or a large negative number for zero.
    double log10_abs() const;

private:
    mpfr_t v_;
};

Real sqrt(const Real& a);
Real abs(const Real& a);
Real pow10(long e);
Real pi();
Real cos(const Real& a);
Real sin(const Real& a);
std::string to_string(const Real& a, int digits = 0);

class BC {
public:
    BC() = default;
    BC(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    BC(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BC(const Q& v) : re_(v) {}
    explicit BC(Real re) : re_(std::move(re)) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }

    BC& operator+=(const BC& o);
    BC& operator-=(const BC& o);
    BC& operator*=(const BC& o) { return *this = *this * o; }
    BC& operator/=(const BC& o) { return *this = *this / o; }
    friend BC operator+(BC a, const BC& b) { return a += b; }
    friend BC operator-(BC a, const BC& b) { return a -= b; }
    friend BC operator*(const BC& a, const BC& b);
    friend BC operator/(const BC& a, const BC& b);
    BC operator-() const { return BC(-re_, -im_); }
    friend bool operator==(const BC& a, const BC& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const BC& a, const BC& b) { return !(a == b); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

private:
    Real re_, im_;
};

BC conj(const BC& a);
Real norm2(const BC& a);
Real abs(const BC& a);
BC sqrt(const BC& a);
BC inverse(const BC& a);
BC pow(const BC& a, long e);
// exp(2 pi i k / n)
BC root_of_unity(long k, long n);
std::string to_string(const BC& a, int digits = 0);

inline bool is_zero(const BC& a) { return a.is_zero(); }
inline BC zero_like(const BC&) { return BC(0); }
inline BC one_like(const BC&) { return BC(1); }
inline BC from_int_like(const BC&, long v) { return BC(v); }
inline BC scale(const BC& a, const Real& s) { return BC(a.re() * s, a.im() * s); }

// Threshold 10^(-P/2) at the working precision P.
Real zero_threshold();

}  // namespace isog3
