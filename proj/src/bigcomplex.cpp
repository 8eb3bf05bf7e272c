// SPDX-License-Identifier: Apache-2.0
#include "isog3/bigcomplex.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace isog3 {

namespace {
thread_local int g_digits = 50;
}

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

int working_digits() { return g_digits; }

PrecisionScope::PrecisionScope(int digits) : saved_digits_(g_digits) { g_digits = digits; }

PrecisionScope::~PrecisionScope() { g_digits = saved_digits_; }

Real::Real() {
    mpfr_init2(v_, digits_to_bits(g_digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
    mpfr_init2(v_, digits_to_bits(g_digits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
    mpfr_init2(v_, digits_to_bits(g_digits));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Q& v) {
    mpfr_init2(v_, digits_to_bits(g_digits));
    mpfr_set_q(v_, v.value().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal) {
    mpfr_init2(v_, digits_to_bits(g_digits));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: " + decimal);
    }
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

double Real::log10_abs() const {
    if (is_zero()) return -1e9;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

Real sqrt(const Real& a) {
    Real r;
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r;
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real pow10(long e) {
    Real r;
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

Real pi() {
    Real r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real cos(const Real& a) {
    Real r;
    mpfr_cos(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real sin(const Real& a) {
    Real r;
    mpfr_sin(r.get(), a.get(), MPFR_RNDN);
    return r;
}

std::string to_string(const Real& a, int digits) {
    if (digits <= 0) digits = g_digits;
    std::unique_ptr<char, void (*)(char*)> buf(nullptr, mpfr_free_str);
    mpfr_exp_t e = 0;
    buf.reset(mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), a.get(), MPFR_RNDN));
    std::string m = buf.get();
    if (a.is_zero()) return "0";
    std::string sign;
    if (m[0] == '-') {
        sign = "-";
        m = m.substr(1);
    }
    return sign + "0." + m + "e" + std::to_string(static_cast<long>(e));
}

BC& BC::operator+=(const BC& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BC& BC::operator-=(const BC& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BC operator*(const BC& a, const BC& b) {
    return BC(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BC operator/(const BC& a, const BC& b) {
    const Real d = norm2(b);
    if (d.is_zero()) throw std::domain_error("division by zero complex number");
    return BC((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

BC conj(const BC& a) { return BC(a.re(), -a.im()); }

Real norm2(const BC& a) { return a.re() * a.re() + a.im() * a.im(); }

Real abs(const BC& a) {
    Real r;
    mpfr_hypot(r.get(), a.re().get(), a.im().get(), MPFR_RNDN);
    return r;
}

BC sqrt(const BC& a) {
    // Principal branch; the imaginary part of the root comes from a division
    // so that neither component is computed by cancellation.
    const Real m = abs(a);
    if (m.is_zero()) return BC(0);
    if (a.re().sign() >= 0) {
        const Real x = sqrt((m + a.re()) / Real(2L));
        return BC(x, a.im() / (Real(2L) * x));
    }
    Real y = sqrt((m - a.re()) / Real(2L));
    const Real x = abs(a.im()) / (Real(2L) * y);
    if (a.im().sign() < 0) y = -y;
    return BC(x, y);
}

BC inverse(const BC& a) { return BC(1) / a; }

BC pow(const BC& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    BC r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BC root_of_unity(long k, long n) {
    Real t = pi() * Real(2 * k) / Real(n);
    return BC(cos(t), sin(t));
}

std::string to_string(const BC& a, int digits) {
    return "(" + to_string(a.re(), digits) + "," + to_string(a.im(), digits) + ")";
}

Real zero_threshold() { return pow10(-(working_digits() / 2)); }

}  // namespace isog3
