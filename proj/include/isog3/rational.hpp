// SPDX-License-Identifier: Apache-2.0
// Rational numbers backed by GMP.  A thin value wrapper keeps generic code free
// of gmpxx expression templates.
#pragma once

#include <string>

#include <gmpxx.h>

namespace isog3 {

class Q {
public:
    Q() = default;
    Q(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Q(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Q(const mpq_class& v) : v_(v) {}
    explicit Q(const mpz_class& v) : v_(v) {}
    static Q parse(const std::string& s);

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }

    Q& operator+=(const Q& o) { v_ += o.v_; return *this; }
    Q& operator-=(const Q& o) { v_ -= o.v_; return *this; }
    Q& operator*=(const Q& o) { v_ *= o.v_; return *this; }
    Q& operator/=(const Q& o) { v_ /= o.v_; return *this; }
    friend Q operator+(Q a, const Q& b) { return a += b; }
    friend Q operator-(Q a, const Q& b) { return a -= b; }
    friend Q operator*(Q a, const Q& b) { return a *= b; }
    friend Q operator/(Q a, const Q& b) { return a /= b; }
    Q operator-() const { return Q(mpq_class(-v_)); }
    friend bool operator==(const Q& a, const Q& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Q& a, const Q& b) { return a.v_ != b.v_; }
    friend bool operator<(const Q& a, const Q& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

inline bool is_zero(const Q& a) { return a.is_zero(); }
inline Q zero_like(const Q&) { return Q(0); }
inline Q one_like(const Q&) { return Q(1); }
inline Q from_int_like(const Q&, long v) { return Q(v); }
inline Q inverse(const Q& a) { return Q(1) / a; }
Q pow(const Q& a, long e);
// "num/den" or "num".
std::string to_string(const Q& a);

}  // namespace isog3
