// SPDX-License-Identifier: Apache-2.0
// Number fields Q[x]/(m(x)) for a monic irreducible modulus m.
#pragma once

#include <string>
#include <vector>

#include "isog3/rational.hpp"

namespace isog3 {

struct NFCtx {
    std::vector<Q> modulus;  // monic, degree = modulus.size() - 1
    std::string generator;   // display name of the class of x
    int degree() const { return static_cast<int>(modulus.size()) - 1; }
};

// Interned context.  Irreducibility is checked for degree <= 3 (no rational
// root); higher degrees are trusted.
const NFCtx* number_field(const std::vector<Q>& monic_modulus, const std::string& generator = "w");
// Q(eta) with eta^2 + eta + 1 = 0.
const NFCtx* cyclotomic3();

class NF {
public:
    NF() = default;
    explicit NF(const NFCtx* ctx) : ctx_(ctx), c_(ctx->degree(), Q(0)) {}
    NF(const NFCtx* ctx, std::vector<Q> coeffs);

    const NFCtx* ctx() const { return ctx_; }
    const std::vector<Q>& coeffs() const { return c_; }
    bool is_zero() const;

    NF& operator+=(const NF& o);
    NF& operator-=(const NF& o);
    NF& operator*=(const NF& o) { return *this = *this * o; }
    NF& operator/=(const NF& o) { return *this = *this / o; }
    friend NF operator+(NF a, const NF& b) { return a += b; }
    friend NF operator-(NF a, const NF& b) { return a -= b; }
    friend NF operator*(const NF& a, const NF& b);
    friend NF operator/(const NF& a, const NF& b);
    NF operator-() const;
    friend bool operator==(const NF& a, const NF& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }
    friend bool operator!=(const NF& a, const NF& b) { return !(a == b); }

private:
    const NFCtx* ctx_ = nullptr;
    std::vector<Q> c_;
};

NF nf_int(const NFCtx* K, long v);
NF nf_rational(const NFCtx* K, const Q& v);
NF nf_gen(const NFCtx* K);
NF inverse(const NF& a);
NF pow(const NF& a, long e);
// Whether a lies in Q (all higher coefficients zero).
bool is_rational(const NF& a);
std::string to_string(const NF& a);

inline bool is_zero(const NF& a) { return a.is_zero(); }
inline NF zero_like(const NF& a) { return NF(a.ctx()); }
inline NF one_like(const NF& a) { return nf_int(a.ctx(), 1); }
inline NF from_int_like(const NF& a, long v) { return nf_int(a.ctx(), v); }

}  // namespace isog3
