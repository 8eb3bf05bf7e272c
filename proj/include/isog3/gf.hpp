// SPDX-License-Identifier: Apache-2.0
// Finite fields F_{p^n} in a flat representation: F_p[X] modulo a monic
// irreducible polynomial of degree n.  Contexts are interned and live for the
// whole process, so elements carry a plain pointer to their context.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "isog3/errors.hpp"

namespace isog3 {

constexpr int kMaxDegree = 128;

using Coeffs = std::array<uint8_t, kMaxDegree>;

struct GFCtx {
    uint32_t p = 0;
    int n = 0;
    std::vector<uint32_t> modulus;                      // n + 1 entries, monic
    std::vector<std::pair<int, uint32_t>> reduce_terms;  // (j, -m_j mod p), nonzero only
    std::vector<uint32_t> inv_table;                     // inverses in F_p
    std::vector<Coeffs> frob_rows;                       // X^(p i) mod modulus
    std::vector<Coeffs> frob_inv_rows;                   // (X^(p^(n-1)))^i mod modulus
    mpz_class order;                                     // p^n
};

class GF {
public:
    GF() = default;
    explicit GF(const GFCtx* ctx) : ctx_(ctx) { c_.fill(0); }

    const GFCtx* ctx() const { return ctx_; }
    uint8_t coeff(int i) const { return c_[i]; }
    void set_coeff(int i, uint32_t v) { c_[i] = static_cast<uint8_t>(v % ctx_->p); }
    const Coeffs& raw() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    GF& operator+=(const GF& o);
    GF& operator-=(const GF& o);
    GF& operator*=(const GF& o) { return *this = *this * o; }
    GF& operator/=(const GF& o) { return *this = *this / o; }

    friend GF operator+(GF a, const GF& b) { return a += b; }
    friend GF operator-(GF a, const GF& b) { return a -= b; }
    friend GF operator*(const GF& a, const GF& b);
    friend GF operator/(const GF& a, const GF& b);
    GF operator-() const;

    friend bool operator==(const GF& a, const GF& b);
    friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }
    // Total order by the integer sum c_i p^i; used for deterministic choices.
    friend bool operator<(const GF& a, const GF& b);

private:
    const GFCtx* ctx_ = nullptr;
    Coeffs c_{};
};

// Context construction.  A missing modulus selects the smallest irreducible
// polynomial of degree k in the ordering by sum c_i p^i.
const GFCtx* make_extension(uint32_t p, int k, const std::optional<std::vector<uint32_t>>& modulus = {});
const GFCtx* default_extension(uint32_t p, int k);
bool fp_is_irreducible(const std::vector<uint32_t>& monic, uint32_t p);

GF gf_zero(const GFCtx* K);
GF gf_one(const GFCtx* K);
GF gf_int(const GFCtx* K, long v);
GF gf_gen(const GFCtx* K);
GF gf_from_coeffs(const GFCtx* K, const std::vector<uint32_t>& coeffs);
// Element whose base-p digits (low first) are the coefficients.
GF gf_from_index(const GFCtx* K, const mpz_class& index);
mpz_class gf_index(const GF& a);

GF inverse(const GF& a);
GF pow(const GF& a, const mpz_class& e);
GF pow(const GF& a, uint64_t e);
GF frobenius(const GF& a);
GF frobenius_inverse(const GF& a);
// Unique y with y^3 = x; requires characteristic 3.
GF frobenius_cube_root(const GF& a);
bool is_square(const GF& a);

std::vector<uint32_t> gf_coeffs(const GF& a);
std::string to_string(const GF& a);

inline bool is_zero(const GF& a) { return a.is_zero(); }
inline GF zero_like(const GF& a) { return gf_zero(a.ctx()); }
inline GF one_like(const GF& a) { return gf_one(a.ctx()); }
inline GF from_int_like(const GF& a, long v) { return gf_int(a.ctx(), v); }

// Dense polynomials over F_p used for modulus search and embeddings.
namespace fp {
using Poly = std::vector<uint32_t>;
void trim(Poly& a);
Poly mod(Poly a, const Poly& m, uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p);
Poly powp_mod(const Poly& a, const Poly& m, uint32_t p);
Poly gcd(Poly a, Poly b, uint32_t p);
uint32_t inv(uint32_t a, uint32_t p);
}  // namespace fp

}  // namespace isog3
