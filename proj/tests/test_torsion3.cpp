// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include "doctest.h"
#include "isog3/torsion3.hpp"

using namespace isog3;

namespace {

GF random_gf(const GFCtx* K, std::mt19937_64& rng) {
    GF a(K);
    for (int i = 0; i < K->n; ++i) a.set_coeff(i, static_cast<uint32_t>(rng() % K->p));
    return a;
}

NormalizedQuintic quintic_b(const GFCtx* K, long b0, long b1, long b2, long b3) {
    NormalizedQuintic n;
    n.field = K;
    n.b0 = gf_int(K, b0);
    n.b1 = gf_int(K, b1);
    n.b2 = gf_int(K, b2);
    n.b3 = gf_int(K, b3);
    n.shift = gf_zero(K);
    return n;
}

GFCurve random_ordinary(const GFCtx* K, std::mt19937_64& rng) {
    for (;;) {
        std::vector<GF> c;
        for (int i = 0; i < 5; ++i) c.push_back(random_gf(K, rng));
        c.push_back(gf_one(K));
        GFPoly f(std::move(c), gf_zero(K));
        if (!gcd_squarefree(f).second) continue;
        if (!cartier_manin(normalize(f)).ordinary) continue;
        return GFCurve(f);
    }
}

}  // namespace

TEST_CASE("normalization") {
    const GFCtx* F3 = make_extension(3, 1);
    auto n = normalize(gf_poly(F3, {0, 1, 0, 0, 0, 1}));
    CHECK(n.b0.is_zero());
    CHECK(n.b1.is_one());
    CHECK(n.b2.is_zero());
    CHECK(n.b3.is_zero());
    CHECK(n.shift.is_zero());

    // x^5 + x^4 + 2: find the translation killing x^4 by trying all of F_3.
    const GFPoly f = gf_poly(F3, {2, 0, 0, 0, 1, 1});
    auto m = normalize(f);
    int hits = 0;
    for (long s = 0; s < 3; ++s) {
        const GFPoly g = shift(f, gf_int(F3, s));
        if (g[4].is_zero()) {
            ++hits;
            CHECK(m.shift == gf_int(F3, s));
            CHECK(m.poly() == g);
        }
    }
    CHECK(hits == 1);
    CHECK(m.shift == gf_int(F3, 1));

    try {
        // (x + 1)^2 (x^3 + 2x + 1)
        normalize(gf_poly(F3, {1, 2, 1}) * gf_poly(F3, {1, 2, 0, 1}));
        FAIL("singular quintic accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularCurve);
    }
}

TEST_CASE("shift is recovered over extension fields") {
    std::mt19937_64 rng(6);
    const GFCtx* K = make_extension(3, 3);
    for (int t = 0; t < 30; ++t) {
        std::vector<GF> c;
        for (int i = 0; i < 5; ++i) c.push_back(random_gf(K, rng));
        c.push_back(gf_one(K));
        GFPoly f(std::move(c), gf_zero(K));
        if (!gcd_squarefree(f).second) continue;
        auto n = normalize(f);
        CHECK(shift(f, n.shift)[4].is_zero());
        CHECK(shift(n.poly(), -n.shift) == f);
    }
}

TEST_CASE("cartier-manin matrix") {
    const GFCtx* F3 = make_extension(3, 1);
    auto cm = cartier_manin(quintic_b(F3, 0, 1, 0, 0));
    CHECK(cm.ordinary);
    CHECK(cm.matrix[0][1].is_one());
    CHECK(cm.matrix[1][0].is_one());
    CHECK(cm.matrix[0][0].is_zero());
    CHECK(cm.matrix[1][1].is_zero());
    const GF det = cm.matrix[0][0] * cm.matrix[1][1] - cm.matrix[0][1] * cm.matrix[1][0];
    CHECK(det == gf_int(F3, -1));
    CHECK_FALSE(cartier_manin(quintic_b(F3, 1, 0, 2, 1)).ordinary);
    CHECK(cartier_manin(quintic_b(F3, 0, 2, 1, 0)).ordinary);
}

TEST_CASE("quartic roots") {
    const GFCtx* F3 = make_extension(3, 1);
    auto R = torsion_quartic_roots(quintic_b(F3, 0, 1, 0, 0));
    CHECK(R.field->n == 2);
    REQUIRE(R.roots.size() == 4);
    std::set<mpz_class> got, want;
    for (const auto& r : R.roots) got.insert(gf_index(r));
    for (long i = 0; i < 9; ++i) {
        const GF x = gf_from_index(R.field, mpz_class(i));
        if (pow(x, uint64_t{4}).is_one()) want.insert(gf_index(x));
    }
    CHECK(got == want);
    try {
        torsion_quartic_roots(quintic_b(F3, 1, 0, 2, 1));
        FAIL("non-ordinary accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotOrdinary);
    }
}

TEST_CASE("quartic roots satisfy vieta and stay within degree 4k") {
    std::mt19937_64 rng(13);
    for (int k = 1; k <= 4; ++k) {
        const GFCtx* K = make_extension(3, k);
        for (int t = 0; t < 15; ++t) {
            const GFCurve C = random_ordinary(K, rng);
            const auto n = normalize(C.f());
            auto R = torsion_quartic_roots(n);
            REQUIRE(R.roots.size() == 4);
            CHECK(R.field->n <= 4 * k);
            const GF b1 = R.base.apply(n.b1), b2 = R.base.apply(n.b2);
            GF e1 = gf_zero(R.field), e2 = e1, e3 = e1, e4 = gf_one(R.field);
            const auto& a = R.roots;
            for (int i = 0; i < 4; ++i) {
                e1 += a[i];
                e4 = e4 * a[i];
                for (int j = i + 1; j < 4; ++j) {
                    e2 += a[i] * a[j];
                    for (int l = j + 1; l < 4; ++l) e3 += a[i] * a[j] * a[l];
                }
            }
            CHECK(e1.is_zero());
            CHECK(e2.is_zero());
            CHECK(e3 == b2);
            CHECK(e4 == -b1);
            std::set<mpz_class> distinct;
            for (const auto& r : a) distinct.insert(gf_index(r));
            CHECK(distinct.size() == 4);
        }
    }
}

TEST_CASE("secant pairs for x^5 + x") {
    const GFCtx* F3 = make_extension(3, 1);
    const auto n = quintic_b(F3, 0, 1, 0, 0);
    auto R = torsion_quartic_roots(n);
    const GFCtx* E = R.field;
    {
        auto p = secant_pair_for_root(gf_int(E, 1), R.base, n);
        CHECK(p.d2 == gf_int(E, 2));
        CHECK(p.d1 == gf_int(E, 1));
        CHECK(p.d0 == gf_int(E, 2));
        CHECK(p.c1 == gf_int(E, 2));
        CHECK(p.c0 == gf_int(E, 1));
        CHECK(p.tangent);
        CHECK(p.tangent_at == gf_int(E, 2));
        CHECK(verify_torsion_identity(p, n));
        auto q = p;
        q.c0 = q.c0 + gf_one(E);
        CHECK_FALSE(verify_torsion_identity(q, n));
    }
    {
        auto p = secant_pair_for_root(gf_int(E, 2), R.base, n);
        CHECK(p.c1 == gf_int(E, 1));
        CHECK(p.c0 == gf_int(E, 1));
        CHECK(p.tangent);
        CHECK(p.tangent_at == gf_int(E, 1));
        CHECK(verify_torsion_identity(p, n));
    }
    // The identity by hand over F_3: (x^3+2x^2+x+2)^2 - (x^5+x) - (x^2+2x+1)^3.
    const GFPoly lhs = pow(gf_poly(F3, {2, 1, 2, 1}), 2) - gf_poly(F3, {0, 1, 0, 0, 0, 1}) - pow(gf_poly(F3, {1, 2, 1}), 3);
    CHECK(lhs.is_zero());
    for (long bad : {0L, 3L}) {
        try {
            secant_pair_for_root(gf_int(E, bad), R.base, n);
            FAIL("non-root accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotAQuarticRoot);
        }
    }
    try {
        secant_pair_for_root(gf_gen(E) + gf_one(E), R.base, n);
        FAIL("non-root accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAQuarticRoot);
    }
}

TEST_CASE("torsion identity on random ordinary curves") {
    std::mt19937_64 rng(101);
    for (int k : {1, 2, 2, 3}) {
        const GFCtx* K = make_extension(3, k);
        for (int t = 0; t < (k == 2 ? 50 : 20); ++t) {
            const GFCurve C = random_ordinary(K, rng);
            auto T = compute_torsion(C);
            REQUIRE(T.pairs.size() == 4);
            for (const auto& p : T.pairs) {
                CHECK(verify_torsion_identity(p, T.normalized));
                CHECK(p.c1_cubed == p.c1_cubed_alt);
                CHECK(p.base.apply(T.normalized.b1) == -(p.a * p.d0));
                CHECK(p.c1 * p.c1 * p.c1 == p.c1_cubed);
                // Pointwise route: both sides agree at more points than the degree.
                const GFPoly f = p.base.apply(T.normalized.poly());
                int checked = 0;
                for (long i = 0; i < 200 && checked < 8; ++i) {
                    if (mpz_class(i) >= p.field->order) break;
                    const GF x = gf_from_index(p.field, mpz_class(i));
                    const GF cub = ((x + p.d2) * x + p.d1) * x + p.d0;
                    const GF quad = (x + p.c1) * x + p.c0;
                    CHECK(cub * cub - p.a * f.eval(x) == quad * quad * quad);
                    ++checked;
                }
                auto roots = pair_roots(p);
                CHECK(static_cast<int>(roots.xs.size()) == (p.tangent ? 1 : 2));
                for (const auto& x : roots.xs) CHECK(roots.base.apply(p.quadratic()).eval(x).is_zero());
            }
        }
    }
}
