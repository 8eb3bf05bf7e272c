// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include "doctest.h"
#include "isog3/finite_poly.hpp"
#include "isog3/linalg.hpp"
#include "isog3/poly.hpp"

using namespace isog3;

namespace {

std::vector<GF> all_elements(const GFCtx* K) {
    std::vector<GF> out;
    const long q = K->order.get_si();
    for (long i = 0; i < q; ++i) out.push_back(gf_from_index(K, mpz_class(i)));
    return out;
}

GF random_gf(const GFCtx* K, std::mt19937_64& rng) {
    GF a(K);
    for (int i = 0; i < K->n; ++i) a.set_coeff(i, static_cast<uint32_t>(rng() % K->p));
    return a;
}

GFPoly random_gf_poly(const GFCtx* K, int deg, std::mt19937_64& rng) {
    std::vector<GF> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_gf(K, rng));
    return GFPoly(std::move(c), gf_zero(K));
}

Poly<Q> random_q_poly(int deg, std::mt19937_64& rng) {
    std::vector<Q> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Q(static_cast<long>(rng() % 7) - 3));
    return Poly<Q>(std::move(c), Q(0));
}

}  // namespace

TEST_CASE("prime field and explicit moduli") {
    const GFCtx* F3 = make_extension(3, 1);
    CHECK(F3->p == 3);
    CHECK(F3->n == 1);
    CHECK(F3->order == 3);

    const GFCtx* F9 = make_extension(3, 2, std::vector<uint32_t>{1, 0, 1});
    const GF i = gf_gen(F9);
    CHECK(i * i == gf_int(F9, -1));
    CHECK(F9->order == 9);

    try {
        make_extension(3, 2, std::vector<uint32_t>{2, 0, 1});
        FAIL("reducible modulus accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModulusNotIrreducible);
    }
}

TEST_CASE("default moduli are irreducible and field axioms hold") {
    for (auto [p, k] : std::vector<std::pair<uint32_t, int>>{{2, 3}, {3, 2}, {3, 4}, {5, 2}, {3, 7}, {7, 3}}) {
        const GFCtx* K = default_extension(p, k);
        CHECK(fp_is_irreducible(K->modulus, p));
        mpz_class q = 1;
        for (int j = 0; j < k; ++j) q *= p;
        CHECK(K->order == q);
        std::mt19937_64 rng(p * 100 + k);
        for (int t = 0; t < 50; ++t) {
            GF a = random_gf(K, rng), b = random_gf(K, rng), c = random_gf(K, rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * inverse(a) == gf_one(K));
            // a^q = a
            CHECK(pow(a, K->order) == a);
            CHECK(frobenius(a) == pow(a, static_cast<uint64_t>(p)));
            CHECK(frobenius(frobenius_inverse(a)) == a);
        }
    }
}

TEST_CASE("frobenius cube root examples") {
    const GFCtx* F3 = make_extension(3, 1);
    CHECK(frobenius_cube_root(gf_zero(F3)).is_zero());
    CHECK(frobenius_cube_root(gf_int(F3, 2)) == gf_int(F3, 2));
    const GFCtx* F9 = make_extension(3, 2);
    for (const GF& x : all_elements(F9)) {
        const GF c = x * x * x;
        CHECK(c * c * c == x);
    }
    try {
        frobenius_cube_root(gf_one(make_extension(5, 1)));
        FAIL("cube root in characteristic 5");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCharacteristic);
    }
}

TEST_CASE("frobenius cube root is the inverse of cubing, exhaustively up to 3^6") {
    for (int k = 1; k <= 6; ++k) {
        const GFCtx* K = make_extension(3, k);
        for (const GF& x : all_elements(K)) {
            const GF y = frobenius_cube_root(x);
            CHECK(y * y * y == x);
            CHECK(frobenius_cube_root(x * x * x) == x);
        }
    }
}

TEST_CASE("gcd and squarefree examples") {
    const GFCtx* F3 = make_extension(3, 1);
    const GFPoly f = gf_poly(F3, {0, 1, 0, 0, 0, 1});
    // Euclid by hand: f' = 2x^4 + 1, f = (2x)(2x^4+1) + (x - 2x) ... gcd is 1.
    const GFPoly fp = gf_poly(F3, {1, 0, 0, 0, 2});
    CHECK(derivative(f) == fp);
    auto [g, sf] = gcd_squarefree(f);
    CHECK(sf);
    CHECK(g == gf_poly(F3, {1}));

    auto [g2, sf2] = gcd_squarefree(gf_poly(F3, {1, 2, 1}));
    CHECK_FALSE(sf2);
    CHECK(g2 == gf_poly(F3, {1, 1}));

    const Poly<Q> x = Poly<Q>::x(Q(0));
    CHECK(gcd_squarefree(x).second);

    auto [h, sf3] = gcd_squarefree(gf_poly(F3, {0, 1, 1}), gf_poly(F3, {0, 2}));
    CHECK(h == gf_poly(F3, {0, 1}));
    CHECK(sf3);

    try {
        gcd_squarefree(Poly<Q>(Q(0)));
        FAIL("zero accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroPolynomial);
    }
}

TEST_CASE("discriminant examples") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const Q b(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
        const Q c(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 5));
        CHECK(discriminant(Poly<Q>({c, b, Q(1)}, Q(0))) == b * b - Q(4) * c);
    }
    // (x-1)^2 x
    CHECK(discriminant(Poly<Q>({Q(0), Q(1), Q(-2), Q(1)}, Q(0))).is_zero());

    // x^3 - 1: product of squared root differences over Q(eta), roots 1, eta, eta^2.
    const NFCtx* K = cyclotomic3();
    const NF one = nf_int(K, 1), eta = nf_gen(K);
    const std::vector<NF> r = {one, eta, eta * eta};
    NF prod = one;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) prod = prod * (r[i] - r[j]) * (r[i] - r[j]);
    CHECK(is_rational(prod));
    CHECK(prod == nf_int(K, -27));
    CHECK(discriminant(Poly<Q>({Q(-1), Q(0), Q(0), Q(1)}, Q(0))) == Q(-27));

    try {
        discriminant(Poly<Q>({Q(5)}, Q(0)));
        FAIL("constant accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooSmall);
    }
}

TEST_CASE("discriminant vanishes exactly on non-squarefree polynomials") {
    std::mt19937_64 rng(5);
    std::vector<const GFCtx*> fields = {make_extension(3, 1), make_extension(3, 2), make_extension(5, 1)};
    for (const GFCtx* K : fields) {
        int nonsf = 0;
        for (int t = 0; t < 200; ++t) {
            const int deg = 1 + static_cast<int>(rng() % 6);
            GFPoly f = random_gf_poly(K, deg, rng);
            if (f.degree() < 1) continue;
            if (t % 3 == 0 && f.degree() <= 4) {
                // Force a repeated factor in a third of the samples.
                const GFPoly lin = gf_poly(K, {static_cast<long>(rng() % K->p), 1});
                f = f * lin * lin;
            }
            const bool sf = gcd_squarefree(f).second;
            nonsf += !sf;
            CHECK(discriminant(f).is_zero() == !sf);
        }
        CHECK(nonsf > 0);
    }
    for (int t = 0; t < 200; ++t) {
        Poly<Q> f = random_q_poly(1 + static_cast<int>(rng() % 6), rng);
        if (f.degree() < 1) continue;
        if (t % 3 == 0 && f.degree() <= 4) {
            const Poly<Q> lin({Q(static_cast<long>(rng() % 5) - 2), Q(1)}, Q(0));
            f = f * lin * lin;
        }
        CHECK(discriminant(f).is_zero() == !gcd_squarefree(f).second);
    }
}

TEST_CASE("roots in splitting field examples") {
    const GFCtx* F3 = make_extension(3, 1);
    {
        auto S = roots_in_splitting_field(gf_poly(F3, {1, 0, 1}));
        CHECK(S.field->n == 2);
        REQUIRE(S.roots.size() == 2);
        std::set<mpz_class> got, want;
        for (auto& [r, m] : S.roots) {
            CHECK(m == 1);
            got.insert(gf_index(r));
        }
        for (const GF& x : all_elements(S.field))
            if ((x * x + gf_one(S.field)).is_zero()) want.insert(gf_index(x));
        CHECK(got == want);
    }
    {
        auto S = roots_in_splitting_field(gf_poly(F3, {-1, 0, 0, 0, 1}));
        CHECK(S.field->n == 2);
        REQUIRE(S.roots.size() == 4);
        std::set<mpz_class> got, want;
        for (auto& [r, m] : S.roots) got.insert(gf_index(r));
        for (const GF& x : all_elements(S.field))
            if (pow(x, uint64_t{4}) == gf_one(S.field)) want.insert(gf_index(x));
        CHECK(got == want);
    }
    {
        auto S = roots_in_splitting_field(gf_poly(F3, {-1, 3, -3, 1}));
        CHECK(S.field == F3);
        REQUIRE(S.roots.size() == 1);
        CHECK(S.roots[0].first == gf_one(F3));
        CHECK(S.roots[0].second == 3);
    }
}

TEST_CASE("splitting field roots re-expand to the polynomial") {
    std::mt19937_64 rng(17);
    for (const GFCtx* K : {make_extension(3, 1), make_extension(3, 2), make_extension(2, 2), make_extension(3, 3)}) {
        for (int t = 0; t < 25; ++t) {
            GFPoly f = random_gf_poly(K, 1 + static_cast<int>(rng() % 6), rng);
            if (f.degree() < 1) continue;
            if (t % 4 == 0) f = f * f;
            auto S = roots_in_splitting_field(f);
            CHECK(S.field->n == K->n * splitting_degree(f));
            const GFPoly fe = S.base.apply(f);
            GFPoly prod = GFPoly::constant(fe.lc());
            int total = 0;
            for (auto& [r, m] : S.roots) {
                const GFPoly lin({-r, gf_one(S.field)}, gf_zero(S.field));
                for (int j = 0; j < m; ++j) prod = prod * lin;
                total += m;
            }
            CHECK(total == f.degree());
            CHECK(prod == fe);
        }
    }
}

TEST_CASE("equal-degree splitting agrees with exhaustive search") {
    std::mt19937_64 rng(23);
    for (const GFCtx* K : {make_extension(3, 2), make_extension(3, 4), make_extension(3, 6), make_extension(2, 5), make_extension(5, 3)}) {
        for (int t = 0; t < 20; ++t) {
            GFPoly f = random_gf_poly(K, 1 + static_cast<int>(rng() % 7), rng);
            if (f.degree() < 1) continue;
            // Plant a few roots so that the comparison is not vacuous.
            for (int j = 0; j < static_cast<int>(rng() % 3); ++j) f = f * GFPoly({-random_gf(K, rng), gf_one(K)}, gf_zero(K));
            CHECK(roots_equal_degree(f) == roots_exhaustive(f));
        }
    }
}

TEST_CASE("compose fields") {
    const GFCtx* F3 = make_extension(3, 1);
    const GFCtx* F9 = make_extension(3, 2);
    const GFCtx* F27 = make_extension(3, 3);
    {
        auto C = compose_fields(F3, F9);
        CHECK(C.field == F9);
        CHECK(C.second.is_identity());
        CHECK(C.first.apply(gf_int(F3, 2)) == gf_int(F9, 2));
    }
    {
        auto C = compose_fields(F9, F27);
        CHECK(C.field->n == 6);
        CHECK(C.field->order == 729);
    }
    {
        auto C = compose_fields(F9, F9);
        CHECK(C.field == F9);
        for (const GF& x : all_elements(F9)) {
            for (const Embedding* e : {&C.first, &C.second}) {
                auto back = e->pullback(e->apply(x));
                REQUIRE(back.has_value());
                CHECK(*back == x);
            }
        }
    }
    try {
        compose_fields(F9, make_extension(5, 2));
        FAIL("characteristic mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
}

TEST_CASE("embeddings are ring homomorphisms") {
    std::mt19937_64 rng(31);
    std::vector<std::pair<const GFCtx*, const GFCtx*>> cases = {
        {make_extension(3, 2), make_extension(3, 3)},
        {make_extension(3, 4), make_extension(3, 6)},
        {make_extension(2, 3), make_extension(2, 4)},
        {make_extension(3, 2), make_extension(3, 2, std::vector<uint32_t>{2, 2, 1})},
    };
    for (auto [a, b] : cases) {
        auto C = compose_fields(a, b);
        CHECK(C.field->n % a->n == 0);
        CHECK(C.field->n % b->n == 0);
        for (int t = 0; t < 100; ++t) {
            const GF x = random_gf(a, rng), y = random_gf(a, rng);
            CHECK(C.first.apply(x + y) == C.first.apply(x) + C.first.apply(y));
            CHECK(C.first.apply(x * y) == C.first.apply(x) * C.first.apply(y));
            const GF u = random_gf(b, rng), v = random_gf(b, rng);
            CHECK(C.second.apply(u + v) == C.second.apply(u) + C.second.apply(v));
            CHECK(C.second.apply(u * v) == C.second.apply(u) * C.second.apply(v));
        }
        CHECK(C.first.apply(gf_one(a)) == gf_one(C.field));
    }
}

TEST_CASE("embedding composition and subfield membership") {
    const GFCtx* F9 = make_extension(3, 2);
    const GFCtx* F81 = make_extension(3, 4);
    const GFCtx* E = make_extension(3, 8);
    const Embedding a = make_embedding(F9, F81), b = make_embedding(F81, E);
    const Embedding ab = compose(a, b);
    for (const GF& x : all_elements(F9)) {
        CHECK(ab.apply(x) == b.apply(a.apply(x)));
        CHECK(in_subfield(ab.apply(x), 2));
    }
    CHECK_FALSE(in_subfield(gf_gen(E), 4));
}

TEST_CASE("square roots and squares") {
    const GFCtx* K = make_extension(3, 3);
    int squares = 0;
    for (const GF& x : all_elements(K)) {
        auto r = sqrt_in_field(x);
        CHECK(r.has_value() == is_square(x));
        if (r) {
            CHECK(*r * *r == x);
            ++squares;
        }
    }
    CHECK(squares == 14);
}

TEST_CASE("factor degrees") {
    const GFCtx* F3 = make_extension(3, 1);
    // (x^2+1)(x^3 - x + 1) x
    const GFPoly f = gf_poly(F3, {1, 0, 1}) * gf_poly(F3, {1, -1, 0, 1}) * gf_poly(F3, {0, 1});
    auto d = factor_degrees(f);
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 2, 3});
    CHECK(splitting_degree(f) == 6);
}

TEST_CASE("rationals and number fields") {
    CHECK(Q::parse("-6/4") == Q(-3, 2));
    CHECK(to_string(Q(-3, 2)) == "-3/2");
    CHECK(to_string(Q(5)) == "5");
    try {
        Q::parse("1/0");
        FAIL("zero denominator accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidInput);
    }
    const NFCtx* K = cyclotomic3();
    const NF eta = nf_gen(K);
    CHECK((eta * eta + eta + nf_int(K, 1)).is_zero());
    CHECK(pow(eta, 3) == nf_int(K, 1));
    const NF s = nf_int(K, 2) * eta + nf_int(K, 1);
    CHECK(s * s == nf_int(K, -3));
    const NF a = nf_rational(K, Q(3, 7)) - eta * nf_int(K, 5);
    CHECK(a * inverse(a) == nf_int(K, 1));
}

TEST_CASE("big complex arithmetic and rank decisions") {
    PrecisionScope ps(60);
    const BC i(Real(0), Real(1));
    CHECK(abs(i * i + BC(1)) < zero_threshold());
    const BC w = root_of_unity(1, 3);
    CHECK(abs(w * w + w + BC(1)) < zero_threshold());
    const BC z(Real(3), Real(-4));
    CHECK(abs(sqrt(z) * sqrt(z) - z) < zero_threshold());
    CHECK(abs(abs(z) - Real(5)) < zero_threshold());
    // Near the negative real axis the square root keeps full relative accuracy.
    for (const BC& u : {BC(Real(-26), Real("1e-40")), BC(Real(-26), Real("-1e-40")), BC(Real("1e-40"), Real(-26))}) {
        const BC r = sqrt(u);
        CHECK(abs(r * r - u) < abs(u) * pow10(-58));
        CHECK(r.re().sign() >= 0);
    }
    CHECK(abs(z * inverse(z) - BC(1)) < zero_threshold());

    // Rank 2 matrix: third row = row0 + w * row1.
    Mat<BC> m = {{BC(1), BC(2), i, BC(0)}, {w, BC(0), BC(1), BC(3)}};
    Vec<BC> r3;
    for (int j = 0; j < 4; ++j) r3.push_back(m[0][j] + w * m[1][j]);
    m.push_back(r3);
    CHECK(rank(m, 4) == 2);
    auto ns = nullspace(m, 4, BC(0));
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        for (const auto& row : m) CHECK(abs(dot(row, v)) < zero_threshold());
    auto rr = rref(m, 4);
    CHECK(rr.pivots.size() == 2);
}

TEST_CASE("exact linear algebra") {
    Mat<Q> m = {{Q(1), Q(2), Q(3)}, {Q(2), Q(4), Q(6)}, {Q(1), Q(0), Q(1)}};
    CHECK(rank(m, 3) == 2);
    CHECK(determinant(m).is_zero());
    auto ns = nullspace(m, 3, Q(0));
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) CHECK(dot(row, ns[0]).is_zero());
    auto c = coordinates_in(Mat<Q>{{Q(1), Q(0), Q(1)}, {Q(0), Q(1), Q(1)}}, Vec<Q>{Q(2), Q(3), Q(5)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Q(2));
    CHECK((*c)[1] == Q(3));
    CHECK_FALSE(coordinates_in(Mat<Q>{{Q(1), Q(0), Q(1)}}, Vec<Q>{Q(0), Q(1), Q(0)}).has_value());
    CHECK(determinant(Mat<Q>{{Q(2), Q(1)}, {Q(1), Q(3)}}) == Q(5));
}

TEST_CASE("element formatting") {
    const GFCtx* F9 = make_extension(3, 2, std::vector<uint32_t>{1, 0, 1});
    CHECK(to_string(gf_from_coeffs(F9, {1, 2})) == "2*g+1");
    CHECK(to_string(gf_zero(F9)) == "0");
    CHECK(gf_index(gf_from_index(F9, mpz_class(7))) == 7);
}
