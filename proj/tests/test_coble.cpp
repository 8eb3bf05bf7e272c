// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "isog3/coble.hpp"

using namespace isog3;

namespace {

QPoly Yv(int i) { return QPoly::var(coble::kVars, coble::y(i), Q(0)); }

std::set<std::pair<int, int>> cells(const std::vector<Correction>& v, const std::string& table) {
    std::set<std::pair<int, int>> s;
    for (const auto& c : v)
        if (c.table == table) s.insert({c.row, c.col});
    return s;
}

// The Burkhardt quartic built term by term, independent of burkhardt_poly.
QPoly burkhardt_oracle() {
    QPoly cubes = Yv(1) * Yv(1) * Yv(1) + Yv(2) * Yv(2) * Yv(2) + Yv(3) * Yv(3) * Yv(3) + Yv(4) * Yv(4) * Yv(4);
    return Yv(0) * Yv(0) * Yv(0) * Yv(0) + Q(8) * (Yv(0) * cubes) + Q(48) * (Yv(1) * Yv(2) * Yv(3) * Yv(4));
}

std::vector<Q> random_z(std::mt19937_64& rng) {
    std::vector<Q> z;
    for (int j = 0; j < 4; ++j) {
        long v = 0;
        while (v == 0) v = static_cast<long>(rng() % 19) - 9;
        z.push_back(Q(v));
    }
    return z;
}

Real max_abs(const Vec<BC>& v) {
    Real m(0);
    for (const auto& x : v) m = std::max(m, abs(x));
    return m;
}

}  // namespace

TEST_CASE("burkhardt quartic values") {
    CHECK(burkhardt_eval<Q>({Q(1), Q(0), Q(0), Q(0), Q(0)}) == Q(1));
    CHECK(burkhardt_eval<Q>({Q(0), Q(1), Q(-1), Q(0), Q(0)}) == Q(0));
    CHECK(burkhardt_eval<Q>({Q(1), Q(1), Q(1), Q(1), Q(1)}) == Q(81));
    CHECK(burkhardt_poly() == burkhardt_oracle());
}

TEST_CASE("printed coble system fails integrability and the repair is unique") {
    const CobleSystem printed = printed_coble_system();
    const IntegrabilityReport r = check_integrability(printed);
    CHECK_FALSE(r.integrable);
    CHECK_FALSE(r.failing_pairs.empty());

    const CobleCubic& cc = corrected_coble();
    CHECK(cc.corrected_report.integrable);
    const std::vector<Q> expect = {Q(1), Q(2), Q(2), Q(2), Q(2), Q(4), Q(4), Q(4), Q(4)};
    CHECK(cc.corrected_report.scalings == expect);
    CHECK(coble_row_scaling() == std::vector<Q>(expect.begin(), expect.begin() + 5));
    CHECK(skew_after_scaling(cc.corrected, expect));
    CHECK(cc.minimal_solutions == 1);
    CHECK(cells(cc.corrected.overlay, "feq") == std::set<std::pair<int, int>>{{1, 4}, {2, 1}, {3, 3}});
    CHECK(cc.corrected.twoeq == printed.twoeq);
}

TEST_CASE("a correct system passes through unchanged") {
    const CobleCubic again = assemble_coble_cubic(corrected_coble().corrected);
    CHECK(again.input_report.integrable);
    CHECK(again.corrected.M == corrected_coble().corrected.M);
    CHECK(again.cubic == corrected_coble().cubic);
}

TEST_CASE("the coble cubic is a potential for the quadrics") {
    const CobleCubic& cc = corrected_coble();
    const auto q = cc.corrected.quadrics();
    // Cubic in (y, z), linear in alpha.
    for (const auto& [m, c] : cc.cubic.terms()) {
        int dx = 0, da = 0;
        for (int v = 0; v < coble::kVars; ++v) (v < coble::a(0) ? dx : da) += m[v];
        CHECK(dx == 3);
        CHECK(da == 1);
    }
    for (int i = 0; i < 9; ++i) {
        const int v = i < 5 ? coble::y(i) : coble::z(i - 4);
        CHECK(cc.cubic.diff(v) == cc.corrected_report.scalings[i] * q[i]);
    }
    // The printed system has no potential with nonzero weights.
    const auto qp = printed_coble_system().quadrics();
    bool all_match = true;
    for (int i = 0; i < 9; ++i) {
        const int v = i < 5 ? coble::y(i) : coble::z(i - 4);
        all_match = all_match && cc.cubic.diff(v) == cc.corrected_report.scalings[i] * qp[i];
    }
    CHECK_FALSE(all_match);
}

TEST_CASE("secant table against the corrected system") {
    const PolyMatrix M0 = restrict_y_zero(corrected_coble().corrected.M);
    const auto d = table_differences("seceq", printed_seceq(), M0, "restriction");
    CHECK(cells(d, "seceq") == std::set<std::pair<int, int>>{{1, 4}, {2, 1}});
    // M(0, z) after row scaling is skew.
    const auto& s = coble_row_scaling();
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) CHECK(s[i] * M0[i][k] == -(s[k] * M0[k][i]));
}

TEST_CASE("hessian of the burkhardt quartic") {
    const HessianReport h = hessian_identity_check();
    CHECK(h.scalar == Q(12));
    CHECK(h.printed_mismatches == std::vector<std::pair<int, int>>{{3, 3}});
    CHECK(h.corrected_matches);
    CHECK(h.matches_feq_restriction);
    // Independent: second derivatives of the oracle quartic.
    const QPoly B = burkhardt_oracle();
    const auto& s = coble_row_scaling();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(B.diff(coble::y(i)).diff(coble::y(j)) == Q(12) * (s[i] * h.corrected_hes[i][j]));
}

TEST_CASE("Pfaffian kernel map lands on the burkhardt quartic") {
    const MbReport r = mb_check();
    const std::vector<QPoly> subs = [] {
        std::vector<QPoly> v;
        for (int i = 0; i < coble::kVars; ++i) v.push_back(QPoly::var(coble::kVars, i, Q(0)));
        return v;
    }();
    std::vector<QPoly> images = subs;
    for (int i = 0; i < 5; ++i) images[coble::y(i)] = r.pfaffian[i];
    CHECK(burkhardt_oracle().substitute(images).is_zero());

    CHECK(r.counterexample_alpha == std::vector<Q>{Q(12), Q(-6), Q(-10), Q(6), Q(2)});
    CHECK(r.counterexample_value == Q(-39936));
    CHECK(burkhardt_eval(r.counterexample_alpha) == Q(-39936));
    CHECK(std::count(r.agrees.begin(), r.agrees.end(), false) > 0);
    CHECK(r.agrees[0]);
}

TEST_CASE("c- on random rational points") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 100; ++n) {
        const auto z = random_z(rng);
        const Mat<Q> A = maschke_skew_matrix(z);
        CHECK(rank(A, 5) == 4);
        const Vec<Q> v = cminus(z);
        CHECK(burkhardt_eval(v) == Q(0));
        for (int i = 0; i < 5; ++i) {
            Q s(0);
            for (int k = 0; k < 5; ++k) s += A[i][k] * v[k];
            CHECK(s == Q(0));
        }
    }
}

TEST_CASE("c- at a point with a vanishing coordinate") {
    const std::vector<Q> z = {Q(0), Q(1), Q(2), Q(3)};
    bool degenerate = false;
    try {
        const Vec<Q> v = cminus(z);
        degenerate = v[0] == Q(0);
        CHECK(burkhardt_eval(v) == Q(0));
    } catch (const Error& e) {
        degenerate = e.code() == ErrorCode::KernelDegenerate;
    }
    CHECK(degenerate);
}

TEST_CASE("c+ on points of the hessian") {
    PrecisionScope ps(100);
    const auto pts = sample_hessian_points(25, 11);
    REQUIRE(pts.size() == 25);
    const Real tol = pow10(-50);
    for (const auto& y : pts) {
        const Vec<BC> v = cplus(y);
        const Mat<BC> H = hessian_matrix(y);
        Vec<BC> hv;
        for (int i = 0; i < 5; ++i) {
            BC s(0);
            for (int k = 0; k < 5; ++k) s += H[i][k] * v[k];
            hv.push_back(s);
        }
        CHECK(max_abs(hv) / (max_abs(v) * max_abs(y) * max_abs(y)) < tol);
        const Real bv = abs(burkhardt_eval(v)) / pow(BC(max_abs(v)), 4).re();
        CHECK(bv < tol);
    }
    const std::vector<BC> generic = {BC(1), BC(2), BC(-3), BC(5), BC(7)};
    CHECK_THROWS_AS(cplus(generic), Error);
}

TEST_CASE("degree 40 invariant") {
    const std::vector<Q> z = {Q(1), Q(1), Q(1), Q(2)};
    const auto v = phi40(z);
    Q prod(1);
    for (const auto& f : v.factors) prod = prod * f;
    CHECK(prod == v.value);
    CHECK(v.factors[4] == Q((1 + 1 + 8) * (1 + 1 + 8) * (1 + 1 + 8) - 27 * 8));
    // B = (z1^3 - z2^3 + z4^3)^3 + 27 z1^3 z2^3 z4^3
    CHECK(v.factors[5] == Q(8 * 8 * 8 + 27 * 8));
    CHECK(phi40_B_printed(z) == Q(1 + 27));

    const QPoly P = phi40_poly();
    CHECK(P.degree() == 40);
    std::mt19937_64 rng(3);
    for (int n = 0; n < 5; ++n) {
        const auto w = random_z(rng);
        std::vector<Q> x(4);
        for (int j = 0; j < 4; ++j) x[j] = w[j];
        CHECK(P.eval(x) == phi40(x).value);
    }
    CHECK(phi40_poly(true) != P);
}

TEST_CASE("reflection hyperplanes") {
    const auto arr = reflection_arrangement();
    CHECK(arr.normals.size() == 40);
    CHECK(arrangement_closed(arr));
    const auto all = reflection_arrangement(PermutationRule::All);
    CHECK(all.normals.size() == 67);
    CHECK_FALSE(arrangement_closed(all));
    const auto none = reflection_arrangement(PermutationRule::Identity);
    CHECK_FALSE(arrangement_closed(none));

    const NFCtx* E = cyclotomic3();
    const NF eta = nf_gen(E);
    CHECK(conj_eta(eta) == eta * eta);
    CHECK(conj_eta(conj_eta(eta)) == eta);

    const MPoly<NF> prod = arrangement_product(arr);
    CHECK(prod.degree() == 40);
    const auto lift = [&](const QPoly& p) { return p.map([&](const Q& c) { return nf_rational(E, c); }, nf_int(E, 0)); };
    const auto c = proportionality(prod, lift(phi40_poly()));
    REQUIRE(c.has_value());
    CHECK(is_rational(*c));
    CHECK_FALSE(proportionality(prod, lift(phi40_poly(true))).has_value());
    const auto cA = proportionality(nonic_product(), lift(phi40_factor_poly(4)));
    CHECK(cA.has_value());
}

TEST_CASE("schroedinger action and coordinate changes") {
    const NFCtx* E = cyclotomic3();
    const NF w = nf_gen(E);
    std::vector<NF> eta;
    for (int i = 0; i < 9; ++i) eta.push_back(nf_int(E, i * i - 3 * i + 2) + nf_int(E, i) * w);
    CHECK(heisenberg_translate({0, 0}, {0, 0}, 0, eta, w) == eta);
    for (const auto& [a, b] : std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>>{
             {{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 2}, {2, 1}}}) {
        auto x = eta;
        for (int k = 0; k < 3; ++k) x = heisenberg_translate(a, b, 0, x, w);
        // Translations and characters have order 3 up to the center.
        bool proportional = true;
        const NF r = x[0] / eta[0];
        for (int i = 0; i < 9; ++i) proportional = proportional && x[i] == r * eta[i];
        CHECK(proportional);
        CHECK(heisenberg_translate(a, b, 0, eta, w) != eta);
    }
    CHECK(yz_to_eta(eta_to_yz(eta)) == eta);
    CHECK(involution(involution(eta)) == eta);
    // The involution swaps eta_sigma and eta_-sigma.
    const auto swapped = yz_to_eta(involution(eta_to_yz(eta)));
    for (int s1 = 0; s1 < 3; ++s1)
        for (int s2 = 0; s2 < 3; ++s2) CHECK(swapped[3 * s1 + s2] == eta[3 * ((3 - s1) % 3) + (3 - s2) % 3]);
}
