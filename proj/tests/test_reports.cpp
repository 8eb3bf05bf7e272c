// SPDX-License-Identifier: Apache-2.0
#include <functional>

#include "doctest.h"
#include "isog3/reports.hpp"

using namespace isog3;
using reports::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("list parsing") {
    CHECK(reports::parse_indices("0, 1,2 ,3,4") == std::vector<uint64_t>{0, 1, 2, 3, 4});
    CHECK(reports::parse_rationals("1,-2/3,5") == std::vector<Q>{Q(1), Q(-2, 3), Q(5)});
    for (const char* bad : {"", "1,,2", "1,2,", "a", "-1", "1.5"})
        CHECK(code_of([&] { reports::parse_indices(bad); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { reports::parse_rationals("1,2/0"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { reports::parse_rationals("1,e"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("field sizes and moduli") {
    CHECK(reports::field_for(3)->n == 1);
    CHECK(reports::field_for(729)->n == 6);
    for (uint64_t q : {0ULL, 1ULL, 2ULL, 6ULL, 10ULL, 2187ULL})
        CHECK(code_of([&] { reports::field_for(q); }) == ErrorCode::InvalidInput);
    // x^2 + 1 is irreducible over F_3, x^2 + 2 = (x - 1)(x + 1) is not.
    CHECK(reports::field_for(9, std::vector<uint32_t>{1, 0})->modulus == std::vector<uint32_t>{1, 0, 1});
    CHECK(reports::field_for(9, std::vector<uint32_t>{1, 0, 1})->n == 2);
    CHECK(code_of([] { reports::field_for(9, std::vector<uint32_t>{2, 0}); }) == ErrorCode::ModulusNotIrreducible);
    CHECK(code_of([] { reports::field_for(9, std::vector<uint32_t>{3, 0}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("curve coefficients") {
    const GFCtx* K = reports::field_for(9);
    const GFPoly f = reports::curve_poly(K, {0, 1, 0, 0, 8});
    CHECK(f.degree() == 5);
    CHECK(gf_index(f[4]) == 8);
    CHECK(code_of([&] { reports::curve_poly(K, {0, 1, 0, 0, 9}); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { reports::curve_poly(K, {0, 1, 0, 0}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("char3 report on y^2 = x^5 + x") {
    const json r = reports::char3_report(reports::field_for(3), {0, 1, 0, 0, 0});
    CHECK(r["status"] == "ok");
    CHECK(r["frobenius_check"] == true);
    CHECK(r["isomorphic_to_input"] == true);
    CHECK(r["certificate"]["weierstrass_rank"] == 6);
    CHECK(r["certificate"]["meets_rank"] == 3);
    CHECK(r["certificate"]["projected_rank"] == 3);
    CHECK(r["certificate"]["conic_contains_projected"] == true);
    CHECK(r["torsion"]["quartic_roots"].size() == 4);
    for (const auto& p : r["torsion"]["pairs"]) CHECK(p["identity"] == true);
    CHECK(r["result"]["kind"] == "genus2");
    CHECK(r["result"]["curve"]["f"].size() == 6);
}

TEST_CASE("singular and supersingular inputs are degeneracies") {
    const GFCtx* K = reports::field_for(3);
    CHECK(code_of([&] { reports::char3_report(K, {0, 0, 0, 0, 0}); }) == ErrorCode::SingularCurve);
    // x^5 + 1 has Cartier-Manin matrix zero.
    CHECK(code_of([&] { reports::char3_report(K, {1, 0, 0, 0, 0}); }) == ErrorCode::NotOrdinary);
    CHECK(reports::exit_code(ErrorCode::SingularCurve) == 2);
    CHECK(reports::exit_code(ErrorCode::InvalidInput) == 3);
    const json e = reports::error_report(Error(ErrorCode::NotOrdinary, "x"));
    CHECK(e["status"] == "error");
    CHECK(e["error"]["code"] == "NotOrdinary");
    CHECK(e["error"]["kind"] == "degeneracy");
}

TEST_CASE("sweep reports are deterministic") {
    reports::SweepOptions opt;
    opt.q = 3;
    opt.count = 50;
    opt.seed = 1;
    opt.details = true;
    const std::string a = reports::sweep_report(opt).dump();
    CHECK(reports::sweep_report(opt).dump() == a);
    opt.threads = 3;
    CHECK(reports::sweep_report(opt).dump() == a);
    opt.seed = 2;
    CHECK(reports::sweep_report(opt).dump() != a);
    opt.timing = true;
    CHECK(reports::sweep_report(opt).contains("timing"));
}

TEST_CASE("sweep over F_9") {
    reports::SweepOptions opt;
    opt.q = 9;
    opt.count = 100;
    opt.seed = 7;
    const json r = reports::sweep_report(opt);
    CHECK(r["completed"] == 100);
    CHECK(r["frobenius_certified"] == 100);
    CHECK(r["torsion"]["identity_all_pairs"] == 100);
    CHECK(r["failures"].empty());
    opt.q = 2187;
    CHECK(code_of([&] { reports::sweep_report(opt); }) == ErrorCode::InvalidInput);
}

TEST_CASE("iso report") {
    const GFCtx* K = reports::field_for(9);
    const json same = reports::iso_report(K, {2, 1, 3, 0, 0}, {2, 1, 3, 0, 0});
    CHECK(same["isomorphic"] == true);
    CHECK(same.contains("witness"));
    // x -> x + 1 keeps the class.
    const GFPoly f = reports::curve_poly(K, {2, 1, 3, 0, 0});
    const GFPoly shift({gf_one(K), gf_one(K)}, gf_zero(K));
    GFPoly g(gf_zero(K));
    for (int i = f.degree(); i >= 0; --i) g = g * shift + GFPoly::constant(f[i]);
    std::vector<uint64_t> gi;
    for (int i = 0; i < 5; ++i) gi.push_back(gf_index(g[i]).get_ui());
    CHECK(reports::iso_report(K, {2, 1, 3, 0, 0}, gi)["isomorphic"] == true);
}

TEST_CASE("complex report limits") {
    CHECK(code_of([] { reports::complex_report({Q(1), Q(2), Q(-3), Q(5)}, 1001); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { reports::complex_report({Q(1), Q(2), Q(-3)}, 60); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { reports::complex_report({Q(1), Q(1), Q(2), Q(-3)}, 60); }) == ErrorCode::InvalidInput);
    const json r = reports::complex_report({Q(1), Q(2), Q(-3), Q(5)}, 60);
    CHECK(r["branch_values"].size() == 6);
    CHECK(r["secants"].size() == 4);
    CHECK(r["alpha"].size() == 5);
    CHECK(r["restricted_rank"] == 4);
    CHECK(reports::complex_report({Q(1), Q(2), Q(-3), Q(5)}, 60).dump() == r.dump());
}

TEST_CASE("verification reports") {
    const json s = reports::verify_salmon();
    CHECK(s["pass"] == true);
    CHECK(s["lambda"] == "1/3125");
    CHECK(s["printed_formula"]["terms"] == 19);
    CHECK(s["overlay"].size() == 3);
    const json r = reports::verify_reflections();
    CHECK(r["pass"] == true);
    CHECK(r["forms"] == 40);
    CHECK(r["product_proportional_to_printed_phi40"] == false);
}
