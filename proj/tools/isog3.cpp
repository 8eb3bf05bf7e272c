// SPDX-License-Identifier: Apache-2.0
// isog3: command-line front end.  One JSON document on stdout; diagnostics on
// stderr.  Exit codes: 0 success, 2 mathematical degeneracy, 3 invalid input.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "isog3/reports.hpp"

using namespace isog3;
using reports::json;

namespace {

std::optional<std::vector<uint32_t>> modulus_arg(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return reports::parse_small(s);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit (3,3)-isogenies of genus-2 Jacobians"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    uint64_t q = 3, seed = 1;
    std::string f, g, modulus, z;
    int max_ext = reports::kDefaultMaxExtension, count = 50, prec = 100, stability = 0, points = 25;
    bool timing = false, details = false;
    uint64_t seed_burkhardt = 7, seed_hessian = 11, seed_salmon = 2024;

    auto* char3 = app.add_subcommand("char3", "Isogenous curve of y^2 = f(x) over F_q, q = 3^k");
    char3->add_option("--q", q, "Field size 3^k, k <= 6")->required();
    char3->add_option("--f", f, "Element indices f0,...,f4 of the monic quintic (or f0,...,f5 of a sextic)")
        ->required();
    char3->add_option("--modulus", modulus, "Defining polynomial c0,...,c(k-1)[,1] of F_q over F_3");
    char3->add_option("--max-ext", max_ext, "Largest field degree over F_3 for the isomorphism search");

    auto* sweep = app.add_subcommand("sweep", "Seeded sweep over random ordinary quintics");
    sweep->add_option("--q", q, "Field size 3^k, k <= 6")->required();
    sweep->add_option("--count", count, "Number of curves");
    sweep->add_option("--seed", seed, "Generator seed");
    sweep->add_option("--max-ext", max_ext, "Largest field degree over F_3 for the isomorphism search");
    sweep->add_flag("--timing", timing, "Add wall-clock statistics");
    sweep->add_flag("--details", details, "Add one record per curve");

    auto* cplx = app.add_subcommand("complex", "Complex construction from a Maschke point");
    cplx->add_option("--z", z, "Rational coordinates z1,z2,z3,z4")->required();
    cplx->add_option("--prec", prec, "Working precision in decimal digits, at most 1000");
    cplx->add_option("--stability", stability, "Rerun at this precision and report the shifts");

    auto* verify = app.add_subcommand("verify", "Identity suites with their correction overlays");
    verify->require_subcommand(1);
    auto* v_burk = verify->add_subcommand("burkhardt", "Coble system, kernel map and Burkhardt quartic");
    v_burk->add_option("--seed", seed_burkhardt, "Sample seed");
    auto* v_hess = verify->add_subcommand("hessian", "Hessian matrix and the c+ map");
    v_hess->add_option("--seed", seed_hessian, "Sample seed");
    v_hess->add_option("--points", points, "Number of Hessian points");
    v_hess->add_option("--prec", prec, "Working precision in decimal digits");
    auto* v_refl = verify->add_subcommand("reflections", "The forty reflection hyperplanes");
    auto* v_salm = verify->add_subcommand("salmon", "Salmon's discriminant against the resultant");
    v_salm->add_option("--seed", seed_salmon, "Sample seed");

    auto* iso = app.add_subcommand("iso", "Isomorphism test for two curves over F_q");
    iso->add_option("--q", q, "Field size 3^k, k <= 6")->required();
    iso->add_option("--f", f, "Element indices of the first curve")->required();
    iso->add_option("--g", g, "Element indices of the second curve")->required();
    iso->add_option("--modulus", modulus, "Defining polynomial of F_q over F_3");
    iso->add_option("--max-ext", max_ext, "Largest field degree over F_3 for the search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "isog3: " << e.what() << "\n";
        emit(reports::error_report(ErrorCode::InvalidInput, e.what()));
        return 3;
    }

    try {
        if (max_ext < 1 || max_ext > 120) throw Error(ErrorCode::InvalidInput, "--max-ext must lie in [1, 120]");
        if (char3->parsed()) {
            const GFCtx* K = reports::field_for(q, modulus_arg(modulus));
            emit(reports::char3_report(K, reports::parse_indices(f), max_ext));
        } else if (sweep->parsed()) {
            reports::SweepOptions opt;
            opt.q = q;
            opt.count = count;
            opt.seed = seed;
            opt.threads = reports::thread_budget();
            opt.max_extension = max_ext;
            opt.timing = timing;
            opt.details = details;
            emit(reports::sweep_report(opt));
        } else if (cplx->parsed()) {
            std::optional<int> st;
            if (stability) st = stability;
            emit(reports::complex_report(reports::parse_rationals(z), prec, st));
        } else if (v_burk->parsed()) {
            emit(reports::verify_burkhardt(seed_burkhardt));
        } else if (v_hess->parsed()) {
            if (points < 1 || points > 1000) throw Error(ErrorCode::InvalidInput, "--points must lie in [1, 1000]");
            if (prec < 20 || prec > reports::kMaxDigits) throw Error(ErrorCode::InvalidInput, "--prec must lie in [20, 1000]");
            emit(reports::verify_hessian(seed_hessian, points, prec));
        } else if (v_refl->parsed()) {
            emit(reports::verify_reflections());
        } else if (v_salm->parsed()) {
            emit(reports::verify_salmon(seed_salmon));
        } else if (iso->parsed()) {
            const GFCtx* K = reports::field_for(q, modulus_arg(modulus));
            emit(reports::iso_report(K, reports::parse_indices(f), reports::parse_indices(g), max_ext));
        }
    } catch (const Error& e) {
        std::cerr << "isog3: " << e.what() << "\n";
        emit(reports::error_report(e));
        return reports::exit_code(e.code());
    }
    return 0;
}
