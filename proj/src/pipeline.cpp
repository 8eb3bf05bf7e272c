// SPDX-License-Identifier: Apache-2.0
#include "isog3/pipeline.hpp"

namespace isog3 {

Char3Configuration embed_configuration(const BranchSet& branch, const TorsionData& torsion) {
    if (branch.points.size() != 6) throw Error(ErrorCode::InvalidInput, "expected six branch points");
    if (torsion.pairs.size() != 4) throw Error(ErrorCode::InvalidInput, "expected four secant pairs");
    const Compositum W = compose_over(branch.base, torsion.quartic.base);
    Char3Configuration cfg;
    cfg.working = W.field;
    cfg.base_to_working = compose(branch.base, W.first);
    const GF zero = gf_zero(W.field);
    for (const auto& w : branch.points) {
        const LinePoint<GF> t = w.infinite ? LinePoint<GF>::at_infinity(zero) : LinePoint<GF>::finite(W.first.apply(w.t));
        cfg.weierstrass.push_back(veronese(t, 6));
    }
    const GFPoly f = torsion.quartic.base.apply(torsion.normalized.poly());
    for (const auto& p : torsion.pairs) {
        if (p.tangent)
            cfg.lines.push_back(tangent_line_rnc(LinePoint<GF>::finite(W.second.apply(p.tangent_at)), 6));
        else
            cfg.lines.push_back(symmetric_secant(-W.second.apply(p.c1), W.second.apply(p.c0)));
        cfg.tangent.push_back(p.tangent);
        cfg.overlap.push_back(resultant(p.quadratic(), f, 2, 5).is_zero());
    }
    return cfg;
}

IsogenyResult<GF> run_p3(const Char3Configuration& cfg, PipelineCertificate<GF>* certificate) {
    PipelineCertificate<GF> c = secant_configuration(cfg.weierstrass, cfg.lines, cfg.tangent);
    c.overlap = cfg.overlap;
    // The conic is defined over the base field, so its base point is looked
    // for there and the parametrization descends.
    IsogenyResult<GF> r =
        finish_from_conic(c, [&](const ConicForm<GF>& C) { return conic_parametrize(C, &cfg.base_to_working); });
    if (certificate) *certificate = std::move(c);
    return r;
}

Char3Run isogenous_curve_char3(const GFCurve& C) {
    const auto Q = quintic_model(C);
    if (!Q) throw Error(ErrorCode::InvalidInput, "sextic without a rational Weierstrass point");
    Char3Run run;
    run.torsion = compute_torsion(*Q);
    run.branch = branch_points(GFCurve(run.torsion.normalized.poly()));
    const Char3Configuration cfg = embed_configuration(run.branch, run.torsion);
    run.working = cfg.working;
    run.base_to_working = cfg.base_to_working;
    run.result = run_p3(cfg, &run.certificate);
    if (run.result.curve) {
        const GFPoly& h = *run.result.curve;
        const GF z = gf_zero(C.f().zero().ctx());
        std::vector<GF> down;
        for (const auto& x : h.coeffs()) {
            auto y = run.base_to_working.pullback(x);
            if (!y) break;
            down.push_back(*y);
        }
        run.descended = down.size() == h.coeffs().size();
        run.curve = run.descended ? GFCurve(GFPoly(std::move(down), z)) : GFCurve(h);
    }
    return run;
}

bool frobenius_certify(const GFCurve& C, const Char3Run& run, int max_extension_degree) {
    if (!run.curve) return false;
    const GFCurve target = run.descended ? C : GFCurve(run.base_to_working.apply(C.f()));
    return is_isomorphic(frobenius_twist(*run.curve), target, max_extension_degree).has_value();
}

}  // namespace isog3
