// SPDX-License-Identifier: Apache-2.0
// The secant construction for p = 3: six Weierstrass images on the rational
// normal sextic in P^6, the hyperplane H through them, the four secant lines,
// their meets with H spanning a plane L, projection from L to P^3, and the
// conic through the six projected points.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isog3/genus2.hpp"
#include "isog3/projective.hpp"
#include "isog3/torsion3.hpp"

namespace isog3 {

template <class F>
struct PipelineCertificate {
    Mat<F> weierstrass;            // six points of P^6
    int weierstrass_rank = 0;
    Hyperplane<F> H;
    std::vector<Mat<F>> lines;     // four lines, two spanning vectors each
    std::vector<bool> tangent;     // line is a tangent
    std::vector<bool> overlap;     // pair meets the Weierstrass set
    Mat<F> meets;                  // four points of H
    Subspace<F> L;
    int L_rank = 0;
    Mat<F> projected;              // six points of P^3
    int projected_rank = 0;
    Mat<F> plane_points;           // the projected points in plane coordinates
    ConicForm<F> conic;
    // Numeric evidence; zero for exact fields.  Ratio of the fourth to the
    // first singular value of the meets, and max |q^T M q| over unit points.
    Real coplanarity_residual = Real(0L);
    Real conic_residual = Real(0L);
};

template <class F>
struct EllipticPair {
    F j1, j2;
    F lambda1, lambda2;
    std::vector<int> line1, line2;  // indices of the branch points on each line
};

template <class F>
struct IsogenyResult {
    int conic_rank = 0;
    // Smooth conic: the parameters of the six projected points and the monic
    // polynomial prod (x - t_i) over the finite ones.
    std::vector<LinePoint<F>> parameters;
    std::optional<Poly<F>> curve;
    // Reducible conic.
    std::optional<EllipticPair<F>> pair;
};

// The line of P^6 through nu(x), nu(x') for the roots of x^2 - e1 x + e2,
// spanned by the power sums and the complete symmetric sums; this is the
// tangent line when the roots coincide.
template <class F>
Mat<F> symmetric_secant(const F& e1, const F& e2) {
    Vec<F> S(7, zero_like(e1)), D(7, zero_like(e1));
    S[0] = from_int_like(e1, 2);
    S[1] = e1;
    D[1] = one_like(e1);
    for (int j = 2; j <= 6; ++j) {
        S[j] = e1 * S[j - 1] - e2 * S[j - 2];
        D[j] = e1 * D[j - 1] - e2 * D[j - 2];
    }
    return {S, D};
}

namespace detail {

template <class F>
Real coplanarity_ratio(const Mat<F>& meets) {
    if constexpr (is_exact_v<F>) {
        (void)meets;
        return Real(0L);
    } else {
        SVDResult s = svd(meets, static_cast<int>(meets[0].size()));
        if (s.sigma.size() < 4 || s.sigma[0].is_zero()) return Real(0L);
        return s.sigma[3] / s.sigma[0];
    }
}

template <class F>
Real conic_max_residual(const ConicForm<F>& C, const Mat<F>& pts) {
    if constexpr (is_exact_v<F>) {
        (void)C;
        (void)pts;
        return Real(0L);
    } else {
        Real worst(0L);
        const Real scale = max_abs(C.M);
        for (const auto& p : pts) {
            const Vec<BC> u = normalized(p);
            Real r = abs(conic_eval(C, u)) / scale;
            if (r > worst) worst = r;
        }
        return worst;
    }
}

}  // namespace detail

// Everything up to and including the conic.
template <class F>
PipelineCertificate<F> secant_configuration(const Mat<F>& weierstrass, const std::vector<Mat<F>>& lines,
                                            const std::vector<bool>& tangent) {
    if (weierstrass.size() != 6) throw Error(ErrorCode::InvalidInput, "expected six Weierstrass images");
    if (lines.size() != 4) throw Error(ErrorCode::InvalidInput, "expected four secant lines");
    PipelineCertificate<F> c;
    c.weierstrass = weierstrass;
    c.lines = lines;
    c.tangent = tangent;
    c.weierstrass_rank = point_rank(weierstrass);
    c.H = hyperplane_through_six(weierstrass);
    for (const auto& l : lines) {
        try {
            c.meets.push_back(line_meet_hyperplane(l, c.H.form));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::LineInHyperplane)
                throw Error(ErrorCode::DegenerateConfiguration, "a secant line lies in the hyperplane");
            throw;
        }
    }
    c.L = span(c.meets);
    c.L_rank = c.L.rank();
    c.coplanarity_residual = detail::coplanarity_ratio(c.meets);
    if (c.L_rank != 3) throw Error(ErrorCode::CoplanarityViolated, "the four meets span rank " + std::to_string(c.L_rank));
    for (const auto& w : weierstrass) {
        try {
            c.projected.push_back(project_from(c.L, w));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ProjectionCenter)
                throw Error(ErrorCode::DegenerateConfiguration, "a Weierstrass image lies in the center");
            throw;
        }
    }
    c.projected_rank = point_rank(c.projected);
    if (c.projected_rank != 3)
        throw Error(ErrorCode::DegenerateConfiguration, "projected points span rank " + std::to_string(c.projected_rank));
    c.plane_points = plane_coordinates(c.projected);
    c.conic = conic_through(c.plane_points);
    c.conic_residual = detail::conic_max_residual(c.conic, c.plane_points);
    return c;
}

namespace detail {

// Node of a rank-2 conic and the split of the six points into the two lines.
template <class F>
EllipticPair<F> elliptic_branch(const ConicForm<F>& C, const Mat<F>& pts) {
    const F like = C.M[0][0];
    Mat<F> ker = nullspace(C.M, 3, like);
    if (ker.size() != 1) throw Error(ErrorCode::DegenerateConic, "conic node is not a point");
    const Vec<F> node = ker[0];
    const int n = static_cast<int>(pts.size());
    std::vector<int> first = {0}, second;
    for (int i = 1; i < n; ++i) {
        if (point_rank(Mat<F>{node, pts[0], pts[i]}) <= 2)
            first.push_back(i);
        else
            second.push_back(i);
    }
    if (first.size() != 3 || second.size() != 3)
        throw Error(ErrorCode::DegenerateConic, "the lines do not carry three points each");
    for (int i : second)
        if (point_rank(Mat<F>{node, pts[second[0]], pts[i]}) > 2)
            throw Error(ErrorCode::DegenerateConic, "points off the two lines");
    auto lambda = [&](const std::vector<int>& idx) {
        // Coordinate on the line with the node at infinity and pts[idx[0]] at 0.
        std::vector<F> t;
        for (int i : idx) {
            auto c = coordinates_in(Mat<F>{pts[idx[0]], node}, pts[i]);
            if (!c) throw Error(ErrorCode::DegenerateConic, "point not on its line");
            t.push_back((*c)[1] / (*c)[0]);
        }
        return (t[2] - t[0]) / (t[1] - t[0]);
    };
    auto jinv = [&](const F& l) {
        const F one = one_like(l);
        const F num = l * l - l + one;
        return from_int_like(l, 256) * num * num * num / (l * l * (l - one) * (l - one));
    };
    EllipticPair<F> e;
    e.line1 = first;
    e.line2 = second;
    e.lambda1 = lambda(first);
    e.lambda2 = lambda(second);
    e.j1 = jinv(e.lambda1);
    e.j2 = jinv(e.lambda2);
    return e;
}

}  // namespace detail

// From the conic to the result; `parametrize` builds the conic
// parametrization for the field at hand.
template <class F, class Parametrize>
IsogenyResult<F> finish_from_conic(const PipelineCertificate<F>& c, Parametrize parametrize) {
    IsogenyResult<F> r;
    r.conic_rank = c.conic.rank;
    if (c.conic.rank == 3) {
        const auto par = parametrize(c.conic);
        for (const auto& p : c.plane_points) r.parameters.push_back(par.parameter(p));
        r.curve = polynomial_from_parameters(r.parameters, c.conic.M[0][0]);
        return r;
    }
    if (c.conic.rank == 2) {
        r.pair = detail::elliptic_branch(c.conic, c.plane_points);
        return r;
    }
    throw Error(ErrorCode::DegenerateConic, "conic has rank " + std::to_string(c.conic.rank));
}

// Characteristic 3 driver.
struct Char3Run {
    TorsionData torsion;          // for the normalized model f(x + shift)
    BranchSet branch;             // of the normalized model
    const GFCtx* working = nullptr;
    Embedding base_to_working;
    PipelineCertificate<GF> certificate;
    IsogenyResult<GF> result;
    // The result curve; over the base field when its coefficients descend.
    std::optional<GFCurve> curve;
    bool descended = false;
};

// The six Weierstrass images and the four lines over the working field.
struct Char3Configuration {
    const GFCtx* working;
    Embedding base_to_working;
    Mat<GF> weierstrass;
    std::vector<Mat<GF>> lines;
    std::vector<bool> tangent;
    std::vector<bool> overlap;
};

Char3Configuration embed_configuration(const BranchSet& branch, const TorsionData& torsion);
IsogenyResult<GF> run_p3(const Char3Configuration& cfg, PipelineCertificate<GF>* certificate = nullptr);
Char3Run isogenous_curve_char3(const GFCurve& C);

// is_isomorphic(frobenius_twist(result), C); false for elliptic results.
bool frobenius_certify(const GFCurve& C, const Char3Run& run, int max_extension_degree);

}  // namespace isog3
