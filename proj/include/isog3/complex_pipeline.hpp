// SPDX-License-Identifier: Apache-2.0
// The complex construction from a Maschke point z: alpha = c-(z) spans with
// P_Ma = {y = 0} the theta space P^4 in P^8, the nine surface quadrics cut the
// curve there, translates by the isotropic subgroup F0 give the secant pairs,
// projection from alpha maps the curve 2:1 onto a twisted cubic R3 in P_Ma
// branched at six points, and a coordinate on R3 turns everything into
// parameters for the secant pipeline on the rational normal sextic.
//
// Every function works at the calling thread's working precision except
// run_complex, which sets its own.
#pragma once

#include <array>
#include <vector>

#include "isog3/bigcomplex.hpp"
#include "isog3/coble.hpp"
#include "isog3/pipeline.hpp"

namespace isog3 {

// Symmetric Gram matrix G of the quadric x^T G x.
using Quadric = Mat<BC>;

BC quadric_eval(const Quadric& G, const Vec<BC>& x);
// B G B^T: the quadric in the coordinates of the rows of B.
Quadric restrict_quadric(const Quadric& G, const Mat<BC>& B);
// Coefficients of the monomials x_i x_j, i <= j.
Vec<BC> quadric_coefficients(const Quadric& G);

struct ThetaSpaceFrame {
    std::vector<Q> z;
    Vec<Q> alpha_exact;  // c-(z), first nonzero coordinate 1
    Vec<BC> alpha;
    Mat<BC> basis;       // rows (alpha, 0) and the four z axes of P^8
    Real condition;      // largest over smallest singular value of the basis
    int digits = 0;
};

// Throws InvalidInput when Phi40(z) = 0; KernelDegenerate from c- propagates.
ThetaSpaceFrame theta_space(const std::vector<Q>& z);

// The five rows of M(x) alpha followed by the four twoeq forms at alpha.
std::vector<Quadric> surface_quadrics(const Vec<BC>& alpha);

struct RestrictionReport {
    Real twoeq_norm;      // twoeq forms on the frame, relative to the M rows
    int rank = 0;         // of the nine restricted quadrics
    Real polar_residual;  // polar of the Coble cubic at alpha on the frame
};
RestrictionReport restriction_report(const ThetaSpaceFrame& frame, const std::vector<Quadric>& quadrics);

// The Schroedinger character e = (0, 0, b) acting on the y, z coordinates.
Vec<BC> translate_yz(const std::array<int, 2>& b, const Vec<BC>& x);

// The nonzero elements of F0 up to sign.
const std::vector<std::array<int, 2>>& f0_representatives();

struct SecantQuad {
    std::array<int, 2> e{};
    Mat<BC> line, opposite;  // P^4 meets its translates by e and -e in lines
    Mat<BC> plane;           // their span
    Mat<BC> points;          // x_e, y_e on `line`, then x'_e, y'_e on `opposite`
    Vec<BC> meet;            // the common point of the two secants
    Real meet_residual;      // y block of the meet over its norm
    Real point_residual;     // worst quadric value at the four points
    Real conjugation_residual;  // opposite points against iota of the first two
};

// Throws TranslateDegenerate unless both intersections are lines spanning a
// plane, RootIsolationFailure unless each line carries two distinct points.
SecantQuad concurrent_secants(const ThetaSpaceFrame& frame, const std::vector<Quadric>& quadrics,
                              const std::array<int, 2>& e);

// The twisted cubic R3 in P_Ma: the net of quadrics u . M(0, z) alpha with
// u . h = 0 where h = M(alpha, 0) alpha, and its Hilbert-Burch syzygies
// t S1 + S2 whose maximal minors parametrize it.
struct R3Model {
    std::vector<Quadric> zquadrics;  // the five rows of M(0, z) alpha, 4 x 4
    Vec<BC> h;
    std::vector<Quadric> net;        // three quadrics containing R3
    Mat<BC> S1, S2;                  // 3 x 4
};
R3Model r3_model(const Vec<BC>& alpha, const std::vector<Quadric>& quadrics);
// Point of R3 at parameter t (cubic in t).
Vec<BC> r3_point(const R3Model& m, const LinePoint<BC>& t);

// The six common zeros in P_Ma of the surface quadrics, as 4-vectors in the z
// coordinates.  Throws BranchLocusFailure unless exactly six are found.
Mat<BC> weierstrass_on_Pma(const R3Model& m);

struct R3Coordinate {
    std::vector<LinePoint<BC>> values;
    int center0 = 0, center1 = 1;  // mapped to 0 and infinity
};

// Projection of P_Ma from the secant through points[center0] and
// points[center1], normalized by the tangent planes so that the two centers
// go to 0 and infinity.  Centers are drawn from the first six points; a
// degenerate choice moves to the next pair.  Throws InvalidInput for fewer
// than six points and CoordinateFailure when every pair fails.
R3Coordinate r3_coordinate(const Mat<BC>& points, const std::vector<Quadric>& net);

struct ComplexResiduals {
    Real twoeq;         // restricted twoeq forms
    Real polar;         // polar quadric at alpha on the frame
    Real secant_points; // surface quadrics at the 16 secant points
    Real meets;         // secant meets off P_Ma
    Real conjugation;   // e versus -e points against iota
    Real weierstrass;   // z quadrics at the six points
    Real r3;            // net at the projected secant points
    Real coplanarity;   // fourth over first singular value of the meets in P^6
    Real conic;         // conic at the six projected points
};

struct ComplexRun {
    int digits = 0;
    ThetaSpaceFrame frame;
    int restricted_rank = 0;
    std::vector<SecantQuad> secants;
    Mat<BC> weierstrass_pma;
    R3Coordinate coordinate;
    std::vector<LinePoint<BC>> branch_values;                   // six
    std::vector<std::array<LinePoint<BC>, 2>> secant_values;    // four pairs
    PipelineCertificate<BC> certificate;
    IsogenyResult<BC> result;
    ComplexResiduals residuals;
};

ComplexRun run_complex(const std::vector<Q>& z, int digits);

// Chordal distance between two configurations on the projective line after
// the best Moebius alignment fixed by three points.
Real moebius_aligned_distance(const std::vector<LinePoint<BC>>& a, const std::vector<LinePoint<BC>>& b);

struct StabilityReport {
    int digits = 0, digits2 = 0;
    Real branch_shift;  // input branch values
    Real result_shift;  // parameters of the output curve
};
StabilityReport precision_stability(const std::vector<Q>& z, int digits, int digits2);

}  // namespace isog3
