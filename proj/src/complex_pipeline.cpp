// SPDX-License-Identifier: Apache-2.0
#include "isog3/complex_pipeline.hpp"

#include <algorithm>

#include "isog3/complex_roots.hpp"

namespace isog3 {

namespace {

constexpr int kP8 = 9;

Real vmax(const Vec<BC>& v) {
    Real m(0);
    for (const auto& x : v) m = std::max(m, abs(x));
    return m;
}

Real gram_scale(const Quadric& G) { return max_abs(G); }

// |q(x)| / (|G| |x|^2)
Real relative_value(const Quadric& G, const Vec<BC>& x) {
    const Real s = gram_scale(G);
    if (s.is_zero()) return Real(0);
    const Real n = vmax(x);
    return abs(quadric_eval(G, x)) / (s * n * n);
}

Vec<BC> combine(const Vec<BC>& a, const BC& ca, const Vec<BC>& b, const BC& cb) {
    Vec<BC> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = ca * a[i] + cb * b[i];
    return v;
}

Vec<BC> lift(const Vec<Q>& v) {
    Vec<BC> out;
    for (const auto& x : v) out.push_back(BC(x));
    return out;
}

// Intersection of row spaces span(A) and span(B) as vectors.
Mat<BC> intersect_spans(const Mat<BC>& A, const Mat<BC>& B) {
    Mat<BC> sys(A[0].size(), Vec<BC>(A.size() + B.size()));
    for (size_t j = 0; j < A[0].size(); ++j) {
        for (size_t i = 0; i < A.size(); ++i) sys[j][i] = A[i][j];
        for (size_t i = 0; i < B.size(); ++i) sys[j][A.size() + i] = -B[i][j];
    }
    Mat<BC> ker = nullspace(sys, static_cast<int>(A.size() + B.size()), BC(0));
    Mat<BC> out;
    for (const auto& k : ker) {
        Vec<BC> v(A[0].size(), BC(0));
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) v[j] += k[i] * A[i][j];
        out.push_back(normalized(v));
    }
    return out;
}

// The two points (s : t) of A s^2 + B s t + C t^2 = 0.
std::array<std::array<BC, 2>, 2> binary_roots(const BC& A, const BC& B, const BC& C) {
    const Real tol = (abs(A) + abs(B) + abs(C)) * zero_threshold();
    if (abs(A) <= tol && abs(C) <= tol) return {{{BC(1), BC(0)}, {BC(0), BC(1)}}};
    const bool in_t = abs(C) >= abs(A);
    // Roots r of a r^2 + b r + c.
    const BC a = in_t ? C : A, c = in_t ? A : C;
    const BC d = sqrt(B * B - BC(4) * a * c);
    const BC q1 = -(B + d), q2 = -(B - d);
    const BC q = (abs(q1) >= abs(q2) ? q1 : q2) / BC(2);
    BC r1, r2;
    if (abs(q) <= tol) {
        r1 = r2 = BC(0);
    } else {
        r1 = q / a;
        r2 = c / q;
    }
    if (in_t) return {{{BC(1), r1}, {BC(1), r2}}};
    return {{{r1, BC(1)}, {r2, BC(1)}}};
}

// Chordal distance between points of the projective line.
Real chordal(const std::array<BC, 2>& a, const std::array<BC, 2>& b) {
    const Real na = sqrt(norm2(a[0]) + norm2(a[1])), nb = sqrt(norm2(b[0]) + norm2(b[1]));
    return abs(a[0] * b[1] - a[1] * b[0]) / (na * nb);
}

std::array<BC, 2> homogeneous(const LinePoint<BC>& p) {
    if (p.infinite) return {BC(1), BC(0)};
    return {p.t, BC(1)};
}

BC det2(const std::array<BC, 2>& a, const std::array<BC, 2>& b) { return a[0] * b[1] - a[1] * b[0]; }

// The Moebius map sending p0, p1, p2 to 0, infinity, 1.
std::array<BC, 2> normalize_by(const std::array<BC, 2>& x, const std::array<BC, 2>& p0, const std::array<BC, 2>& p1,
                               const std::array<BC, 2>& p2) {
    return {det2(x, p0) * det2(p2, p1), det2(x, p1) * det2(p2, p0)};
}

Poly<BC> det3(const std::vector<std::vector<Poly<BC>>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Maximal minors of t S1 + S2 as cubic polynomials.
std::vector<Poly<BC>> minor_polys(const Mat<BC>& S1, const Mat<BC>& S2) {
    std::vector<Poly<BC>> X;
    for (int c = 0; c < 4; ++c) {
        std::vector<std::vector<Poly<BC>>> m(3);
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 4; ++k)
                if (k != c) m[r].push_back(Poly<BC>({S2[r][k], S1[r][k]}, BC(0)));
        Poly<BC> d = det3(m);
        X.push_back(c % 2 == 0 ? d : -d);
    }
    return X;
}

}  // namespace

BC quadric_eval(const Quadric& G, const Vec<BC>& x) {
    BC s(0);
    for (size_t i = 0; i < x.size(); ++i) {
        BC r(0);
        for (size_t j = 0; j < x.size(); ++j) r += G[i][j] * x[j];
        s += x[i] * r;
    }
    return s;
}

Quadric restrict_quadric(const Quadric& G, const Mat<BC>& B) {
    const size_t m = B.size(), n = G.size();
    Mat<BC> GB(n, Vec<BC>(m, BC(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t b = 0; b < m; ++b)
            for (size_t j = 0; j < n; ++j) GB[i][b] += G[i][j] * B[b][j];
    Quadric R(m, Vec<BC>(m, BC(0)));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t i = 0; i < n; ++i) R[a][b] += B[a][i] * GB[i][b];
    return R;
}

Vec<BC> quadric_coefficients(const Quadric& G) {
    Vec<BC> c;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i; j < G.size(); ++j) c.push_back(i == j ? G[i][i] : G[i][j] + G[j][i]);
    return c;
}

ThetaSpaceFrame theta_space(const std::vector<Q>& z) {
    if (z.size() != 4) throw Error(ErrorCode::InvalidInput, "expected four Maschke coordinates");
    if (is_zero(phi40(z).value)) throw Error(ErrorCode::InvalidInput, "Maschke point lies on a reflection hyperplane");
    ThetaSpaceFrame f;
    f.z = z;
    f.digits = working_digits();
    f.alpha_exact = cminus(z);
    f.alpha = lift(f.alpha_exact);
    Vec<BC> row(kP8, BC(0));
    for (int i = 0; i < 5; ++i) row[i] = f.alpha[i];
    f.basis.push_back(row);
    for (int j = 0; j < 4; ++j) {
        Vec<BC> e(kP8, BC(0));
        e[5 + j] = BC(1);
        f.basis.push_back(e);
    }
    const SVDResult s = svd(f.basis, kP8);
    f.condition = s.sigma[0] / s.sigma[4];
    return f;
}

std::vector<Quadric> surface_quadrics(const Vec<BC>& alpha) {
    if (alpha.size() != 5) throw Error(ErrorCode::InvalidInput, "expected five alpha coordinates");
    std::vector<Quadric> out;
    for (const QPoly& p : corrected_coble().corrected.quadrics()) {
        Quadric G(kP8, Vec<BC>(kP8, BC(0)));
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> xs;
            int ai = -1;
            for (int v = 0; v < coble::kVars; ++v)
                for (int e = 0; e < m[v]; ++e) {
                    if (v < coble::a(0))
                        xs.push_back(v);
                    else
                        ai = v - coble::a(0);
                }
            if (xs.size() != 2 || ai < 0) throw Error(ErrorCode::InvalidInput, "surface quadric is not bilinear");
            const BC v = BC(c) * alpha[ai];
            if (xs[0] == xs[1]) {
                G[xs[0]][xs[0]] += v;
            } else {
                const BC h = v / BC(2);
                G[xs[0]][xs[1]] += h;
                G[xs[1]][xs[0]] += h;
            }
        }
        out.push_back(std::move(G));
    }
    return out;
}

RestrictionReport restriction_report(const ThetaSpaceFrame& frame, const std::vector<Quadric>& quadrics) {
    RestrictionReport r;
    Mat<BC> coeffs;
    Real mscale(0), tscale(0);
    for (size_t k = 0; k < quadrics.size(); ++k) {
        const Vec<BC> c = quadric_coefficients(restrict_quadric(quadrics[k], frame.basis));
        (k < 5 ? mscale : tscale) = std::max(k < 5 ? mscale : tscale, vmax(c));
        coeffs.push_back(c);
    }
    r.twoeq_norm = mscale.is_zero() ? Real(0) : tscale / mscale;
    r.rank = rank(coeffs, static_cast<int>(coeffs[0].size()));
    // Polar of the Coble cubic at (alpha, 0): sum_i alpha_i dC/dy_i = sum_i alpha_i s_i Q_i.
    const auto& s = coble_row_scaling();
    Quadric P(kP8, Vec<BC>(kP8, BC(0)));
    for (int i = 0; i < 5; ++i)
        for (int a = 0; a < kP8; ++a)
            for (int b = 0; b < kP8; ++b) P[a][b] += frame.alpha[i] * BC(s[i]) * quadrics[i][a][b];
    const Vec<BC> pc = quadric_coefficients(restrict_quadric(P, frame.basis));
    Real pscale(0);
    for (int i = 0; i < 5; ++i) pscale = std::max(pscale, max_abs(quadrics[i]));
    r.polar_residual = pscale.is_zero() ? Real(0) : vmax(pc) / (pscale * vmax(frame.alpha));
    return r;
}

Vec<BC> translate_yz(const std::array<int, 2>& b, const Vec<BC>& x) {
    const BC omega = root_of_unity(1, 3);
    const std::vector<BC> eta = yz_to_eta(std::vector<BC>(x.begin(), x.end()));
    const std::vector<BC> moved = heisenberg_translate<BC>({0, 0}, b, 0, eta, omega);
    const std::vector<BC> v = eta_to_yz(moved);
    return Vec<BC>(v.begin(), v.end());
}

const std::vector<std::array<int, 2>>& f0_representatives() {
    static const std::vector<std::array<int, 2>> r = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    return r;
}

namespace {

Mat<BC> translate_meet(const ThetaSpaceFrame& frame, const std::array<int, 2>& b) {
    Mat<BC> moved;
    for (const auto& row : frame.basis) moved.push_back(translate_yz(b, row));
    Mat<BC> line = intersect_spans(frame.basis, moved);
    if (line.size() != 2)
        throw Error(ErrorCode::TranslateDegenerate,
                    "theta space meets its translate in dimension " + std::to_string(static_cast<int>(line.size()) - 1));
    return line;
}

// The two curve points on a line, from the restricted quadrics.
Mat<BC> points_on_line(const Mat<BC>& line, const std::vector<Quadric>& quadrics) {
    Mat<BC> coeffs;
    for (const auto& G : quadrics) {
        const Quadric R = restrict_quadric(G, line);
        coeffs.push_back({R[0][0], R[0][1] + R[1][0], R[1][1]});
    }
    if (rank(coeffs, 3) != 1)
        throw Error(ErrorCode::RootIsolationFailure, "restricted quadrics have no common zeros on the secant");
    size_t best = 0;
    for (size_t k = 1; k < coeffs.size(); ++k)
        if (vmax(coeffs[k]) > vmax(coeffs[best])) best = k;
    const auto roots = binary_roots(coeffs[best][0], coeffs[best][1], coeffs[best][2]);
    Mat<BC> pts;
    for (const auto& r : roots) pts.push_back(normalize_point(combine(line[0], r[0], line[1], r[1])));
    if (rank(pts, kP8) != 2) throw Error(ErrorCode::RootIsolationFailure, "secant points coincide");
    return pts;
}

Real point_distance(const Vec<BC>& a, const Vec<BC>& b) {
    // Projective distance through the 2 x 2 minors of unit representatives.
    const Vec<BC> u = normalized(a), v = normalized(b);
    Real m(0);
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j) m = std::max(m, abs(u[i] * v[j] - u[j] * v[i]));
    return m;
}

}  // namespace

SecantQuad concurrent_secants(const ThetaSpaceFrame& frame, const std::vector<Quadric>& quadrics,
                              const std::array<int, 2>& e) {
    SecantQuad s;
    s.e = e;
    const std::array<int, 2> minus = {(3 - e[0]) % 3, (3 - e[1]) % 3};
    s.line = translate_meet(frame, e);
    s.opposite = translate_meet(frame, minus);
    Mat<BC> four = s.line;
    four.insert(four.end(), s.opposite.begin(), s.opposite.end());
    if (rank(four, kP8) != 3) throw Error(ErrorCode::TranslateDegenerate, "the secants for e and -e do not span a plane");
    s.plane = span(four).basis;
    const Mat<BC> meet = intersect_spans(s.line, s.opposite);
    if (meet.size() != 1) throw Error(ErrorCode::TranslateDegenerate, "the secants for e and -e do not meet in a point");
    s.meet = meet[0];
    Real y(0);
    for (int i = 0; i < 5; ++i) y = std::max(y, abs(s.meet[i]));
    s.meet_residual = y / vmax(s.meet);

    s.points = points_on_line(s.line, quadrics);
    const Mat<BC> other = points_on_line(s.opposite, quadrics);
    s.points.insert(s.points.end(), other.begin(), other.end());
    s.point_residual = Real(0);
    for (const auto& p : s.points)
        for (const auto& G : quadrics) s.point_residual = std::max(s.point_residual, relative_value(G, p));
    // iota maps {x_e, y_e} onto {x'_e, y'_e}.
    const Vec<BC> i0 = involution(s.points[0]), i1 = involution(s.points[1]);
    const Real straight = std::max(point_distance(i0, s.points[2]), point_distance(i1, s.points[3]));
    const Real crossed = std::max(point_distance(i0, s.points[3]), point_distance(i1, s.points[2]));
    s.conjugation_residual = std::min(straight, crossed);
    return s;
}

R3Model r3_model(const Vec<BC>& alpha, const std::vector<Quadric>& quadrics) {
    if (quadrics.size() < 5) throw Error(ErrorCode::InvalidInput, "expected the surface quadrics");
    R3Model m;
    for (int k = 0; k < 5; ++k) {
        Quadric Z(4, Vec<BC>(4));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) Z[a][b] = quadrics[k][5 + a][5 + b];
        m.zquadrics.push_back(std::move(Z));
    }
    // M has no mixed y z terms, so on the frame Q(s alpha, z) = s^2 h + M(0, z) alpha.
    for (int k = 0; k < 5; ++k) {
        Quadric Y(5, Vec<BC>(5));
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) Y[a][b] = quadrics[k][a][b];
        m.h.push_back(quadric_eval(Y, alpha));
    }
    const Mat<BC> perp = nullspace(Mat<BC>{m.h}, 5, BC(0));
    Mat<BC> coeffs;
    std::vector<Quadric> combos;
    for (const auto& u : perp) {
        Quadric R(4, Vec<BC>(4, BC(0)));
        for (int k = 0; k < 5; ++k)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) R[a][b] += u[k] * m.zquadrics[k][a][b];
        coeffs.push_back(quadric_coefficients(R));
        combos.push_back(std::move(R));
    }
    const SVDResult sv = svd(coeffs, 10);
    const Real cut = sv.sigma[0] * zero_threshold();
    int r = 0;
    for (const auto& x : sv.sigma)
        if (x > cut) ++r;
    if (r != 3) throw Error(ErrorCode::BranchLocusFailure, "the projected curve is not cut by a net of quadrics");
    // The net from the leading right singular vectors.
    static const std::array<std::array<int, 2>, 10> mono = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};
    m.net.clear();
    for (int j = 0; j < 3; ++j) {
        Quadric G(4, Vec<BC>(4, BC(0)));
        for (int k = 0; k < 10; ++k) {
            const BC c = conj(sv.V[k][j]);
            const auto [a, b] = mono[k];
            if (a == b) {
                G[a][a] = c;
            } else {
                G[a][b] = c / BC(2);
                G[b][a] = c / BC(2);
            }
        }
        m.net.push_back(std::move(G));
    }
    // Syzygies sum_i L_i R_i = 0 with linear L_i: 20 cubic monomials, 12 unknowns.
    std::vector<std::array<int, 3>> cubic;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            for (int c = b; c < 4; ++c) cubic.push_back({a, b, c});
    auto cubic_index = [&](int a, int b, int c) {
        std::array<int, 3> t = {a, b, c};
        std::sort(t.begin(), t.end());
        return static_cast<int>(std::find(cubic.begin(), cubic.end(), t) - cubic.begin());
    };
    Mat<BC> sys(cubic.size(), Vec<BC>(12, BC(0)));
    for (int i = 0; i < 3; ++i) {
        const Vec<BC> qc = quadric_coefficients(m.net[i]);
        for (int a = 0; a < 4; ++a)
            for (int k = 0; k < 10; ++k) {
                const auto [p, q] = mono[k];
                sys[cubic_index(a, p, q)][4 * i + a] += qc[k];
            }
    }
    const Mat<BC> syz = nullspace(sys, 12, BC(0));
    if (syz.size() != 2) throw Error(ErrorCode::BranchLocusFailure, "the net does not have two linear syzygies");
    m.S1.assign(3, Vec<BC>(4));
    m.S2.assign(3, Vec<BC>(4));
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < 4; ++a) {
            m.S1[i][a] = syz[0][4 * i + a];
            m.S2[i][a] = syz[1][4 * i + a];
        }
    return m;
}

Vec<BC> r3_point(const R3Model& m, const LinePoint<BC>& t) {
    const auto X = minor_polys(m.S1, m.S2);
    Vec<BC> v;
    for (const auto& p : X) v.push_back(t.infinite ? p[3] : p.eval(t.t));
    return normalize_point(v);
}

Mat<BC> weierstrass_on_Pma(const R3Model& m) {
    if (m.net.size() != 3) throw Error(ErrorCode::BranchLocusFailure, "R3 model is incomplete");
    int kb = 0;
    for (int k = 1; k < 5; ++k)
        if (abs(m.h[k]) > abs(m.h[kb])) kb = k;
    const auto X = minor_polys(m.S1, m.S2);
    Poly<BC> sextic(BC(0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) sextic += m.zquadrics[kb][a][b] * (X[a] * X[b]);
    // Leading coefficients below the threshold are roots at infinity.
    std::vector<BC> c = sextic.coeffs();
    c.resize(7, BC(0));
    Real scale(0);
    for (const auto& x : c) scale = std::max(scale, abs(x));
    int deg = 6;
    while (deg > 0 && abs(c[deg]) <= scale * zero_threshold()) --deg;
    c.resize(deg + 1);
    std::vector<LinePoint<BC>> ts;
    for (const auto& r : complex_roots(Poly<BC>(c, BC(0)))) ts.push_back(LinePoint<BC>::finite(r));
    for (int k = deg; k < 6; ++k) ts.push_back(LinePoint<BC>::at_infinity(BC(0)));
    Mat<BC> W;
    for (const auto& t : ts) W.push_back(r3_point(m, t));
    if (W.size() != 6) throw Error(ErrorCode::BranchLocusFailure, "expected six branch points");
    for (size_t i = 0; i < W.size(); ++i) {
        for (const auto& G : m.zquadrics)
            if (relative_value(G, W[i]) > zero_threshold())
                throw Error(ErrorCode::BranchLocusFailure, "branch point off the surface quadrics");
        for (size_t j = 0; j < i; ++j)
            if (point_distance(W[i], W[j]) <= zero_threshold())
                throw Error(ErrorCode::BranchLocusFailure, "branch points coincide");
    }
    return W;
}

R3Coordinate r3_coordinate(const Mat<BC>& points, const std::vector<Quadric>& net) {
    if (points.size() < 6) throw Error(ErrorCode::InvalidInput, "at least six points of R3 are needed");
    const Real tol = zero_threshold();
    auto tangent = [&](const Vec<BC>& p) {
        Mat<BC> grads;
        for (const auto& G : net) grads.push_back(matvec(G, p));
        return nullspace(grads, 4, BC(0));
    };
    auto plane_form = [&](Mat<BC> rows) -> std::optional<Vec<BC>> {
        Mat<BC> ker = nullspace(rows, 4, BC(0));
        if (ker.size() != 1) return std::nullopt;
        return ker[0];
    };
    auto dot = [](const Vec<BC>& l, const Vec<BC>& p) {
        BC s(0);
        for (size_t i = 0; i < l.size(); ++i) s += l[i] * p[i];
        return s;
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            const Mat<BC> Ti = tangent(points[i]), Tj = tangent(points[j]);
            if (Ti.size() != 2 || Tj.size() != 2) continue;
            // lB contains the tangent at the first center and the second center.
            auto lB = plane_form(Mat<BC>{Ti[0], Ti[1], points[j]});
            auto lA = plane_form(Mat<BC>{Tj[0], Tj[1], points[i]});
            if (!lA || !lB) continue;
            R3Coordinate c;
            c.center0 = i;
            c.center1 = j;
            bool ok = true;
            for (int k = 0; k < static_cast<int>(points.size()) && ok; ++k) {
                if (k == i) {
                    c.values.push_back(LinePoint<BC>::finite(BC(0)));
                    continue;
                }
                if (k == j) {
                    c.values.push_back(LinePoint<BC>::at_infinity(BC(0)));
                    continue;
                }
                const Vec<BC> p = normalized(points[k]);
                const BC a = dot(*lA, p), b = dot(*lB, p);
                const Real na = vmax(*lA), nb = vmax(*lB);
                if (abs(a) <= tol * na && abs(b) <= tol * nb) {
                    ok = false;  // on the center line
                } else if (abs(a) <= tol * na) {
                    c.values.push_back(LinePoint<BC>::at_infinity(BC(0)));
                } else {
                    c.values.push_back(LinePoint<BC>::finite(b / a));
                }
            }
            if (ok) return c;
        }
    throw Error(ErrorCode::CoordinateFailure, "no secant of branch points gives a coordinate on R3");
}

ComplexRun run_complex(const std::vector<Q>& z, int digits) {
    if (digits < 20 || digits > 1000) throw Error(ErrorCode::InvalidInput, "precision must lie in [20, 1000]");
    PrecisionScope scope(digits);
    ComplexRun run;
    run.digits = digits;
    run.frame = theta_space(z);
    const std::vector<Quadric> quadrics = surface_quadrics(run.frame.alpha);
    const RestrictionReport rr = restriction_report(run.frame, quadrics);
    run.restricted_rank = rr.rank;
    run.residuals.twoeq = rr.twoeq_norm;
    run.residuals.polar = rr.polar_residual;

    run.residuals.secant_points = Real(0);
    run.residuals.meets = Real(0);
    run.residuals.conjugation = Real(0);
    for (const auto& e : f0_representatives()) {
        run.secants.push_back(concurrent_secants(run.frame, quadrics, e));
        const auto& s = run.secants.back();
        run.residuals.secant_points = std::max(run.residuals.secant_points, s.point_residual);
        run.residuals.meets = std::max(run.residuals.meets, s.meet_residual);
        run.residuals.conjugation = std::max(run.residuals.conjugation, s.conjugation_residual);
    }

    const R3Model model = r3_model(run.frame.alpha, quadrics);
    run.weierstrass_pma = weierstrass_on_Pma(model);
    run.residuals.weierstrass = Real(0);
    for (const auto& w : run.weierstrass_pma)
        for (const auto& G : model.zquadrics)
            run.residuals.weierstrass = std::max(run.residuals.weierstrass, relative_value(G, w));

    // Project from alpha: the z block of each secant point.
    Mat<BC> pts = run.weierstrass_pma;
    run.residuals.r3 = Real(0);
    for (const auto& s : run.secants)
        for (int k = 0; k < 4; ++k) {
            const Vec<BC> p(s.points[k].begin() + 5, s.points[k].end());
            for (const auto& G : model.net) run.residuals.r3 = std::max(run.residuals.r3, relative_value(G, p));
            if (k < 2) pts.push_back(normalize_point(p));
        }
    run.coordinate = r3_coordinate(pts, model.net);
    const auto& v = run.coordinate.values;
    run.branch_values.assign(v.begin(), v.begin() + 6);
    for (int k = 0; k < 4; ++k) run.secant_values.push_back({v[6 + 2 * k], v[7 + 2 * k]});

    Mat<BC> weierstrass;
    for (const auto& t : run.branch_values) weierstrass.push_back(normalize_point(veronese(t, 6)));
    std::vector<Mat<BC>> lines;
    for (const auto& [a, b] : run.secant_values)
        lines.push_back({normalize_point(veronese(a, 6)), normalize_point(veronese(b, 6))});
    run.certificate = secant_configuration(weierstrass, lines, std::vector<bool>(4, false));
    run.certificate.overlap.assign(4, false);
    run.residuals.coplanarity = run.certificate.coplanarity_residual;
    run.residuals.conic = run.certificate.conic_residual;
    run.result = finish_from_conic(run.certificate, [](const ConicForm<BC>& C) { return conic_parametrize(C); });
    return run;
}

Real moebius_aligned_distance(const std::vector<LinePoint<BC>>& a, const std::vector<LinePoint<BC>>& b) {
    if (a.size() != b.size() || a.size() < 3) throw Error(ErrorCode::InvalidInput, "configurations of unequal size");
    const int n = static_cast<int>(a.size());
    std::vector<std::array<BC, 2>> ha, hb;
    for (const auto& p : a) ha.push_back(homogeneous(p));
    for (const auto& p : b) hb.push_back(homogeneous(p));
    std::vector<std::array<BC, 2>> na;
    for (const auto& x : ha) na.push_back(normalize_by(x, ha[0], ha[1], ha[2]));
    std::optional<Real> best;
    for (int j0 = 0; j0 < n; ++j0)
        for (int j1 = 0; j1 < n; ++j1)
            for (int j2 = 0; j2 < n; ++j2) {
                if (j0 == j1 || j0 == j2 || j1 == j2) continue;
                std::vector<std::array<BC, 2>> nb;
                for (const auto& x : hb) nb.push_back(normalize_by(x, hb[j0], hb[j1], hb[j2]));
                // Greedy matching in index order of a.
                std::vector<bool> used(n, false);
                Real worst(0);
                for (int i = 0; i < n; ++i) {
                    int arg = -1;
                    Real d(0);
                    for (int j = 0; j < n; ++j) {
                        if (used[j]) continue;
                        const Real c = chordal(na[i], nb[j]);
                        if (arg < 0 || c < d) {
                            arg = j;
                            d = c;
                        }
                    }
                    used[arg] = true;
                    worst = std::max(worst, d);
                }
                if (!best || worst < *best) best = worst;
            }
    return *best;
}

StabilityReport precision_stability(const std::vector<Q>& z, int digits, int digits2) {
    StabilityReport r;
    r.digits = digits;
    r.digits2 = digits2;
    const ComplexRun a = run_complex(z, digits);
    const ComplexRun b = run_complex(z, digits2);
    PrecisionScope scope(std::max(digits, digits2));
    r.branch_shift = moebius_aligned_distance(a.branch_values, b.branch_values);
    if (a.result.curve && b.result.curve)
        r.result_shift = moebius_aligned_distance(a.result.parameters, b.result.parameters);
    else
        r.result_shift = Real(1);
    return r;
}

}  // namespace isog3
