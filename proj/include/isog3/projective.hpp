// SPDX-License-Identifier: Apache-2.0
// Projective linear algebra over any element type: rational normal curves,
// spans, hyperplanes, line meets, projections, and conics.
#pragma once

#include <optional>
#include <vector>

#include "isog3/errors.hpp"
#include "isog3/finite_poly.hpp"
#include "isog3/linalg.hpp"

namespace isog3 {

// A point of the projective line: t, or infinity.
template <class F>
struct LinePoint {
    F t;
    bool infinite = false;

    static LinePoint finite(const F& v) { return {v, false}; }
    static LinePoint at_infinity(const F& like) { return {zero_like(like), true}; }
};

// Row-reduced basis of a linear subspace of F^(n+1).
template <class F>
struct Subspace {
    Mat<F> basis;
    std::vector<int> pivots;
    int ncoords = 0;

    int rank() const { return static_cast<int>(basis.size()); }
    int projective_dim() const { return rank() - 1; }
};

template <class F>
struct Hyperplane {
    Vec<F> form;  // the hyperplane is {x : form . x = 0}
    Subspace<F> space;
};

// Symmetric 3x3 matrix M; the conic is x^T M x = 0.
template <class F>
struct ConicForm {
    Mat<F> M;
    int rank = 0;
};

namespace detail {

template <class F>
bool near_zero(const F& x, const F& scale_like) {
    if constexpr (is_exact_v<F>) {
        (void)scale_like;
        return is_zero(x);
    } else {
        Real s = abs(scale_like);
        if (s < Real(1)) s = Real(1);
        return abs(x) <= s * zero_threshold();
    }
}

template <class F>
bool vec_negligible(const Vec<F>& v) {
    if constexpr (is_exact_v<F>) {
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    } else {
        return vec_norm(v) <= zero_threshold();
    }
}

}  // namespace detail

// Canonical representative: exact fields scale the first nonzero coordinate
// to 1; big-complex scales the coordinate of largest modulus to 1.
template <class F>
Vec<F> normalize_point(Vec<F> v) {
    if constexpr (is_exact_v<F>) {
        for (const auto& x : v)
            if (!is_zero(x)) {
                const F inv = inverse(x);
                for (auto& y : v) y = y * inv;
                return v;
            }
        throw Error(ErrorCode::InvalidInput, "zero vector is not a projective point");
    } else {
        int best = -1;
        Real bv(0);
        for (int i = 0; i < static_cast<int>(v.size()); ++i) {
            Real a = abs(v[i]);
            if (a > bv) {
                bv = a;
                best = i;
            }
        }
        if (best < 0) throw Error(ErrorCode::InvalidInput, "zero vector is not a projective point");
        const F inv = inverse(v[best]);
        for (auto& y : v) y = y * inv;
        v[best] = BC(1);
        return v;
    }
}

// nu_d(t) = (1, t, ..., t^d); nu_d(inf) = (0, ..., 0, 1).
template <class F>
Vec<F> veronese(const LinePoint<F>& t, int d) {
    if (d < 1) throw Error(ErrorCode::InvalidInput, "veronese degree must be positive");
    Vec<F> v(d + 1, zero_like(t.t));
    if (t.infinite) {
        v[d] = one_like(t.t);
        return v;
    }
    v[0] = one_like(t.t);
    for (int i = 1; i <= d; ++i) v[i] = v[i - 1] * t.t;
    return v;
}

template <class F>
Subspace<F> span(const Mat<F>& points) {
    if (points.empty()) throw Error(ErrorCode::InvalidInput, "span of no points");
    const int n = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n) throw Error(ErrorCode::InvalidInput, "points in different ambient spaces");
    Subspace<F> s;
    s.ncoords = n;
    if constexpr (is_exact_v<F>) {
        RREF<F> r = rref(points, n);
        s.basis = std::move(r.rows);
        s.pivots = std::move(r.pivots);
    } else {
        // Numeric rank from singular values, then an echelon basis of that size.
        const int k = rank(points, n);
        RREF<F> r = rref(points, n);
        if (static_cast<int>(r.rows.size()) > k) {
            r.rows.resize(k);
            r.pivots.resize(k);
        }
        s.basis = std::move(r.rows);
        s.pivots = std::move(r.pivots);
    }
    return s;
}

template <class F>
int point_rank(const Mat<F>& points) {
    if (points.empty()) return 0;
    return rank(points, static_cast<int>(points[0].size()));
}

// The unique hyperplane of P^n through n points spanning it.
template <class F>
Hyperplane<F> hyperplane_through(const Mat<F>& points) {
    if (points.empty()) throw Error(ErrorCode::DegeneratePointSet, "no points");
    const int n = static_cast<int>(points[0].size());
    if (point_rank(points) != n - 1) throw Error(ErrorCode::DegeneratePointSet, "points do not span a hyperplane");
    Mat<F> ns = nullspace(points, n, points[0][0]);
    if (ns.size() != 1) throw Error(ErrorCode::DegeneratePointSet, "hyperplane is not unique");
    Hyperplane<F> h;
    h.form = normalize_point(ns[0]);
    h.space = span(nullspace(Mat<F>{h.form}, n, points[0][0]));
    return h;
}

template <class F>
Hyperplane<F> hyperplane_through_six(const Mat<F>& points) {
    if (points.size() != 6 || points[0].size() != 7)
        throw Error(ErrorCode::InvalidInput, "expected six points of P^6");
    return hyperplane_through(points);
}

// Intersection of a line (two spanning vectors) with a hyperplane.
template <class F>
Vec<F> line_meet_hyperplane(const Mat<F>& line, const Vec<F>& form) {
    if (line.size() != 2) throw Error(ErrorCode::InvalidInput, "a line needs two spanning vectors");
    const Vec<F>& u = line[0];
    const Vec<F>& v = line[1];
    const F fu = dot(form, u), fv = dot(form, v);
    Vec<F> p(u.size(), zero_like(fu));
    for (size_t i = 0; i < u.size(); ++i) p[i] = fv * u[i] - fu * v[i];
    if (detail::vec_negligible(p)) {
        if constexpr (is_exact_v<F>) {
            throw Error(ErrorCode::LineInHyperplane, "line lies in the hyperplane");
        } else {
            // Relative test: both values tiny against the spanning vectors.
            throw Error(ErrorCode::LineInHyperplane, "line lies in the hyperplane (numerically)");
        }
    }
    return normalize_point(p);
}

// Tangent line of the degree-d rational normal curve at t, as two spanning
// vectors: nu_d(t) and its derivative.
template <class F>
Mat<F> tangent_line_rnc(const LinePoint<F>& t, int d) {
    if (d < 2) throw Error(ErrorCode::InvalidInput, "tangent lines need degree at least 2");
    Vec<F> p = veronese(t, d);
    Vec<F> dv(d + 1, zero_like(t.t));
    if (t.infinite) {
        dv[d - 1] = one_like(t.t);
    } else {
        F tp = one_like(t.t);
        for (int i = 1; i <= d; ++i) {
            dv[i] = from_int_like(t.t, i) * tp;
            tp = tp * t.t;
        }
    }
    return {p, dv};
}

// Projection from L onto the coordinate axes at the non-pivot columns of L's
// echelon basis.
template <class F>
Vec<F> project_from(const Subspace<F>& L, const Vec<F>& q) {
    if (static_cast<int>(q.size()) != L.ncoords) throw Error(ErrorCode::InvalidInput, "ambient mismatch");
    Vec<F> r = q;
    for (size_t i = 0; i < L.basis.size(); ++i) {
        const F c = r[L.pivots[i]];
        if (is_zero(c)) continue;
        for (int j = 0; j < L.ncoords; ++j) r[j] -= c * L.basis[i][j];
    }
    std::vector<bool> piv(L.ncoords, false);
    for (int p : L.pivots) piv[p] = true;
    Vec<F> out;
    for (int j = 0; j < L.ncoords; ++j)
        if (!piv[j]) out.push_back(r[j]);
    if (out.empty()) throw Error(ErrorCode::InvalidInput, "projection target is empty");
    if constexpr (is_exact_v<F>) {
        if (detail::vec_negligible(out)) throw Error(ErrorCode::ProjectionCenter, "point lies in the center");
    } else {
        if (vec_norm(out) <= vec_norm(q) * zero_threshold())
            throw Error(ErrorCode::ProjectionCenter, "point lies in the center (numerically)");
    }
    return normalize_point(out);
}

// Coordinates of points in a plane with respect to the echelon basis of
// their span.
template <class F>
Mat<F> plane_coordinates(const Mat<F>& points) {
    Subspace<F> s = span(points);
    if (s.rank() != 3) throw Error(ErrorCode::DegeneratePointSet, "points do not span a plane");
    Mat<F> out;
    for (const auto& p : points) {
        Vec<F> c;
        for (int piv : s.pivots) c.push_back(p[piv]);
        out.push_back(std::move(c));
    }
    return out;
}

template <class F>
F conic_eval(const ConicForm<F>& C, const Vec<F>& q) {
    F s = zero_like(q[0]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += q[i] * C.M[i][j] * q[j];
    return s;
}

// Conic through >= 5 points of P^2, as the kernel of the system on the six
// monomials x^2, y^2, z^2, xy, xz, yz.
template <class F>
ConicForm<F> conic_through(const Mat<F>& pts) {
    if (pts.size() < 5) throw Error(ErrorCode::InvalidInput, "a conic needs at least five points");
    Mat<F> sys;
    for (const auto& p : pts) {
        if (p.size() != 3) throw Error(ErrorCode::InvalidInput, "conic points must lie in P^2");
        sys.push_back({p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]});
    }
    Mat<F> ns = nullspace(sys, 6, pts[0][0]);
    if (ns.empty()) throw Error(ErrorCode::NoConic, "no conic through the points");
    if (ns.size() > 1) throw Error(ErrorCode::DegenerateBundle, "the points lie on a pencil of conics");
    const Vec<F> c = normalize_point(ns[0]);
    const F h = inverse(from_int_like(c[0], 2));
    ConicForm<F> C;
    C.M = {{c[0], c[3] * h, c[4] * h}, {c[3] * h, c[1], c[5] * h}, {c[4] * h, c[5] * h, c[2]}};
    C.rank = rank(C.M, 3);
    return C;
}

// Rational parametrization of a smooth conic from a point q0:
// X(t) = 2 B(q0, P) P - Q(P) q0 with P = r0 + t r1, where r1 spans the
// tangent at q0 and B(q0, r0) != 0.  q0 corresponds to t = infinity.
template <class F>
struct ConicParametrization {
    ConicForm<F> C;
    Vec<F> q0, r0, r1;

    F bilinear(const Vec<F>& a, const Vec<F>& b) const {
        F s = zero_like(a[0]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += a[i] * C.M[i][j] * b[j];
        return s;
    }

    Vec<F> point(const LinePoint<F>& t) const {
        if (t.infinite) return normalize_point(q0);
        Vec<F> P(3, zero_like(t.t));
        for (int i = 0; i < 3; ++i) P[i] = r0[i] + t.t * r1[i];
        const F b = from_int_like(t.t, 2) * bilinear(q0, P);
        const F qp = bilinear(P, P);
        Vec<F> X(3, zero_like(t.t));
        for (int i = 0; i < 3; ++i) X[i] = b * P[i] - qp * q0[i];
        return normalize_point(X);
    }

    LinePoint<F> parameter(const Vec<F>& x) const {
        auto c = coordinates_in(Mat<F>{q0, r0, r1}, x);
        if (!c) throw Error(ErrorCode::InvalidInput, "basis of the parametrization is singular");
        const F& c1 = (*c)[1];
        const F& c2 = (*c)[2];
        bool at_q0;
        if constexpr (is_exact_v<F>) {
            at_q0 = is_zero(c1);
        } else {
            at_q0 = abs(c1) <= (abs(c1) + abs(c2) + abs((*c)[0])) * zero_threshold();
        }
        if (at_q0) return LinePoint<F>::at_infinity(c1);
        return LinePoint<F>::finite(c2 / c1);
    }
};

namespace detail {

template <class F>
ConicParametrization<F> build_parametrization(const ConicForm<F>& C, Vec<F> q0) {
    ConicParametrization<F> par;
    par.C = C;
    par.q0 = normalize_point(std::move(q0));
    Vec<F> mq = matvec(C.M, par.q0);
    // Tangent direction: the kernel of B(q0, .) is a plane containing q0.
    Mat<F> ker = nullspace(Mat<F>{mq}, 3, mq[0]);
    for (const auto& v : ker) {
        if (point_rank(Mat<F>{par.q0, v}) == 2) {
            par.r1 = v;
            break;
        }
    }
    if (par.r1.empty()) throw Error(ErrorCode::NotSmoothConic, "no tangent direction");
    int best = -1;
    if constexpr (is_exact_v<F>) {
        for (int k = 0; k < 3 && best < 0; ++k)
            if (!is_zero(mq[k])) best = k;
    } else {
        Real bv(0);
        for (int k = 0; k < 3; ++k)
            if (abs(mq[k]) > bv) {
                bv = abs(mq[k]);
                best = k;
            }
    }
    if (best < 0) throw Error(ErrorCode::NotSmoothConic, "base point is singular");
    par.r0 = Vec<F>(3, zero_like(mq[0]));
    par.r0[best] = one_like(mq[0]);
    return par;
}

// Points of Q(x) = 0 on the pencil a + w b, w in the field (or the subfield
// given by `sub`), smallest first.
inline std::vector<GF> conic_line_roots(const ConicForm<GF>& C, const Vec<GF>& a, const Vec<GF>& b,
                                        const Embedding* sub) {
    auto B = [&](const Vec<GF>& x, const Vec<GF>& y) {
        GF s = gf_zero(C.M[0][0].ctx());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += x[i] * C.M[i][j] * y[j];
        return s;
    };
    const GF c0 = B(a, a), c1 = B(a, b) + B(b, a), c2 = B(b, b);
    GFPoly q({c0, c1, c2}, c0);
    if (q.is_zero()) {
        // Whole line on the conic; not possible for a smooth conic.
        return {gf_zero(c0.ctx())};
    }
    if (q.degree() == 0) return {};
    std::vector<GF> roots = roots_in_field(q);
    if (!sub) return roots;
    std::vector<std::pair<mpz_class, GF>> keep;
    for (const GF& r : roots) {
        auto pb = sub->pullback(r);
        if (pb) keep.emplace_back(gf_index(*pb), r);
    }
    std::sort(keep.begin(), keep.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<GF> out;
    for (auto& [i, r] : keep) out.push_back(r);
    return out;
}

}  // namespace detail

// Parametrize a smooth conic over a finite field.  The base point is the
// first point found in the order (0,0,1), (0,1,w), (1,u,w) with u, w in the
// subfield embedded by `sub` (the whole field when absent).
inline ConicParametrization<GF> conic_parametrize(const ConicForm<GF>& C, const Embedding* sub = nullptr) {
    if (rank(C.M, 3) != 3) throw Error(ErrorCode::NotSmoothConic, "conic is singular");
    const GFCtx* W = C.M[0][0].ctx();
    const GF zero = gf_zero(W), one = gf_one(W);
    Vec<GF> e2 = {zero, zero, one};
    if (is_zero(conic_eval(C, e2))) return detail::build_parametrization(C, e2);
    {
        auto ws = detail::conic_line_roots(C, Vec<GF>{zero, one, zero}, e2, sub);
        if (!ws.empty()) return detail::build_parametrization(C, Vec<GF>{zero, one, ws.front()});
    }
    const GFCtx* K = sub ? sub->from() : W;
    const long limit = K->order.fits_slong_p() ? K->order.get_si() : 1L << 40;
    for (long idx = 0; idx < limit; ++idx) {
        GF u = gf_from_index(K, mpz_class(idx));
        if (sub) u = sub->apply(u);
        auto ws = detail::conic_line_roots(C, Vec<GF>{one, u, zero}, e2, sub);
        if (!ws.empty()) return detail::build_parametrization(C, Vec<GF>{one, u, ws.front()});
    }
    throw Error(ErrorCode::NotSmoothConic, "no point found on the conic");
}

// Big-complex version: the base point is found on the line y = 0 (or is
// (0,0,1) when that lies on the conic).
inline ConicParametrization<BC> conic_parametrize(const ConicForm<BC>& C) {
    if (rank(C.M, 3) != 3) throw Error(ErrorCode::NotSmoothConic, "conic is singular");
    const Real scale = max_abs(C.M);
    const Real tol = scale * zero_threshold();
    if (abs(C.M[2][2]) <= tol) return detail::build_parametrization(C, Vec<BC>{BC(0), BC(0), BC(1)});
    // Q(1, 0, w) = M00 + 2 M02 w + M22 w^2.
    const BC disc = C.M[0][2] * C.M[0][2] - C.M[0][0] * C.M[2][2];
    const BC w = (-C.M[0][2] + sqrt(disc)) / C.M[2][2];
    return detail::build_parametrization(C, Vec<BC>{BC(1), BC(0), w});
}

// Six parameters to the homogeneous form prod (x - t_i), skipping infinity.
template <class F>
Poly<F> polynomial_from_parameters(const std::vector<LinePoint<F>>& ts, const F& like) {
    Poly<F> f = Poly<F>::constant(one_like(like));
    for (const auto& t : ts) {
        if (t.infinite) continue;
        f = f * Poly<F>({-t.t, one_like(like)}, like);
    }
    return f;
}

}  // namespace isog3
