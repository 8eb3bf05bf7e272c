// SPDX-License-Identifier: Apache-2.0
#include "isog3/genus2.hpp"

#include <algorithm>

namespace isog3 {

BranchSet branch_points(const GFCurve& C) {
    SplittingField S = roots_in_splitting_field(C.f());
    BranchSet B{S.field, S.base, {}};
    for (const auto& [r, m] : S.roots) B.points.push_back(LinePoint<GF>::finite(r));
    if (C.degree() == 5) B.points.push_back(LinePoint<GF>::at_infinity(gf_zero(S.field)));
    return B;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        small.push_back(i);
        if (i * i != n) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Q> rational_roots(const Poly<Q>& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero");
    std::vector<Q> out;
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.den());
    std::vector<mpz_class> a;
    for (const auto& c : f.coeffs()) a.push_back(mpz_class(c.num() * (l / c.den())));
    size_t lo = 0;
    while (lo < a.size() && a[lo] == 0) ++lo;
    if (lo > 0) out.push_back(Q(0));
    if (a.size() - lo <= 1) return out;
    for (const auto& p : divisors(a[lo]))
        for (const auto& q : divisors(a.back()))
            for (int s : {1, -1}) {
                const Q r(mpq_class(s * p, q));
                if (f.eval(r).is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LinePoint<Q>> branch_points(const Genus2Curve<Q>& C) {
    std::vector<LinePoint<Q>> out;
    for (const Q& r : rational_roots(C.f())) out.push_back(LinePoint<Q>::finite(r));
    if (static_cast<int>(out.size()) != C.degree())
        throw Error(ErrorCode::UnsupportedField, "branch points are not all rational");
    if (C.degree() == 5) out.push_back(LinePoint<Q>::at_infinity(Q(0)));
    return out;
}

namespace {

std::pair<GF, GF> homogeneous(const LinePoint<GF>& x, const GFCtx* K) {
    if (x.infinite) return {gf_one(K), gf_zero(K)};
    return {x.t, gf_one(K)};
}

// Sends p0, p1, p2 to 0, infinity, 1.
Mat<GF> to_standard(const std::vector<LinePoint<GF>>& p, const GFCtx* K) {
    auto [x0, y0] = homogeneous(p[0], K);
    auto [x1, y1] = homogeneous(p[1], K);
    auto [x2, y2] = homogeneous(p[2], K);
    // l_i(x, y) = x y_i - y x_i vanishes at p_i.
    const GF l0 = x2 * y0 - y2 * x0;
    const GF l1 = x2 * y1 - y2 * x1;
    return {{l1 * y0, -(l1 * x0)}, {l0 * y1, -(l0 * x1)}};
}

Mat<GF> adjugate(const Mat<GF>& m) { return {{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}; }

Mat<GF> mul2(const Mat<GF>& a, const Mat<GF>& b) {
    Mat<GF> r(2, Vec<GF>(2, gf_zero(a[0][0].ctx())));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

}  // namespace

LinePoint<GF> Mobius::apply(const LinePoint<GF>& x) const {
    const GFCtx* K = m[0][0].ctx();
    auto [u, v] = homogeneous(x, K);
    const GF a = m[0][0] * u + m[0][1] * v;
    const GF b = m[1][0] * u + m[1][1] * v;
    if (b.is_zero()) return LinePoint<GF>::at_infinity(a);
    return LinePoint<GF>::finite(a / b);
}

Mobius Mobius::inverse() const { return Mobius{adjugate(m)}; }

Mobius mobius_identity(const GFCtx* K) { return Mobius{{{gf_one(K), gf_zero(K)}, {gf_zero(K), gf_one(K)}}}; }

Mobius mobius_from_triples(const std::vector<LinePoint<GF>>& p, const std::vector<LinePoint<GF>>& q) {
    const GFCtx* K = nullptr;
    for (const auto& x : p) K = x.t.ctx();
    const Mat<GF> A = to_standard(p, K), B = to_standard(q, K);
    Mat<GF> m = mul2(adjugate(B), A);
    // Scale the first nonzero entry to 1 for a canonical witness.
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) {
                const GF inv = isog3::inverse(x);
                for (auto& r : m)
                    for (auto& y : r) y = y * inv;
                return Mobius{m};
            }
    throw Error(ErrorCode::InvalidInput, "triples are not distinct");
}

bool same_point(const LinePoint<GF>& a, const LinePoint<GF>& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.t == b.t;
}

std::optional<IsoWitness> branch_sets_equivalent(const BranchSet& a, const BranchSet& b, int max_extension_degree) {
    if (a.field->p != b.field->p) throw Error(ErrorCode::FieldMismatch, "different characteristics");
    if (a.points.size() != b.points.size()) return std::nullopt;
    if (a.base.from() != b.base.from()) throw Error(ErrorCode::FieldMismatch, "curves over different fields");
    const Compositum C = compose_over(a.base, b.base);
    if (C.field->n > max_extension_degree)
        throw Error(ErrorCode::ExtensionTooLarge, "compositum of the branch fields exceeds the extension cap");
    auto lift = [&](const std::vector<LinePoint<GF>>& pts, const Embedding& e) {
        std::vector<LinePoint<GF>> out;
        for (const auto& x : pts)
            out.push_back(x.infinite ? LinePoint<GF>::at_infinity(gf_zero(C.field)) : LinePoint<GF>::finite(e.apply(x.t)));
        return out;
    };
    const auto P = lift(a.points, C.first);
    const auto Qs = lift(b.points, C.second);
    const int n = static_cast<int>(P.size());
    if (n < 3) return std::nullopt;
    const std::vector<LinePoint<GF>> src = {P[0], P[1], P[2]};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                const Mobius M = mobius_from_triples(src, {Qs[i], Qs[j], Qs[k]});
                bool ok = true;
                for (int s = 3; s < n && ok; ++s) {
                    const LinePoint<GF> img = M.apply(P[s]);
                    ok = std::any_of(Qs.begin(), Qs.end(), [&](const auto& y) { return same_point(img, y); });
                }
                if (ok) return IsoWitness{C.field, M};
            }
    return std::nullopt;
}

std::optional<IsoWitness> is_isomorphic(const GFCurve& a, const GFCurve& b, int max_extension_degree) {
    return branch_sets_equivalent(branch_points(a), branch_points(b), max_extension_degree);
}

GFCurve frobenius_twist(const GFCurve& C) {
    std::vector<GF> c;
    for (const auto& x : C.f().coeffs()) c.push_back(frobenius(x));
    return GFCurve(GFPoly(std::move(c), C.f().zero()));
}

std::optional<GFCurve> quintic_model(const GFCurve& C) {
    if (C.degree() == 5) return C;
    const auto roots = roots_in_field(C.f());
    if (roots.empty()) return std::nullopt;
    const GF& r = roots.front();
    const GF zero = C.f().zero(), one = one_like(zero);
    // g(x) = x^6 f(r + 1/x) = sum f_i (r x + 1)^i x^(6 - i)
    GFPoly g(zero);
    const GFPoly lin({one, r}, zero);
    for (int i = 0; i <= 6; ++i) g += GFPoly::constant(C.f()[i]) * pow(lin, i) * GFPoly::monomial(one, 6 - i);
    const GF c = g.lc();
    const GFPoly h = make_monic(g);
    // c h(u / c) = c^-4 (monic in u): coefficients h_i c^(5 - i).
    std::vector<GF> k(6, zero);
    GF cp = one;
    for (int i = 5; i >= 0; --i) {
        k[i] = h[i] * cp;
        cp = cp * c;
    }
    return GFCurve(GFPoly(std::move(k), zero));
}

const std::vector<SalmonTerm>& salmon_printed_terms() {
    static const std::vector<SalmonTerm> t = {
        {1, 0, 0, 0, 4},      {-120, 1, 1, 0, 3},  {160, 1, 0, 2, 2},    {360, 0, 2, 1, 2},   {-640, 0, 1, 3, 1},
        {256, 0, 0, 5, 0},    {-1440, 0, 3, 1, 2}, {2640, 2, 2, 0, 2},   {4480, 2, 1, 2, 1},  {-2560, 2, 0, 4, 0},
        {-10080, 1, 3, 1, 1}, {5760, 1, 3, 3, 0},  {3456, 0, 5, 0, 1},   {3456, 5, 0, 0, 2},  {-2160, 0, 4, 2, 0},
        {-11520, 4, 1, 1, 1}, {6400, 4, 0, 3, 0},  {5120, 3, 0, 3, 1},   {-3200, 3, 2, 2, 0},
    };
    return t;
}

const std::vector<SalmonCorrection>& salmon_corrections() {
    static const std::vector<SalmonCorrection> c = {
        {{-1440, 0, 3, 1, 2}, {-1440, 3, 0, 1, 2}},
        {{5760, 1, 3, 3, 0}, {5760, 1, 2, 3, 0}},
        {{5120, 3, 0, 3, 1}, {5120, 3, 3, 0, 1}},
    };
    return c;
}

const std::vector<SalmonTerm>& salmon_corrected_terms() {
    static const std::vector<SalmonTerm> t = [] {
        std::vector<SalmonTerm> out = salmon_printed_terms();
        for (const auto& fix : salmon_corrections())
            for (auto& term : out)
                if (term.coeff == fix.printed.coeff && term.a == fix.printed.a && term.b == fix.printed.b &&
                    term.c == fix.printed.c && term.d == fix.printed.d)
                    term = fix.corrected;
        return out;
    }();
    return t;
}

int salmon_weight(const SalmonTerm& t) { return 2 * t.a + 3 * t.b + 4 * t.c + 5 * t.d; }

}  // namespace isog3
