// SPDX-License-Identifier: Apache-2.0
#include "isog3/torsion3.hpp"

namespace isog3 {

GFPoly NormalizedQuintic::poly() const {
    const GF z = gf_zero(field);
    return GFPoly({b0, b1, b2, b3, z, gf_one(field)}, z);
}

GFPoly TorsionSecantPair::quadratic() const { return GFPoly({c0, c1, gf_one(field)}, a); }

NormalizedQuintic normalize(const GFPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "curve polynomial is zero");
    const GFCtx* K = f.zero().ctx();
    if (K->p != 3) throw Error(ErrorCode::UnsupportedCharacteristic, "normalization expects characteristic 3");
    if (f.degree() != 5 || !f.lc().is_one()) throw Error(ErrorCode::InvalidInput, "expected a monic quintic");
    if (!gcd_squarefree(f).second) throw Error(ErrorCode::SingularCurve, "quintic has a repeated root");
    // The x^4 coefficient of f(x + s) is b4 + 5 s, so s = -b4 / 5.
    const GF s = -f[4] / gf_int(K, 5);
    const GFPoly g = shift(f, s);
    NormalizedQuintic n;
    n.field = K;
    n.b0 = g[0];
    n.b1 = g[1];
    n.b2 = g[2];
    n.b3 = g[3];
    n.shift = s;
    return n;
}

CartierManin cartier_manin(const NormalizedQuintic& b) {
    const GFCtx* K = b.field;
    CartierManin cm;
    cm.matrix = {{{b.b2, b.b1}, {gf_one(K), gf_zero(K)}}};
    cm.ordinary = !b.b1.is_zero();
    return cm;
}

QuarticRoots torsion_quartic_roots(const NormalizedQuintic& b) {
    if (b.b1.is_zero()) throw Error(ErrorCode::NotOrdinary, "b1 = 0: the Jacobian is not ordinary");
    const GFCtx* K = b.field;
    const GF z = gf_zero(K);
    const GFPoly q({-b.b1, -b.b2, z, z, gf_one(K)}, z);
    SplittingField S = roots_in_splitting_field(q);
    QuarticRoots out{S.field, S.base, {}};
    for (const auto& [r, m] : S.roots) {
        if (m != 1) throw Error(ErrorCode::NotOrdinary, "quartic is not separable");
        out.roots.push_back(r);
    }
    if (out.roots.size() != 4) throw Error(ErrorCode::NotOrdinary, "quartic does not have four roots");
    return out;
}

TorsionSecantPair secant_pair_for_root(const GF& a, const Embedding& base, const NormalizedQuintic& b) {
    const GFCtx* E = a.ctx();
    if (base.to() != E || base.from() != b.field) throw Error(ErrorCode::FieldMismatch, "embedding does not match");
    const GF b0 = base.apply(b.b0), b1 = base.apply(b.b1), b2 = base.apply(b.b2), b3 = base.apply(b.b3);
    if (a.is_zero() || a * a * a * a != b2 * a + b1) throw Error(ErrorCode::NotAQuarticRoot, "a is not a root of X^4 - b2 X - b1");
    TorsionSecantPair p;
    p.field = E;
    p.base = base;
    p.a = a;
    const GF a3 = a * a * a;
    p.d2 = -a;
    p.d1 = a * a;
    p.d0 = b2 - a3;
    if (b1 != -(a * p.d0)) throw Error(ErrorCode::NotAQuarticRoot, "b1 = -a d0 fails");
    const GF ainv = inverse(a);
    p.c1_cubed = a3 - a * b3 + b1 * ainv;
    p.c1_cubed_alt = -(a * b3) + a3 - p.d0;
    if (p.c1_cubed != p.c1_cubed_alt) throw Error(ErrorCode::NotAQuarticRoot, "the two forms of c1^3 disagree");
    p.c1 = frobenius_cube_root(p.c1_cubed);
    p.c0 = frobenius_cube_root(b1 * b1 * ainv * ainv - a * b0);
    // Discriminant c1^2 - 4 c0.
    p.tangent = (p.c1 * p.c1 - gf_int(E, 4) * p.c0).is_zero();
    p.tangent_at = p.tangent ? -p.c1 / gf_int(E, 2) : gf_zero(E);
    return p;
}

bool verify_torsion_identity(const TorsionSecantPair& p, const NormalizedQuintic& b) {
    const GFCtx* E = p.field;
    const GF z = gf_zero(E), one = gf_one(E);
    const GFPoly cubic({p.d0, p.d1, p.d2, one}, z);
    const GFPoly quad({p.c0, p.c1, one}, z);
    const GFPoly f = p.base.apply(b.poly());
    const GFPoly r = cubic * cubic - GFPoly::constant(p.a) * f - quad * quad * quad;
    return r.is_zero();
}

PairRoots pair_roots(const TorsionSecantPair& pair) {
    SplittingField S = roots_in_splitting_field(pair.quadratic());
    PairRoots out{S.field, S.base, {}};
    for (const auto& [r, m] : S.roots) out.xs.push_back(r);
    return out;
}

TorsionData compute_torsion(const GFCurve& C) {
    if (C.degree() != 5) throw Error(ErrorCode::InvalidInput, "expected a quintic model");
    TorsionData t;
    t.normalized = normalize(C.f());
    if (!cartier_manin(t.normalized).ordinary) throw Error(ErrorCode::NotOrdinary, "b1 = 0: the Jacobian is not ordinary");
    t.quartic = torsion_quartic_roots(t.normalized);
    for (const GF& a : t.quartic.roots) t.pairs.push_back(secant_pair_for_root(a, t.quartic.base, t.normalized));
    return t;
}

}  // namespace isog3
