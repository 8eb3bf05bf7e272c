// SPDX-License-Identifier: Apache-2.0
// Genus-2 curves y^2 = f(x), their branch sets, Salmon's discriminant of the
// quintic x^5 + 10a x^3 + 10b x^2 + 5c x + d, Moebius isomorphism search and
// the Frobenius twist.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isog3/finite_poly.hpp"
#include "isog3/projective.hpp"

namespace isog3 {

// y^2 = f(x) with f monic, squarefree, of degree 5 or 6.
template <class F>
class Genus2Curve {
public:
    explicit Genus2Curve(Poly<F> f) : f_(std::move(f)) {
        if (f_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "curve polynomial is zero");
        if (f_.degree() != 5 && f_.degree() != 6) throw Error(ErrorCode::InvalidInput, "degree must be 5 or 6");
        if (f_.lc() != one_like(f_.lc())) throw Error(ErrorCode::InvalidInput, "curve polynomial must be monic");
        if (!gcd_squarefree(f_).second) throw Error(ErrorCode::SingularCurve, "curve polynomial has a repeated root");
    }
    const Poly<F>& f() const { return f_; }
    int degree() const { return f_.degree(); }

private:
    Poly<F> f_;
};

using GFCurve = Genus2Curve<GF>;

// Six points of the projective line over `field`; `base` embeds the curve's
// field.
struct BranchSet {
    const GFCtx* field;
    Embedding base;
    std::vector<LinePoint<GF>> points;
};

BranchSet branch_points(const GFCurve& C);
// Over Q: every branch point must be rational, otherwise UnsupportedField.
std::vector<LinePoint<Q>> branch_points(const Genus2Curve<Q>& C);
// Rational roots of a nonzero polynomial over Q, sorted, without multiplicity.
std::vector<Q> rational_roots(const Poly<Q>& f);

// Fractional-linear map x -> (m00 x + m01) / (m10 x + m11).
struct Mobius {
    Mat<GF> m;
    LinePoint<GF> apply(const LinePoint<GF>& x) const;
    Mobius inverse() const;
};

Mobius mobius_identity(const GFCtx* K);
// The map sending p0, p1, p2 to q0, q1, q2 (all pairwise distinct).
Mobius mobius_from_triples(const std::vector<LinePoint<GF>>& p, const std::vector<LinePoint<GF>>& q);
bool same_point(const LinePoint<GF>& a, const LinePoint<GF>& b);

struct IsoWitness {
    const GFCtx* field;  // field of the map's coefficients
    Mobius map;          // sends the branch set of the first curve onto the second
};

// Moebius search: fixes three branch points of the first set and tries all
// 120 ordered images.  Throws ExtensionTooLarge when the compositum of the
// branch fields exceeds max_extension_degree over F_p.
std::optional<IsoWitness> is_isomorphic(const GFCurve& a, const GFCurve& b, int max_extension_degree);
std::optional<IsoWitness> branch_sets_equivalent(const BranchSet& a, const BranchSet& b, int max_extension_degree);

// Coefficients c -> c^p.
GFCurve frobenius_twist(const GFCurve& C);

// Moves a branch point rational over the curve's field to infinity and
// rescales x to get a monic quintic; nullopt when f has no root.
std::optional<GFCurve> quintic_model(const GFCurve& C);

// Salmon's discriminant.
struct SalmonTerm {
    long coeff;
    int a, b, c, d;  // exponents
};
struct SalmonCorrection {
    SalmonTerm printed;
    SalmonTerm corrected;
};

const std::vector<SalmonTerm>& salmon_printed_terms();
// The printed list with the entries of salmon_corrections() replaced.
const std::vector<SalmonTerm>& salmon_corrected_terms();
const std::vector<SalmonCorrection>& salmon_corrections();
// Weight of a term with a, b, c, d of weights 2, 3, 4, 5.
int salmon_weight(const SalmonTerm& t);

template <class F>
F salmon_eval(const std::vector<SalmonTerm>& terms, const F& a, const F& b, const F& c, const F& d) {
    F s = zero_like(a);
    for (const auto& t : terms) {
        F m = from_int_like(a, t.coeff);
        for (int i = 0; i < t.a; ++i) m = m * a;
        for (int i = 0; i < t.b; ++i) m = m * b;
        for (int i = 0; i < t.c; ++i) m = m * c;
        for (int i = 0; i < t.d; ++i) m = m * d;
        s += m;
    }
    return s;
}

template <class F>
F salmon_discriminant(const F& a, const F& b, const F& c, const F& d, bool corrected = true) {
    return salmon_eval(corrected ? salmon_corrected_terms() : salmon_printed_terms(), a, b, c, d);
}

// x^5 + 10a x^3 + 10b x^2 + 5c x + d
template <class F>
Poly<F> salmon_quintic(const F& a, const F& b, const F& c, const F& d) {
    const F z = zero_like(a);
    return Poly<F>({d, from_int_like(a, 5) * c, from_int_like(a, 10) * b, from_int_like(a, 10) * a, z, one_like(a)}, a);
}

}  // namespace isog3
