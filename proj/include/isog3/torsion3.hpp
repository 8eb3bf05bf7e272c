// SPDX-License-Identifier: Apache-2.0
// 3-torsion data of an ordinary genus-2 curve y^2 = x^5 + ... over F_{3^k}:
// the quartic X^4 - b2 X - b1 and, for each root a, the cubic/quadratic pair
// with (x^3 + d2 x^2 + d1 x + d0)^2 - a f(x) = (x^2 + c1 x + c0)^3.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "isog3/finite_poly.hpp"
#include "isog3/genus2.hpp"

namespace isog3 {

// f(x + shift) = x^5 + b3 x^3 + b2 x^2 + b1 x + b0.
struct NormalizedQuintic {
    const GFCtx* field = nullptr;
    GF b0, b1, b2, b3;
    GF shift;

    GFPoly poly() const;
};

struct CartierManin {
    std::array<std::array<GF, 2>, 2> matrix;  // ((b2, b1), (1, b4)) with b4 = 0
    bool ordinary;
};

struct QuarticRoots {
    const GFCtx* field;        // splitting field of the quartic
    Embedding base;            // curve field -> field
    std::vector<GF> roots;     // four distinct, sorted
};

struct TorsionSecantPair {
    const GFCtx* field = nullptr;  // field of a (contains the curve field via base)
    Embedding base;
    GF a, d2, d1, d0, c1, c0;
    // c1^3 from a^3 - a b3 + b1/a and from -a b3 + a^3 - d0; equal on the quartic.
    GF c1_cubed, c1_cubed_alt;
    // x^2 + c1 x + c0 is a square; the double root is then tangent_at.
    bool tangent = false;
    GF tangent_at;

    GFPoly quadratic() const;
};

// The two x-coordinates of a pair, in the splitting field of the quadratic.
struct PairRoots {
    const GFCtx* field;
    Embedding base;  // pair field -> field
    std::vector<GF> xs;  // one entry when tangent
};

NormalizedQuintic normalize(const GFPoly& f);
CartierManin cartier_manin(const NormalizedQuintic& b);
QuarticRoots torsion_quartic_roots(const NormalizedQuintic& b);
TorsionSecantPair secant_pair_for_root(const GF& a, const Embedding& base, const NormalizedQuintic& b);
bool verify_torsion_identity(const TorsionSecantPair& pair, const NormalizedQuintic& b);
PairRoots pair_roots(const TorsionSecantPair& pair);

struct TorsionData {
    NormalizedQuintic normalized;
    QuarticRoots quartic;
    std::vector<TorsionSecantPair> pairs;
};

// normalize -> cartier_manin -> quartic roots -> four pairs.
TorsionData compute_torsion(const GFCurve& C);

}  // namespace isog3
