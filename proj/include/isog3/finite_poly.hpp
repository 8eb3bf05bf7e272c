// SPDX-License-Identifier: Apache-2.0
// Polynomials over finite fields: distinct-degree data, roots, splitting
// fields, and deterministic embeddings between flat finite fields.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isog3/gf.hpp"
#include "isog3/poly.hpp"

namespace isog3 {

using GFPoly = Poly<GF>;

GFPoly gf_poly(const GFCtx* K, const std::vector<long>& coeffs);

// A field homomorphism from -> to fixing F_p, given by the image of the
// generator of `from`.
class Embedding {
public:
    Embedding() = default;
    Embedding(const GFCtx* from, const GFCtx* to, const GF& gen_image);

    const GFCtx* from() const { return from_; }
    const GFCtx* to() const { return to_; }
    const GF& gen_image() const { return gen_image_; }
    GF apply(const GF& a) const;
    GFPoly apply(const GFPoly& f) const;
    // Preimage if a lies in the image.
    std::optional<GF> pullback(const GF& a) const;
    bool is_identity() const { return from_ == to_ && gen_image_ == gf_gen(to_); }

private:
    const GFCtx* from_ = nullptr;
    const GFCtx* to_ = nullptr;
    GF gen_image_;
    std::vector<Coeffs> powers_;           // images of gen^i
    std::vector<int> pivot_rows_;          // coordinates used to invert
    std::vector<std::vector<uint32_t>> inv_;  // inverse of powers_ restricted to pivot rows
};

Embedding identity_embedding(const GFCtx* K);
// Smallest root (in the index order) of from's modulus inside `to`.
Embedding make_embedding(const GFCtx* from, const GFCtx* to);
Embedding compose(const Embedding& first, const Embedding& second);

struct Compositum {
    const GFCtx* field;
    Embedding first;
    Embedding second;
};
Compositum compose_fields(const GFCtx* a, const GFCtx* b);
// Compositum of a.to() and b.to() over their common field a.from() == b.from(),
// with first o a == second o b.
Compositum compose_over(const Embedding& a, const Embedding& b);

// Degrees of the distinct monic irreducible factors (each listed once per
// distinct factor) over the coefficient field.
std::vector<int> factor_degrees(const GFPoly& f);
int splitting_degree(const GFPoly& f);

// Distinct roots lying in the coefficient field, sorted by index order.
std::vector<GF> roots_in_field(const GFPoly& f);
// Same result by evaluating at every element; only for fields up to 3^6 elements.
std::vector<GF> roots_exhaustive(const GFPoly& f);
// Same result by gcd with X^q - X and equal-degree splitting, for any size.
std::vector<GF> roots_equal_degree(const GFPoly& f);
std::vector<std::pair<GF, int>> roots_with_multiplicity(const GFPoly& f);
// Whether roots_in_field evaluates exhaustively for this field.
bool uses_exhaustive_search(const GFCtx* K);

struct SplittingField {
    const GFCtx* field;
    Embedding base;                         // coefficient field -> field
    std::vector<std::pair<GF, int>> roots;  // sorted, with multiplicity
};
SplittingField roots_in_splitting_field(const GFPoly& f);

// Square root inside the element's own field, if one exists (smallest root).
std::optional<GF> sqrt_in_field(const GF& a);

// Whether a is fixed by x -> x^(|K|), i.e. lies in the subfield of size |K|
// for K a subfield of a's field of degree k.
bool in_subfield(const GF& a, int k);

}  // namespace isog3
