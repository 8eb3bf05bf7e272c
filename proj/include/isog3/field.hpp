// SPDX-License-Identifier: Apache-2.0
// Common vocabulary for the element types: GF, Q, NF and BC all provide
// + - * /, is_zero, zero_like, one_like, from_int_like, inverse and to_string.
#pragma once

#include <string>
#include <vector>

#include "isog3/bigcomplex.hpp"
#include "isog3/gf.hpp"
#include "isog3/numfield.hpp"
#include "isog3/rational.hpp"

namespace isog3 {

template <class F>
struct FieldTraits {
    static constexpr bool exact = true;
};

template <>
struct FieldTraits<BC> {
    static constexpr bool exact = false;
};

template <class F>
inline constexpr bool is_exact_v = FieldTraits<F>::exact;

enum class FieldKind { PrimeFinite, ExtensionFinite, Rational, NumberField, BigComplex };

// Descriptive record of a field, used for reporting and serialization.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    uint32_t characteristic = 0;
    int extension_degree = 1;
    std::vector<std::string> modulus;  // low degree first; empty for Q and big-complex
    int precision = 0;                 // decimal digits for big-complex
    const GFCtx* gf = nullptr;
    const NFCtx* nf = nullptr;
};

FieldDescriptor describe(const GFCtx* K);
FieldDescriptor describe(const NFCtx* K);
FieldDescriptor describe_rational();
FieldDescriptor describe_complex(int digits);
const char* kind_name(FieldKind k);

}  // namespace isog3
