// SPDX-License-Identifier: Apache-2.0
#include "isog3/field.hpp"

#include "isog3/errors.hpp"

namespace isog3 {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ModulusNotIrreducible: return "ModulusNotIrreducible";
        case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ExtensionTooLarge: return "ExtensionTooLarge";
        case ErrorCode::DegeneratePointSet: return "DegeneratePointSet";
        case ErrorCode::LineInHyperplane: return "LineInHyperplane";
        case ErrorCode::ProjectionCenter: return "ProjectionCenter";
        case ErrorCode::NoConic: return "NoConic";
        case ErrorCode::DegenerateBundle: return "DegenerateBundle";
        case ErrorCode::NotSmoothConic: return "NotSmoothConic";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::NotOrdinary: return "NotOrdinary";
        case ErrorCode::NotAQuarticRoot: return "NotAQuarticRoot";
        case ErrorCode::CoplanarityViolated: return "CoplanarityViolated";
        case ErrorCode::DegenerateConic: return "DegenerateConic";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::IntegrabilityFailure: return "IntegrabilityFailure";
        case ErrorCode::KernelDegenerate: return "KernelDegenerate";
        case ErrorCode::TranslateDegenerate: return "TranslateDegenerate";
        case ErrorCode::RootIsolationFailure: return "RootIsolationFailure";
        case ErrorCode::BranchLocusFailure: return "BranchLocusFailure";
        case ErrorCode::CoordinateFailure: return "CoordinateFailure";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

bool is_degeneracy(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput:
        case ErrorCode::ModulusNotIrreducible:
        case ErrorCode::UnsupportedCharacteristic:
        case ErrorCode::UnsupportedField:
        case ErrorCode::FieldMismatch:
        case ErrorCode::ExtensionTooLarge:
        case ErrorCode::ZeroPolynomial:
        case ErrorCode::DegreeTooSmall:
            return false;
        default:
            return true;
    }
}

FieldDescriptor describe(const GFCtx* K) {
    FieldDescriptor d;
    d.kind = K->n == 1 ? FieldKind::PrimeFinite : FieldKind::ExtensionFinite;
    d.characteristic = K->p;
    d.extension_degree = K->n;
    for (auto c : K->modulus) d.modulus.push_back(std::to_string(c));
    d.gf = K;
    return d;
}

FieldDescriptor describe(const NFCtx* K) {
    FieldDescriptor d;
    d.kind = FieldKind::NumberField;
    d.extension_degree = K->degree();
    for (const auto& c : K->modulus) d.modulus.push_back(to_string(c));
    d.nf = K;
    return d;
}

FieldDescriptor describe_rational() { return FieldDescriptor{}; }

FieldDescriptor describe_complex(int digits) {
    FieldDescriptor d;
    d.kind = FieldKind::BigComplex;
    d.precision = digits;
    return d;
}

const char* kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::PrimeFinite: return "prime-finite";
        case FieldKind::ExtensionFinite: return "extension-finite";
        case FieldKind::Rational: return "rational";
        case FieldKind::NumberField: return "number-field";
        case FieldKind::BigComplex: return "big-complex";
    }
    return "unknown";
}

}  // namespace isog3
