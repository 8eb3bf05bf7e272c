// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace isog3 {

enum class ErrorCode {
    ModulusNotIrreducible,
    UnsupportedCharacteristic,
    UnsupportedField,
    ZeroPolynomial,
    DegreeTooSmall,
    FieldMismatch,
    ExtensionTooLarge,
    DegeneratePointSet,
    LineInHyperplane,
    ProjectionCenter,
    NoConic,
    DegenerateBundle,
    NotSmoothConic,
    SingularCurve,
    NotOrdinary,
    NotAQuarticRoot,
    CoplanarityViolated,
    DegenerateConic,
    DegenerateConfiguration,
    IntegrabilityFailure,
    KernelDegenerate,
    TranslateDegenerate,
    RootIsolationFailure,
    BranchLocusFailure,
    CoordinateFailure,
    InvalidInput,
};

const char* error_name(ErrorCode code);

// Degeneracy errors are mathematical outcomes (exit code 2); the rest are
// caller mistakes (exit code 3).
bool is_degeneracy(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace isog3
