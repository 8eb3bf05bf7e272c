// SPDX-License-Identifier: Apache-2.0
// JSON reports shared by the command-line tool, the acceptance runner and the
// Python module.  Every report is a deterministic function of its request;
// wall-clock figures appear only when asked for.
//
// Finite field elements are written as their base-3 digit index (the integer
// whose digits are the coefficients in the field's generator, low first).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "isog3/errors.hpp"
#include "isog3/finite_poly.hpp"
#include "isog3/rational.hpp"

namespace isog3::reports {

using json = nlohmann::json;

inline constexpr int kMaxFieldDegree = 6;
inline constexpr int kMaxDigits = 1000;
inline constexpr int kDefaultMaxExtension = 60;

// F_q for q = 3^k with 1 <= k <= 6, with the default modulus or the given one
// (monic, low coefficients first, leading 1 optional).  InvalidInput otherwise.
const GFCtx* field_for(uint64_t q, const std::optional<std::vector<uint32_t>>& modulus = {});

// The monic polynomial x^d + c_(d-1) x^(d-1) + ... + c_0 from the element
// indices c_0..c_(d-1), d = 5 or 6.
GFPoly curve_poly(const GFCtx* K, const std::vector<uint64_t>& low_coeffs);

// Parsers for comma-separated command-line lists; InvalidInput on bad syntax.
std::vector<uint64_t> parse_indices(const std::string& s);
std::vector<uint32_t> parse_small(const std::string& s);
std::vector<Q> parse_rationals(const std::string& s);

json char3_report(const GFCtx* K, const std::vector<uint64_t>& f, int max_extension = kDefaultMaxExtension);
json iso_report(const GFCtx* K, const std::vector<uint64_t>& f, const std::vector<uint64_t>& g,
                int max_extension = kDefaultMaxExtension);

struct SweepOptions {
    uint64_t q = 3;
    int count = 50;
    uint64_t seed = 1;
    int threads = 1;
    int max_extension = kDefaultMaxExtension;
    bool timing = false;   // adds wall-clock statistics (breaks byte identity)
    bool details = false;  // adds one record per curve
};
json sweep_report(const SweepOptions& opt);

// Worker count: ISOG3_THREADS when set and positive, else the hardware count.
int thread_budget();

json complex_report(const std::vector<Q>& z, int digits, std::optional<int> stability_digits = {});

json verify_burkhardt(uint64_t seed = 7, int samples = 100);
json verify_hessian(uint64_t seed = 11, int points = 25, int digits = 100);
json verify_reflections();
json verify_salmon(uint64_t seed = 2024, int samples = 100, int homogeneity_samples = 50);

// {"status": "error", "error": {code, kind, message}}; kind is "degeneracy"
// or "invalid_input".
json error_report(const Error& e);
json error_report(ErrorCode code, const std::string& message);
// 2 for degeneracies, 3 otherwise.
int exit_code(ErrorCode code);

}  // namespace isog3::reports
