// SPDX-License-Identifier: Apache-2.0
// All complex roots of a univariate polynomial at the working precision.
#pragma once

#include <vector>

#include "isog3/bigcomplex.hpp"
#include "isog3/poly.hpp"

namespace isog3 {

// Aberth iteration followed by a Newton step per root.  Roots are sorted by
// real part, then imaginary part.  Throws RootIsolationFailure when the
// iteration does not settle or two roots are not separated.
std::vector<BC> complex_roots(const Poly<BC>& f);

// max |f(r)| / (sum |f_i| |r|^i) over the given roots.
Real relative_residual(const Poly<BC>& f, const std::vector<BC>& roots);

}  // namespace isog3
