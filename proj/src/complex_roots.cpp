// SPDX-License-Identifier: Apache-2.0
#include "isog3/complex_roots.hpp"

#include <algorithm>

namespace isog3 {

namespace {

void eval_with_derivative(const Poly<BC>& f, const BC& z, BC& v, BC& d) {
    const int n = f.degree();
    v = f[n];
    d = BC(0);
    for (int i = n - 1; i >= 0; --i) {
        d = d * z + v;
        v = v * z + f[i];
    }
}

}  // namespace

std::vector<BC> complex_roots(const Poly<BC>& f0) {
    if (f0.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero");
    const int n = f0.degree();
    if (n < 1) return {};
    const BC lc = f0.lc();
    std::vector<BC> c;
    for (int i = 0; i <= n; ++i) c.push_back(f0[i] / lc);
    const Poly<BC> f(c, BC(0));
    if (n == 1) return {-f[0]};

    // Cauchy bound for the starting circle.
    Real R(1L);
    for (int i = 0; i < n; ++i) {
        Real a = abs(f[i]);
        if (a + Real(1L) > R) R = a + Real(1L);
    }
    R = R / Real(2L);
    std::vector<BC> z;
    for (int k = 0; k < n; ++k) z.push_back(scale(root_of_unity(4 * k + 1, 4 * n), R));

    const Real eps = pow10(-(working_digits() - 3));
    const int max_iter = 60 + 12 * working_digits();
    bool done = false;
    for (int it = 0; it < max_iter && !done; ++it) {
        done = true;
        for (int k = 0; k < n; ++k) {
            BC v, d;
            eval_with_derivative(f, z[k], v, d);
            if (v.is_zero()) continue;
            const BC ratio = v / d;
            BC s(0);
            for (int j = 0; j < n; ++j)
                if (j != k) s += inverse(z[k] - z[j]);
            const BC w = ratio / (BC(1) - ratio * s);
            z[k] -= w;
            Real mag = abs(z[k]);
            if (mag < Real(1L)) mag = Real(1L);
            if (abs(w) > eps * mag) done = false;
        }
    }
    if (!done) throw Error(ErrorCode::RootIsolationFailure, "root iteration did not converge");
    for (auto& r : z) {
        BC v, d;
        eval_with_derivative(f, r, v, d);
        if (!d.is_zero()) r -= v / d;
    }
    // Separation: no two roots within the reached accuracy.
    const Real sep = pow10(-(working_digits() / 2));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Real mag = abs(z[i]);
            if (mag < Real(1L)) mag = Real(1L);
            if (abs(z[i] - z[j]) < sep * mag) throw Error(ErrorCode::RootIsolationFailure, "roots are not separated");
        }
    std::sort(z.begin(), z.end(), [](const BC& a, const BC& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    });
    return z;
}

Real relative_residual(const Poly<BC>& f, const std::vector<BC>& roots) {
    Real worst(0L);
    for (const auto& r : roots) {
        BC v(0);
        Real scale_sum(0L), rp(1L);
        const Real ar = abs(r);
        for (int i = 0; i <= f.degree(); ++i) {
            scale_sum += abs(f[i]) * rp;
            rp = rp * ar;
        }
        for (int i = f.degree(); i >= 0; --i) v = v * r + f[i];
        Real q = abs(v) / scale_sum;
        if (q > worst) worst = q;
    }
    return worst;
}

}  // namespace isog3
