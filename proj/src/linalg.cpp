// SPDX-License-Identifier: Apache-2.0
#include "isog3/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace isog3 {

Real max_abs(const Mat<BC>& A) {
    Real m(0);
    for (const auto& row : A)
        for (const auto& x : row) {
            Real v = abs(x);
            if (v > m) m = v;
        }
    return m;
}

Real vec_norm(const Vec<BC>& v) {
    Real s(0);
    for (const auto& x : v) s += norm2(x);
    return sqrt(s);
}

Vec<BC> normalized(const Vec<BC>& v) {
    const Real n = vec_norm(v);
    Vec<BC> out;
    for (const auto& x : v) out.push_back(BC(x.re() / n, x.im() / n));
    return out;
}

SVDResult svd(const Mat<BC>& A, int n) {
    const int m = static_cast<int>(A.size());
    // Columns of U start as columns of A; V accumulates the rotations.
    std::vector<std::vector<BC>> U(n, std::vector<BC>(m, BC(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) U[j][i] = A[i][j];
    std::vector<std::vector<BC>> V(n, std::vector<BC>(n, BC(0)));
    for (int j = 0; j < n; ++j) V[j][j] = BC(1);

    const Real eps = pow10(-(working_digits() + 5));
    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Real alpha(0), beta(0);
                BC gamma(0);
                for (int i = 0; i < m; ++i) {
                    alpha += norm2(U[p][i]);
                    beta += norm2(U[q][i]);
                    gamma += conj(U[p][i]) * U[q][i];
                }
                const Real g = abs(gamma);
                if (g.is_zero() || g <= eps * sqrt(alpha * beta)) continue;
                rotated = true;
                const BC phase_inv = conj(BC(gamma.re() / g, gamma.im() / g));
                const Real zeta = (beta - alpha) / (Real(2) * g);
                Real t = Real(1) / (abs(zeta) + sqrt(Real(1) + zeta * zeta));
                if (zeta.sign() < 0) t = -t;
                const Real c = Real(1) / sqrt(Real(1) + t * t);
                const Real s = c * t;
                for (int i = 0; i < m; ++i) {
                    const BC up = U[p][i];
                    const BC uq = U[q][i] * phase_inv;
                    U[p][i] = scale(up, c) - scale(uq, s);
                    U[q][i] = scale(up, s) + scale(uq, c);
                }
                for (int i = 0; i < n; ++i) {
                    const BC vp = V[p][i];
                    const BC vq = V[q][i] * phase_inv;
                    V[p][i] = scale(vp, c) - scale(vq, s);
                    V[q][i] = scale(vp, s) + scale(vq, c);
                }
            }
        if (!rotated) break;
    }
    std::vector<Real> sig(n);
    for (int j = 0; j < n; ++j) {
        Real s(0);
        for (int i = 0; i < m; ++i) s += norm2(U[j][i]);
        sig[j] = sqrt(s);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] > sig[b]; });
    SVDResult out;
    out.V.assign(n, std::vector<BC>(n, BC(0)));
    for (int k = 0; k < n; ++k) {
        out.sigma.push_back(sig[order[k]]);
        for (int i = 0; i < n; ++i) out.V[i][k] = V[order[k]][i];
    }
    return out;
}

}  // namespace isog3
