// SPDX-License-Identifier: Apache-2.0
// Dense linear algebra.  Exact fields use Gaussian elimination; BC uses a
// one-sided Jacobi SVD with the relative threshold 10^(-P/2).
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "isog3/field.hpp"

namespace isog3 {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

struct SVDResult {
    std::vector<Real> sigma;  // descending
    Mat<BC> V;                // n x n, column j pairs with sigma[j]
};

SVDResult svd(const Mat<BC>& A, int ncols);
Real max_abs(const Mat<BC>& A);
Real vec_norm(const Vec<BC>& v);
Vec<BC> normalized(const Vec<BC>& v);

template <class F>
struct RREF {
    Mat<F> rows;              // nonzero rows only
    std::vector<int> pivots;  // pivot column of each row
};

namespace detail {

template <class F>
bool negligible(const F& x, const Real*) {
    return is_zero(x);
}

inline bool negligible(const BC& x, const Real* tol) { return abs(x) <= *tol; }

template <class F>
int pick_pivot(const Mat<F>& a, int r0, int col, const Real* tol) {
    if constexpr (is_exact_v<F>) {
        for (int r = r0; r < static_cast<int>(a.size()); ++r)
            if (!is_zero(a[r][col])) return r;
        return -1;
    } else {
        int best = -1;
        Real bv(0);
        for (int r = r0; r < static_cast<int>(a.size()); ++r) {
            Real v = abs(a[r][col]);
            if (v > bv) {
                bv = v;
                best = r;
            }
        }
        if (best < 0 || bv <= *tol) return -1;
        return best;
    }
}

}  // namespace detail

template <class F>
RREF<F> rref(Mat<F> a, int ncols) {
    RREF<F> out;
    if (a.empty()) return out;
    std::optional<Real> tol;
    if constexpr (!is_exact_v<F>) tol = max_abs(a) * zero_threshold();
    const Real* tp = tol ? &*tol : nullptr;
    int r = 0;
    const int m = static_cast<int>(a.size());
    for (int col = 0; col < ncols && r < m; ++col) {
        int piv = detail::pick_pivot(a, r, col, tp);
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        const F inv = inverse(a[r][col]);
        for (int c = 0; c < ncols; ++c) a[r][c] = a[r][c] * inv;
        for (int rr = 0; rr < m; ++rr) {
            if (rr == r || is_zero(a[rr][col])) continue;
            const F f = a[rr][col];
            for (int c = 0; c < ncols; ++c) a[rr][c] -= f * a[r][c];
        }
        if constexpr (!is_exact_v<F>) a[r][col] = one_like(a[r][col]);
        out.pivots.push_back(col);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

template <class F>
int rank(const Mat<F>& a, int ncols) {
    if (a.empty()) return 0;
    if constexpr (is_exact_v<F>) {
        return static_cast<int>(rref(a, ncols).pivots.size());
    } else {
        SVDResult s = svd(a, ncols);
        if (s.sigma.empty() || s.sigma[0].is_zero()) return 0;
        const Real cut = s.sigma[0] * zero_threshold();
        int k = 0;
        for (const auto& v : s.sigma)
            if (v > cut) ++k;
        return k;
    }
}

// Basis (as vectors) of {x : a x = 0}.
template <class F>
Mat<F> nullspace(const Mat<F>& a, int ncols, const F& like) {
    Mat<F> out;
    if constexpr (is_exact_v<F>) {
        RREF<F> r = rref(a, ncols);
        std::vector<bool> is_piv(ncols, false);
        for (int p : r.pivots) is_piv[p] = true;
        for (int free = 0; free < ncols; ++free) {
            if (is_piv[free]) continue;
            Vec<F> v(ncols, zero_like(like));
            v[free] = one_like(like);
            for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
            out.push_back(std::move(v));
        }
    } else {
        if (a.empty()) {
            for (int j = 0; j < ncols; ++j) {
                Vec<F> v(ncols, BC(0));
                v[j] = BC(1);
                out.push_back(std::move(v));
            }
            return out;
        }
        SVDResult s = svd(a, ncols);
        const Real cut = s.sigma.empty() || s.sigma[0].is_zero() ? Real(0) : s.sigma[0] * zero_threshold();
        for (int j = 0; j < ncols; ++j) {
            if (!s.sigma[j].is_zero() && s.sigma[j] > cut) continue;
            Vec<F> v(ncols, BC(0));
            for (int i = 0; i < ncols; ++i) v[i] = s.V[i][j];
            out.push_back(std::move(v));
        }
    }
    return out;
}

template <class F>
F determinant(const Mat<F>& a) {
    const int n = static_cast<int>(a.size());
    Mat<F> m = a;
    F d = one_like(a[0][0]);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        if constexpr (is_exact_v<F>) {
            for (int r = col; r < n; ++r)
                if (!is_zero(m[r][col])) {
                    piv = r;
                    break;
                }
        } else {
            Real bv(0);
            for (int r = col; r < n; ++r) {
                Real v = abs(m[r][col]);
                if (v > bv) {
                    bv = v;
                    piv = r;
                }
            }
            if (bv.is_zero()) piv = -1;
        }
        if (piv < 0) return zero_like(d);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d = d * m[col][col];
        const F inv = inverse(m[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (is_zero(m[r][col])) continue;
            const F f = m[r][col] * inv;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

template <class F>
Vec<F> matvec(const Mat<F>& a, const Vec<F>& x) {
    Vec<F> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        F s = zero_like(x[0]);
        for (size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
        out.push_back(s);
    }
    return out;
}

template <class F>
Mat<F> transpose(const Mat<F>& a, int ncols) {
    Mat<F> t(ncols);
    for (const auto& row : a)
        for (int j = 0; j < ncols; ++j) t[j].push_back(row[j]);
    return t;
}

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
    F s = zero_like(a[0]);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Coordinates c with sum c_i basis_i = v, if v lies in the span.
template <class F>
std::optional<Vec<F>> coordinates_in(const Mat<F>& basis, const Vec<F>& v) {
    const int k = static_cast<int>(basis.size());
    const int n = static_cast<int>(v.size());
    Mat<F> sys(n, Vec<F>(k + 1, zero_like(v[0])));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) sys[i][j] = basis[j][i];
        sys[i][k] = v[i];
    }
    RREF<F> r = rref(sys, k + 1);
    Vec<F> c(k, zero_like(v[0]));
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == k) return std::nullopt;
        c[r.pivots[i]] = r.rows[i][k];
    }
    return c;
}

}  // namespace isog3
