// SPDX-License-Identifier: Apache-2.0
// The Coble system cutting out a Jacobian in P^8, the Burkhardt quartic, the
// kernel maps c- (Maschke space -> Burkhardt quartic) and c+ (Hessian ->
// Burkhardt quartic), the degree-40 invariant of the Maschke reflection group
// and its 40 reflection hyperplanes over Q(eta).
//
// The printed tables are kept verbatim; repairs live in a correction overlay.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isog3/bigcomplex.hpp"
#include "isog3/linalg.hpp"
#include "isog3/mpoly.hpp"
#include "isog3/numfield.hpp"
#include "isog3/projective.hpp"

namespace isog3 {

// Variables of P^8 and the parameter vector: y0..y4, z1..z4, alpha0..alpha4.
namespace coble {
inline constexpr int kVars = 14;
inline constexpr int y(int i) { return i; }
inline constexpr int z(int j) { return 4 + j; }
inline constexpr int a(int i) { return 9 + i; }
const std::vector<std::string>& names();
}  // namespace coble

using QPoly = MPoly<Q>;
using PolyMatrix = std::vector<std::vector<QPoly>>;

struct Correction {
    std::string table;
    int row = 0, col = 0;
    std::string printed, corrected, reason;
};

struct CobleSystem {
    PolyMatrix M;               // 5 x 5, entries in y and z
    std::vector<QPoly> twoeq;   // four quadrics, bilinear in alpha and (y, z)
    std::vector<Correction> overlay;

    // (M alpha)_0..4 followed by the four twoeq forms; quadric i pairs with
    // variable i of (y0..y4, z1..z4).
    std::vector<QPoly> quadrics() const;
};

CobleSystem printed_coble_system();
PolyMatrix printed_seceq();
PolyMatrix printed_hes();

struct IntegrabilityReport {
    bool integrable = false;
    // s with s_i Q_i = dC/dx_i for a cubic C, first entry 1; empty if none.
    std::vector<Q> scalings;
    // Pairs (i, j) whose own mixed-partial conditions admit no nonzero s_i, s_j.
    std::vector<std::pair<int, int>> failing_pairs;
};

IntegrabilityReport check_integrability(const CobleSystem& sys);
// diag(s_0..s_4) M(0, z) is skew-symmetric.
bool skew_after_scaling(const CobleSystem& sys, const std::vector<Q>& scalings);

struct CobleCubic {
    CobleSystem input, corrected;
    IntegrabilityReport input_report, corrected_report;
    QPoly cubic;                 // s_i Q_i = dC/dx_i
    long candidates_tried = 0;   // edit sets tested by the search
    int minimal_solutions = 0;   // edit sets of the minimal size that work
};

// Integrability check, then the repair search when it fails.  Edits are sign
// flips of one term or moving one subscript of one term within its block,
// restricted to the rows of failing pairs; the smallest edit set making the
// system a gradient with diag(s) M(0, z) skew wins.  Throws
// IntegrabilityFailure if no set of at most four edits works.
CobleCubic assemble_coble_cubic(const CobleSystem& sys);
// assemble_coble_cubic(printed_coble_system()), computed once.
const CobleCubic& corrected_coble();
// diag(s_0..s_4) of the corrected system.
const std::vector<Q>& coble_row_scaling();

// M(y, z) with the listed variables set to zero.
PolyMatrix restrict_y_zero(const PolyMatrix& M);
PolyMatrix restrict_z_zero(const PolyMatrix& M);
// Entries where two tables differ, as corrections from `printed` to `derived`.
std::vector<Correction> table_differences(const std::string& table, const PolyMatrix& printed, const PolyMatrix& derived,
                                          const std::string& reason);

// T0^4 + 8 T0 (T1^3 + T2^3 + T3^3 + T4^3) + 48 T1 T2 T3 T4 in the y variables.
const QPoly& burkhardt_poly();

template <class F>
F burkhardt_eval(const std::vector<F>& t) {
    if (t.size() != 5) throw Error(ErrorCode::InvalidInput, "expected five coordinates");
    const F eight = from_int_like(t[0], 8);
    F cubes = zero_like(t[0]);
    for (int i = 1; i <= 4; ++i) cubes += t[i] * t[i] * t[i];
    return t[0] * t[0] * t[0] * t[0] + eight * t[0] * cubes + from_int_like(t[0], 48) * t[1] * t[2] * t[3] * t[4];
}

struct HessianReport {
    Q scalar;                                         // Hess(B) = scalar diag(1,2,2,2,2) hes
    std::vector<std::pair<int, int>> printed_mismatches;
    PolyMatrix corrected_hes;
    bool corrected_matches = false;
    bool matches_feq_restriction = false;             // corrected hes = M(y, 0) of the corrected system
    std::vector<Correction> overlay;
};
HessianReport hessian_identity_check();

struct MbReport {
    std::vector<QPoly> pfaffian;      // kernel of M(0, z) by Pfaffians, scaled so alpha0 = 6 z1 z2 z3 z4
    std::vector<QPoly> printed;
    std::vector<bool> agrees;         // coordinate-wise, after the common scaling
    std::vector<Q> counterexample_alpha;  // printed formulas at (1, 1, 1, 2)
    Q counterexample_value;               // Burkhardt quartic there
    std::vector<Correction> overlay;
};
MbReport mb_check();
std::vector<QPoly> mb_printed_polys();

// Coefficient conversion from Q.
inline Q lift_rational(const Q& q, const Q&) { return q; }
inline NF lift_rational(const Q& q, const NF& like) { return nf_rational(like.ctx(), q); }
inline BC lift_rational(const Q& q, const BC&) { return BC(q); }

template <class F>
Mat<F> eval_matrix(const PolyMatrix& M, const std::vector<F>& vars) {
    Mat<F> out;
    const F& like = vars[0];
    for (const auto& row : M) {
        Vec<F> r;
        for (const auto& e : row) r.push_back(e.eval(vars, [&](const Q& c) { return lift_rational(c, like); }));
        out.push_back(std::move(r));
    }
    return out;
}

// The 14 coble variables with y = 0, z = zs, alpha = 0.
template <class F>
std::vector<F> maschke_vars(const std::vector<F>& zs) {
    if (zs.size() != 4) throw Error(ErrorCode::InvalidInput, "expected four Maschke coordinates");
    std::vector<F> v(coble::kVars, zero_like(zs[0]));
    for (int j = 1; j <= 4; ++j) v[coble::z(j)] = zs[j - 1];
    return v;
}

namespace detail {

template <class F>
F pfaffian4(const Mat<F>& A, const std::array<int, 4>& idx) {
    auto e = [&](int i, int j) { return A[idx[i]][idx[j]]; };
    return e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
}

// Corank-1 decision for a 5 x 5 matrix: exact rank, or singular-value gaps.
template <class F>
int numeric_rank(const Mat<F>& A) {
    if constexpr (is_exact_v<F>) {
        return rank(A, static_cast<int>(A[0].size()));
    } else {
        SVDResult s = svd(A, static_cast<int>(A[0].size()));
        if (s.sigma.empty() || s.sigma[0].is_zero()) return 0;
        const Real thr = zero_threshold();
        int r = 0;
        for (const auto& x : s.sigma)
            if (x / s.sigma[0] > thr) ++r;
        return r;
    }
}

}  // namespace detail

// diag(s) M(0, z), skew-symmetric for the corrected system.
template <class F>
Mat<F> maschke_skew_matrix(const std::vector<F>& zs) {
    const auto& sys = corrected_coble().corrected;
    Mat<F> A = eval_matrix(sys.M, maschke_vars(zs));
    const auto& s = coble_row_scaling();
    for (int i = 0; i < 5; ++i)
        for (auto& x : A[i]) x = lift_rational(s[i], zs[0]) * x;
    return A;
}

// Pfaffians of the principal 4 x 4 minors: v_i = (-1)^i Pf(A without i).
template <class F>
Vec<F> cminus_pfaffians(const std::vector<F>& zs) {
    const Mat<F> A = maschke_skew_matrix(zs);
    Vec<F> v;
    for (int i = 0; i < 5; ++i) {
        std::array<int, 4> idx{};
        int k = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i) idx[k++] = j;
        F p = detail::pfaffian4(A, idx);
        v.push_back(i % 2 == 0 ? p : -p);
    }
    return v;
}

// c-(z): the kernel of M(0, z), first nonzero coordinate 1 (exact) or largest
// coordinate 1 (complex).  KernelDegenerate unless the kernel is a line.
template <class F>
Vec<F> cminus(const std::vector<F>& zs) {
    const Mat<F> A = maschke_skew_matrix(zs);
    if (detail::numeric_rank(A) != 4) throw Error(ErrorCode::KernelDegenerate, "M(0, z) does not have corank 1");
    Vec<F> v = cminus_pfaffians(zs);
    if (detail::vec_negligible(v)) throw Error(ErrorCode::KernelDegenerate, "Pfaffian vector vanishes");
    return normalize_point(v);
}

// The symmetrized (hes) matrix diag(1,2,2,2,2) hes(y) = Hess(B)(y) / 12.
template <class F>
Mat<F> hessian_matrix(const std::vector<F>& ys) {
    if (ys.size() != 5) throw Error(ErrorCode::InvalidInput, "expected five coordinates");
    std::vector<F> vars(coble::kVars, zero_like(ys[0]));
    for (int i = 0; i < 5; ++i) vars[coble::y(i)] = ys[i];
    Mat<F> H = eval_matrix(hessian_identity_check().corrected_hes, vars);
    const auto& s = coble_row_scaling();
    for (int i = 0; i < 5; ++i)
        for (auto& x : H[i]) x = lift_rational(s[i], ys[0]) * x;
    return H;
}

// c+(y): cofactors of the first column with a nonzero cofactor vector.  All
// columns are checked to give proportional vectors.  KernelDegenerate unless
// the matrix has corank 1.
template <class F>
Vec<F> cplus(const std::vector<F>& ys) {
    const Mat<F> H = hessian_matrix(ys);
    if (detail::numeric_rank(H) != 4) throw Error(ErrorCode::KernelDegenerate, "Hessian matrix does not have corank 1");
    Mat<F> cols;
    for (int c = 0; c < 5; ++c) {
        Vec<F> v;
        for (int i = 0; i < 5; ++i) {
            Mat<F> m;
            for (int r = 0; r < 5; ++r) {
                if (r == i) continue;
                Vec<F> row;
                for (int k = 0; k < 5; ++k)
                    if (k != c) row.push_back(H[r][k]);
                m.push_back(row);
            }
            F d = determinant(m);
            v.push_back((i + c) % 2 == 0 ? d : -d);
        }
        cols.push_back(v);
    }
    int first = -1;
    Mat<F> nonzero;
    for (int c = 0; c < 5; ++c)
        if (!detail::vec_negligible(cols[c])) {
            if (first < 0) first = c;
            nonzero.push_back(normalize_point(cols[c]));
        }
    if (first < 0) throw Error(ErrorCode::KernelDegenerate, "all cofactors vanish");
    if (detail::numeric_rank(nonzero) != 1) throw Error(ErrorCode::KernelDegenerate, "cofactor columns disagree");
    return normalize_point(cols[first]);
}

// Points of Hess(B) from random rational lines: det along the line is
// interpolated exactly over Q and its roots are taken at the working precision.
std::vector<Vec<BC>> sample_hessian_points(int count, uint64_t seed);

// Phi40 = z1 z2 z3 z4 A B C D.  The printed B repeats z3 where z4 belongs;
// phi40 uses the corrected factor.
template <class F>
struct Phi40Values {
    F value;
    std::array<F, 8> factors;  // z1, z2, z3, z4, A, B, C, D
};

template <class F>
F phi40_A(const F& z2, const F& z3, const F& z4) {
    const F a = z2 * z2 * z2, b = z3 * z3 * z3, c = z4 * z4 * z4, s = a + b + c;
    return s * s * s - from_int_like(z2, 27) * a * b * c;
}

// (u^3 - v^3 + w^3)^3 + 27 u^3 v^3 w^3
template <class F>
F phi40_signed(const F& u, const F& v, const F& w) {
    const F a = u * u * u, b = v * v * v, c = w * w * w, s = a - b + c;
    return s * s * s + from_int_like(u, 27) * a * b * c;
}

template <class F>
Phi40Values<F> phi40(const std::vector<F>& z) {
    if (z.size() != 4) throw Error(ErrorCode::InvalidInput, "expected four Maschke coordinates");
    Phi40Values<F> r;
    r.factors[0] = z[0];
    r.factors[1] = z[1];
    r.factors[2] = z[2];
    r.factors[3] = z[3];
    r.factors[4] = phi40_A(z[1], z[2], z[3]);
    r.factors[5] = phi40_signed(z[0], z[1], z[3]);
    r.factors[6] = phi40_signed(z[0], z[2], z[1]);  // (z1^3 + z2^3 - z3^3)^3 + 27 z1^3 z2^3 z3^3
    r.factors[7] = phi40_signed(z[0], z[3], z[2]);  // (z1^3 + z3^3 - z4^3)^3 + 27 z1^3 z3^3 z4^3
    r.value = r.factors[0];
    for (int i = 1; i < 8; ++i) r.value = r.value * r.factors[i];
    return r;
}

template <class F>
F phi40_B_printed(const std::vector<F>& z) {
    return phi40_signed(z[0], z[1], z[2]);
}

// Four-variable polynomial versions over Q.
QPoly phi40_poly(bool printed_B = false);
QPoly phi40_factor_poly(int index, bool printed_B = false);  // index as in Phi40Values::factors

// Reflection hyperplanes of the Maschke group as Hermitian forms over Q(eta).
enum class PermutationRule { Cyclic, All, Identity };

struct ReflectionArrangement {
    std::vector<std::array<NF, 4>> normals;  // reflection vectors, first nonzero coordinate 1
    std::vector<std::array<NF, 4>> forms;    // conjugated normals: form(z) = sum conj(r_i) z_i
};

NF conj_eta(const NF& a);
ReflectionArrangement reflection_arrangement(PermutationRule rule = PermutationRule::Cyclic);
// Whether every order-3 reflection maps the set of normals to itself.
bool arrangement_closed(const ReflectionArrangement& arr);
MPoly<NF> arrangement_product(const ReflectionArrangement& arr);
// prod over b, c of (z2 + eta^b z3 + eta^c z4).
MPoly<NF> nonic_product();
// c with p = c q, if one exists.
std::optional<NF> proportionality(const MPoly<NF>& p, const MPoly<NF>& q);

// The Schroedinger action on the nine coordinates eta_sigma, sigma in (Z/3)^2
// stored at index 3 s1 + s2: eta_sigma -> omega^(b . (sigma + a)) eta_(sigma + a),
// times the central scalar omega^c.
template <class F>
std::vector<F> heisenberg_translate(const std::array<int, 2>& a, const std::array<int, 2>& b, int c,
                                    const std::vector<F>& eta, const F& omega) {
    if (eta.size() != 9) throw Error(ErrorCode::InvalidInput, "expected nine coordinates");
    std::vector<F> pw = {one_like(omega), omega, omega * omega};
    auto md = [](int v) { return ((v % 3) + 3) % 3; };
    std::vector<F> out(9, zero_like(omega));
    for (int s1 = 0; s1 < 3; ++s1)
        for (int s2 = 0; s2 < 3; ++s2) {
            const int t1 = md(s1 + a[0]), t2 = md(s2 + a[1]);
            out[3 * s1 + s2] = pw[md(b[0] * t1 + b[1] * t2 + c)] * eta[3 * t1 + t2];
        }
    return out;
}

// (y0..y4, z1..z4) <-> eta_sigma with y0 = eta_00, 2 y1 = eta_01 + eta_02,
// 2 z1 = eta_01 - eta_02 and likewise for (10, 20), (11, 22), (12, 21).
inline const std::array<std::array<int, 2>, 4>& eta_pairs() {
    static const std::array<std::array<int, 2>, 4> p = {{{1, 2}, {3, 6}, {4, 8}, {5, 7}}};
    return p;
}

template <class F>
std::vector<F> eta_to_yz(const std::vector<F>& eta) {
    const F half = one_like(eta[0]) / from_int_like(eta[0], 2);
    std::vector<F> v(9, zero_like(eta[0]));
    v[0] = eta[0];
    for (int k = 0; k < 4; ++k) {
        const auto& [p, m] = eta_pairs()[k];
        v[1 + k] = half * (eta[p] + eta[m]);
        v[5 + k] = half * (eta[p] - eta[m]);
    }
    return v;
}

template <class F>
std::vector<F> yz_to_eta(const std::vector<F>& v) {
    std::vector<F> eta(9, zero_like(v[0]));
    eta[0] = v[0];
    for (int k = 0; k < 4; ++k) {
        const auto& [p, m] = eta_pairs()[k];
        eta[p] = v[1 + k] + v[5 + k];
        eta[m] = v[1 + k] - v[5 + k];
    }
    return eta;
}

// The negation involution: y -> y, z -> -z.
template <class F>
std::vector<F> involution(std::vector<F> v) {
    for (int k = 5; k < 9; ++k) v[k] = -v[k];
    return v;
}

}  // namespace isog3
