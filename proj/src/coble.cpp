// SPDX-License-Identifier: Apache-2.0
#include "isog3/coble.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "isog3/complex_roots.hpp"

namespace isog3 {

namespace {

using coble::kVars;

QPoly Y(int i) { return QPoly::var(kVars, coble::y(i), Q(0)); }
QPoly Z(int j) { return QPoly::var(kVars, coble::z(j), Q(0)); }
QPoly A(int i) { return QPoly::var(kVars, coble::a(i), Q(0)); }
QPoly K(long c) { return QPoly::constant(kVars, Q(c)); }
QPoly zero_poly() { return QPoly(kVars, Q(0)); }

// Variable of quadric i: y0..y4, z1..z4.
int quadric_var(int i) { return i < 5 ? coble::y(i) : coble::z(i - 4); }

std::string entry_string(const QPoly& p) { return p.to_string(coble::names()); }

QPoly pi(int i, int j) { return A(i) * Y(j) - A(j) * Y(i); }

}  // namespace

const std::vector<std::string>& coble::names() {
    static const std::vector<std::string> n = {"y0", "y1", "y2", "y3", "y4", "z1", "z2", "z3",
                                               "z4", "a0", "a1", "a2", "a3", "a4"};
    return n;
}

std::vector<QPoly> CobleSystem::quadrics() const {
    std::vector<QPoly> q;
    for (int i = 0; i < 5; ++i) {
        QPoly s = zero_poly();
        for (int k = 0; k < 5; ++k) s += M[i][k] * A(k);
        q.push_back(s);
    }
    for (const auto& t : twoeq) q.push_back(t);
    return q;
}

CobleSystem printed_coble_system() {
    auto sq = [](const QPoly& a) { return a * a; };
    CobleSystem s;
    s.M = {
        {sq(Y(0)), K(2) * (sq(Y(1)) - sq(Z(1))), K(2) * (sq(Y(2)) - sq(Z(2))), K(2) * (sq(Y(3)) - sq(Z(3))),
         K(2) * (sq(Y(4)) - sq(Z(4)))},
        {sq(Y(1)) + sq(Z(1)), K(2) * Y(0) * Y(1), K(2) * (Y(3) * Y(4) - Z(3) * Z(4)), K(2) * (Y(2) * Y(4) - Z(2) * Z(4)),
         K(2) * (Y(2) * Y(3) - Z(2) * Z(4))},
        {sq(Y(2)) + sq(Z(2)), K(2) * (Y(3) * Y(4) - Z(3) * Z(4)), K(2) * Y(0) * Y(2), K(2) * (Y(1) * Y(4) + Z(1) * Z(4)),
         K(2) * (Y(1) * Y(3) - Z(1) * Z(3))},
        {sq(Y(3)) + sq(Z(3)), K(2) * (Y(2) * Y(4) + Z(2) * Z(4)), K(2) * (Y(1) * Y(4) - Z(1) * Z(4)), K(2) * Y(0) * Y(1),
         K(2) * (Y(1) * Y(2) + Z(1) * Z(2))},
        {sq(Y(4)) + sq(Z(4)), K(2) * (Y(2) * Y(3) + Z(2) * Z(3)), K(2) * (Y(1) * Y(3) + Z(1) * Z(3)),
         K(2) * (Y(1) * Y(2) - Z(1) * Z(2)), K(2) * Y(0) * Y(4)},
    };
    s.twoeq = {
        Z(1) * pi(0, 1) + Z(2) * pi(4, 3) + Z(3) * pi(2, 4) + Z(4) * pi(3, 2),
        Z(1) * pi(4, 3) + Z(2) * pi(0, 2) + Z(3) * pi(1, 4) + Z(4) * pi(1, 3),
        Z(1) * pi(2, 4) + Z(2) * pi(1, 4) + Z(3) * pi(0, 3) + Z(4) * pi(1, 2),
        Z(1) * pi(3, 2) + Z(2) * pi(1, 3) + Z(3) * pi(1, 2) + Z(4) * pi(0, 4),
    };
    return s;
}

PolyMatrix printed_seceq() {
    auto sq = [](const QPoly& a) { return a * a; };
    const QPoly o = zero_poly();
    return {
        {o, K(-2) * sq(Z(1)), K(-2) * sq(Z(2)), K(-2) * sq(Z(3)), K(-2) * sq(Z(4))},
        {sq(Z(1)), o, K(-2) * Z(3) * Z(4), K(-2) * Z(2) * Z(4), K(-2) * Z(2) * Z(4)},
        {sq(Z(2)), K(-2) * Z(3) * Z(4), o, K(2) * Z(1) * Z(4), K(-2) * Z(1) * Z(3)},
        {sq(Z(3)), K(2) * Z(2) * Z(4), K(-2) * Z(1) * Z(4), o, K(2) * Z(1) * Z(2)},
        {sq(Z(4)), K(2) * Z(2) * Z(3), K(2) * Z(1) * Z(3), K(-2) * Z(1) * Z(2), o},
    };
}

PolyMatrix printed_hes() {
    auto sq = [](const QPoly& a) { return a * a; };
    return {
        {sq(Y(0)), K(2) * sq(Y(1)), K(2) * sq(Y(2)), K(2) * sq(Y(3)), K(2) * sq(Y(4))},
        {sq(Y(1)), K(2) * Y(0) * Y(1), K(2) * Y(3) * Y(4), K(2) * Y(2) * Y(4), K(2) * Y(2) * Y(3)},
        {sq(Y(2)), K(2) * Y(3) * Y(4), K(2) * Y(0) * Y(2), K(2) * Y(1) * Y(4), K(2) * Y(1) * Y(3)},
        {sq(Y(3)), K(2) * Y(2) * Y(4), K(2) * Y(1) * Y(4), K(2) * Y(0) * Y(1), K(2) * Y(1) * Y(2)},
        {sq(Y(4)), K(2) * Y(2) * Y(3), K(2) * Y(1) * Y(3), K(2) * Y(1) * Y(2), K(2) * Y(0) * Y(4)},
    };
}

namespace {

// Rows a s_i - b s_j = 0 from the mixed partials of quadrics i and j.
void pair_equations(const std::vector<QPoly>& q, int i, int j, Mat<Q>& rows, int width, int ci, int cj) {
    const QPoly P = q[i].diff(quadric_var(j));
    const QPoly R = q[j].diff(quadric_var(i));
    std::set<QPoly::Mono> monos;
    for (const auto& [m, c] : P.terms()) monos.insert(m);
    for (const auto& [m, c] : R.terms()) monos.insert(m);
    for (const auto& m : monos) {
        Vec<Q> row(width, Q(0));
        row[ci] = P.coeff(m);
        row[cj] = -R.coeff(m);
        rows.push_back(std::move(row));
    }
}

bool pair_fails(const std::vector<QPoly>& q, int i, int j) {
    Mat<Q> rows;
    pair_equations(q, i, j, rows, 2, 0, 1);
    if (rows.empty()) return false;
    Mat<Q> ker = nullspace(rows, 2, Q(0));
    if (ker.empty()) return true;
    if (ker.size() == 2) return false;
    return is_zero(ker[0][0]) || is_zero(ker[0][1]);
}

std::vector<std::pair<int, int>> failing_pairs_of(const std::vector<QPoly>& q) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            if (pair_fails(q, i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace

IntegrabilityReport check_integrability(const CobleSystem& sys) {
    const auto q = sys.quadrics();
    IntegrabilityReport r;
    r.failing_pairs = failing_pairs_of(q);
    Mat<Q> rows;
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) pair_equations(q, i, j, rows, 9, i, j);
    Mat<Q> ker = nullspace(rows, 9, Q(0));
    if (ker.empty()) return r;
    // A kernel vector with no zero entry, from a few fixed combinations.
    for (long t = 1; t <= 8; ++t) {
        Vec<Q> v(9, Q(0));
        Q c(1);
        for (const auto& b : ker) {
            for (int i = 0; i < 9; ++i) v[i] += c * b[i];
            c = c * Q(t + 1);
        }
        bool all = true;
        for (const auto& x : v) all = all && !is_zero(x);
        if (!all) continue;
        const Q s0 = v[0];
        for (auto& x : v) x = x / s0;
        r.integrable = true;
        r.scalings = v;
        return r;
    }
    return r;
}

bool skew_after_scaling(const CobleSystem& sys, const std::vector<Q>& s) {
    if (s.size() < 5) return false;
    const PolyMatrix M0 = restrict_y_zero(sys.M);
    for (int i = 0; i < 5; ++i)
        for (int k = i; k < 5; ++k)
            if (!(s[i] * M0[i][k] + s[k] * M0[k][i]).is_zero()) return false;
    return true;
}

PolyMatrix restrict_y_zero(const PolyMatrix& M) {
    std::vector<QPoly> images;
    for (int v = 0; v < kVars; ++v) images.push_back(v <= coble::y(4) ? zero_poly() : QPoly::var(kVars, v, Q(0)));
    PolyMatrix out = M;
    for (auto& row : out)
        for (auto& e : row) e = e.substitute(images);
    return out;
}

PolyMatrix restrict_z_zero(const PolyMatrix& M) {
    std::vector<QPoly> images;
    for (int v = 0; v < kVars; ++v)
        images.push_back(v >= coble::z(1) && v <= coble::z(4) ? zero_poly() : QPoly::var(kVars, v, Q(0)));
    PolyMatrix out = M;
    for (auto& row : out)
        for (auto& e : row) e = e.substitute(images);
    return out;
}

std::vector<Correction> table_differences(const std::string& table, const PolyMatrix& printed, const PolyMatrix& derived,
                                          const std::string& reason) {
    std::vector<Correction> out;
    for (size_t i = 0; i < printed.size(); ++i)
        for (size_t k = 0; k < printed[i].size(); ++k)
            if (printed[i][k] != derived[i][k])
                out.push_back({table, static_cast<int>(i), static_cast<int>(k), entry_string(printed[i][k]),
                               entry_string(derived[i][k]), reason});
    return out;
}

namespace {

struct Edit {
    int row, col;
    QPoly entry;
};

std::vector<Edit> candidate_edits(const PolyMatrix& M, const std::set<int>& rows) {
    std::vector<Edit> out;
    for (int r : rows) {
        if (r >= 5) continue;
        for (int c = 0; c < 5; ++c) {
            const QPoly& e = M[r][c];
            for (const auto& [m, coef] : e.terms()) {
                QPoly flipped = e - QPoly::monomial(m, Q(2) * coef);
                out.push_back({r, c, flipped});
                for (int v = 0; v < kVars; ++v) {
                    if (m[v] == 0) continue;
                    const bool yblock = v <= coble::y(4);
                    const int lo = yblock ? coble::y(0) : coble::z(1), hi = yblock ? coble::y(4) : coble::z(4);
                    for (int w = lo; w <= hi; ++w) {
                        if (w == v) continue;
                        QPoly::Mono m2 = m;
                        --m2[v];
                        ++m2[w];
                        out.push_back({r, c, e - QPoly::monomial(m, coef) + QPoly::monomial(m2, coef)});
                    }
                }
            }
        }
    }
    return out;
}

CobleSystem apply_edits(const CobleSystem& base, const std::vector<const Edit*>& edits) {
    CobleSystem s = base;
    for (const Edit* e : edits) s.M[e->row][e->col] = e->entry;
    return s;
}

bool accepted(const CobleSystem& s) {
    const auto rep = check_integrability(s);
    return rep.integrable && skew_after_scaling(s, rep.scalings);
}

QPoly euler_cubic(const CobleSystem& s, const std::vector<Q>& scalings) {
    const auto q = s.quadrics();
    QPoly c = zero_poly();
    for (int i = 0; i < 9; ++i) c += (scalings[i] / Q(3)) * (QPoly::var(kVars, quadric_var(i), Q(0)) * q[i]);
    return c;
}

}  // namespace

CobleCubic assemble_coble_cubic(const CobleSystem& sys) {
    CobleCubic out;
    out.input = sys;
    out.input_report = check_integrability(sys);
    if (out.input_report.integrable && skew_after_scaling(sys, out.input_report.scalings)) {
        out.corrected = sys;
        out.corrected_report = out.input_report;
        out.cubic = euler_cubic(sys, out.corrected_report.scalings);
        out.minimal_solutions = 1;
        return out;
    }
    std::set<int> rows;
    for (const auto& [i, j] : out.input_report.failing_pairs) {
        rows.insert(i);
        rows.insert(j);
    }
    const auto cands = candidate_edits(sys.M, rows);
    // Keep the edits that reduce the number of failing pairs on their own.
    const size_t base = out.input_report.failing_pairs.size();
    std::vector<std::pair<size_t, const Edit*>> improving;
    for (const auto& e : cands) {
        const auto q = apply_edits(sys, {&e}).quadrics();
        const size_t n = failing_pairs_of(q).size();
        ++out.candidates_tried;
        if (n < base) improving.emplace_back(n, &e);
    }
    std::stable_sort(improving.begin(), improving.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const int m = static_cast<int>(improving.size());
    std::vector<const Edit*> best;
    for (int size = 1; size <= 4 && best.empty(); ++size) {
        std::vector<int> idx(size);
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == size) {
                std::vector<const Edit*> set;
                std::set<std::pair<int, int>> cells;
                for (int i : idx) {
                    set.push_back(improving[i].second);
                    if (!cells.insert({improving[i].second->row, improving[i].second->col}).second) return;
                }
                ++out.candidates_tried;
                if (accepted(apply_edits(sys, set))) {
                    ++out.minimal_solutions;
                    if (best.empty()) best = set;
                }
                return;
            }
            for (int i = start; i < m; ++i) {
                idx[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
    }
    if (best.empty()) {
        std::string msg = "no repair of at most four edits; failing pairs:";
        for (const auto& [i, j] : out.input_report.failing_pairs)
            msg += " (" + coble::names()[quadric_var(i)] + "," + coble::names()[quadric_var(j)] + ")";
        throw Error(ErrorCode::IntegrabilityFailure, msg);
    }
    out.corrected = apply_edits(sys, best);
    for (const Edit* e : best)
        out.corrected.overlay.push_back({"feq", e->row, e->col, entry_string(sys.M[e->row][e->col]), entry_string(e->entry),
                                         "gradient integrability and skew symmetry of M(0,z)"});
    out.corrected_report = check_integrability(out.corrected);
    out.cubic = euler_cubic(out.corrected, out.corrected_report.scalings);
    return out;
}

const CobleCubic& corrected_coble() {
    static const CobleCubic c = assemble_coble_cubic(printed_coble_system());
    return c;
}

const std::vector<Q>& coble_row_scaling() {
    static const std::vector<Q> s = [] {
        const auto& sc = corrected_coble().corrected_report.scalings;
        return std::vector<Q>(sc.begin(), sc.begin() + 5);
    }();
    return s;
}

const QPoly& burkhardt_poly() {
    static const QPoly B = [] {
        const QPoly t0 = Y(0);
        QPoly cubes = zero_poly();
        for (int i = 1; i <= 4; ++i) cubes += Y(i) * Y(i) * Y(i);
        return t0 * t0 * t0 * t0 + K(8) * t0 * cubes + K(48) * Y(1) * Y(2) * Y(3) * Y(4);
    }();
    return B;
}

HessianReport hessian_identity_check() {
    static const HessianReport rep = [] {
        HessianReport r;
        const QPoly& B = burkhardt_poly();
        PolyMatrix H(5, std::vector<QPoly>(5));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) H[i][j] = B.diff(coble::y(i)).diff(coble::y(j));
        const PolyMatrix hes = printed_hes();
        const auto& s = coble_row_scaling();
        // Global scalar from the (0, 0) entry.
        const auto& [m0, h0] = *H[0][0].terms().begin();
        r.scalar = h0 / (s[0] * hes[0][0].coeff(m0));
        r.corrected_hes = hes;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const QPoly want = (Q(1) / (r.scalar * s[i])) * H[i][j];
                if (want != hes[i][j]) {
                    r.printed_mismatches.emplace_back(i, j);
                    r.corrected_hes[i][j] = want;
                }
            }
        r.overlay = table_differences("hes", hes, r.corrected_hes, "second partials of the Burkhardt quartic");
        r.corrected_matches = true;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if ((r.scalar * s[i]) * r.corrected_hes[i][j] != H[i][j]) r.corrected_matches = false;
        r.matches_feq_restriction = restrict_z_zero(corrected_coble().corrected.M) == r.corrected_hes;
        return r;
    }();
    return rep;
}

std::vector<QPoly> mb_printed_polys() {
    auto cube = [](const QPoly& a) { return a * a * a; };
    return {
        K(6) * Z(1) * Z(2) * Z(3) * Z(4),
        Z(1) * (cube(Z(2)) + cube(Z(3)) - cube(Z(4))),
        K(-1) * Z(2) * (cube(Z(1)) + cube(Z(3)) + cube(Z(4))),
        Z(3) * (K(-1) * cube(Z(1)) - cube(Z(2)) + cube(Z(4))),
        Z(4) * (cube(Z(1)) + cube(Z(2)) - cube(Z(3))),
    };
}

MbReport mb_check() {
    MbReport r;
    r.printed = mb_printed_polys();
    // Symbolic Pfaffians of diag(s) M(0, z).
    PolyMatrix Aq = restrict_y_zero(corrected_coble().corrected.M);
    const auto& s = coble_row_scaling();
    for (int i = 0; i < 5; ++i)
        for (auto& x : Aq[i]) x = s[i] * x;
    const PolyMatrix& A = Aq;
    std::vector<QPoly> pf;
    for (int i = 0; i < 5; ++i) {
        std::array<int, 4> idx{};
        int k = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i) idx[k++] = j;
        QPoly p = detail::pfaffian4(A, idx);
        pf.push_back(i % 2 == 0 ? p : -p);
    }
    const auto& [m0, c0] = *r.printed[0].terms().begin();
    const Q lambda = pf[0].coeff(m0) / c0;
    for (auto& p : pf) p = (Q(1) / lambda) * p;
    r.pfaffian = pf;
    for (int i = 0; i < 5; ++i) {
        r.agrees.push_back(pf[i] == r.printed[i]);
        if (pf[i] != r.printed[i])
            r.overlay.push_back({"mb", i, 0, entry_string(r.printed[i]), entry_string(pf[i]),
                                 "Pfaffians of the corrected M(0,z)"});
    }
    std::vector<Q> z = {Q(1), Q(1), Q(1), Q(2)};
    const auto vars = maschke_vars(z);
    for (const auto& p : r.printed) r.counterexample_alpha.push_back(p.eval(vars));
    r.counterexample_value = burkhardt_eval(r.counterexample_alpha);
    return r;
}

std::vector<Vec<BC>> sample_hessian_points(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto small = [&] { return Q(static_cast<long>(rng() % 11) - 5); };
    std::vector<Vec<BC>> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Q> p(5), q(5);
        for (int i = 0; i < 5; ++i) {
            p[i] = small();
            q[i] = small();
        }
        // det along the line, degree <= 10, interpolated at t = 0..10.
        Mat<Q> V;
        for (long t = 0; t <= 10; ++t) {
            std::vector<Q> y(5);
            for (int i = 0; i < 5; ++i) y[i] = p[i] + Q(t) * q[i];
            Vec<Q> row;
            Q tp(1);
            for (int e = 0; e <= 10; ++e) {
                row.push_back(tp);
                tp = tp * Q(t);
            }
            row.push_back(determinant(hessian_matrix(y)));
            V.push_back(row);
        }
        RREF<Q> R = rref(V, 12);
        if (R.rows.size() != 11 || R.pivots.back() != 10) continue;
        std::vector<BC> coeffs;
        for (int e = 0; e <= 10; ++e) coeffs.push_back(BC(R.rows[e][11]));
        Poly<BC> f(coeffs, BC(0));
        if (f.is_zero() || f.degree() < 1) continue;
        std::vector<BC> roots;
        try {
            roots = complex_roots(f);
        } catch (const Error&) {
            continue;
        }
        for (const auto& t : roots) {
            if (static_cast<int>(out.size()) == count) break;
            Vec<BC> y;
            for (int i = 0; i < 5; ++i) y.push_back(BC(p[i]) + t * BC(q[i]));
            out.push_back(y);
        }
    }
    return out;
}

QPoly phi40_factor_poly(int index, bool printed_B) {
    const int n = 4;
    std::vector<QPoly> z;
    for (int i = 0; i < n; ++i) z.push_back(QPoly::var(n, i, Q(0)));
    if (index < 4) return z[index];
    if (index == 4) return phi40_A(z[1], z[2], z[3]);
    if (index == 5) return printed_B ? phi40_signed(z[0], z[1], z[2]) : phi40_signed(z[0], z[1], z[3]);
    if (index == 6) return phi40_signed(z[0], z[2], z[1]);
    if (index == 7) return phi40_signed(z[0], z[3], z[2]);
    throw Error(ErrorCode::InvalidInput, "factor index out of range");
}

QPoly phi40_poly(bool printed_B) {
    QPoly p = phi40_factor_poly(0);
    for (int i = 1; i < 8; ++i) p = p * phi40_factor_poly(i, printed_B);
    return p;
}

NF conj_eta(const NF& a) {
    // a + b eta -> a + b eta^2 = (a - b) - b eta
    const auto& c = a.coeffs();
    return NF(a.ctx(), {c[0] - c[1], -c[1]});
}

namespace {

std::array<NF, 4> normalized_vec(std::array<NF, 4> v) {
    for (int i = 0; i < 4; ++i)
        if (!is_zero(v[i])) {
            const NF s = inverse(v[i]);
            for (auto& x : v) x = x * s;
            return v;
        }
    throw Error(ErrorCode::InvalidInput, "zero reflection vector");
}

bool vec_less(const std::array<NF, 4>& a, const std::array<NF, 4>& b) {
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 2; ++k) {
            const Q& x = a[i].coeffs()[k];
            const Q& y = b[i].coeffs()[k];
            if (x < y) return true;
            if (y < x) return false;
        }
    return false;
}

}  // namespace

ReflectionArrangement reflection_arrangement(PermutationRule rule) {
    const NFCtx* E = cyclotomic3();
    const NF zero = nf_int(E, 0), one = nf_int(E, 1), eta = nf_gen(E);
    const NF s3 = nf_int(E, 2) * eta + one;  // sqrt(-3)
    const std::array<NF, 3> pw = {one, eta, eta * eta};
    std::vector<std::array<int, 3>> perms;
    if (rule == PermutationRule::Identity) perms = {{0, 1, 2}};
    if (rule == PermutationRule::Cyclic) perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    if (rule == PermutationRule::All) perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::array<NF, 4>> raw;
    auto add_permuted = [&](const std::array<NF, 4>& v) {
        for (const auto& p : perms) raw.push_back({v[0], v[1 + p[0]], v[1 + p[1]], v[1 + p[2]]});
    };
    add_permuted({s3, zero, zero, zero});
    add_permuted({zero, s3, zero, zero});
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                add_permuted({zero, pw[a], pw[b], pw[c]});
                add_permuted({pw[a], zero, pw[b], -pw[c]});
            }
    std::vector<std::array<NF, 4>> uniq;
    for (const auto& v : raw) {
        const auto n = normalized_vec(v);
        if (std::find(uniq.begin(), uniq.end(), n) == uniq.end()) uniq.push_back(n);
    }
    std::sort(uniq.begin(), uniq.end(), vec_less);
    ReflectionArrangement arr;
    arr.normals = uniq;
    for (const auto& v : uniq) arr.forms.push_back({conj_eta(v[0]), conj_eta(v[1]), conj_eta(v[2]), conj_eta(v[3])});
    return arr;
}

bool arrangement_closed(const ReflectionArrangement& arr) {
    if (arr.normals.empty()) return true;
    const NFCtx* E = arr.normals[0][0].ctx();
    const NF one = nf_int(E, 1), w = nf_gen(E);
    auto herm = [](const std::array<NF, 4>& r, const std::array<NF, 4>& x) {
        NF s = zero_like(x[0]);
        for (int i = 0; i < 4; ++i) s += conj_eta(r[i]) * x[i];
        return s;
    };
    for (const auto& r : arr.normals) {
        const NF rr = herm(r, r);
        for (const auto& x : arr.normals) {
            const NF k = (one - w) * herm(r, x) / rr;
            std::array<NF, 4> img;
            for (int i = 0; i < 4; ++i) img[i] = x[i] - k * r[i];
            const auto n = normalized_vec(img);
            if (std::find(arr.normals.begin(), arr.normals.end(), n) == arr.normals.end()) return false;
        }
    }
    return true;
}

MPoly<NF> arrangement_product(const ReflectionArrangement& arr) {
    const NFCtx* E = cyclotomic3();
    MPoly<NF> p = MPoly<NF>::constant(4, nf_int(E, 1));
    for (const auto& f : arr.forms) {
        MPoly<NF> lin(4, nf_int(E, 0));
        for (int i = 0; i < 4; ++i) lin += f[i] * MPoly<NF>::var(4, i, nf_int(E, 1));
        p = p * lin;
    }
    return p;
}

MPoly<NF> nonic_product() {
    const NFCtx* E = cyclotomic3();
    const NF one = nf_int(E, 1), eta = nf_gen(E);
    const std::array<NF, 3> pw = {one, eta, eta * eta};
    MPoly<NF> p = MPoly<NF>::constant(4, one);
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
            p = p * (MPoly<NF>::var(4, 1, one) + pw[b] * MPoly<NF>::var(4, 2, one) + pw[c] * MPoly<NF>::var(4, 3, one));
    return p;
}

std::optional<NF> proportionality(const MPoly<NF>& p, const MPoly<NF>& q) {
    if (q.is_zero()) return std::nullopt;
    const auto& [m, c] = *q.terms().begin();
    const NF ratio = p.coeff(m) / c;
    if (p == ratio * q) return ratio;
    return std::nullopt;
}

}  // namespace isog3
