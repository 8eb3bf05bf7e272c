// SPDX-License-Identifier: Apache-2.0
#include "isog3/finite_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace isog3 {

namespace {

constexpr long kExhaustiveLimit = 729;  // 3^6

GFPoly x_poly(const GFCtx* K) { return GFPoly::x(gf_zero(K)); }

// g^p mod m, using that p-th powers act coefficientwise as the Frobenius.
GFPoly powp_mod(const GFPoly& g, const GFPoly& m) {
    const GFCtx* K = m.zero().ctx();
    if (g.is_zero()) return g;
    const int p = static_cast<int>(K->p);
    std::vector<GF> t(g.degree() * p + 1, gf_zero(K));
    for (int i = 0; i <= g.degree(); ++i) t[i * p] = frobenius(g[i]);
    return GFPoly(std::move(t), m.zero()) % m;
}

// g^(|K|) mod m for the coefficient field K.
GFPoly powq_mod(GFPoly g, const GFPoly& m) {
    const int n = m.zero().ctx()->n;
    for (int i = 0; i < n; ++i) g = powp_mod(g, m);
    return g;
}

GFPoly powmod_small(const GFPoly& b, uint64_t e, const GFPoly& m) {
    GFPoly r = GFPoly::constant(gf_one(m.zero().ctx())), base = b % m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

void split_linear(const GFPoly& g, std::vector<GF>& out) {
    // g is monic, squarefree and a product of linear factors.
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-g[0] / g[1]);
        return;
    }
    const GFCtx* K = g.zero().ctx();
    const GFPoly X = x_poly(K);
    for (long idx = 0;; ++idx) {
        const GF delta = gf_from_index(K, mpz_class(idx));
        GFPoly r(g.zero());
        if (K->p == 2) {
            // Trace map: sum_{i<n} (delta X)^(2^i).
            GFPoly t = GFPoly::constant(delta) * X % g;
            r = t;
            for (int i = 1; i < K->n; ++i) {
                t = powp_mod(t, g);
                r += t;
            }
        } else {
            // (X + delta)^((q-1)/2) = prod_i phi^i((X + delta)^((p-1)/2)).
            GFPoly u = powmod_small(X + GFPoly::constant(delta), (K->p - 1) / 2, g);
            r = u;
            for (int i = 1; i < K->n; ++i) {
                u = powp_mod(u, g);
                r = mulmod(r, u, g);
            }
            r -= GFPoly::constant(gf_one(K));
        }
        GFPoly d = gcd(g, r);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, out);
            split_linear(divmod(g, d).first, out);
            return;
        }
        if (idx > 64L * K->n + 1024) throw Error(ErrorCode::RootIsolationFailure, "equal-degree splitting did not converge");
    }
}

}  // namespace

GFPoly gf_poly(const GFCtx* K, const std::vector<long>& coeffs) {
    std::vector<GF> c;
    for (long v : coeffs) c.push_back(gf_int(K, v));
    return GFPoly(std::move(c), gf_zero(K));
}

Embedding::Embedding(const GFCtx* from, const GFCtx* to, const GF& gen_image)
    : from_(from), to_(to), gen_image_(gen_image) {
    const uint32_t p = to->p;
    GF acc = gf_one(to);
    for (int i = 0; i < from->n; ++i) {
        powers_.push_back(acc.raw());
        acc = acc * gen_image;
    }
    // Choose pivot coordinates so that the k x k restriction is invertible.
    const int k = from->n, N = to->n;
    // Row-reduce the N x k matrix (rows = coordinates), tracking which
    // coordinates become pivots.
    std::vector<std::vector<uint32_t>> m(N, std::vector<uint32_t>(k, 0));
    for (int r = 0; r < N; ++r)
        for (int j = 0; j < k; ++j) m[r][j] = powers_[j][r];
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    int rank = 0;
    std::vector<int> chosen;
    for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = rank; r < N; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        std::swap(order[piv], order[rank]);
        const uint32_t inv = fp::inv(m[rank][c], p);
        for (auto& x : m[rank]) x = x * inv % p;
        for (int r = 0; r < N; ++r) {
            if (r == rank || !m[r][c]) continue;
            const uint32_t f = m[r][c];
            for (int j = 0; j < k; ++j) m[r][j] = (m[r][j] + (p - f) * m[rank][j]) % p;
        }
        ++rank;
    }
    pivot_rows_.assign(order.begin(), order.begin() + rank);
    // Invert the k x k matrix S with S[i][j] = powers_[j][pivot_rows_[i]].
    std::vector<std::vector<uint32_t>> a(k, std::vector<uint32_t>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = powers_[j][pivot_rows_[i]];
        a[i][k + i] = 1;
    }
    for (int c = 0; c < k; ++c) {
        int piv = c;
        while (!a[piv][c]) ++piv;
        std::swap(a[piv], a[c]);
        const uint32_t inv = fp::inv(a[c][c], p);
        for (auto& x : a[c]) x = x * inv % p;
        for (int r = 0; r < k; ++r) {
            if (r == c || !a[r][c]) continue;
            const uint32_t f = a[r][c];
            for (int j = 0; j < 2 * k; ++j) a[r][j] = (a[r][j] + (p - f) * a[c][j]) % p;
        }
    }
    inv_.assign(k, std::vector<uint32_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) inv_[i][j] = a[i][k + j];
}

GF Embedding::apply(const GF& a) const {
    if (a.ctx() != from_) throw Error(ErrorCode::FieldMismatch, "embedding applied to a foreign element");
    const int N = to_->n;
    uint32_t t[kMaxDegree] = {0};
    for (int i = 0; i < from_->n; ++i) {
        const uint32_t ai = a.coeff(i);
        if (!ai) continue;
        for (int r = 0; r < N; ++r) t[r] += ai * powers_[i][r];
    }
    GF out(to_);
    for (int r = 0; r < N; ++r) out.set_coeff(r, t[r] % to_->p);
    return out;
}

GFPoly Embedding::apply(const GFPoly& f) const {
    std::vector<GF> c;
    for (const auto& x : f.coeffs()) c.push_back(apply(x));
    return GFPoly(std::move(c), gf_zero(to_));
}

std::optional<GF> Embedding::pullback(const GF& a) const {
    if (a.ctx() != to_) throw Error(ErrorCode::FieldMismatch, "pullback of a foreign element");
    const int k = from_->n;
    const uint32_t p = to_->p;
    GF cand(from_);
    for (int i = 0; i < k; ++i) {
        uint64_t s = 0;
        for (int j = 0; j < k; ++j) s += static_cast<uint64_t>(inv_[i][j]) * a.coeff(pivot_rows_[j]);
        cand.set_coeff(i, static_cast<uint32_t>(s % p));
    }
    if (apply(cand) != a) return std::nullopt;
    return cand;
}

Embedding identity_embedding(const GFCtx* K) { return Embedding(K, K, gf_gen(K)); }

Embedding make_embedding(const GFCtx* from, const GFCtx* to) {
    if (from->p != to->p) throw Error(ErrorCode::FieldMismatch, "different characteristics");
    if (to->n % from->n != 0) throw Error(ErrorCode::FieldMismatch, "degree does not divide");
    if (from == to) return identity_embedding(from);
    // Contexts are interned, so the choice depends only on the pointer pair;
    // memoized because sweeps reuse a handful of field pairs.
    static std::mutex mu;
    static std::map<std::pair<const GFCtx*, const GFCtx*>, Embedding> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({from, to});
        if (it != cache.end()) return it->second;
    }
    std::vector<GF> m;
    for (auto c : from->modulus) m.push_back(gf_int(to, static_cast<long>(c)));
    auto roots = roots_in_field(GFPoly(std::move(m), gf_zero(to)));
    if (roots.empty()) throw Error(ErrorCode::FieldMismatch, "modulus has no root in the target");
    Embedding e(from, to, roots.front());
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(from, to), std::move(e)).first->second;
}

Embedding compose(const Embedding& first, const Embedding& second) {
    if (first.to() != second.from()) throw Error(ErrorCode::FieldMismatch, "embeddings do not compose");
    return Embedding(first.from(), second.to(), second.apply(first.gen_image()));
}

Compositum compose_fields(const GFCtx* a, const GFCtx* b) {
    if (a->p != b->p) throw Error(ErrorCode::FieldMismatch, "characteristics differ");
    const int n = std::lcm(a->n, b->n);
    const GFCtx* E;
    if (n == a->n) E = a;
    else if (n == b->n) E = b;
    else E = default_extension(a->p, n);
    return Compositum{E, make_embedding(a, E), make_embedding(b, E)};
}

Compositum compose_over(const Embedding& a, const Embedding& b) {
    if (a.from() != b.from()) throw Error(ErrorCode::FieldMismatch, "embeddings have different sources");
    Compositum C = compose_fields(a.to(), b.to());
    const GF target = C.first.apply(a.gen_image());
    // Replace second by sigma^j o second for the Frobenius power that matches.
    GF img = C.second.gen_image();
    GF base_img = C.second.apply(b.gen_image());
    for (int j = 0; j < C.field->n; ++j) {
        if (base_img == target) {
            if (j > 0) C.second = Embedding(b.to(), C.field, img);
            return C;
        }
        img = frobenius(img);
        base_img = frobenius(base_img);
    }
    throw Error(ErrorCode::FieldMismatch, "no compatible compositum");
}

std::vector<int> factor_degrees(const GFPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor degrees of zero");
    std::vector<int> out;
    const GFCtx* K = f.zero().ctx();
    GFPoly rem = make_monic(f);
    const GFPoly X = x_poly(K);
    GFPoly h = X % rem;
    for (int d = 1; rem.degree() > 0; ++d) {
        h = powq_mod(h, rem);
        GFPoly g = gcd(rem, h - X);
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / d; ++i) out.push_back(d);
            for (;;) {
                GFPoly g2 = gcd(rem, g);
                if (g2.degree() <= 0) break;
                rem = divmod(rem, g2).first;
            }
            if (rem.degree() > 0) h = h % rem;
        }
        if (d > 4 * f.degree() + 4) throw Error(ErrorCode::RootIsolationFailure, "distinct-degree factorization did not terminate");
    }
    return out;
}

int splitting_degree(const GFPoly& f) {
    int m = 1;
    for (int d : factor_degrees(f)) m = std::lcm(m, d);
    return m;
}

bool uses_exhaustive_search(const GFCtx* K) { return K->order <= kExhaustiveLimit; }

std::vector<GF> roots_exhaustive(const GFPoly& f) {
    const GFCtx* K = f.zero().ctx();
    if (!uses_exhaustive_search(K)) throw Error(ErrorCode::ExtensionTooLarge, "exhaustive search limited to 3^6 elements");
    std::vector<GF> out;
    const long q = K->order.get_si();
    for (long i = 0; i < q; ++i) {
        GF x = gf_from_index(K, mpz_class(i));
        if (f.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}

std::vector<GF> roots_in_field(const GFPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero");
    if (f.degree() == 0) return {};
    if (uses_exhaustive_search(f.zero().ctx())) return roots_exhaustive(f);
    return roots_equal_degree(f);
}

std::vector<GF> roots_equal_degree(const GFPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero");
    if (f.degree() == 0) return {};
    const GFCtx* K = f.zero().ctx();
    const GFPoly fm = make_monic(f);
    const GFPoly X = x_poly(K);
    GFPoly xq = powq_mod(X % fm, fm);
    GFPoly g = gcd(fm, xq - X);
    std::vector<GF> out;
    split_linear(g, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<GF, int>> roots_with_multiplicity(const GFPoly& f) {
    std::vector<std::pair<GF, int>> out;
    for (const auto& r : roots_in_field(f)) {
        const GFPoly lin({-r, gf_one(r.ctx())}, r);
        GFPoly g = f;
        int m = 0;
        for (;;) {
            auto [q, rem] = divmod(g, lin);
            if (!rem.is_zero()) break;
            g = std::move(q);
            ++m;
        }
        out.emplace_back(r, m);
    }
    return out;
}

SplittingField roots_in_splitting_field(const GFPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of zero");
    const GFCtx* K = f.zero().ctx();
    const int m = f.degree() > 0 ? splitting_degree(f) : 1;
    const GFCtx* E = (m == 1) ? K : default_extension(K->p, K->n * m);
    Embedding emb = make_embedding(K, E);
    SplittingField out{E, emb, roots_with_multiplicity(emb.apply(f))};
    return out;
}

std::optional<GF> sqrt_in_field(const GF& a) {
    if (a.is_zero()) return a;
    if (!is_square(a)) return std::nullopt;
    const GFCtx* K = a.ctx();
    auto r = roots_in_field(GFPoly({-a, gf_zero(K), gf_one(K)}, a));
    if (r.empty()) return std::nullopt;
    return r.front();
}

bool in_subfield(const GF& a, int k) {
    const int n = a.ctx()->n;
    if (n % k != 0) return false;
    GF b = a;
    for (int i = 0; i < k; ++i) b = frobenius(b);
    return b == a;
}

}  // namespace isog3
