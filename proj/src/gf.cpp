// SPDX-License-Identifier: Apache-2.0
#include "isog3/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace isog3 {

namespace fp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t inv(uint32_t a, uint32_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

Poly mod(Poly a, const Poly& m, uint32_t p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const uint32_t lc_inv = inv(m.back(), p);
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        uint32_t q = a[i] * lc_inv % p;
        if (q == 0) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - q) * m[j]) % p;
    }
    if (static_cast<int>(a.size()) > dm) a.resize(dm);
    trim(a);
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly t(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    return mod(std::move(t), m, p);
}

Poly powp_mod(const Poly& a, const Poly& m, uint32_t p) {
    // Coefficients lie in F_p, so a^p = sum a_i X^(p i).
    if (a.empty()) return {};
    Poly t((a.size() - 1) * p + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) t[i * p] = a[i];
    return mod(std::move(t), m, p);
}

Poly gcd(Poly a, Poly b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint32_t li = inv(a.back(), p);
        for (auto& x : a) x = x * li % p;
    }
    return a;
}

}  // namespace fp

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    return out;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::unique_ptr<GFCtx>> fields;
    std::map<std::pair<uint32_t, int>, std::vector<uint32_t>> default_moduli;
};

Registry& registry() {
    static Registry r;
    return r;
}

Coeffs to_coeffs(const fp::Poly& a) {
    Coeffs c{};
    c.fill(0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = static_cast<uint8_t>(a[i]);
    return c;
}

std::unique_ptr<GFCtx> build_ctx(uint32_t p, const std::vector<uint32_t>& m) {
    auto K = std::make_unique<GFCtx>();
    K->p = p;
    K->n = static_cast<int>(m.size()) - 1;
    K->modulus = m;
    for (int j = 0; j < K->n; ++j)
        if (m[j] % p) K->reduce_terms.emplace_back(j, (p - m[j] % p) % p);
    K->inv_table.assign(p, 0);
    for (uint32_t a = 1; a < p; ++a) K->inv_table[a] = fp::inv(a, p);
    mpz_ui_pow_ui(K->order.get_mpz_t(), p, K->n);

    const int n = K->n;
    fp::Poly x = (n == 1) ? fp::Poly{(p - m[0] % p) % p} : fp::Poly{0, 1};
    fp::trim(x);
    // X^(p i) mod m for the Frobenius table.
    fp::Poly xp = fp::powp_mod(x, m, p);
    fp::Poly acc{1};
    for (int i = 0; i < n; ++i) {
        K->frob_rows.push_back(to_coeffs(acc));
        acc = fp::mulmod(acc, xp, m, p);
    }
    fp::Poly g = x;
    for (int i = 0; i + 1 < n; ++i) g = fp::powp_mod(g, m, p);
    acc = {1};
    for (int i = 0; i < n; ++i) {
        K->frob_inv_rows.push_back(to_coeffs(acc));
        acc = fp::mulmod(acc, g, m, p);
    }
    return K;
}

const GFCtx* intern(uint32_t p, const std::vector<uint32_t>& m) {
    auto& reg = registry();
    {
        std::lock_guard<std::mutex> lock(reg.mu);
        auto it = reg.fields.find({p, m});
        if (it != reg.fields.end()) return it->second.get();
    }
    auto ctx = build_ctx(p, m);
    std::lock_guard<std::mutex> lock(reg.mu);
    auto [it, inserted] = reg.fields.emplace(std::make_pair(p, m), std::move(ctx));
    return it->second.get();
}

std::vector<uint32_t> smallest_irreducible(uint32_t p, int k) {
    if (k == 1) return {0, 1};
    std::vector<uint32_t> digits(k, 0);
    for (;;) {
        // Advance digits as a base-p counter.
        int i = 0;
        while (i < k) {
            if (++digits[i] < p) break;
            digits[i++] = 0;
        }
        if (i == k) throw Error(ErrorCode::ExtensionTooLarge, "no irreducible polynomial found");
        if (digits[0] == 0) continue;
        std::vector<uint32_t> m = digits;
        m.push_back(1);
        if (fp_is_irreducible(m, p)) return m;
    }
}

}  // namespace

bool fp_is_irreducible(const std::vector<uint32_t>& monic, uint32_t p) {
    const int n = static_cast<int>(monic.size()) - 1;
    if (n < 1 || monic.back() % p != 1) return false;
    if (n == 1) return true;
    std::vector<fp::Poly> xp;  // X^(p^i) mod m for i = 0..n
    fp::Poly h{0, 1};
    xp.push_back(h);
    for (int i = 1; i <= n; ++i) {
        h = fp::powp_mod(h, monic, p);
        xp.push_back(h);
    }
    fp::Poly diff = xp[n];
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp::trim(diff);
    if (!diff.empty()) return false;
    for (int r : prime_divisors(n)) {
        fp::Poly d = xp[n / r];
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        fp::trim(d);
        if (fp::gcd(monic, d, p).size() != 1) return false;
    }
    return true;
}

const GFCtx* default_extension(uint32_t p, int k) {
    if (!is_prime(p) || p >= 256) throw Error(ErrorCode::UnsupportedField, "characteristic must be a prime below 256");
    if (k < 1 || k > kMaxDegree) throw Error(ErrorCode::ExtensionTooLarge, "extension degree " + std::to_string(k));
    auto& reg = registry();
    std::vector<uint32_t> m;
    {
        std::lock_guard<std::mutex> lock(reg.mu);
        auto it = reg.default_moduli.find({p, k});
        if (it != reg.default_moduli.end()) m = it->second;
    }
    if (m.empty()) {
        m = smallest_irreducible(p, k);
        std::lock_guard<std::mutex> lock(reg.mu);
        reg.default_moduli[{p, k}] = m;
    }
    return intern(p, m);
}

const GFCtx* make_extension(uint32_t p, int k, const std::optional<std::vector<uint32_t>>& modulus) {
    if (!modulus) return default_extension(p, k);
    if (!is_prime(p) || p >= 256) throw Error(ErrorCode::UnsupportedField, "characteristic must be a prime below 256");
    std::vector<uint32_t> m = *modulus;
    for (auto& c : m) c %= p;
    fp::trim(m);
    if (static_cast<int>(m.size()) != k + 1 || m.back() != 1)
        throw Error(ErrorCode::InvalidInput, "modulus must be monic of degree " + std::to_string(k));
    if (k > kMaxDegree) throw Error(ErrorCode::ExtensionTooLarge, "extension degree " + std::to_string(k));
    if (!fp_is_irreducible(m, p)) throw Error(ErrorCode::ModulusNotIrreducible, "modulus is reducible");
    return intern(p, m);
}

GF gf_zero(const GFCtx* K) { return GF(K); }

GF gf_one(const GFCtx* K) { return gf_int(K, 1); }

GF gf_int(const GFCtx* K, long v) {
    GF r(K);
    long m = v % static_cast<long>(K->p);
    if (m < 0) m += K->p;
    r.set_coeff(0, static_cast<uint32_t>(m));
    return r;
}

GF gf_gen(const GFCtx* K) {
    if (K->n == 1) return gf_int(K, static_cast<long>((K->p - K->modulus[0] % K->p) % K->p));
    GF r(K);
    r.set_coeff(1, 1);
    return r;
}

GF gf_from_coeffs(const GFCtx* K, const std::vector<uint32_t>& coeffs) {
    fp::Poly a(coeffs.begin(), coeffs.end());
    for (auto& x : a) x %= K->p;
    a = fp::mod(a, K->modulus, K->p);
    GF r(K);
    for (size_t i = 0; i < a.size(); ++i) r.set_coeff(static_cast<int>(i), a[i]);
    return r;
}

GF gf_from_index(const GFCtx* K, const mpz_class& index) {
    GF r(K);
    mpz_class v = index;
    for (int i = 0; i < K->n && v > 0; ++i) {
        mpz_class d = v % K->p;
        r.set_coeff(i, static_cast<uint32_t>(d.get_ui()));
        v /= K->p;
    }
    return r;
}

mpz_class gf_index(const GF& a) {
    mpz_class v = 0;
    for (int i = a.ctx()->n - 1; i >= 0; --i) v = v * a.ctx()->p + a.coeff(i);
    return v;
}

bool GF::is_zero() const {
    for (int i = 0; i < ctx_->n; ++i)
        if (c_[i]) return false;
    return true;
}

bool GF::is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < ctx_->n; ++i)
        if (c_[i]) return false;
    return true;
}

GF& GF::operator+=(const GF& o) {
    const uint32_t p = ctx_->p;
    for (int i = 0; i < ctx_->n; ++i) {
        uint32_t s = c_[i] + o.c_[i];
        c_[i] = static_cast<uint8_t>(s >= p ? s - p : s);
    }
    return *this;
}

GF& GF::operator-=(const GF& o) {
    const uint32_t p = ctx_->p;
    for (int i = 0; i < ctx_->n; ++i) {
        uint32_t s = c_[i] + p - o.c_[i];
        c_[i] = static_cast<uint8_t>(s >= p ? s - p : s);
    }
    return *this;
}

GF GF::operator-() const {
    GF r(ctx_);
    for (int i = 0; i < ctx_->n; ++i) r.c_[i] = static_cast<uint8_t>(c_[i] ? ctx_->p - c_[i] : 0);
    return r;
}

GF operator*(const GF& a, const GF& b) {
    const GFCtx& K = *a.ctx_;
    const int n = K.n;
    const uint32_t p = K.p;
    int da = n - 1, db = n - 1;
    while (da >= 0 && !a.c_[da]) --da;
    while (db >= 0 && !b.c_[db]) --db;
    GF r(a.ctx_);
    if (da < 0 || db < 0) return r;
    uint32_t t[2 * kMaxDegree];
    std::fill(t, t + da + db + 1, 0u);
    for (int i = 0; i <= da; ++i) {
        const uint32_t ai = a.c_[i];
        if (!ai) continue;
        uint32_t* ti = t + i;
        for (int j = 0; j <= db; ++j) ti[j] += ai * b.c_[j];
    }
    for (int i = da + db; i >= n; --i) {
        const uint32_t v = t[i] % p;
        if (!v) continue;
        for (const auto& [j, m] : K.reduce_terms) t[i - n + j] += v * m;
    }
    const int top = std::min(da + db, n - 1);
    for (int i = 0; i <= top; ++i) r.c_[i] = static_cast<uint8_t>(t[i] % p);
    return r;
}

GF inverse(const GF& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero in a finite field");
    const GFCtx& K = *a.ctx();
    const uint32_t p = K.p;
    fp::Poly r0(K.modulus.begin(), K.modulus.end()), r1(K.n);
    for (int i = 0; i < K.n; ++i) r1[i] = a.coeff(i);
    fp::trim(r1);
    fp::Poly s0{}, s1{1};
    while (r1.size() > 1) {
        // One long division step sequence: r0 = q r1 + r, s = s0 - q s1.
        fp::Poly q(r0.size() - r1.size() + 1, 0);
        fp::Poly r = r0;
        const uint32_t li = K.inv_table[r1.back()];
        for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(r1.size()) - 1; --i) {
            uint32_t c = r[i] * li % p;
            q[i - r1.size() + 1] = c;
            if (!c) continue;
            for (size_t j = 0; j < r1.size(); ++j) r[i - r1.size() + 1 + j] = (r[i - r1.size() + 1 + j] + (p - c) * r1[j]) % p;
        }
        fp::trim(r);
        fp::Poly qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
        fp::Poly s(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s.size(); ++i) {
            uint32_t x = i < s0.size() ? s0[i] : 0;
            uint32_t y = i < qs.size() ? qs[i] : 0;
            s[i] = (x + p - y) % p;
        }
        fp::trim(s);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant.
    const uint32_t ci = K.inv_table[r1[0]];
    GF out(a.ctx());
    for (size_t i = 0; i < s1.size(); ++i) out.set_coeff(static_cast<int>(i), s1[i] * ci % p);
    return out;
}

GF operator/(const GF& a, const GF& b) { return a * inverse(b); }

bool operator==(const GF& a, const GF& b) {
    if (a.ctx_ != b.ctx_) return false;
    for (int i = 0; i < a.ctx_->n; ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

bool operator<(const GF& a, const GF& b) {
    for (int i = a.ctx_->n - 1; i >= 0; --i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

GF pow(const GF& a, const mpz_class& e) {
    if (e < 0) return pow(inverse(a), mpz_class(-e));
    GF r = gf_one(a.ctx());
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * a;
    }
    return r;
}

GF pow(const GF& a, uint64_t e) {
    GF r = gf_one(a.ctx()), b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {
GF apply_rows(const GF& a, const std::vector<Coeffs>& rows) {
    const GFCtx& K = *a.ctx();
    uint32_t t[kMaxDegree] = {0};
    for (int i = 0; i < K.n; ++i) {
        const uint32_t ai = a.coeff(i);
        if (!ai) continue;
        const Coeffs& row = rows[i];
        for (int j = 0; j < K.n; ++j) t[j] += ai * row[j];
    }
    GF r(a.ctx());
    for (int j = 0; j < K.n; ++j) r.set_coeff(j, t[j] % K.p);
    return r;
}
}  // namespace

GF frobenius(const GF& a) { return apply_rows(a, a.ctx()->frob_rows); }

GF frobenius_inverse(const GF& a) { return apply_rows(a, a.ctx()->frob_inv_rows); }

GF frobenius_cube_root(const GF& a) {
    if (a.ctx()->p != 3) throw Error(ErrorCode::UnsupportedCharacteristic, "cube roots via Frobenius need characteristic 3");
    return frobenius_inverse(a);
}

bool is_square(const GF& a) {
    if (a.is_zero()) return true;
    const uint32_t p = a.ctx()->p;
    if (p == 2) return true;
    // a is a square iff its norm to F_p is a square in F_p.
    GF norm = a, conj = a;
    for (int i = 1; i < a.ctx()->n; ++i) {
        conj = frobenius(conj);
        norm = norm * conj;
    }
    uint64_t v = norm.coeff(0), r = 1, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * v % p;
        v = v * v % p;
        e >>= 1;
    }
    return r == 1;
}

std::vector<uint32_t> gf_coeffs(const GF& a) {
    std::vector<uint32_t> out(a.ctx()->n);
    for (int i = 0; i < a.ctx()->n; ++i) out[i] = a.coeff(i);
    return out;
}

std::string to_string(const GF& a) {
    std::ostringstream os;
    bool first = true;
    for (int i = a.ctx()->n - 1; i >= 0; --i) {
        const uint32_t c = a.coeff(i);
        if (!c) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) os << (c != 1 ? "*g" : "g");
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace isog3
