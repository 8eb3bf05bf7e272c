// SPDX-License-Identifier: Apache-2.0
#include "isog3/numfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "isog3/errors.hpp"

namespace isog3 {

namespace {

using QVec = std::vector<Q>;

void trim(QVec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// a mod m over Q for monic m.
QVec reduce(QVec a, const QVec& m) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        if (a[i].is_zero()) continue;
        const Q c = a[i];
        for (int j = 0; j <= dm; ++j) a[i - dm + j] -= c * m[j];
    }
    if (static_cast<int>(a.size()) > dm) a.resize(dm);
    return a;
}

Q eval(const QVec& m, const Q& x) {
    Q r(0);
    for (size_t i = m.size(); i-- > 0;) r = r * x + m[i];
    return r;
}

bool has_rational_root(const QVec& monic) {
    // Clear denominators, then test +-(divisor of a0)/(divisor of lead).
    mpz_class l = 1;
    for (const auto& c : monic) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : monic) z.push_back(c.num() * (l / c.den()));
    if (z[0] == 0) return true;
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> out;
        v = abs(v);
        for (mpz_class d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    for (const auto& a : divisors(z[0]))
        for (const auto& b : divisors(z.back()))
            for (int s : {1, -1})
                if (eval(monic, Q(mpq_class(s * a, b))).is_zero()) return true;
    return false;
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<std::vector<std::string>, std::string>, std::unique_ptr<NFCtx>> fields;
};

}  // namespace

const NFCtx* number_field(const std::vector<Q>& monic_modulus, const std::string& generator) {
    if (monic_modulus.size() < 2 || monic_modulus.back() != Q(1))
        throw Error(ErrorCode::InvalidInput, "number-field modulus must be monic of degree >= 1");
    const int d = static_cast<int>(monic_modulus.size()) - 1;
    if (d >= 2 && d <= 3 && has_rational_root(monic_modulus))
        throw Error(ErrorCode::ModulusNotIrreducible, "number-field modulus has a rational root");
    std::vector<std::string> key;
    for (const auto& c : monic_modulus) key.push_back(to_string(c));
    static Registry reg;
    std::lock_guard<std::mutex> lock(reg.mu);
    auto& slot = reg.fields[{key, generator}];
    if (!slot) slot = std::make_unique<NFCtx>(NFCtx{monic_modulus, generator});
    return slot.get();
}

const NFCtx* cyclotomic3() {
    static const NFCtx* K = number_field({Q(1), Q(1), Q(1)}, "eta");
    return K;
}

NF::NF(const NFCtx* ctx, std::vector<Q> coeffs) : ctx_(ctx) {
    c_ = reduce(std::move(coeffs), ctx->modulus);
    c_.resize(ctx->degree(), Q(0));
}

bool NF::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

NF& NF::operator+=(const NF& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

NF& NF::operator-=(const NF& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

NF NF::operator-() const {
    NF r(ctx_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

NF operator*(const NF& a, const NF& b) {
    const int d = a.ctx_->degree();
    QVec t(2 * d - 1, Q(0));
    for (int i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j)
            if (!b.c_[j].is_zero()) t[i + j] += a.c_[i] * b.c_[j];
    }
    return NF(a.ctx_, std::move(t));
}

NF inverse(const NF& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero in a number field");
    // Extended Euclid on (m, a) over Q[x].
    QVec r0 = a.ctx()->modulus, r1 = a.coeffs();
    trim(r1);
    QVec s0, s1{Q(1)};
    while (r1.size() > 1) {
        QVec q(r0.size() - r1.size() + 1, Q(0)), r = r0;
        for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(r1.size()) - 1; --i) {
            Q c = r[i] / r1.back();
            q[i - r1.size() + 1] = c;
            if (c.is_zero()) continue;
            for (size_t j = 0; j < r1.size(); ++j) r[i - r1.size() + 1 + j] -= c * r1[j];
        }
        trim(r);
        QVec qs(q.size() + s1.size(), Q(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        QVec s(std::max(s0.size(), qs.size()), Q(0));
        for (size_t i = 0; i < s.size(); ++i) s[i] = (i < s0.size() ? s0[i] : Q(0)) - (i < qs.size() ? qs[i] : Q(0));
        trim(s);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Q ci = inverse(r1[0]);
    for (auto& c : s1) c *= ci;
    return NF(a.ctx(), s1);
}

NF operator/(const NF& a, const NF& b) { return a * inverse(b); }

NF nf_int(const NFCtx* K, long v) { return nf_rational(K, Q(v)); }

NF nf_rational(const NFCtx* K, const Q& v) {
    NF r(K, {v});
    return r;
}

NF nf_gen(const NFCtx* K) { return NF(K, {Q(0), Q(1)}); }

NF pow(const NF& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    NF r = one_like(a), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool is_rational(const NF& a) {
    for (size_t i = 1; i < a.coeffs().size(); ++i)
        if (!a.coeffs()[i].is_zero()) return false;
    return true;
}

std::string to_string(const NF& a) {
    std::ostringstream os;
    bool first = true;
    const auto& c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        std::string s = to_string(c[i]);
        if (!first && s[0] != '-') os << '+';
        first = false;
        if (i == 0) {
            os << s;
        } else {
            if (s == "-1") os << '-';
            else if (s != "1") os << s << '*';
            os << a.ctx()->generator;
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace isog3
