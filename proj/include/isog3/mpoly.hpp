// SPDX-License-Identifier: Apache-2.0
// Sparse multivariate polynomials with a fixed number of variables.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isog3/errors.hpp"
#include "isog3/field.hpp"

namespace isog3 {

template <class F>
class MPoly {
public:
    using Mono = std::vector<uint8_t>;

    MPoly() = default;
    MPoly(int nvars, F zero) : n_(nvars), zero_(std::move(zero)) {}

    static MPoly constant(int nvars, const F& c) {
        MPoly p(nvars, zero_like(c));
        if (!isog3::is_zero(c)) p.t_[Mono(nvars, 0)] = c;
        return p;
    }
    static MPoly var(int nvars, int i, const F& like) {
        MPoly p(nvars, zero_like(like));
        Mono m(nvars, 0);
        m[i] = 1;
        p.t_[m] = one_like(like);
        return p;
    }
    static MPoly monomial(const Mono& m, const F& c) {
        MPoly p(static_cast<int>(m.size()), zero_like(c));
        if (!isog3::is_zero(c)) p.t_[m] = c;
        return p;
    }

    int nvars() const { return n_; }
    const F& zero() const { return zero_; }
    const std::map<Mono, F>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    F coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? zero_ : it->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) {
            int s = 0;
            for (auto e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Mono& m, const F& c) {
        if (isog3::is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (isog3::is_zero(it->second)) t_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator-() const {
        MPoly r(n_, zero_);
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.n_, a.zero_);
        Mono m(a.n_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                for (int i = 0; i < a.n_; ++i) m[i] = static_cast<uint8_t>(ma[i] + mb[i]);
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const F& s, const MPoly& a) {
        MPoly r(a.n_, a.zero_);
        if (isog3::is_zero(s)) return r;
        for (const auto& [m, c] : a.t_) r.t_[m] = s * c;
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly diff(int i) const {
        MPoly r(n_, zero_);
        for (const auto& [m, c] : t_) {
            if (m[i] == 0) continue;
            Mono d = m;
            --d[i];
            r.add_term(d, from_int_like(zero_, m[i]) * c);
        }
        return r;
    }

    // Value at x, with coefficients mapped into G by conv.
    template <class G, class Conv>
    G eval(const std::vector<G>& x, Conv conv) const {
        if (static_cast<int>(x.size()) != n_) throw Error(ErrorCode::InvalidInput, "wrong number of values");
        G s = zero_like(x[0]);
        for (const auto& [m, c] : t_) {
            G v = conv(c);
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) v = v * x[i];
            s += v;
        }
        return s;
    }
    F eval(const std::vector<F>& x) const {
        return eval(x, [](const F& c) { return c; });
    }

    // Replace variable i by images[i]; the images share a variable count.
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (static_cast<int>(images.size()) != n_) throw Error(ErrorCode::InvalidInput, "wrong number of images");
        const int m_out = images[0].nvars();
        MPoly r(m_out, zero_);
        std::vector<std::vector<MPoly>> powers(n_);
        for (const auto& [m, c] : t_) {
            MPoly term = constant(m_out, c);
            for (int i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(m_out, one_like(zero_)));
                while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
                term = term * pw[m[i]];
            }
            r += term;
        }
        return r;
    }

    // Coefficients mapped into another field.
    template <class G, class Conv>
    MPoly<G> map(Conv conv, const G& gzero) const {
        MPoly<G> r(n_, gzero);
        for (const auto& [m, c] : t_) r.add_term(m, conv(c));
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            std::string c = isog3::to_string(it->second);
            std::string mono;
            for (int i = 0; i < n_; ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            if (!s.empty()) s += " + ";
            if (mono.empty())
                s += c;
            else if (c == "1")
                s += mono;
            else if (c == "-1")
                s += "-" + mono;
            else
                s += "(" + c + ")*" + mono;
        }
        return s;
    }

private:
    void check(const MPoly& o) const {
        if (o.n_ != n_) throw Error(ErrorCode::InvalidInput, "variable counts differ");
    }

    int n_ = 0;
    F zero_;
    std::map<Mono, F> t_;
};

template <class F>
bool is_zero(const MPoly<F>& p) {
    return p.is_zero();
}
template <class F>
MPoly<F> zero_like(const MPoly<F>& p) {
    return MPoly<F>(p.nvars(), p.zero());
}
template <class F>
MPoly<F> one_like(const MPoly<F>& p) {
    return MPoly<F>::constant(p.nvars(), one_like(p.zero()));
}
template <class F>
MPoly<F> from_int_like(const MPoly<F>& p, long v) {
    return MPoly<F>::constant(p.nvars(), from_int_like(p.zero(), v));
}

}  // namespace isog3
