// SPDX-License-Identifier: Apache-2.0
// Dense univariate polynomials over any element type of field.hpp.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isog3/errors.hpp"
#include "isog3/field.hpp"

namespace isog3 {

template <class F>
class Poly {
public:
    explicit Poly(const F& like) : zero_(zero_like(like)) {}
    Poly(std::vector<F> coeffs, const F& like) : c_(std::move(coeffs)), zero_(zero_like(like)) { trim(); }

    static Poly monomial(const F& coeff, int deg) {
        std::vector<F> c(deg + 1, zero_like(coeff));
        c[deg] = coeff;
        return Poly(std::move(c), coeff);
    }
    static Poly x(const F& like) { return monomial(one_like(like), 1); }
    static Poly constant(const F& v) { return Poly({v}, v); }

    // Zero polynomial has degree -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& zero() const { return zero_; }
    const F& lc() const {
        if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
        return c_.back();
    }

    void set(int i, const F& v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, zero_);
        c_[i] = v;
        trim();
    }

    F eval(const F& x) const {
        F r = zero_;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
        std::vector<F> t(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (isog3::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) t[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(t), a.zero_);
    }
    friend Poly operator*(const F& s, Poly a) {
        for (auto& c : a.c_) c = s * c;
        a.trim();
        return a;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && isog3::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
    F zero_;
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    const F zero = a.zero();
    if (a.degree() < b.degree()) return {Poly<F>(zero), a};
    std::vector<F> r = a.coeffs(), q(a.degree() - b.degree() + 1, zero);
    const F li = inverse(b.lc());
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        const F c = r[i] * li;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r.resize(db, zero);
    return {Poly<F>(std::move(q), zero), Poly<F>(std::move(r), zero)};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
Poly<F> make_monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return inverse(a.lc()) * a;
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class F>
Poly<F> derivative(const Poly<F>& a) {
    if (a.degree() < 1) return Poly<F>(a.zero());
    std::vector<F> d;
    for (int i = 1; i <= a.degree(); ++i) d.push_back(from_int_like(a.zero(), i) * a[i]);
    return Poly<F>(std::move(d), a.zero());
}

// a(x + s)
template <class F>
Poly<F> shift(const Poly<F>& a, const F& s) {
    Poly<F> r(a.zero());
    const Poly<F> lin({s, one_like(s)}, s);
    for (int i = a.degree(); i >= 0; --i) r = r * lin + Poly<F>::constant(a[i]);
    return r;
}

template <class F>
Poly<F> pow(const Poly<F>& a, int e) {
    Poly<F> r = Poly<F>::constant(one_like(a.zero())), b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <class F>
Poly<F> mulmod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    return (a * b) % m;
}

// Determinant by Gaussian elimination.
template <class F>
F det_gauss(std::vector<std::vector<F>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
    F d = one_like(m[0][0]);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(m[r][col])) {
                piv = r;
                break;
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

// Sylvester resultant with formal degrees m >= deg f and n >= deg g.
template <class F>
F resultant(const Poly<F>& f, const Poly<F>& g, int m, int n) {
    const F zero = f.zero();
    if (m + n == 0) return one_like(zero);
    std::vector<std::vector<F>> s(m + n, std::vector<F>(m + n, zero));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r][r + j] = f[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[n + r][r + j] = g[n - j];
    return det_gauss(std::move(s));
}

// disc(f) = (-1)^(d(d-1)/2) Res_{d,d-1}(f, f') / lc(f).
template <class F>
F discriminant(const Poly<F>& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "discriminant of zero");
    const int d = f.degree();
    if (d < 1) throw Error(ErrorCode::DegreeTooSmall, "discriminant of a constant");
    F r = resultant(f, derivative(f), d, d - 1) / f.lc();
    if ((d * (d - 1) / 2) % 2) r = -r;
    return r;
}

// gcd(f, g) (g defaults to f') and whether f is squarefree.
template <class F>
std::pair<Poly<F>, bool> gcd_squarefree(const Poly<F>& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of zero");
    Poly<F> g = gcd(f, derivative(f));
    return {g, g.degree() == 0};
}

template <class F>
std::pair<Poly<F>, bool> gcd_squarefree(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of zero");
    Poly<F> h = gcd(f, g);
    Poly<F> d = gcd(f, derivative(f));
    return {h, d.degree() == 0};
}

template <class F>
std::string to_string(const Poly<F>& p, const char* var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(p[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(p[i]) + ")";
        if (i > 0) out += std::string("*") + var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace isog3
