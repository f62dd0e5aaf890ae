#ifndef NILBOX_SERIES_HPP
#define NILBOX_SERIES_HPP

#include "nilbox/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace nilbox {

inline bool scalar_is_zero(const Rat& v) { return v == 0; }
inline bool scalar_is_zero(double v) { return v == 0.0; }
inline double scalar_double(const Rat& v) { return rat_double(v); }
inline double scalar_double(double v) { return v; }

template <class T>
T scalar_ratio(long long p, long long q);
template <>
inline Rat scalar_ratio<Rat>(long long p, long long q) { return Rat(p) / Rat(q); }
template <>
inline double scalar_ratio<double>(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
}

/// Dense univariate polynomial, used for the time variable inside Picard
/// iteration. Coefficient vector may carry trailing zeros.
template <class T>
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(T constant) : c_{std::move(constant)} { prune(); }

    static Poly1 monomial(int k, T v) {
        Poly1 p;
        p.c_.assign(k + 1, T{});
        p.c_[k] = std::move(v);
        p.prune();
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& coeff(int k) const {
        static const T zero{};
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : zero;
    }

    Poly1 operator+(const Poly1& o) const {
        Poly1 r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), T{});
        for (size_t k = 0; k < r.c_.size(); ++k) {
            if (k < c_.size()) r.c_[k] = r.c_[k] + c_[k];
            if (k < o.c_.size()) r.c_[k] = r.c_[k] + o.c_[k];
        }
        r.prune();
        return r;
    }

    Poly1 operator*(const Poly1& o) const {
        Poly1 r;
        if (is_zero() || o.is_zero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, T{});
        for (size_t i = 0; i < c_.size(); ++i) {
            if (scalar_is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        r.prune();
        return r;
    }

    Poly1 scaled(const T& s) const {
        Poly1 r = *this;
        for (auto& v : r.c_) v = v * s;
        r.prune();
        return r;
    }

    /// ∫₀ᵗ p(τ) dτ
    Poly1 integral() const {
        Poly1 r;
        if (is_zero()) return r;
        r.c_.assign(c_.size() + 1, T{});
        for (size_t k = 0; k < c_.size(); ++k)
            r.c_[k + 1] = c_[k] * scalar_ratio<T>(1, static_cast<long long>(k) + 1);
        r.prune();
        return r;
    }

    /// ∫₀ᵗ (t−τ) p(τ) dτ
    Poly1 convolution_integral() const {
        Poly1 r;
        if (is_zero()) return r;
        r.c_.assign(c_.size() + 2, T{});
        for (size_t k = 0; k < c_.size(); ++k) {
            long long kk = static_cast<long long>(k);
            r.c_[k + 2] = c_[k] * scalar_ratio<T>(1, (kk + 1) * (kk + 2));
        }
        r.prune();
        return r;
    }

    bool operator==(const Poly1& o) const { return c_ == o.c_; }

    /// p(1) — the unit-time evaluation.
    T at_one() const {
        T s{};
        for (const auto& v : c_) s = s + v;
        return s;
    }

private:
    void prune() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
bool scalar_is_zero(const Poly1<T>& p) { return p.is_zero(); }

/// Bivariate power series truncated at a fixed total degree. Terms of total
/// degree beyond the truncation order are semantically O(|(x,y)|^{K+1}).
template <class T>
class Series2 {
public:
    using key = std::pair<int, int>;

    explicit Series2(int order = 0) : order_(order) {}

    static Series2 variable_x(int order) {
        Series2 s(order);
        s.set(1, 0, scalar_ratio<T>(1, 1));
        return s;
    }
    static Series2 variable_y(int order) {
        Series2 s(order);
        s.set(0, 1, scalar_ratio<T>(1, 1));
        return s;
    }

    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<key, T>& terms() const { return c_; }

    T coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? T{} : it->second;
    }

    void set(int i, int j, T v) {
        if (i < 0 || j < 0) throw input_error("negative exponent in series term");
        if (i + j > order_ || scalar_is_zero(v)) {
            c_.erase({i, j});
            return;
        }
        c_[{i, j}] = std::move(v);
    }

    void add_term(int i, int j, const T& v) {
        if (i + j > order_ || scalar_is_zero(v)) return;
        auto [it, fresh] = c_.try_emplace({i, j}, v);
        if (!fresh) {
            it->second = it->second + v;
            if (scalar_is_zero(it->second)) c_.erase(it);
        }
    }

    Series2 with_order(int k) const {
        Series2 r(k);
        for (const auto& [e, v] : c_)
            if (e.first + e.second <= k) r.c_.emplace(e, v);
        return r;
    }

    Series2 operator+(const Series2& o) const {
        Series2 r = with_order(std::min(order_, o.order_));
        for (const auto& [e, v] : o.c_) r.add_term(e.first, e.second, v);
        return r;
    }

    Series2 operator-(const Series2& o) const { return *this + o.scaled(scalar_ratio<T>(-1, 1)); }

    Series2 operator*(const Series2& o) const {
        Series2 r(std::min(order_, o.order_));
        for (const auto& [ea, va] : c_) {
            int da = ea.first + ea.second;
            if (da > r.order_) continue;
            for (const auto& [eb, vb] : o.c_) {
                if (da + eb.first + eb.second > r.order_) continue;
                r.add_term(ea.first + eb.first, ea.second + eb.second, va * vb);
            }
        }
        return r;
    }

    Series2 scaled(const T& s) const {
        Series2 r(order_);
        if (scalar_is_zero(s)) return r;
        for (const auto& [e, v] : c_) r.add_term(e.first, e.second, v * s);
        return r;
    }

    Series2 dx() const {
        Series2 r(order_ - 1);
        for (const auto& [e, v] : c_)
            if (e.first > 0) r.add_term(e.first - 1, e.second, v * scalar_ratio<T>(e.first, 1));
        return r;
    }

    Series2 dy() const {
        Series2 r(order_ - 1);
        for (const auto& [e, v] : c_)
            if (e.second > 0) r.add_term(e.first, e.second - 1, v * scalar_ratio<T>(e.second, 1));
        return r;
    }

    /// Lowest total degree among stored terms, or nullopt for the zero series.
    std::optional<int> min_degree() const {
        std::optional<int> d;
        for (const auto& [e, v] : c_) {
            int t = e.first + e.second;
            if (!d || t < *d) d = t;
        }
        return d;
    }

    double eval(double x, double y) const {
        double s = 0.0;
        for (const auto& [e, v] : c_)
            s += scalar_double(v) * std::pow(x, e.first) * std::pow(y, e.second);
        return s;
    }

    bool operator==(const Series2& o) const { return order_ == o.order_ && c_ == o.c_; }

private:
    int order_;
    std::map<key, T> c_;
};

template <class To, class From, class Fn>
Series2<To> series_map(const Series2<From>& s, Fn fn) {
    Series2<To> r(s.order());
    for (const auto& [e, v] : s.terms()) r.set(e.first, e.second, fn(v));
    return r;
}

inline Series2<double> series_to_double(const Series2<Rat>& s) {
    return series_map<double>(s, [](const Rat& v) { return rat_double(v); });
}

/// Univariate series with exponents p/den, p ∈ ℕ. den = 1 for ordinary
/// series, den = 2 for cusp separatrices. trunc_num bounds the largest
/// represented exponent numerator; terms beyond it are not claimed.
template <class T>
class Puiseux {
public:
    explicit Puiseux(int den = 1, int trunc_num = 0) : den_(den), trunc_(trunc_num) {
        if (den < 1) throw input_error("Puiseux denominator must be positive");
    }

    static Puiseux zero(int den, int trunc_num) { return Puiseux(den, trunc_num); }

    int den() const { return den_; }
    int trunc_num() const { return trunc_; }
    double trunc_exp() const { return static_cast<double>(trunc_) / den_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<int, T>& terms() const { return c_; }

    T coeff_num(int p) const {
        auto it = c_.find(p);
        return it == c_.end() ? T{} : it->second;
    }
    /// Coefficient at an integer exponent e (i.e. numerator e·den).
    T coeff_int(int e) const { return coeff_num(e * den_); }

    void set_num(int p, T v) {
        if (p < 0) throw input_error("negative Puiseux exponent");
        if (p > trunc_ || scalar_is_zero(v)) {
            c_.erase(p);
            return;
        }
        c_[p] = std::move(v);
    }

    void add_num(int p, const T& v) {
        if (p > trunc_ || scalar_is_zero(v)) return;
        auto [it, fresh] = c_.try_emplace(p, v);
        if (!fresh) {
            it->second = it->second + v;
            if (scalar_is_zero(it->second)) c_.erase(it);
        }
    }

    std::optional<std::pair<int, T>> lowest() const {
        if (c_.empty()) return std::nullopt;
        return std::make_pair(c_.begin()->first, c_.begin()->second);
    }

    Puiseux truncated(int trunc_num) const {
        Puiseux r(den_, std::min(trunc_, trunc_num));
        for (const auto& [p, v] : c_)
            if (p <= r.trunc_) r.c_.emplace(p, v);
        return r;
    }

    Puiseux rescaled(int new_den) const {
        if (new_den % den_ != 0) throw input_error("incompatible Puiseux denominators");
        int k = new_den / den_;
        Puiseux r(new_den, trunc_ * k);
        for (const auto& [p, v] : c_) r.c_.emplace(p * k, v);
        return r;
    }

    Puiseux operator+(const Puiseux& o) const {
        int d = std::lcm(den_, o.den_);
        Puiseux a = rescaled(d), b = o.rescaled(d);
        Puiseux r(d, std::min(a.trunc_, b.trunc_));
        for (const auto& [p, v] : a.c_) r.add_num(p, v);
        for (const auto& [p, v] : b.c_) r.add_num(p, v);
        return r;
    }

    Puiseux operator-(const Puiseux& o) const { return *this + o.scaled(scalar_ratio<T>(-1, 1)); }

    Puiseux operator*(const Puiseux& o) const {
        int d = std::lcm(den_, o.den_);
        Puiseux a = rescaled(d), b = o.rescaled(d);
        // validity: an unknown term of a beyond trunc multiplies b's lowest
        int la = a.c_.empty() ? 0 : a.c_.begin()->first;
        int lb = b.c_.empty() ? 0 : b.c_.begin()->first;
        int tr = std::min(a.trunc_ + lb, b.trunc_ + la);
        Puiseux r(d, tr);
        for (const auto& [pa, va] : a.c_) {
            if (pa > tr) break;
            for (const auto& [pb, vb] : b.c_) {
                if (pa + pb > tr) break;
                r.add_num(pa + pb, va * vb);
            }
        }
        return r;
    }

    Puiseux scaled(const T& s) const {
        Puiseux r(den_, trunc_);
        if (scalar_is_zero(s)) return r;
        for (const auto& [p, v] : c_) r.add_num(p, v * s);
        return r;
    }

    /// Term-by-term d/dx; exponent p/d maps to p/d − 1.
    Puiseux derivative() const {
        Puiseux r(den_, trunc_ - den_);
        for (const auto& [p, v] : c_) {
            if (p == 0) continue;
            r.add_num(p - den_, v * scalar_ratio<T>(p, den_));
        }
        return r;
    }

    double eval(double x) const {
        double s = 0.0;
        for (const auto& [p, v] : c_)
            s += scalar_double(v) * std::pow(x, static_cast<double>(p) / den_);
        return s;
    }

    bool operator==(const Puiseux& o) const {
        return den_ == o.den_ && trunc_ == o.trunc_ && c_ == o.c_;
    }

private:
    int den_, trunc_;
    std::map<int, T> c_;
};

template <class To, class From, class Fn>
Puiseux<To> puiseux_map(const Puiseux<From>& s, Fn fn) {
    Puiseux<To> r(s.den(), s.trunc_num());
    for (const auto& [p, v] : s.terms()) r.set_num(p, fn(v));
    return r;
}

inline Puiseux<double> puiseux_to_double(const Puiseux<Rat>& s) {
    return puiseux_map<double>(s, [](const Rat& v) { return rat_double(v); });
}

/// s(x, f(x)) for a univariate f with f(0) = 0 and no negative exponents.
template <class T>
Puiseux<T> substitute_y(const Series2<T>& s, const Puiseux<T>& f) {
    if (auto l = f.lowest(); l && l->first <= 0)
        throw input_error("substitute_y: substituted series must vanish at 0");
    int d = f.den();
    // dropped terms of s have substituted exponent > order; dropped terms of
    // f enter through ∂s/∂y = O(1) at exponent > f.trunc
    int tr = std::min(s.order() * d, f.is_zero() ? s.order() * d : f.trunc_num());
    Puiseux<T> r(d, tr);
    // powers of f, computed incrementally
    std::vector<Puiseux<T>> fp;
    Puiseux<T> one(d, tr);
    one.set_num(0, scalar_ratio<T>(1, 1));
    fp.push_back(one);
    int maxj = 0;
    for (const auto& [e, v] : s.terms()) maxj = std::max(maxj, e.second);
    for (int j = 1; j <= maxj; ++j) {
        Puiseux<T> p = fp.back() * f;
        // keep power validity at least to tr for bookkeeping simplicity
        fp.push_back(p.truncated(tr));
    }
    for (const auto& [e, v] : s.terms()) {
        for (const auto& [p, w] : fp[e.second].terms()) {
            int q = e.first * d + p;
            if (q <= tr) r.add_num(q, v * w);
        }
    }
    return r;
}

/// Solves s(x, f(x)) = 0 for f with f(0) = f'(0) = 0, where s = y + A(x,y),
/// by undetermined coefficients order-by-order up to the truncation order.
template <class T>
Puiseux<T> solve_implicit(const Series2<T>& s) {
    if (!scalar_is_zero(s.coeff(0, 0)))
        throw input_error("solve_implicit: series must vanish at the origin");
    if (!scalar_is_zero(s.coeff(0, 1) - scalar_ratio<T>(1, 1)))
        throw input_error("solve_implicit: ∂s/∂y(0,0) must equal 1");
    if (!scalar_is_zero(s.coeff(1, 0)))
        throw input_error("solve_implicit: series must have no x-linear term");
    int K = s.order();
    Puiseux<T> f(1, K);
    for (int k = 2; k <= K; ++k) {
        Puiseux<T> res = substitute_y(s, f.is_zero() ? Puiseux<T>(1, K) : f);
        T c = res.coeff_num(k);
        if (!scalar_is_zero(c)) f.set_num(k, c * scalar_ratio<T>(-1, 1));
    }
    return f;
}

/// s(u, v + f(u)) as a bivariate series in (u, v); f must be an ordinary
/// (den = 1) series with f(0) = 0.
template <class T>
Series2<T> shift_y(const Series2<T>& s, const Puiseux<T>& f) {
    if (f.den() != 1) throw input_error("shift_y: f must have integer exponents");
    if (auto l = f.lowest(); l && l->first <= 0)
        throw input_error("shift_y: f must vanish at 0");
    int K = s.order();
    int maxj = 0;
    for (const auto& [e, v] : s.terms()) maxj = std::max(maxj, e.second);
    // powers of f as dense coefficient maps
    std::vector<Puiseux<T>> fp;
    Puiseux<T> one(1, K);
    one.set_num(0, scalar_ratio<T>(1, 1));
    fp.push_back(one);
    for (int j = 1; j <= maxj; ++j) fp.push_back((fp.back() * f).truncated(K));
    // binomial table
    std::vector<std::vector<long long>> binom(maxj + 1, std::vector<long long>(maxj + 1, 0));
    for (int nn = 0; nn <= maxj; ++nn) {
        binom[nn][0] = 1;
        for (int kk = 1; kk <= nn; ++kk)
            binom[nn][kk] = binom[nn - 1][kk - 1] + (kk <= nn - 1 ? binom[nn - 1][kk] : 0);
    }
    Series2<T> r(K);
    for (const auto& [e, v] : s.terms()) {
        int i = e.first, j = e.second;
        for (int l = 0; l <= j; ++l) {
            T cb = v * scalar_ratio<T>(binom[j][l], 1);
            for (const auto& [p, w] : fp[j - l].terms()) {
                if (i + p + l > K) continue;
                r.add_term(i + p, l, cb * w);
            }
        }
    }
    return r;
}

/// U(a(x,y), b(x,y)) — bivariate composition, used for flow-map group checks.
template <class T>
Series2<T> compose2(const Series2<T>& u, const Series2<T>& a, const Series2<T>& b) {
    if (auto la = a.min_degree(); la && *la < 1)
        throw input_error("compose2: inner series must vanish at the origin");
    if (auto lb = b.min_degree(); lb && *lb < 1)
        throw input_error("compose2: inner series must vanish at the origin");
    int K = std::min({u.order(), a.order(), b.order()});
    int maxi = 0, maxj = 0;
    for (const auto& [e, v] : u.terms()) {
        maxi = std::max(maxi, e.first);
        maxj = std::max(maxj, e.second);
    }
    std::vector<Series2<T>> ap, bp;
    Series2<T> one(K);
    one.set(0, 0, scalar_ratio<T>(1, 1));
    ap.push_back(one);
    bp.push_back(one);
    for (int i = 1; i <= maxi; ++i) ap.push_back(ap.back() * a);
    for (int j = 1; j <= maxj; ++j) bp.push_back(bp.back() * b);
    Series2<T> r(K);
    for (const auto& [e, v] : u.terms()) {
        Series2<T> term = (ap[e.first] * bp[e.second]).scaled(v);
        r = r + term;
    }
    return r;
}

}  // namespace nilbox

#endif
