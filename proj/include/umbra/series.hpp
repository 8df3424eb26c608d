#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Truncated formal power series in t over an exact ring T.
///
/// coeffs()[k] holds the ordinary coefficient of t^k (not the EGF
/// coefficient a_k/k!); trunc_order() is the largest retained exponent.
/// Arithmetic results carry the minimum of the operands' orders.
template <typename T>
class Series {
  public:
    explicit Series(int trunc_order)
        : c_(static_cast<size_t>(check_order(trunc_order)) + 1) {}
    Series(std::vector<T> coeffs, int trunc_order)
        : c_(std::move(coeffs)) {
        check_order(trunc_order);
        c_.resize(static_cast<size_t>(trunc_order) + 1);
    }

    static Series one(int n) {
        Series s(n);
        s.c_[0] = T(1);
        return s;
    }
    static Series t(int n) {
        Series s(n);
        if (n >= 1)
            s.c_[1] = T(1);
        return s;
    }

    int trunc_order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& at(int k) const { return c_[static_cast<size_t>(k)]; }
    T& at(int k) { return c_[static_cast<size_t>(k)]; }

    /// Smallest k with a nonzero coefficient; empty for the zero truncation.
    std::optional<int> order() const {
        for (int k = 0; k <= trunc_order(); ++k)
            if (!(c_[static_cast<size_t>(k)] == T{}))
                return k;
        return std::nullopt;
    }

    Series truncated(int n) const {
        std::vector<T> r(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(n) + 1));
        return Series(std::move(r), n);
    }

    /// Divides by t^k (shifts coefficients down); requires order >= k.
    Series shift_down(int k) const {
        for (int j = 0; j < k && j <= trunc_order(); ++j)
            if (!(c_[static_cast<size_t>(j)] == T{}))
                throw std::domain_error("series shift_down: order too small");
        std::vector<T> r(c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(k)), c_.end());
        return Series(std::move(r), trunc_order() - k);
    }

    Series operator-() const {
        Series r(trunc_order());
        for (size_t i = 0; i < c_.size(); ++i)
            r.c_[i] = -c_[i];
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.trunc_order(), b.trunc_order());
        Series r(n);
        for (int k = 0; k <= n; ++k)
            r.at(k) = a.at(k) + b.at(k);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.trunc_order(), b.trunc_order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.at(i) == T{})
                continue;
            for (int j = 0; j + i <= n; ++j)
                r.at(i + j) += a.at(i) * b.at(j);
        }
        return r;
    }
    friend Series operator*(const Series& a, const T& s) {
        Series r(a.trunc_order());
        for (int k = 0; k <= a.trunc_order(); ++k)
            r.at(k) = a.at(k) * s;
        return r;
    }
    friend Series operator*(const T& s, const Series& a) { return a * s; }

    /// Exact equality on the common truncation range.
    friend bool operator==(const Series& a, const Series& b) {
        int n = std::min(a.trunc_order(), b.trunc_order());
        for (int k = 0; k <= n; ++k)
            if (!(a.at(k) == b.at(k)))
                return false;
        return true;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  private:
    static int check_order(int n) {
        if (n < 0)
            throw std::domain_error("series truncation order must be >= 0");
        return n;
    }
    std::vector<T> c_;
};

using RSeries = Series<Rational>;
/// Houses expansions like e^{y fbar(t)}: coefficient of t^k is a polynomial in y.
using BivariateSeries = Series<Polynomial>;

/// Multiplicative inverse: f * reciprocal(f) = 1 up to t^N.
inline RSeries reciprocal(const RSeries& f) {
    if (f.order() != 0)
        throw std::domain_error("not invertible series: order != 0");
    int n = f.trunc_order();
    RSeries b(n);
    b.at(0) = Rational(1) / f.at(0);
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j)
            s += f.at(j) * b.at(k - j);
        b.at(k) = -s / f.at(0);
    }
    return b;
}

/// f(g(t)) by Horner; requires order(g) >= 1.
inline RSeries compose(const RSeries& f, const RSeries& g) {
    auto og = g.order();
    if (og.has_value() && *og == 0)
        throw std::domain_error("composition requires delta series");
    int n = std::min(f.trunc_order(), g.trunc_order());
    RSeries gt = g.truncated(n);
    RSeries r(n);
    r.at(0) = f.at(n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * gt;
        r.at(0) += f.at(k);
    }
    return r;
}

/// Compositional inverse by triangular coefficient solve;
/// compose(f, comp_inverse(f)) = t up to t^N.
inline RSeries comp_inverse(const RSeries& f) {
    if (f.order() != 1 || f.at(1).is_zero())
        throw std::domain_error("not a delta series with unit linear part");
    int n = f.trunc_order();
    RSeries fb(n);
    fb.at(1) = Rational(1) / f.at(1);
    for (int k = 2; k <= n; ++k) {
        RSeries c = compose(f.truncated(k), fb.truncated(k));
        fb.at(k) = -c.at(k) / f.at(1);
    }
    return fb;
}

/// exp of a series with order >= 1.
inline RSeries exp_series(const RSeries& f) {
    auto o = f.order();
    if (o.has_value() && *o == 0)
        throw std::domain_error("exp_series: nonzero constant term " + f.at(0).str());
    int n = f.trunc_order();
    RSeries r = RSeries::one(n);
    RSeries term = RSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        term = term * f * (Rational(1) / Rational(k));
        r = r + term;
    }
    return r;
}

/// log of a series with constant term exactly 1.
inline RSeries log_series(const RSeries& f) {
    if (!(f.at(0) == Rational(1)))
        throw std::domain_error("log_series: constant term is " + f.at(0).str() + ", expected 1");
    int n = f.trunc_order();
    RSeries u = f;
    u.at(0) = Rational(0);
    RSeries r(n);
    RSeries term = RSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        term = term * u;
        r = r + term * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return r;
}

/// f^r for rational r. Integer r >= 0: any f; integer r < 0: order 0;
/// non-integer r: constant term exactly 1 (via exp(r log f)).
inline RSeries pow(const RSeries& f, const Rational& r) {
    if (r.is_integer()) {
        long e = r.to_long();
        if (e >= 0) {
            RSeries out = RSeries::one(f.trunc_order());
            RSeries base = f;
            // binary power
            while (e > 0) {
                if (e & 1)
                    out = out * base;
                e >>= 1;
                if (e > 0)
                    base = base * base;
            }
            return out;
        }
        return pow(reciprocal(f), -r);
    }
    if (!(f.at(0) == Rational(1)))
        throw std::domain_error("rational power undefined: constant term is " + f.at(0).str());
    return exp_series(log_series(f) * r);
}

inline RSeries pow(const RSeries& f, long e) { return pow(f, Rational(e)); }

/// e^{y f(t)} expanded as the finite sum over k of f^k y^k / k!,
/// exact through t^N when order(f) >= 1.
inline BivariateSeries exp_in_y(const RSeries& f) {
    auto o = f.order();
    if (o.has_value() && *o == 0)
        throw std::domain_error("exp_in_y requires order >= 1");
    int n = f.trunc_order();
    BivariateSeries r(n);
    RSeries pw = RSeries::one(n);
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            pw = pw * f;
        Rational inv_kfac = Rational(1) / Rational::factorial(k);
        for (int m = k; m <= n; ++m)
            if (!pw.at(m).is_zero())
                r.at(m) += Polynomial::monomial(k, pw.at(m) * inv_kfac);
    }
    return r;
}

}  // namespace umbra
