#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

/// Dense polynomial in one variable over an exact ring T.
///
/// Canonical form: the highest stored coefficient is nonzero; the zero
/// polynomial is the empty coefficient list (degree() == -1).
template <typename T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly monomial(int k, T v = T(1)) {
        std::vector<T> c(static_cast<size_t>(k) + 1);
        c[static_cast<size_t>(k)] = std::move(v);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of x^k; zero beyond the stored degree.
    T at(int k) const {
        if (k < 0 || k > degree())
            return T{};
        return c_[static_cast<size_t>(k)];
    }

    Poly operator-() const {
        std::vector<T> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i)
            r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T{})
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i)
            r[i] = a.c_[i] * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == T{})
            c_.pop_back();
    }
    std::vector<T> c_;
};

using Polynomial = Poly<Rational>;
/// Bivariate values: polynomial in x whose coefficients are polynomials in y.
using BiPoly = Poly<Polynomial>;

inline Polynomial poly_x() { return Polynomial::monomial(1); }

/// Horner evaluation, exact.
inline Rational eval(const Polynomial& p, const Rational& x0) {
    Rational r(0);
    for (int k = p.degree(); k >= 0; --k)
        r = r * x0 + p.at(k);
    return r;
}

inline Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1)
        return Polynomial();
    std::vector<Rational> r(static_cast<size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        r[static_cast<size_t>(k - 1)] = Rational(k) * p.at(k);
    return Polynomial(std::move(r));
}

/// p(x+y) by binomial re-expansion.
inline Polynomial shift(const Polynomial& p, const Rational& y) {
    if (y.is_zero())
        return p;
    std::vector<Rational> r(p.coeffs().size());
    for (int m = 0; m <= p.degree(); ++m) {
        const Rational& cm = p.at(m);
        if (cm.is_zero())
            continue;
        Rational ypow(1);
        for (int j = m; j >= 0; --j) {
            r[static_cast<size_t>(j)] += cm * Rational::binom(m, j) * ypow;
            ypow *= y;
        }
    }
    return Polynomial(std::move(r));
}

/// p(x+y) with y symbolic: coefficient of x^j is a polynomial in y.
inline BiPoly shift_sym(const Polynomial& p) {
    std::vector<Polynomial> r(p.coeffs().size());
    for (int m = 0; m <= p.degree(); ++m) {
        const Rational& cm = p.at(m);
        if (cm.is_zero())
            continue;
        for (int j = 0; j <= m; ++j)
            r[static_cast<size_t>(j)] +=
                Polynomial::monomial(m - j, cm * Rational::binom(m, j));
    }
    return BiPoly(std::move(r));
}

/// Embeds p(x) into the bivariate ring (coefficients constant in y).
inline BiPoly to_bipoly(const Polynomial& p) {
    std::vector<Polynomial> r(p.coeffs().size());
    for (int k = 0; k <= p.degree(); ++k)
        r[static_cast<size_t>(k)] = Polynomial::constant(p.at(k));
    return BiPoly(std::move(r));
}

inline Polynomial mul_by_x(const Polynomial& p) { return p * poly_x(); }

inline Polynomial div_by_x(const Polynomial& p) {
    if (!p.at(0).is_zero())
        throw std::domain_error("x^{-1} undefined: nonzero constant term");
    if (p.is_zero())
        return p;
    std::vector<Rational> r(p.coeffs().begin() + 1, p.coeffs().end());
    return Polynomial(std::move(r));
}

/// Newton's forward difference Delta^k p via the alternating binomial sum.
inline Polynomial forward_difference(const Polynomial& p, int k = 1) {
    if (k < 0)
        throw std::domain_error("forward_difference: negative order");
    Polynomial r;
    for (int l = 0; l <= k; ++l) {
        Rational c = Rational::binom(k, l);
        if ((k - l) % 2 != 0)
            c = -c;
        r += shift(p, Rational(l)) * c;
    }
    return r;
}

/// Monic falling factorial (x)_n; (x)_0 = 1.
inline Polynomial falling_factorial(int n) {
    if (n < 0)
        throw std::domain_error("falling_factorial: negative index");
    Polynomial p = Polynomial::constant(Rational(1));
    for (int i = 0; i < n; ++i)
        p *= Polynomial(std::vector<Rational>{Rational(-i), Rational(1)});
    return p;
}

/// Renders in ascending-degree form, e.g. "1/6 - x + x^2".
inline std::string to_string(const Polynomial& p, const std::string& var = "x") {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.at(k);
        if (c.is_zero())
            continue;
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = neg ? -c : c;
        std::string mag = a.str();
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1")
                out += mag + "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace umbra
