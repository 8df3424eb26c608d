#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"

namespace umbra {

/// f(t) p(x) = sum_k c_k p^{(k)}(x); t^k acts as the k-th derivative.
/// Requires trunc_order(f) >= deg p so no acting term is lost.
inline Polynomial apply_operator(const RSeries& f, const Polynomial& p) {
    if (f.trunc_order() < p.degree())
        throw std::domain_error("series too short for polynomial degree");
    Polynomial r;
    Polynomial d = p;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!f.at(k).is_zero())
            r += d * f.at(k);
        d = derivative(d);
    }
    return r;
}

/// <f(t) | p(x)> = sum_n n! c_n [x^n] p.
inline Rational pairing(const RSeries& f, const Polynomial& p) {
    if (f.trunc_order() < p.degree())
        throw std::domain_error("series too short for polynomial degree");
    Rational r(0);
    for (int n = 0; n <= p.degree(); ++n)
        r += Rational::factorial(n) * f.at(n) * p.at(n);
    return r;
}

/// A Sheffer pair: invertible g (order 0) and delta f (order 1).
struct ShefferPair {
    RSeries g;
    RSeries f;

    ShefferPair(RSeries g_, RSeries f_) : g(std::move(g_)), f(std::move(f_)) {
        if (g.order() != 0)
            throw std::domain_error("Sheffer pair: g is not an invertible series");
        if (f.order() != 1)
            throw std::domain_error("Sheffer pair: f is not a delta series");
    }
};

/// S_n(x) = n! [t^n] reciprocal(g(fbar)) e^{x fbar(t)}.
/// The y-exponential is the finite sum over k <= n of fbar^k y^k / k!.
inline Polynomial sheffer_sequence(const ShefferPair& pair, int n) {
    if (n < 0)
        throw std::domain_error("sheffer_sequence: negative index");
    if (pair.f.trunc_order() < n)
        throw std::domain_error("sheffer_sequence: truncation order " +
                                std::to_string(pair.f.trunc_order()) +
                                " insufficient for n=" + std::to_string(n));
    RSeries fbar = comp_inverse(pair.f);
    RSeries amp = reciprocal(compose(pair.g, fbar));
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    RSeries pw = amp;
    Rational nfac = Rational::factorial(n);
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            pw = pw * fbar;
        coeffs[static_cast<size_t>(k)] = nfac / Rational::factorial(k) * pw.at(n);
    }
    return Polynomial(std::move(coeffs));
}

inline Polynomial associated_sequence(const RSeries& f, int n) {
    return sheffer_sequence(ShefferPair(RSeries::one(f.trunc_order()), f), n);
}

/// Transfer formula: q_n = x (f/g)^n x^{-1} p_n, where p_n ~ (1, f) and the
/// result is the associated sequence of g. The common factor t is cancelled
/// before taking the n-th power, so f/g is an order-0 series.
inline Polynomial transfer(const RSeries& f, const RSeries& g, int n, const Polynomial& p_n) {
    if (f.order() != 1 || g.order() != 1)
        throw std::domain_error("transfer requires delta series");
    if (n < 1)
        throw std::domain_error("transfer: n must be >= 1");
    RSeries ratio = f.shift_down(1) * reciprocal(g.shift_down(1));
    return mul_by_x(apply_operator(pow(ratio, n), div_by_x(p_n)));
}

struct DualityWitness {
    int n = 0;
    int k = 0;
    Rational value;
    Rational expected;
};

/// Checks <g f^k | S_n> = n! delta_{n,k} for 0 <= n,k <= n_max.
/// Returns the first failing (n, k) or nullopt on success.
inline std::optional<DualityWitness> duality_witness(const ShefferPair& pair,
                                                     const std::vector<Polynomial>& S,
                                                     int n_max) {
    RSeries gfk = pair.g;
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0)
            gfk = gfk * pair.f;
        for (int n = 0; n <= n_max; ++n) {
            Rational v = pairing(gfk, S[static_cast<size_t>(n)]);
            Rational want = (n == k) ? Rational::factorial(n) : Rational(0);
            if (v != want)
                return DualityWitness{n, k, v, want};
        }
    }
    return std::nullopt;
}

inline bool duality_check(const ShefferPair& pair, const std::vector<Polynomial>& S, int n_max) {
    return !duality_witness(pair, S, n_max).has_value();
}

/// Verifies S_n(x+y) = sum_k binom(n,k) p_k(y) S_{n-k}(x) as a bivariate
/// polynomial identity, with p_k = g(t) S_k.
inline bool binomial_convolution_check(const ShefferPair& pair, int n) {
    std::vector<Polynomial> S(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        S[static_cast<size_t>(k)] = sheffer_sequence(pair, k);
    BiPoly lhs = shift_sym(S[static_cast<size_t>(n)]);
    BiPoly rhs;
    for (int k = 0; k <= n; ++k) {
        Polynomial pk = apply_operator(pair.g, S[static_cast<size_t>(k)]);
        // p_k(y) becomes a constant-in-x, polynomial-in-y factor
        BiPoly pk_y = BiPoly::constant(pk);
        rhs += pk_y * to_bipoly(S[static_cast<size_t>(n - k)]) * Polynomial::constant(Rational::binom(n, k));
    }
    return lhs == rhs;
}

}  // namespace umbra
