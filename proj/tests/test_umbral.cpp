#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbra/families.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;

namespace {

constexpr int N = 16;

Polynomial P(std::vector<long> c) {
    std::vector<Rational> r(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        r[i] = Rational(c[i]);
    return Polynomial(std::move(r));
}

}  // namespace

TEST_CASE("apply_operator") {
    CHECK(apply_operator(RSeries::t(N), P({0, 0, 0, 1})) == P({0, 0, 3}));
    CHECK(apply_operator(series_exp_t(N), P({0, 0, 1})) == P({1, 2, 1}));  // p(x+1)
    CHECK(apply_operator(series_expm1(N), P({0, 0, 1})) == P({1, 2}));     // Delta x^2
    CHECK(apply_operator(series_expm1(N), P({0, 0, 1})) ==
          forward_difference(P({0, 0, 1})));
    RSeries tiny = RSeries::one(1);
    CHECK_THROWS_WITH_AS(apply_operator(tiny, P({0, 0, 1})),
                         "series too short for polynomial degree", std::domain_error);
}

TEST_CASE("operator algebra is multiplicative") {
    RSeries f = series_expm1(N), g = series_half_expp1(N);
    Polynomial p = P({3, -1, 0, 2, 1});
    CHECK(apply_operator(f * g, p) == apply_operator(f, apply_operator(g, p)));
    CHECK(apply_operator(f, apply_operator(g, p)) == apply_operator(g, apply_operator(f, p)));
}

TEST_CASE("pairing") {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) {
            RSeries tk(N);
            tk.at(k) = Rational(1);
            Rational want = (n == k) ? Rational::factorial(n) : Rational(0);
            CHECK(pairing(tk, Polynomial::monomial(n)) == want);
        }
    // <e^{yt} | p> = p(y)
    Polynomial p = P({1, -4, 2, 1});
    Rational y(3, 2);
    RSeries eyt = exp_series(RSeries::t(N) * y);
    CHECK(pairing(eyt, p) == eval(p, y));
    CHECK(pairing(series_expm1(N), P({0, 0, 1})) == Rational(1));
    CHECK(pairing(series_expm1(N), p) == eval(apply_operator(series_expm1(N), p), Rational(0)));
}

TEST_CASE("ShefferPair validation") {
    CHECK_THROWS_AS(ShefferPair(RSeries::t(N), RSeries::t(N)), std::domain_error);
    CHECK_THROWS_AS(ShefferPair(RSeries::one(N), RSeries::one(N)), std::domain_error);
    CHECK_NOTHROW(ShefferPair(RSeries::one(N), RSeries::t(N)));
}

TEST_CASE("sheffer_sequence examples") {
    ShefferPair trivial(RSeries::one(N), RSeries::t(N));
    for (int n = 0; n <= 6; ++n)
        CHECK(sheffer_sequence(trivial, n) == Polynomial::monomial(n));

    ShefferPair bernoulli(series_expm1_over_t(N), RSeries::t(N));
    CHECK(sheffer_sequence(bernoulli, 2) ==
          Polynomial(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));

    ShefferPair pidduck = family_pair({Family::pidduck, {}}, N);
    CHECK(sheffer_sequence(pidduck, 1) == P({1, 2}));

    CHECK_THROWS_AS(sheffer_sequence(trivial, -1), std::domain_error);
    ShefferPair low(RSeries::one(2), RSeries::t(2));
    CHECK_THROWS_AS(sheffer_sequence(low, 5), std::domain_error);
}

TEST_CASE("associated_sequence examples") {
    for (int n = 0; n <= 6; ++n)
        CHECK(associated_sequence(RSeries::t(N), n) == Polynomial::monomial(n));
    CHECK(associated_sequence(series_expm1(N), 2) == P({0, -1, 1}));  // (x)_2
    for (int n = 0; n <= 6; ++n) {
        Polynomial phi = associated_sequence(series_log1p(N), n);
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            c[static_cast<size_t>(k)] = stirling2(n, k);
        CHECK(phi == Polynomial(std::move(c)));
    }
}

TEST_CASE("associated sequence structure") {
    RSeries f = family_delta_series({Family::mott, {}}, N);
    for (int n = 1; n <= 6; ++n) {
        Polynomial p = associated_sequence(f, n);
        CHECK(p.degree() == n);
        CHECK(p.at(0).is_zero());
        CHECK(p.at(n) == f.at(1).pow(-n));
    }
    CHECK(associated_sequence(f, 0) == Polynomial::constant(Rational(1)));
}

TEST_CASE("transfer examples") {
    // Abel: f = t, g = t e^{bt}, b = 1, n = 2 -> x(x-2)
    RSeries g = family_delta_series({Family::abel, {{"b", Rational(1)}}}, N);
    CHECK(transfer(RSeries::t(N), g, 2, Polynomial::monomial(2)) == P({0, -2, 1}));
    // f = g: p_n unchanged
    CHECK(transfer(g, g, 3, P({0, 5, 0, 1})) == P({0, 5, 0, 1}));
    // Bessel: g = t - t^2/2, n = 2 -> x^2 + x
    RSeries bes(N);
    bes.at(1) = Rational(1);
    bes.at(2) = Rational(-1, 2);
    CHECK(transfer(RSeries::t(N), bes, 2, Polynomial::monomial(2)) == P({0, 1, 1}));
    CHECK_THROWS_AS(transfer(RSeries::one(N), g, 2, Polynomial::monomial(2)),
                    std::domain_error);
    CHECK_THROWS_AS(transfer(RSeries::t(N), g, 0, Polynomial::constant(Rational(1))),
                    std::domain_error);
    // nonzero constant term in p_n
    CHECK_THROWS_AS(transfer(RSeries::t(N), g, 2, P({1, 0, 1})), std::domain_error);
}

TEST_CASE("cross-method equality transfer vs generating function") {
    for (const auto& spec : {FamilySpec{Family::abel, {{"b", Rational(2)}}},
                             FamilySpec{Family::exponential, {}},
                             FamilySpec{Family::mott, {}},
                             FamilySpec{Family::bessel_p, {}},
                             FamilySpec{Family::assoc_halved, {}}}) {
        RSeries f = family_delta_series(spec, N);
        for (int n = 1; n <= 6; ++n)
            CHECK(transfer(RSeries::t(N), f, n, Polynomial::monomial(n)) ==
                  associated_sequence(f, n));
    }
}

TEST_CASE("duality") {
    ShefferPair trivial(RSeries::one(N), RSeries::t(N));
    std::vector<Polynomial> xs;
    for (int n = 0; n <= 6; ++n)
        xs.push_back(Polynomial::monomial(n));
    CHECK(duality_check(trivial, xs, 6));

    // broken sequence: witness at (2, 0)
    std::vector<Polynomial> bad = xs;
    bad[2] = P({1, 0, 1});
    auto w = duality_witness(trivial, bad, 6);
    REQUIRE(w.has_value());
    CHECK(w->n == 2);
    CHECK(w->k == 0);
    CHECK(w->value == Rational(1));
    CHECK(w->expected == Rational(0));

    // Abel, b = 2
    RSeries fa = family_delta_series({Family::abel, {{"b", Rational(2)}}}, N);
    ShefferPair abel(RSeries::one(N), fa);
    std::vector<Polynomial> A;
    for (int n = 0; n <= 6; ++n)
        A.push_back(associated_sequence(fa, n));
    CHECK(duality_check(abel, A, 6));
}

TEST_CASE("binomial convolution") {
    ShefferPair trivial(RSeries::one(N), RSeries::t(N));
    for (int n = 0; n <= 6; ++n)
        CHECK(binomial_convolution_check(trivial, n));  // binomial theorem
    RSeries fa = family_delta_series({Family::abel, {{"b", Rational(1)}}}, N);
    ShefferPair abel(RSeries::one(N), fa);
    RSeries bes(N);
    bes.at(1) = Rational(1);
    bes.at(2) = Rational(-1, 2);
    ShefferPair bessel(RSeries::one(N), bes);
    for (int n = 0; n <= 6; ++n) {
        CHECK(binomial_convolution_check(abel, n));
        CHECK(binomial_convolution_check(bessel, n));
    }
}

TEST_CASE("exp_in_y degree bound") {
    BivariateSeries e = exp_in_y(series_expm1(10));
    for (int k = 0; k <= 10; ++k)
        CHECK(e.at(k).degree() <= k);
    CHECK_THROWS_AS(exp_in_y(RSeries::one(5)), std::domain_error);
}
