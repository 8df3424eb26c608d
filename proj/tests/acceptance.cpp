// Acceptance suite: exhaustive exact verification plus independent oracles.
// Each criterion prints one pass/fail line with its runtime.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "umbra/families.hpp"
#include "umbra/identity_suite.hpp"
#include "umbra/report.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;
using namespace umbra::suite;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report_line(const char* id, bool ok, double secs, double budget) {
    std::printf("%s: %s (%.2f s, budget %.0f s)\n", id, ok ? "PASS" : "FAIL", secs, budget);
}

/// Every delta series in the catalog, with parameters sampled at {1,2,3}.
std::vector<RSeries> delta_catalog(int N) {
    std::vector<RSeries> out;
    out.push_back(RSeries::t(N));
    RSeries bes(N);
    bes.at(1) = Rational(1);
    bes.at(2) = Rational(-1, 2);
    out.push_back(bes);  // t - t^2/2
    out.push_back(series_expm1(N));
    out.push_back(series_log1p(N));
    std::vector<FamilySpec> specs = {
        {Family::mott, {}},
        {Family::assoc_halved, {}},          // 2t/(e^t+1)
        {Family::mittag_leffler, {}},        // (e^t-1)/(e^t+1)
        {Family::laguerre, {}},              // t/(t-1)
    };
    for (const Rational s : {Rational(1), Rational(2), Rational(3)}) {
        specs.push_back({Family::abel, {{"b", s}}});                  // t e^{bt}
        specs.push_back({Family::assoc_shifted_power, {{"a", s}}});   // t(1+t)^a
        specs.push_back({Family::assoc_c_exp, {{"c", s}}});           // t e^{c(e^t-1)}
        specs.push_back({Family::assoc_bernoulli_like, {{"a", s}}});  // t((e^t-1)/t)^a
        specs.push_back({Family::assoc_euler_like, {{"b", s}}});      // t((e^t+1)/2)^b
    }
    for (const auto& spec : specs)
        out.push_back(family_delta_series(spec, N));
    return out;
}

}  // namespace

TEST_CASE("AC1 inversion round trips up to t^16") {
    Timer t;
    bool ok = true;
    for (const auto& f : delta_catalog(16)) {
        RSeries fb = comp_inverse(f);
        ok = ok && compose(f, fb) == RSeries::t(16) && compose(fb, f) == RSeries::t(16);
    }
    double secs = t.seconds();
    report_line("AC1", ok && secs < 5.0, secs, 5);
    CHECK(ok);
    CHECK(secs < 5.0);
}

TEST_CASE("AC2 transfer formula vs generating function, n <= 8") {
    Timer t;
    const int N = 2 * 8 + 4;
    bool ok = true;
    for (const auto& f : delta_catalog(N))
        for (int n = 1; n <= 8; ++n)
            ok = ok && transfer(RSeries::t(N), f, n, Polynomial::monomial(n)) ==
                           associated_sequence(f, n);
    double secs = t.seconds();
    report_line("AC2", ok && secs < 10.0, secs, 10);
    CHECK(ok);
    CHECK(secs < 10.0);
}

TEST_CASE("AC3 duality for every catalog Sheffer pair, n,k <= 8") {
    Timer t;
    const int N = 2 * 8 + 4;
    std::vector<FamilySpec> specs = {
        {Family::exponential, {}},  {Family::mott, {}},
        {Family::bessel_p, {}},     {Family::mittag_leffler, {}},
        {Family::laguerre, {}},     {Family::assoc_halved, {}},
        {Family::pidduck, {}},      {Family::poisson_charlier, {{"a", Rational(2)}}},
        {Family::narumi, {{"a", Rational(2)}}},
        {Family::actuarial, {{"beta", Rational(1, 2)}}},
        {Family::abel, {{"b", Rational(3)}}},
        {Family::assoc_c_exp, {{"c", Rational(2)}}},
        {Family::assoc_shifted_power, {{"a", Rational(1)}}},
        {Family::assoc_bernoulli_like, {{"a", Rational(2)}}},
        {Family::assoc_euler_like, {{"b", Rational(2)}}},
    };
    for (const Rational a : {Rational(0), Rational(1, 2), Rational(5)})
        specs.push_back({Family::laguerre_alpha, {{"alpha", a}}});
    bool ok = true;
    for (const auto& spec : specs) {
        ShefferPair pair = family_pair(spec, N);
        std::vector<Polynomial> S;
        for (int n = 0; n <= 8; ++n)
            S.push_back(sheffer_sequence(pair, n));
        auto w = duality_witness(pair, S, 8);
        if (w.has_value()) {
            std::printf("AC3 witness at family=%s n=%d k=%d value=%s\n",
                        family_name(spec.family).c_str(), w->n, w->k, w->value.str().c_str());
            ok = false;
        }
    }
    // Bernoulli and Euler pairs (g != 1, f = t)
    for (const Rational r : {Rational(1), Rational(3)}) {
        for (bool euler : {false, true}) {
            RSeries g = pow(euler ? series_half_expp1(N) : series_expm1_over_t(N), r);
            ShefferPair pair(g, RSeries::t(N));
            std::vector<Polynomial> S;
            for (int n = 0; n <= 8; ++n)
                S.push_back(sheffer_sequence(pair, n));
            ok = ok && duality_check(pair, S, 8);
        }
    }
    double secs = t.seconds();
    report_line("AC3", ok && secs < 10.0, secs, 10);
    CHECK(ok);
    CHECK(secs < 10.0);
}

TEST_CASE("AC4 full identity suite at n_max = 6") {
    Timer t;
    SuiteConfig cfg;  // defaults: n_max 6, a,b,c in {1,2,3}, alpha in {0,1,1/2,-3/2,5}
    Report rep = run_suite(cfg);
    double secs = t.seconds();
    bool ok = rep.failed == 0;
    report_line("AC4", ok && secs < 60.0, secs, 60);
    if (!ok)
        for (const auto& r : rep.results)
            if (!r.passed())
                std::printf("AC4 failure: %s %s\n", r.id.c_str(), r.witness.c_str());
    CHECK(ok);
    CHECK(secs < 60.0);
    CHECK(rep.passed == static_cast<int>(rep.results.size()));
}

TEST_CASE("AC5 closed form vs engine for all families, n <= 8, plus GF round trips") {
    Timer t;
    const int N = 2 * 8 + 4;
    bool ok = true;
    const std::vector<Rational> abc = {Rational(1), Rational(2), Rational(3)};
    const std::vector<Rational> orders = {Rational(0), Rational(1), Rational(1, 2),
                                          Rational(-3, 2), Rational(5)};
    for (const auto& name : family_names()) {
        Family fam = family_from_name(name);
        if (fam == Family::bessel_y)
            continue;
        std::vector<std::map<std::string, Rational>> param_sets{{}};
        for (const auto& pname : family_param_names(fam)) {
            const auto& samples = (pname == "alpha" || pname == "beta") ? orders : abc;
            std::vector<std::map<std::string, Rational>> next;
            for (const auto& base : param_sets)
                for (const auto& v : samples) {
                    auto m = base;
                    m[pname] = v;
                    next.push_back(std::move(m));
                }
            param_sets = std::move(next);
        }
        for (const auto& params : param_sets) {
            FamilySpec spec{fam, params};
            ShefferPair pair = family_pair(spec, N);
            for (int n = family_closed_form_min_n(fam); n <= 8; ++n)
                if (family_polynomial(spec, n) != sheffer_sequence(pair, n)) {
                    std::printf("AC5 mismatch: %s n=%d\n", name.c_str(), n);
                    ok = false;
                }
        }
    }
    // Generating-function round trips: n! [t^n] base e^{x h(t)} vs closed form.
    auto gf_poly = [](const RSeries& base, const RSeries& h, int n) {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        RSeries pw = base;
        for (int k = 0; k <= n; ++k) {
            if (k > 0)
                pw = pw * h;
            c[static_cast<size_t>(k)] =
                Rational::factorial(n) / Rational::factorial(k) * pw.at(n);
        }
        return Polynomial(std::move(c));
    };
    for (int n = 0; n <= 8; ++n) {
        RSeries one_minus_2t(N);
        one_minus_2t.at(0) = Rational(1);
        one_minus_2t.at(1) = Rational(-2);
        RSeries h_bessel = RSeries::one(N) - pow(one_minus_2t, Rational(1, 2));
        ok = ok && gf_poly(RSeries::one(N), h_bessel, n) ==
                       family_polynomial({Family::bessel_p, {}}, n);
        ok = ok && gf_poly(RSeries::one(N), series_expm1(N), n) ==
                       family_polynomial({Family::exponential, {}}, n);
        // Pidduck: (1-t)^{-1} ((1+t)/(1-t))^x
        RSeries one_minus_t(N), one_plus_t(N);
        one_minus_t.at(0) = Rational(1);
        one_minus_t.at(1) = Rational(-1);
        one_plus_t.at(0) = Rational(1);
        one_plus_t.at(1) = Rational(1);
        RSeries h_pid = log_series(one_plus_t) - log_series(one_minus_t);
        ok = ok && gf_poly(reciprocal(one_minus_t), h_pid, n) ==
                       family_polynomial({Family::pidduck, {}}, n);
        // Narumi: (log(1+t)/t)^a (1+t)^x
        for (const Rational a : {Rational(1), Rational(1, 2), Rational(-3, 2)}) {
            RSeries base = pow(series_log1p(N).shift_down(1), a).truncated(N - 1);
            ok = ok && gf_poly(base, log_series(one_plus_t.truncated(N - 1)), n) ==
                           narumi_poly(a, n);
        }
    }
    double secs = t.seconds();
    report_line("AC5", ok, secs, 60);
    CHECK(ok);
}

TEST_CASE("AC6 known-value spot checks against independent oracles") {
    Timer t;
    RSeries b = reciprocal(series_expm1_over_t(8));
    bool ok = Rational::factorial(0) * b.at(0) == Rational(1) &&
              Rational::factorial(1) * b.at(1) == Rational(-1, 2) &&
              Rational::factorial(2) * b.at(2) == Rational(1, 6) &&
              Rational::factorial(3) * b.at(3) == Rational(0) &&
              Rational::factorial(4) * b.at(4) == Rational(-1, 30);
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n)
        ok = ok && eval(family_polynomial({Family::exponential, {}}, n), Rational(1)) ==
                       Rational(bell[n]);
    ok = ok && stirling2(4, 2) == Rational(7) && stirling1(3, 2) == Rational(-3);
    // the enumeration and expansion oracles themselves live in test_families
    double secs = t.seconds();
    report_line("AC6", ok, secs, 5);
    CHECK(ok);
}

TEST_CASE("AC7 determinism of the suite report") {
    Timer t;
    SuiteConfig cfg;
    cfg.n_max = 3;
    cfg.deterministic = true;
    std::string a = report_to_json(run_suite(cfg));
    std::string b = report_to_json(run_suite(cfg));
    cfg.parallel = false;
    std::string c = report_to_json(run_suite(cfg));
    bool ok = a == b && a == c;
    double secs = t.seconds();
    report_line("AC7", ok, secs, 30);
    CHECK(ok);
}

TEST_CASE("AC8 negative controls via fault injection") {
    Timer t;
    SuiteConfig cfg;
    cfg.n_max = 3;
    cfg.deterministic = true;
    bool ok = true;
    auto failures_with_witness = [&cfg](const std::vector<std::string>& ids) {
        SuiteConfig c = cfg;
        c.ids = ids;
        Report rep = run_suite(c);
        int n = 0;
        for (const auto& r : rep.results)
            if (r.status == Status::fail && !r.witness.empty())
                ++n;
        return n;
    };
    umbra::testing::clear_faults();
    umbra::testing::corrupt_stirling2(4, 3, Rational(1));
    ok = ok && failures_with_witness({"T7", "T9a"}) >= 1;
    umbra::testing::clear_faults();
    umbra::testing::corrupt_narumi_number(Rational(-3), 1, Rational(1, 3));
    ok = ok && failures_with_witness({"L11"}) >= 1;
    umbra::testing::clear_faults();
    umbra::testing::corrupt_family_coeff(Family::abel, 3, 1, Rational(1));
    ok = ok && failures_with_witness({"T3"}) >= 1;
    umbra::testing::clear_faults();
    // pristine again
    ok = ok && failures_with_witness({"T7", "L11", "T3"}) == 0;
    double secs = t.seconds();
    report_line("AC8", ok, secs, 30);
    CHECK(ok);
}
