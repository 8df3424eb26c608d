#include "umbra/families.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace umbra {

// ---------------------------------------------------------------------------
// Series builders
// ---------------------------------------------------------------------------

RSeries series_exp_t(int n) {
    RSeries s(n);
    for (int k = 0; k <= n; ++k)
        s.at(k) = Rational(1) / Rational::factorial(k);
    return s;
}

RSeries series_expm1(int n) {
    RSeries s = series_exp_t(n);
    s.at(0) = Rational(0);
    return s;
}

RSeries series_log1p(int n) {
    RSeries s(n);
    for (int k = 1; k <= n; ++k)
        s.at(k) = Rational(k % 2 == 1 ? 1 : -1, k);
    return s;
}

RSeries series_expm1_over_t(int n) {
    RSeries s(n);
    for (int k = 0; k <= n; ++k)
        s.at(k) = Rational(1) / Rational::factorial(k + 1);
    return s;
}

RSeries series_half_expp1(int n) {
    RSeries s = series_exp_t(n);
    s.at(0) = Rational(1);
    for (int k = 0; k <= n; ++k)
        s.at(k) = s.at(k) * Rational(1, 2);
    s.at(0) = Rational(1);
    return s;
}

RSeries series_geom(int n) {
    RSeries s(n);
    for (int k = 0; k <= n; ++k)
        s.at(k) = Rational(1);
    return s;
}

// ---------------------------------------------------------------------------
// Fault injection (compiled into test builds only)
// ---------------------------------------------------------------------------

#ifdef UMBRA_FAULT_INJECTION
namespace {
std::mutex fault_mutex;
std::map<std::pair<int, int>, Rational> stirling2_faults;
std::map<std::pair<std::string, int>, Rational> narumi_faults;
std::map<std::tuple<Family, int, int>, Rational> family_faults;
}  // namespace

namespace testing {
void corrupt_stirling2(int n, int k, const Rational& delta) {
    std::lock_guard<std::mutex> lock(fault_mutex);
    stirling2_faults[{n, k}] = delta;
}
void corrupt_narumi_number(const Rational& a, int k, const Rational& delta) {
    std::lock_guard<std::mutex> lock(fault_mutex);
    narumi_faults[{a.str(), k}] = delta;
}
void corrupt_family_coeff(Family f, int n, int k, const Rational& delta) {
    std::lock_guard<std::mutex> lock(fault_mutex);
    family_faults[{f, n, k}] = delta;
}
void clear_faults() {
    std::lock_guard<std::mutex> lock(fault_mutex);
    stirling2_faults.clear();
    narumi_faults.clear();
    family_faults.clear();
}
}  // namespace testing

namespace {
Rational stirling2_fault(int n, int k) {
    std::lock_guard<std::mutex> lock(fault_mutex);
    auto it = stirling2_faults.find({n, k});
    return it == stirling2_faults.end() ? Rational(0) : it->second;
}
Rational narumi_fault(const Rational& a, int k) {
    std::lock_guard<std::mutex> lock(fault_mutex);
    auto it = narumi_faults.find({a.str(), k});
    return it == narumi_faults.end() ? Rational(0) : it->second;
}
Polynomial apply_family_fault(Family f, int n, Polynomial p) {
    std::lock_guard<std::mutex> lock(fault_mutex);
    for (const auto& [key, delta] : family_faults) {
        if (std::get<0>(key) == f && std::get<1>(key) == n)
            p += Polynomial::monomial(std::get<2>(key), delta);
    }
    return p;
}
}  // namespace
#else
namespace {
inline Rational stirling2_fault(int, int) { return Rational(0); }
inline Rational narumi_fault(const Rational&, int) { return Rational(0); }
inline Polynomial apply_family_fault(Family, int, Polynomial p) { return p; }
}  // namespace
#endif

// ---------------------------------------------------------------------------
// Numbers
// ---------------------------------------------------------------------------

namespace {

// Triangle caches, grown on demand. Guarded: suite checks may run
// concurrently.
std::mutex table_mutex;
std::vector<std::vector<Rational>> s2_table;  // s2_table[n][k]
std::vector<Polynomial> ffact_table;          // (x)_n expansions

void grow_tables(int n) {
    if (static_cast<int>(s2_table.size()) <= n) {
        size_t old = s2_table.size();
        s2_table.resize(static_cast<size_t>(n) + 1);
        for (size_t i = old; i < s2_table.size(); ++i) {
            s2_table[i].assign(i + 1, Rational(0));
            if (i == 0) {
                s2_table[0][0] = Rational(1);
                continue;
            }
            for (size_t j = 1; j <= i; ++j) {
                Rational up = (j <= i - 1) ? s2_table[i - 1][j] : Rational(0);
                s2_table[i][j] = Rational(static_cast<long>(j)) * up + s2_table[i - 1][j - 1];
            }
        }
    }
    if (static_cast<int>(ffact_table.size()) <= n) {
        size_t old = ffact_table.size();
        ffact_table.resize(static_cast<size_t>(n) + 1);
        for (size_t i = old; i < ffact_table.size(); ++i)
            ffact_table[i] = falling_factorial(static_cast<int>(i));
    }
}

}  // namespace

Rational stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return Rational(0);  // out of range -> 0 by convention
    Rational v;
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        grow_tables(n);
        v = s2_table[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
    return v + stirling2_fault(n, k);
}

Rational stirling1(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        return Rational(0);
    std::lock_guard<std::mutex> lock(table_mutex);
    grow_tables(n);
    return ffact_table[static_cast<size_t>(n)].at(k);
}

namespace {

/// n! [t^n] base(t) e^{xt}: coefficient of x^k is n!/k! [t^{n-k}] base.
Polynomial gf_with_exp_xt(const RSeries& base, int n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    Rational nfac = Rational::factorial(n);
    for (int k = 0; k <= n; ++k)
        c[static_cast<size_t>(k)] = nfac / Rational::factorial(k) * base.at(n - k);
    return Polynomial(std::move(c));
}

/// n! [t^n] base(t) e^{x h(t)} with order(h) >= 1:
/// coefficient of x^k is n!/k! [t^n] base h^k.
Polynomial gf_with_exp_xh(const RSeries& base, const RSeries& h, int n) {
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    Rational nfac = Rational::factorial(n);
    RSeries pw = base;
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            pw = pw * h;
        c[static_cast<size_t>(k)] = nfac / Rational::factorial(k) * pw.at(n);
    }
    return Polynomial(std::move(c));
}

}  // namespace

Polynomial bernoulli_poly(const Rational& r, int n) {
    RSeries base = pow(series_expm1_over_t(n), -r);
    return gf_with_exp_xt(base, n);
}

Polynomial euler_poly(const Rational& r, int n) {
    RSeries base = pow(series_half_expp1(n), -r);
    return gf_with_exp_xt(base, n);
}

Polynomial narumi_poly(const Rational& a, int n) {
    RSeries log_over_t = series_log1p(n + 1).shift_down(1);
    RSeries base = pow(log_over_t, a);
    return gf_with_exp_xh(base, series_log1p(n), n);
}

Rational narumi_number(const Rational& a, int k) {
    if (k < 0)
        return Rational(0);
    RSeries log_over_t = series_log1p(k + 1).shift_down(1);
    return Rational::factorial(k) * pow(log_over_t, a).at(k) + narumi_fault(a, k);
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    std::vector<std::string> params;
    bool associated;
    int closed_form_min_n;
};

const std::vector<FamilyInfo>& catalog() {
    static const std::vector<FamilyInfo> infos = {
        {Family::poisson_charlier, "poisson_charlier", {"a"}, false, 0},
        {Family::abel, "abel", {"b"}, true, 1},
        {Family::mittag_leffler, "mittag_leffler", {}, true, 0},
        {Family::exponential, "exponential", {}, true, 0},
        {Family::laguerre, "laguerre", {}, true, 1},
        {Family::laguerre_alpha, "laguerre_alpha", {"alpha"}, false, 0},
        {Family::bessel_y, "bessel_y", {}, false, 0},
        {Family::bessel_p, "bessel_p", {}, true, 1},
        {Family::mott, "mott", {}, true, 1},
        {Family::pidduck, "pidduck", {}, false, 0},
        {Family::narumi, "narumi", {"a"}, false, 0},
        {Family::actuarial, "actuarial", {"beta"}, false, 0},
        {Family::assoc_c_exp, "assoc_c_exp", {"c"}, true, 1},
        {Family::assoc_halved, "assoc_halved", {}, true, 1},
        {Family::assoc_shifted_power, "assoc_shifted_power", {"a"}, true, 1},
        {Family::assoc_bernoulli_like, "assoc_bernoulli_like", {"a"}, true, 1},
        {Family::assoc_euler_like, "assoc_euler_like", {"b"}, true, 1},
    };
    return infos;
}

const FamilyInfo& info_for(Family f) {
    for (const auto& i : catalog())
        if (i.family == f)
            return i;
    throw std::logic_error("unknown family enum");
}

}  // namespace

Rational FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("family '" + family_name(family) +
                                    "' requires parameter '" + name + "'");
    return it->second;
}

Family family_from_name(const std::string& name) {
    for (const auto& i : catalog())
        if (name == i.name)
            return i.family;
    throw std::invalid_argument("unknown family '" + name + "'");
}

const std::string& family_name(Family f) {
    static std::map<Family, std::string> names = [] {
        std::map<Family, std::string> m;
        for (const auto& i : catalog())
            m[i.family] = i.name;
        return m;
    }();
    return names.at(f);
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& i : catalog())
        out.push_back(i.name);
    return out;
}

std::vector<std::string> family_param_names(Family f) { return info_for(f).params; }
bool family_is_associated(Family f) { return info_for(f).associated; }
int family_closed_form_min_n(Family f) { return info_for(f).closed_form_min_n; }

void validate_spec(const FamilySpec& spec) {
    for (const auto& name : info_for(spec.family).params) {
        Rational v = spec.param(name);
        // a, b, c must be nonzero wherever the printed definitions require it;
        // the order parameters alpha, beta, r may be any rational.
        if ((name == "a" || name == "b" || name == "c") && v.is_zero())
            throw std::invalid_argument("parameter " + name + " must be nonzero");
    }
}

Polynomial family_polynomial(const FamilySpec& spec, int n) {
    validate_spec(spec);
    if (n < 0)
        throw std::invalid_argument("family_polynomial: negative index");
    Polynomial p;
    switch (spec.family) {
    case Family::poisson_charlier: {
        Rational a = spec.param("a");
        for (int k = 0; k <= n; ++k) {
            Rational c = Rational::binom(n, k) * a.pow(-k);
            if ((n - k) % 2 != 0)
                c = -c;
            p += falling_factorial(k) * c;
        }
        break;
    }
    case Family::abel: {
        Rational b = spec.param("b");
        if (n == 0) {
            p = Polynomial::constant(Rational(1));
            break;
        }
        Polynomial lin(std::vector<Rational>{-b * Rational(n), Rational(1)});
        p = poly_x();
        for (int i = 0; i < n - 1; ++i)
            p *= lin;
        break;
    }
    case Family::mittag_leffler: {
        for (int k = 0; k <= n; ++k)
            p += falling_factorial(k) *
                 (Rational::binom(n, k) * Rational::falling(Rational(n - 1), n - k) *
                  Rational(2).pow(k));
        break;
    }
    case Family::exponential: {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            c[static_cast<size_t>(k)] = stirling2(n, k);
        p = Polynomial(std::move(c));
        break;
    }
    case Family::laguerre: {
        if (n == 0) {
            // The closed-form sum is empty at n = 0; the defining pair gives L_0 = 1.
            p = Polynomial::constant(Rational(1));
            break;
        }
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int k = 1; k <= n; ++k) {
            Rational v = Rational::binom(n - 1, k - 1) * Rational::factorial(n) /
                         Rational::factorial(k);
            c[static_cast<size_t>(k)] = (k % 2 == 0) ? v : -v;
        }
        p = Polynomial(std::move(c));
        break;
    }
    case Family::laguerre_alpha: {
        Rational alpha = spec.param("alpha");
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int l = 0; l <= n; ++l) {
            Rational v = Rational::binom(Rational(n) + alpha, n - l) *
                         Rational::factorial(n) / Rational::factorial(l);
            c[static_cast<size_t>(l)] = (l % 2 == 0) ? v : -v;
        }
        p = Polynomial(std::move(c));
        break;
    }
    case Family::bessel_y: {
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            c[static_cast<size_t>(k)] = Rational::factorial(n + k) /
                                        (Rational::factorial(n - k) * Rational::factorial(k)) *
                                        Rational(1, 2).pow(k);
        p = Polynomial(std::move(c));
        break;
    }
    case Family::bessel_p: {
        if (n == 0) {
            p = Polynomial::constant(Rational(1));
            break;
        }
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int k = 1; k <= n; ++k)
            c[static_cast<size_t>(k)] =
                Rational::factorial(2 * n - k - 1) /
                (Rational::factorial(n - k) * Rational::factorial(k - 1)) *
                Rational(1, 2).pow(n - k);
        p = Polynomial(std::move(c));
        break;
    }
    case Family::mott: {
        if (n == 0) {
            p = Polynomial::constant(Rational(1));
            break;
        }
        for (int k = 0; k <= n - 1; ++k) {
            Rational cnk = eval(family_polynomial({Family::poisson_charlier, {{"a", Rational(1)}}}, n),
                                Rational(k));
            for (int l = k + 1; l <= n; ++l) {
                Rational coef = Rational::binom(n - 1, l - 1) * Rational::binom(l - 1, k) *
                                cnk / Rational::factorial(l);
                p += mul_by_x(shift(Polynomial::monomial(l - 1 - k), Rational(-1))) * coef;
            }
        }
        p = p * (Rational::factorial(n) / Rational(2).pow(n));
        break;
    }
    case Family::pidduck: {
        int N = n + 1;
        RSeries h = log_series(RSeries(std::vector<Rational>{Rational(1), Rational(1)}, N)) -
                    log_series(RSeries(std::vector<Rational>{Rational(1), Rational(-1)}, N));
        p = gf_with_exp_xh(series_geom(N), h, n);
        break;
    }
    case Family::narumi:
        p = narumi_poly(spec.param("a"), n);
        break;
    case Family::actuarial: {
        Rational beta = spec.param("beta");
        int N = n + 1;
        RSeries base = exp_series(RSeries::t(N) * beta);
        RSeries h = RSeries::one(N) - series_exp_t(N);  // 1 - e^t
        p = gf_with_exp_xh(base, h, n);
        break;
    }
    case Family::assoc_c_exp: {
        Rational c = spec.param("c");
        if (n == 0) {
            p = Polynomial::constant(Rational(1));
            break;
        }
        for (int k = 0; k <= n - 1; ++k) {
            Rational nck = (Rational(n) * c).pow(k) / Rational::factorial(k);
            for (int j = 0; j <= k; ++j) {
                Rational coef = nck * Rational::binom(k, j);
                if (j % 2 != 0)
                    coef = -coef;
                p += shift(Polynomial::monomial(n - 1), Rational(j)) * coef;
            }
        }
        p = mul_by_x(p);
        break;
    }
    case Family::assoc_halved: {
        if (n == 0) {
            p = Polynomial::constant(Rational(1));
            break;
        }
        for (int j = 0; j <= n; ++j)
            p += shift(Polynomial::monomial(n - 1), Rational(j)) * Rational::binom(n, j);
        p = mul_by_x(p) * (Rational(1) / Rational(2).pow(n));
        break;
    }
    case Family::assoc_shifted_power: {
        Rational a = spec.param("a");
        if (n == 0) {
            p = Polynomial::constant(Rational(1));
            break;
        }
        std::vector<Rational> c(static_cast<size_t>(n) + 1);
        for (int l = 1; l <= n; ++l)
            c[static_cast<size_t>(l)] = Rational::binom(-a * Rational(n), n - l) *
                                        Rational::falling(Rational(n - 1), n - l);
        p = Polynomial(std::move(c));
        break;
    }
    case Family::assoc_bernoulli_like: {
        Rational a = spec.param("a");
        p = (n == 0) ? Polynomial::constant(Rational(1))
                     : mul_by_x(bernoulli_poly(a * Rational(n), n - 1));
        break;
    }
    case Family::assoc_euler_like: {
        Rational b = spec.param("b");
        p = (n == 0) ? Polynomial::constant(Rational(1))
                     : mul_by_x(euler_poly(b * Rational(n), n - 1));
        break;
    }
    }
    return apply_family_fault(spec.family, n, std::move(p));
}

RSeries family_delta_series(const FamilySpec& spec, int N) {
    validate_spec(spec);
    switch (spec.family) {
    case Family::poisson_charlier:
        return series_expm1(N) * spec.param("a");
    case Family::abel:
        return RSeries::t(N) * exp_series(RSeries::t(N) * spec.param("b"));
    case Family::mittag_leffler:
    case Family::pidduck:
        return series_expm1(N) * reciprocal(series_exp_t(N) + RSeries::one(N));
    case Family::exponential:
        return series_log1p(N);
    case Family::laguerre:
    case Family::laguerre_alpha: {
        // t/(t-1) = -t/(1-t)
        return -(RSeries::t(N) * series_geom(N));
    }
    case Family::bessel_p: {
        RSeries f(N);
        f.at(1) = Rational(1);
        if (N >= 2)
            f.at(2) = Rational(-1, 2);
        return f;
    }
    case Family::mott: {
        // -2t/(1-t^2)
        RSeries one_minus_t2(N);
        one_minus_t2.at(0) = Rational(1);
        if (N >= 2)
            one_minus_t2.at(2) = Rational(-1);
        return RSeries::t(N) * reciprocal(one_minus_t2) * Rational(-2);
    }
    case Family::narumi:
        return series_expm1(N);
    case Family::actuarial: {
        // log(1-t)
        RSeries f(N);
        for (int k = 1; k <= N; ++k)
            f.at(k) = Rational(-1, k);
        return f;
    }
    case Family::assoc_c_exp:
        return RSeries::t(N) * exp_series(series_expm1(N) * spec.param("c"));
    case Family::assoc_halved:
        return RSeries::t(N) * Rational(2) * reciprocal(series_exp_t(N) + RSeries::one(N));
    case Family::assoc_shifted_power: {
        RSeries onept(N);
        onept.at(0) = Rational(1);
        if (N >= 1)
            onept.at(1) = Rational(1);
        return RSeries::t(N) * pow(onept, spec.param("a"));
    }
    case Family::assoc_bernoulli_like:
        return RSeries::t(N) * pow(series_expm1_over_t(N), spec.param("a"));
    case Family::assoc_euler_like:
        return RSeries::t(N) * pow(series_half_expp1(N), spec.param("b"));
    case Family::bessel_y:
        break;
    }
    throw std::invalid_argument("family '" + family_name(spec.family) +
                                "' has no defining delta series");
}

ShefferPair family_pair(const FamilySpec& spec, int N) {
    RSeries f = family_delta_series(spec, N);
    switch (spec.family) {
    case Family::poisson_charlier:
        return ShefferPair(exp_series(series_expm1(N) * spec.param("a")), f);
    case Family::laguerre_alpha: {
        RSeries one_minus_t(N);
        one_minus_t.at(0) = Rational(1);
        if (N >= 1)
            one_minus_t.at(1) = Rational(-1);
        return ShefferPair(pow(one_minus_t, -(spec.param("alpha") + Rational(1))), f);
    }
    case Family::pidduck:
        return ShefferPair(Rational(2) * reciprocal(series_exp_t(N) + RSeries::one(N)), f);
    case Family::narumi:
        return ShefferPair(pow(series_expm1_over_t(N), spec.param("a")), f);
    case Family::actuarial: {
        RSeries one_minus_t(N);
        one_minus_t.at(0) = Rational(1);
        if (N >= 1)
            one_minus_t.at(1) = Rational(-1);
        return ShefferPair(pow(one_minus_t, -spec.param("beta")), f);
    }
    default:
        return ShefferPair(RSeries::one(N), f);
    }
}

}  // namespace umbra
