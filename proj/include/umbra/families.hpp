#pragma once

#include <map>
#include <string>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

// ---------------------------------------------------------------------------
// Elementary series builders (all at an explicit truncation order)
// ---------------------------------------------------------------------------

RSeries series_exp_t(int n);            // e^t
RSeries series_expm1(int n);            // e^t - 1
RSeries series_log1p(int n);            // log(1+t)
RSeries series_expm1_over_t(int n);     // (e^t-1)/t
RSeries series_half_expp1(int n);       // (e^t+1)/2
RSeries series_geom(int n);             // 1/(1-t)

// ---------------------------------------------------------------------------
// Numbers
// ---------------------------------------------------------------------------

/// Stirling numbers of the second kind via the triangular recurrence;
/// out-of-range indices return 0.
Rational stirling2(int n, int k);

/// Signed Stirling numbers of the first kind: (x)_n = sum_k S1(n,k) x^k;
/// out-of-range indices return 0.
Rational stirling1(int n, int k);

/// B_n^{(r)}(x) with generating function (t/(e^t-1))^r e^{xt}.
Polynomial bernoulli_poly(const Rational& r, int n);
/// E_n^{(r)}(x) from (2/(e^t+1))^r e^{xt}.
Polynomial euler_poly(const Rational& r, int n);
/// N_n^{(a)}(x) from (log(1+t)/t)^a (1+t)^x.
Polynomial narumi_poly(const Rational& a, int n);
/// N_k^{(a)} = N_k^{(a)}(0).
Rational narumi_number(const Rational& a, int k);

// ---------------------------------------------------------------------------
// The family catalog
// ---------------------------------------------------------------------------

enum class Family {
    poisson_charlier,
    abel,
    mittag_leffler,
    exponential,
    laguerre,
    laguerre_alpha,
    bessel_y,
    bessel_p,
    mott,
    pidduck,
    narumi,
    actuarial,
    assoc_c_exp,
    assoc_halved,
    assoc_shifted_power,
    assoc_bernoulli_like,
    assoc_euler_like,
};

struct FamilySpec {
    Family family;
    std::map<std::string, Rational> params;

    Rational param(const std::string& name) const;
};

/// Family name <-> enum; throws on unknown names.
Family family_from_name(const std::string& name);
const std::string& family_name(Family f);
std::vector<std::string> family_names();

/// Names of the parameters a family requires (subset of a,b,c,r,alpha,beta).
std::vector<std::string> family_param_names(Family f);

/// Validates parameter constraints (nonzero where the printed formulas
/// demand it); throws std::invalid_argument on violation.
void validate_spec(const FamilySpec& spec);

/// The closed-form polynomial exactly as printed (Bessel y_n included).
Polynomial family_polynomial(const FamilySpec& spec, int n);

/// The defining Sheffer pair at truncation order N.
/// bessel_y has no pair and throws.
ShefferPair family_pair(const FamilySpec& spec, int trunc_order);

/// True when the family is an associated sequence (g = 1).
bool family_is_associated(Family f);

/// Smallest n for which the printed closed form is cross-checked against
/// the engine (1 for families printed "for n >= 1", else 0).
int family_closed_form_min_n(Family f);

/// Delta series used in the inversion/transfer catalogs, by family.
/// Same as family_pair(...).f for Sheffer families.
RSeries family_delta_series(const FamilySpec& spec, int trunc_order);

#ifdef UMBRA_FAULT_INJECTION
namespace testing {
/// Fault-injection hooks for negative-control tests (test builds only):
/// the named table entry is perturbed by delta until clear_faults().
void corrupt_stirling2(int n, int k, const Rational& delta);
void corrupt_narumi_number(const Rational& a, int k, const Rational& delta);
void corrupt_family_coeff(Family f, int n, int k, const Rational& delta);
void clear_faults();
}  // namespace testing
#endif

}  // namespace umbra
