#pragma once

#include <string>

#include "umbra/identity_suite.hpp"
#include "umbra/poly.hpp"

namespace umbra::suite {

/// Stable JSON wire format:
/// {config, results[{id, params, status, witness?, elapsed_ms}], passed,
///  failed, engine}; rationals as canonical "p/q" strings ("/1" omitted),
/// polynomials as ascending coefficient arrays of rational strings.
std::string report_to_json(const Report& rep);

/// Human-readable rendering, one line per result plus a summary.
std::string report_to_text(const Report& rep);

std::string result_to_json(const CheckResult& r);
std::string result_to_text(const CheckResult& r);

/// Polynomial wire format helper (ascending coefficient array).
std::string polynomial_to_json(const Polynomial& p);

}  // namespace umbra::suite
