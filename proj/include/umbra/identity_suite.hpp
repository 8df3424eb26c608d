#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra::suite {

inline constexpr const char* kEngineVersion = "umbra 1.0.0";

/// Parameter tuple of a check instance. Integer parameters (n, m, k, l)
/// are stored as integer-valued rationals; the ordered map keeps
/// rendering and report ordering deterministic.
using Params = std::map<std::string, Rational>;

enum class Status { pass, fail, insufficient_order, error };

const char* status_name(Status s);

struct CheckResult {
    std::string id;
    Params params;
    Status status = Status::error;
    std::string witness;  // empty on pass
    double elapsed_ms = 0.0;

    bool passed() const { return status == Status::pass; }
};

struct SuiteConfig {
    int n_max = 6;
    std::vector<Rational> abc_samples = {Rational(1), Rational(2), Rational(3)};
    std::vector<Rational> alpha_samples = {Rational(0), Rational(1), Rational(1, 2),
                                           Rational(-3, 2), Rational(5)};
    std::vector<std::string> ids;  // empty = the full catalog
    bool parallel = true;
    bool deterministic = false;

    /// Transfer-formula powers consume degree headroom beyond n_max.
    int trunc_order() const { return 2 * n_max + 4; }
};

struct Report {
    SuiteConfig config;
    std::vector<CheckResult> results;  // sorted by (id, params)
    int passed = 0;
    int failed = 0;
    std::string engine = kEngineVersion;
};

/// A registered, parameterized identity check. verify returns an empty
/// string on success or a witness description on failure.
struct IdentityCheck {
    std::string id;
    std::string description;
    std::function<std::vector<Params>(const SuiteConfig&)> grid;
    std::function<std::string(const Params&, const SuiteConfig&)> verify;
};

const std::vector<IdentityCheck>& identity_catalog();
const IdentityCheck& find_check(const std::string& id);  // throws on unknown id

std::string params_to_string(const Params& p);

/// Runs one (id, params) instance; throws std::invalid_argument for an
/// unknown id or out-of-domain params.
CheckResult run_identity(const std::string& id, const Params& params, const SuiteConfig& cfg);

/// Runs the configured grid. Deterministic: results are sorted by
/// (id, params) regardless of execution order; the OpenMP path and the
/// serial reference path produce identical reports.
Report run_suite(const SuiteConfig& cfg);

}  // namespace umbra::suite
