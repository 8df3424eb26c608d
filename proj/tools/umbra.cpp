#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "umbra/families.hpp"
#include "umbra/identity_suite.hpp"
#include "umbra/report.hpp"

namespace {

using namespace umbra;
using namespace umbra::suite;

Params parse_params(const std::vector<std::string>& kvs) {
    Params p;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        p[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    return p;
}

int emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 2;
    }
    os << body;
    return 0;
}

struct CommonOpts {
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* app, CommonOpts& o) {
    app->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app->add_option("--out", o.out, "Write output to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"umbra: exact verification of special polynomial sequence identities"};
    app.require_subcommand(1);

    // expand
    std::string family_name_arg;
    int expand_n = 0;
    std::vector<std::string> expand_params;
    CommonOpts expand_opts;
    auto* expand = app.add_subcommand("expand", "Print a family polynomial");
    expand->add_option("--family", family_name_arg, "Family name")->required();
    expand->add_option("--n", expand_n, "Polynomial index")->required()
        ->check(CLI::NonNegativeNumber);
    expand->add_option("--param", expand_params, "Family parameter key=value (repeatable)");
    add_common(expand, expand_opts);

    // check
    std::vector<std::string> check_ids;
    std::vector<std::string> check_params;
    int check_nmax = 6;
    bool check_det = false;
    CommonOpts check_opts;
    auto* check = app.add_subcommand("check", "Run one identity at given parameters");
    check->add_option("--id", check_ids, "Identity id (repeatable)")->required();
    check->add_option("--param", check_params, "Check parameter key=value (repeatable)");
    check->add_option("--nmax", check_nmax, "Suite n_max (sets the truncation order)");
    check->add_flag("--deterministic", check_det, "Zero timing fields");
    add_common(check, check_opts);

    // suite
    std::vector<std::string> suite_ids;
    int suite_nmax = 6;
    bool suite_det = false;
    bool suite_serial = false;
    CommonOpts suite_opts;
    auto* suite_cmd = app.add_subcommand("suite", "Run the identity suite");
    suite_cmd->add_option("--id", suite_ids, "Restrict to these ids (repeatable)");
    suite_cmd->add_option("--nmax", suite_nmax, "Largest index n per check")
        ->check(CLI::PositiveNumber);
    suite_cmd->add_flag("--deterministic", suite_det,
                        "Byte-stable output: zero timing fields");
    suite_cmd->add_flag("--serial", suite_serial, "Use the serial reference runner");
    add_common(suite_cmd, suite_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) {
            FamilySpec spec{family_from_name(family_name_arg), parse_params(expand_params)};
            validate_spec(spec);
            Polynomial p = family_polynomial(spec, expand_n);
            std::string body = (expand_opts.format == "json")
                                   ? polynomial_to_json(p) + "\n"
                                   : to_string(p) + "\n";
            return emit(body, expand_opts.out);
        }

        if (check->parsed()) {
            SuiteConfig cfg;
            cfg.n_max = check_nmax;
            cfg.deterministic = check_det;
            Params params = parse_params(check_params);
            std::string body;
            bool all_pass = true;
            for (const auto& id : check_ids) {
                CheckResult r = run_identity(id, params, cfg);
                all_pass = all_pass && r.passed();
                body += (check_opts.format == "json") ? result_to_json(r)
                                                      : result_to_text(r);
            }
            int rc = emit(body, check_opts.out);
            return rc != 0 ? rc : (all_pass ? 0 : 1);
        }

        // suite
        SuiteConfig cfg;
        cfg.n_max = suite_nmax;
        cfg.ids = suite_ids;
        cfg.deterministic = suite_det;
        cfg.parallel = !suite_serial;
        Report rep = run_suite(cfg);
        std::string body = (suite_opts.format == "json") ? report_to_json(rep)
                                                         : report_to_text(rep);
        int rc = emit(body, suite_opts.out);
        return rc != 0 ? rc : (rep.failed == 0 ? 0 : 1);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
