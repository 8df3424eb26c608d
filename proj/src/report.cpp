#include "umbra/report.hpp"

#include <json.hpp>
#include <sstream>

namespace umbra::suite {

namespace {

using json = nlohmann::ordered_json;

json rational_array(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v)
        a.push_back(q.str());
    return a;
}

json params_json(const Params& p) {
    json o = json::object();
    for (const auto& [k, v] : p)
        o[k] = v.str();
    return o;
}

json config_json(const SuiteConfig& cfg) {
    json o;
    o["n_max"] = cfg.n_max;
    o["abc_samples"] = rational_array(cfg.abc_samples);
    o["alpha_samples"] = rational_array(cfg.alpha_samples);
    o["ids"] = cfg.ids;
    o["deterministic"] = cfg.deterministic;
    o["trunc_order"] = cfg.trunc_order();
    return o;
}

json result_json(const CheckResult& r) {
    json o;
    o["id"] = r.id;
    o["params"] = params_json(r.params);
    o["status"] = status_name(r.status);
    if (!r.witness.empty())
        o["witness"] = r.witness;
    o["elapsed_ms"] = r.elapsed_ms;
    return o;
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) {
    json a = json::array();
    for (int k = 0; k <= p.degree(); ++k)
        a.push_back(p.at(k).str());
    return a.dump();
}

std::string result_to_json(const CheckResult& r) { return result_json(r).dump(2) + "\n"; }

std::string result_to_text(const CheckResult& r) {
    std::ostringstream os;
    os << r.id << " [" << params_to_string(r.params) << "] " << status_name(r.status);
    if (!r.witness.empty())
        os << "\n  witness: " << r.witness;
    os << "\n";
    return os.str();
}

std::string report_to_json(const Report& rep) {
    json o;
    o["config"] = config_json(rep.config);
    json results = json::array();
    for (const auto& r : rep.results)
        results.push_back(result_json(r));
    o["results"] = std::move(results);
    o["passed"] = rep.passed;
    o["failed"] = rep.failed;
    o["engine"] = rep.engine;
    return o.dump(2) + "\n";
}

std::string report_to_text(const Report& rep) {
    std::ostringstream os;
    os << "identity suite: n_max=" << rep.config.n_max
       << " trunc_order=" << rep.config.trunc_order() << " engine=" << rep.engine << "\n";
    std::string current;
    int line_pass = 0, line_total = 0;
    auto flush = [&]() {
        if (!current.empty())
            os << "  " << current << ": " << line_pass << "/" << line_total << " pass\n";
        line_pass = line_total = 0;
    };
    for (const auto& r : rep.results) {
        if (r.id != current) {
            flush();
            current = r.id;
        }
        ++line_total;
        if (r.passed())
            ++line_pass;
        else
            os << "  " << result_to_text(r);
    }
    flush();
    os << "total: " << rep.passed << " passed, " << rep.failed << " failed\n";
    return os.str();
}

}  // namespace umbra::suite
