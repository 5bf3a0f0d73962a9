#include "forchfem/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "forchfem/errors.hpp"

namespace forchfem {

namespace {

using nlohmann::json;

double require_positive(const json& j, const char* field, double fallback) {
    if (!j.contains(field)) return fallback;
    if (!j[field].is_number()) throw ConfigError(field, "must be a number");
    const double v = j[field].get<double>();
    if (!(v > 0.0)) throw ConfigError(field, "must be positive");
    return v;
}

std::vector<std::pair<double, double>> parse_law_terms(const json& j) {
    std::vector<std::pair<double, double>> terms;
    if (!j.contains("law")) return {{0.0, 1.0}, {1.0, 1.0}};  // two-term default
    if (!j["law"].is_array())
        throw ConfigError("law", "must be a list of [exponent, coefficient] pairs");
    for (const auto& term : j["law"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number() ||
            !term[1].is_number())
            throw ConfigError("law", "each term must be an [exponent, coefficient] pair");
        terms.emplace_back(term[0].get<double>(), term[1].get<double>());
    }
    return terms;
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError("document", std::string("not valid JSON: ") + err.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

}  // namespace

GeneralizedPolynomial RunConfiguration::law() const {
    std::vector<double> exps, coeffs;
    for (const auto& [e, c] : law_terms) {
        exps.push_back(e);
        coeffs.push_back(c);
    }
    try {
        return GeneralizedPolynomial(std::move(exps), std::move(coeffs));
    } catch (const std::invalid_argument& err) {
        throw ConfigError("law", err.what());
    }
}

SolverConfig RunConfiguration::solver_config(int mesh_n) const {
    SolverConfig config;
    config.dt = dt_policy == DtPolicy::tied_to_n ? final_time / mesh_n : dt;
    config.final_time = final_time;
    config.nonlinear_tol = nonlinear_tol;
    config.max_nonlinear_iters = max_nonlinear_iters;
    config.linear_tol = linear_tol;
    config.linearization = linearization;
    config.damping = damping;
    config.monitor_q = q_list;
    return config;
}

RunConfiguration parse_run_configuration(const std::string& json_text) {
    const json j = parse_document(json_text);

    RunConfiguration c;
    c.law_terms = parse_law_terms(j);
    c.law();  // validate the term list

    if (!j.contains("case") || !j["case"].is_string())
        throw ConfigError("case", "required string field");
    c.case_name = j["case"].get<std::string>();
    if (c.case_name != "example1" && c.case_name != "example2" && c.case_name != "constant" &&
        c.case_name != "steady_linear")
        throw ConfigError("case", "unknown case '" + c.case_name + "'");
    if ((c.case_name == "example1" || c.case_name == "example2") && !c.law().is_two_term())
        throw ConfigError("law", "cases example1/example2 are manufactured for the two-term law");

    if (j.contains("order")) {
        if (!j["order"].is_number_integer()) throw ConfigError("order", "must be an integer");
        c.order = j["order"].get<int>();
    }
    if (c.order != 1 && c.order != 2) throw ConfigError("order", "must be 1 or 2");

    if (!j.contains("mesh_sizes") || !j["mesh_sizes"].is_array() || j["mesh_sizes"].empty())
        throw ConfigError("mesh_sizes", "required non-empty integer list");
    for (const auto& n : j["mesh_sizes"]) {
        if (!n.is_number_integer() || n.get<int>() < 1)
            throw ConfigError("mesh_sizes", "entries must be integers >= 1");
        c.mesh_sizes.push_back(n.get<int>());
    }
    for (std::size_t i = 1; i < c.mesh_sizes.size(); ++i)
        if (c.mesh_sizes[i] <= c.mesh_sizes[i - 1])
            throw ConfigError("mesh_sizes", "must be strictly ascending");

    if (j.contains("dt_policy")) {
        const std::string p = j["dt_policy"].is_string() ? j["dt_policy"].get<std::string>() : "";
        if (p == "tied_to_N")
            c.dt_policy = DtPolicy::tied_to_n;
        else if (p == "fixed")
            c.dt_policy = DtPolicy::fixed;
        else
            throw ConfigError("dt_policy", "must be \"tied_to_N\" or \"fixed\"");
    }
    if (c.dt_policy == DtPolicy::fixed) {
        if (!j.contains("dt")) throw ConfigError("dt", "required when dt_policy is \"fixed\"");
        if (!j["dt"].is_number() || !(j["dt"].get<double>() > 0.0))
            throw ConfigError("dt", "must be positive");
        c.dt = j["dt"].get<double>();
    } else if (j.contains("dt") && (!j["dt"].is_number() || !(j["dt"].get<double>() > 0.0))) {
        throw ConfigError("dt", "must be positive");
    }

    c.final_time = require_positive(j, "T", 1.0);
    c.nonlinear_tol = require_positive(j, "nonlinear_tol", 1e-6);
    c.linear_tol = require_positive(j, "linear_tol", 1e-12);

    if (j.contains("max_nonlinear_iters")) {
        if (!j["max_nonlinear_iters"].is_number_integer() ||
            j["max_nonlinear_iters"].get<int>() < 1)
            throw ConfigError("max_nonlinear_iters", "must be an integer >= 1");
        c.max_nonlinear_iters = j["max_nonlinear_iters"].get<int>();
    }

    if (j.contains("linearization")) {
        const std::string l =
            j["linearization"].is_string() ? j["linearization"].get<std::string>() : "";
        if (l == "picard")
            c.linearization = Linearization::picard;
        else if (l == "newton")
            c.linearization = Linearization::newton;
        else
            throw ConfigError("linearization", "must be \"picard\" or \"newton\"");
    }

    if (j.contains("damping")) {
        if (!j["damping"].is_number()) throw ConfigError("damping", "must be a number");
        c.damping = j["damping"].get<double>();
        if (!(c.damping > 0.0 && c.damping <= 1.0))
            throw ConfigError("damping", "must be in (0, 1]");
    }

    if (j.contains("q_list")) {
        if (!j["q_list"].is_array()) throw ConfigError("q_list", "must be a list of numbers");
        for (const auto& q : j["q_list"]) {
            if (!q.is_number() || q.get<double>() < 1.0)
                throw ConfigError("q_list", "entries must be numbers >= 1");
            c.q_list.push_back(q.get<double>());
        }
    }

    if (j.contains("output")) {
        if (!j["output"].is_string()) throw ConfigError("output", "must be a path string");
        c.output_path = j["output"].get<std::string>();
    }
    if (j.contains("format")) {
        const std::string f = j["format"].is_string() ? j["format"].get<std::string>() : "";
        if (f == "csv")
            c.format = OutputFormat::csv;
        else if (f == "markdown")
            c.format = OutputFormat::markdown;
        else
            throw ConfigError("format", "must be \"csv\" or \"markdown\"");
    }

    if (!(c.final_time >= (c.dt_policy == DtPolicy::fixed ? c.dt : 0.0)))
        throw ConfigError("T", "must be at least dt");

    return c;
}

RunConfiguration load_run_configuration(const std::string& path) {
    return parse_run_configuration(read_file(path));
}

GeneralizedPolynomial load_law(const std::string& path) {
    const json j = parse_document(read_file(path));
    RunConfiguration c;
    c.law_terms = parse_law_terms(j);
    return c.law();
}

}  // namespace forchfem
