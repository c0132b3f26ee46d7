#include "fiscap/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace fiscap {

std::string format_double(double value) {
    if (!std::isfinite(value)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

namespace {

void escape_string(std::string& out, const std::string& s) {
    out += '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void write_value(std::string& out, const ordered_json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (v.type()) {
        case nlohmann::detail::value_t::null: out += "null"; break;
        case nlohmann::detail::value_t::boolean: out += v.get<bool>() ? "true" : "false"; break;
        case nlohmann::detail::value_t::number_integer:
            out += std::to_string(v.get<long long>());
            break;
        case nlohmann::detail::value_t::number_unsigned:
            out += std::to_string(v.get<unsigned long long>());
            break;
        case nlohmann::detail::value_t::number_float:
            out += format_double(v.get<double>());
            break;
        case nlohmann::detail::value_t::string: escape_string(out, v.get<std::string>()); break;
        case nlohmann::detail::value_t::array: {
            if (v.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += pad_in;
                write_value(out, v[i], depth + 1);
                if (i + 1 < v.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            break;
        }
        case nlohmann::detail::value_t::object: {
            if (v.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = v.begin(); it != v.end(); ++it, ++i) {
                out += pad_in;
                escape_string(out, it.key());
                out += ": ";
                write_value(out, it.value(), depth + 1);
                if (i + 1 < v.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            break;
        }
        default: out += "null"; break;
    }
}

void csv_field(std::string& out, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out += s;
        return;
    }
    out += '"';
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
}

}  // namespace

std::string dump_canonical(const ordered_json& value) {
    std::string out;
    write_value(out, value, 0);
    return out;
}

ordered_json to_json(const ModelParams& params) {
    return {{"w", params.w}, {"c", params.c}, {"sigma", params.sigma}, {"kappa", params.kappa}};
}

ordered_json to_json(const ReportOutcome& outcome) {
    return {{"report", outcome.report},
            {"interior", outcome.interior},
            {"deviation", outcome.deviation},
            {"net_income", outcome.net_income},
            {"concealment_cost", outcome.concealment_cost}};
}

ordered_json to_json(const LafferPoint& point) {
    return {{"t", point.t}, {"revenue", point.revenue}, {"report", point.report}};
}

ordered_json to_json(const std::vector<LafferPoint>& points) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : points) arr.push_back(to_json(p));
    return arr;
}

ordered_json to_json(const StaticRegion& region) {
    ordered_json j{{"tag", region_name(region.tag)}};
    if (region.kappa_cutoff) j["kappa_cutoff"] = *region.kappa_cutoff;
    return j;
}

ordered_json to_json(const AllocationDecision& decision) {
    ordered_json j{{"g_star", decision.g_star},
                   {"tie", decision.tie},
                   {"v0", decision.v0},
                   {"v1", decision.v1},
                   {"region", to_json(decision.region)}};
    if (!decision.note.empty()) j["note"] = decision.note;
    return j;
}

ordered_json to_json(const ThresholdSet& thresholds) {
    ordered_json j = ordered_json::object();
    if (thresholds.alpha_bar) j["alpha_bar"] = *thresholds.alpha_bar;
    if (thresholds.kappa_min_h) j["kappa_min_h"] = *thresholds.kappa_min_h;
    if (thresholds.kappa_max_l) j["kappa_max_l"] = *thresholds.kappa_max_l;
    if (thresholds.kappa_pool) j["kappa_pool"] = *thresholds.kappa_pool;
    if (thresholds.kappa_h_min) j["kappa_h_min"] = *thresholds.kappa_h_min;
    if (thresholds.kappa_h_max) j["kappa_h_max"] = *thresholds.kappa_h_max;
    return j;
}

ordered_json to_json(const EquilibriumClass& equilibrium) {
    ordered_json diag = ordered_json::array();
    for (const auto& ic : equilibrium.diagnostics)
        diag.push_back({{"name", ic.name}, {"delta", ic.delta}, {"satisfied", ic.satisfied}});
    ordered_json j{{"tag", eq_tag_name(equilibrium.tag)},
                   {"regime", regime_name(equilibrium.regime)},
                   {"thresholds", to_json(equilibrium.thresholds)},
                   {"tax_base_g0", equilibrium.tax_base_g0}};
    j["tax_base_g1"] =
        equilibrium.tax_base_g1 ? ordered_json(*equilibrium.tax_base_g1) : ordered_json(nullptr);
    j["diagnostics"] = diag;
    return j;
}

ordered_json to_json(const OracleReport& report) {
    return {{"target", report.target},
            {"closed_form", report.closed_form},
            {"oracle", report.oracle_value},
            {"abs_err", report.abs_err},
            {"passed", report.passed}};
}

ordered_json to_json(const std::vector<OracleReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

ordered_json to_json(const Trajectory& trajectory) {
    ordered_json meta{{"shock_extension", trajectory.shock_extension}};
    if (trajectory.shock_period) meta["shock_period"] = *trajectory.shock_period;
    ordered_json records = ordered_json::array();
    for (const auto& r : trajectory.records) {
        records.push_back({{"period", r.period},
                           {"alpha", r.realized_alpha},
                           {"g", r.g},
                           {"posterior", r.posterior},
                           {"report", r.report},
                           {"tax_base", r.tax_base},
                           {"tag", eq_tag_name(r.tag)}});
    }
    return {{"metadata", meta},
            {"equilibrium", to_json(trajectory.equilibrium)},
            {"records", records}};
}

std::string to_csv(const std::vector<LafferPoint>& points) {
    std::string out = "t,revenue,report\n";
    for (const auto& p : points) {
        out += format_double(p.t);
        out += ',';
        out += format_double(p.revenue);
        out += ',';
        out += format_double(p.report);
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<OracleReport>& reports) {
    std::string out = "target,closed_form,oracle,abs_err,passed\n";
    for (const auto& r : reports) {
        csv_field(out, r.target);
        out += ',';
        out += format_double(r.closed_form);
        out += ',';
        out += format_double(r.oracle_value);
        out += ',';
        out += format_double(r.abs_err);
        out += ',';
        out += r.passed ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string to_csv(const Trajectory& trajectory) {
    std::string out = "period,alpha,g,posterior,report,tax_base,tag\n";
    for (const auto& r : trajectory.records) {
        out += std::to_string(r.period);
        out += ',';
        out += format_double(r.realized_alpha);
        out += ',';
        out += std::to_string(r.g);
        out += ',';
        out += format_double(r.posterior);
        out += ',';
        out += format_double(r.report);
        out += ',';
        out += format_double(r.tax_base);
        out += ',';
        out += eq_tag_name(r.tag);
        out += '\n';
    }
    return out;
}

}  // namespace fiscap
