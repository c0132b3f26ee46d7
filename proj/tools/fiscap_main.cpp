// fiscap: command-line front end for the fiscal-capacity solver library.
// One subcommand per invocation; JSON or CSV on stdout (or --output FILE).
// Exit codes: 0 success, 1 validation/verification failure, 2 when a strict
// classification (or a simulation) lands on no_pure_equilibrium, 64 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiscap/serialize.hpp"

namespace {

using fiscap::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EconArgs {
    double w = 1.0;
    double c = 1.0;
    double sigma = 0.5;
    double kappa = 0.0;
    std::optional<double> alpha;
    std::optional<double> alpha_e;
    std::optional<double> alpha_c;
    std::optional<double> alpha_l;
    std::optional<double> alpha_h;
    std::optional<double> rho;
    std::optional<double> g;
    std::optional<double> t;
    std::optional<double> t_min;
    std::optional<double> t_max;
    int n_points = 1001;
    int horizon = 1;
    std::optional<int> shock_period;
    std::string initial_state = "low";
    bool strict = false;
};

struct OutputConfig {
    std::string format;  // "json" or "csv"
    std::string path;    // empty: stdout
};

void emit(const OutputConfig& out, const std::string& payload) {
    if (out.path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + out.path);
    file.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

void emit_json(const OutputConfig& out, const ordered_json& j) {
    emit(out, fiscap::dump_canonical(j) + "\n");
}

fiscap::ValidatedModel make_model(const EconArgs& a, const fiscap::ValueConfig& values) {
    return fiscap::validate(fiscap::ModelParams{a.w, a.c, a.sigma, a.kappa}, values);
}

ordered_json params_json(const EconArgs& a) {
    return fiscap::to_json(fiscap::ModelParams{a.w, a.c, a.sigma, a.kappa});
}

std::string opt_field(const std::optional<double>& v) {
    return v ? fiscap::format_double(*v) : std::string();
}

// ---------------------------------------------------------------- report ---

int cmd_report(const EconArgs& a, const OutputConfig& out) {
    const auto model = make_model(a, fiscap::Aligned{*a.alpha});
    const fiscap::Policy policy{*a.t, *a.g};
    const auto r = fiscap::optimal_report(model, policy, *a.alpha);
    if (out.format == "csv") {
        std::string csv = "report,interior,deviation,net_income,concealment_cost\n";
        csv += fiscap::format_double(r.report);
        csv += r.interior ? ",true," : ",false,";
        csv += fiscap::format_double(r.deviation);
        csv += ',';
        csv += fiscap::format_double(r.net_income);
        csv += ',';
        csv += fiscap::format_double(r.concealment_cost);
        csv += '\n';
        emit(out, csv);
        return 0;
    }
    ordered_json j{{"params", params_json(a)},
                   {"policy", ordered_json{{"t", policy.t}, {"g", policy.g}}},
                   {"alpha", *a.alpha}};
    j.update(fiscap::to_json(r));
    emit_json(out, j);
    return 0;
}

// ---------------------------------------------------------------- laffer ---

int cmd_laffer(const EconArgs& a, const OutputConfig& out) {
    const auto model = make_model(a, fiscap::Aligned{*a.alpha});
    const double g = *a.g;
    const double t_min = a.t_min.value_or(0.0);
    const double t_max = a.t_max.value_or(fiscap::revenue_arc_end(model, g, *a.alpha));
    const auto points = fiscap::laffer_curve(model, g, *a.alpha, t_min, t_max, a.n_points);
    if (out.format == "csv") {
        emit(out, fiscap::to_csv(points));
        return 0;
    }
    ordered_json j{{"params", params_json(a)},
                   {"g", g},
                   {"alpha", *a.alpha},
                   {"peak",
                    ordered_json{{"t", fiscap::laffer_peak_rate(model, g, *a.alpha)},
                                 {"revenue", fiscap::laffer_peak_revenue(model, g, *a.alpha)}}},
                   {"points", fiscap::to_json(points)}};
    emit_json(out, j);
    return 0;
}

// ----------------------------------------------------------------- elite ---

struct EliteValuations {
    double alpha_e;
    double alpha_c;
    fiscap::ValueConfig values;
};

EliteValuations resolve_elite_valuations(const EconArgs& a) {
    if (a.alpha && !a.alpha_e && !a.alpha_c)
        return {*a.alpha, *a.alpha, fiscap::Aligned{*a.alpha}};
    if (!a.alpha && a.alpha_e && a.alpha_c)
        return {*a.alpha_e, *a.alpha_c, fiscap::Unaligned{*a.alpha_e, *a.alpha_c}};
    throw UsageError("pass either --alpha (aligned) or both --alpha-e and --alpha-c (unaligned)");
}

int cmd_elite(const EconArgs& a, const OutputConfig& out) {
    const auto ev = resolve_elite_valuations(a);
    const auto model = make_model(a, ev.values);
    const auto d = fiscap::optimal_allocation(model, ev.alpha_e, ev.alpha_c);
    if (out.format == "csv") {
        std::string csv = "g_star,tie,v0,v1,region,kappa_cutoff,note\n";
        csv += std::to_string(d.g_star);
        csv += d.tie ? ",true," : ",false,";
        csv += fiscap::format_double(d.v0);
        csv += ',';
        csv += fiscap::format_double(d.v1);
        csv += ',';
        csv += fiscap::region_name(d.region.tag);
        csv += ',';
        csv += d.region.kappa_cutoff ? fiscap::format_double(*d.region.kappa_cutoff)
                                     : std::string();
        csv += ',';
        if (!d.note.empty()) csv += "\"" + d.note + "\"";
        csv += '\n';
        emit(out, csv);
        return 0;
    }
    ordered_json j{{"params", params_json(a)}, {"alpha_e", ev.alpha_e}, {"alpha_c", ev.alpha_c}};
    j.update(fiscap::to_json(d));
    emit_json(out, j);
    return 0;
}

// -------------------------------------------------------------- classify ---

int cmd_classify(const EconArgs& a, const OutputConfig& out) {
    const auto model = make_model(a, fiscap::TwoState{*a.alpha_l, *a.alpha_h, *a.rho});
    const auto eq = fiscap::classify_equilibrium(model, *a.alpha_l, *a.alpha_h, *a.rho);
    if (out.format == "csv") {
        std::string csv =
            "tag,regime,alpha_bar,kappa_min_h,kappa_max_l,kappa_pool,kappa_h_min,kappa_h_max,"
            "tax_base_g0,tax_base_g1\n";
        csv += fiscap::eq_tag_name(eq.tag);
        csv += ',';
        csv += fiscap::regime_name(eq.regime);
        csv += ',';
        csv += opt_field(eq.thresholds.alpha_bar);
        csv += ',';
        csv += opt_field(eq.thresholds.kappa_min_h);
        csv += ',';
        csv += opt_field(eq.thresholds.kappa_max_l);
        csv += ',';
        csv += opt_field(eq.thresholds.kappa_pool);
        csv += ',';
        csv += opt_field(eq.thresholds.kappa_h_min);
        csv += ',';
        csv += opt_field(eq.thresholds.kappa_h_max);
        csv += ',';
        csv += fiscap::format_double(eq.tax_base_g0);
        csv += ',';
        csv += opt_field(eq.tax_base_g1);
        csv += '\n';
        emit(out, csv);
    } else {
        ordered_json j{{"params", params_json(a)},
                       {"alpha_l", *a.alpha_l},
                       {"alpha_h", *a.alpha_h},
                       {"rho", *a.rho}};
        j.update(fiscap::to_json(eq));
        emit_json(out, j);
    }
    return (a.strict && eq.tag == fiscap::EqTag::no_pure_equilibrium) ? 2 : 0;
}

// ------------------------------------------------------------------ jump ---

int cmd_jump(const EconArgs& a, const OutputConfig& out) {
    const auto model = make_model(a, fiscap::Aligned{*a.alpha_h});
    const double j_factor = fiscap::jump_factor(model, *a.alpha_h);
    if (out.format == "csv") {
        emit(out, "jump_factor\n" + fiscap::format_double(j_factor) + "\n");
        return 0;
    }
    ordered_json j{{"params", params_json(a)},
                   {"alpha_h", *a.alpha_h},
                   {"jump_factor", j_factor}};
    emit_json(out, j);
    return 0;
}

// -------------------------------------------------------------- simulate ---

int cmd_simulate(const EconArgs& a, const OutputConfig& out) {
    fiscap::Scenario scenario{make_model(a, fiscap::TwoState{*a.alpha_l, *a.alpha_h, *a.rho}),
                              *a.alpha_l,
                              *a.alpha_h,
                              *a.rho,
                              a.horizon,
                              a.shock_period,
                              a.initial_state == "high" ? fiscap::StateTag::high
                                                        : fiscap::StateTag::low};
    const auto trajectory = fiscap::run_timeline(scenario);
    if (out.format == "csv") {
        emit(out, fiscap::to_csv(trajectory));
        return 0;
    }
    ordered_json j{{"params", params_json(a)},
                   {"alpha_l", *a.alpha_l},
                   {"alpha_h", *a.alpha_h},
                   {"rho", *a.rho}};
    j.update(fiscap::to_json(trajectory));
    emit_json(out, j);
    return 0;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(std::uint64_t seed, int draws, const OutputConfig& out) {
    const auto reports = fiscap::run_agreement_suite(seed, draws);
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;
    if (out.format == "csv") {
        emit(out, fiscap::to_csv(reports));
    } else {
        ordered_json j{{"seed", seed},
                       {"draws", draws},
                       {"all_passed", all_passed},
                       {"reports", fiscap::to_json(reports)}};
        emit_json(out, j);
    }
    return all_passed ? 0 : 1;
}

// ----------------------------------------------------------------- sweep ---

struct SweepAxis {
    std::string param;
    double lo;
    double hi;
    int n;
};

SweepAxis parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        fiscap::fail(fiscap::Errc::domain_violation, "axis must look like name=lo:hi:n");
    SweepAxis axis;
    axis.param = spec.substr(0, eq);
    for (auto& ch : axis.param)
        if (ch == '_') ch = '-';
    const std::string rest = spec.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        fiscap::fail(fiscap::Errc::domain_violation, "axis must look like name=lo:hi:n");
    try {
        axis.lo = std::stod(rest.substr(0, c1));
        axis.hi = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        axis.n = std::stoi(rest.substr(c2 + 1));
    } catch (const std::exception&) {
        fiscap::fail(fiscap::Errc::domain_violation, "axis bounds must be numeric: " + spec);
    }
    if (axis.n < 2) fiscap::fail(fiscap::Errc::domain_violation, "axis needs n >= 2 grid points");
    return axis;
}

void apply_axis_value(EconArgs& a, const std::string& param, double value) {
    if (param == "w") a.w = value;
    else if (param == "c") a.c = value;
    else if (param == "sigma") a.sigma = value;
    else if (param == "kappa") a.kappa = value;
    else if (param == "alpha") a.alpha = value;
    else if (param == "alpha-e") a.alpha_e = value;
    else if (param == "alpha-c") a.alpha_c = value;
    else if (param == "alpha-l") a.alpha_l = value;
    else if (param == "alpha-h") a.alpha_h = value;
    else if (param == "rho") a.rho = value;
    else if (param == "g") a.g = value;
    else if (param == "t") a.t = value;
    else fiscap::fail(fiscap::Errc::domain_violation, "unknown sweep parameter: " + param);
}

using SummaryRow = std::vector<std::pair<std::string, ordered_json>>;

SummaryRow summarize_point(const std::string& cmd, const EconArgs& a) {
    if (cmd == "report") {
        const auto model = make_model(a, fiscap::Aligned{*a.alpha});
        const auto r = fiscap::optimal_report(model, fiscap::Policy{*a.t, *a.g}, *a.alpha);
        return {{"report", r.report}};
    }
    if (cmd == "laffer") {
        const auto model = make_model(a, fiscap::Aligned{*a.alpha});
        return {{"t_hat", fiscap::laffer_peak_rate(model, *a.g, *a.alpha)},
                {"revenue", fiscap::laffer_peak_revenue(model, *a.g, *a.alpha)}};
    }
    if (cmd == "elite") {
        const auto ev = resolve_elite_valuations(a);
        const auto model = make_model(a, ev.values);
        const auto d = fiscap::optimal_allocation(model, ev.alpha_e, ev.alpha_c);
        return {{"g_star", d.g_star}, {"region", fiscap::region_name(d.region.tag)}};
    }
    if (cmd == "classify") {
        const auto model = make_model(a, fiscap::TwoState{*a.alpha_l, *a.alpha_h, *a.rho});
        const auto eq = fiscap::classify_equilibrium(model, *a.alpha_l, *a.alpha_h, *a.rho);
        return {{"tag", fiscap::eq_tag_name(eq.tag)}};
    }
    if (cmd == "jump") {
        const auto model = make_model(a, fiscap::Aligned{*a.alpha_h});
        return {{"jump_factor", fiscap::jump_factor(model, *a.alpha_h)}};
    }
    throw UsageError("sweep supports --cmd report|laffer|elite|classify|jump");
}

int cmd_sweep(const EconArgs& base, const std::string& cmd,
              const std::vector<std::string>& axis_specs, const OutputConfig& out) {
    if (axis_specs.empty() || axis_specs.size() > 2)
        throw UsageError("sweep takes one or two --axis name=lo:hi:n arguments");
    std::vector<SweepAxis> axes;
    for (const auto& spec : axis_specs) axes.push_back(parse_axis(spec));

    std::vector<std::pair<std::vector<double>, SummaryRow>> rows;
    auto evaluate = [&](const std::vector<double>& coords) {
        EconArgs point = base;
        for (std::size_t k = 0; k < axes.size(); ++k)
            apply_axis_value(point, axes[k].param, coords[k]);
        rows.emplace_back(coords, summarize_point(cmd, point));
    };
    auto grid_value = [](const SweepAxis& axis, int i) {
        return i == axis.n - 1 ? axis.hi : axis.lo + (axis.hi - axis.lo) * i / (axis.n - 1);
    };
    for (int i = 0; i < axes[0].n; ++i) {
        if (axes.size() == 1) {
            evaluate({grid_value(axes[0], i)});
        } else {
            for (int k = 0; k < axes[1].n; ++k)
                evaluate({grid_value(axes[0], i), grid_value(axes[1], k)});
        }
    }

    if (out.format == "csv") {
        std::string csv;
        for (const auto& axis : axes) {
            csv += axis.param;
            csv += ',';
        }
        for (std::size_t k = 0; k < rows.front().second.size(); ++k) {
            csv += rows.front().second[k].first;
            csv += k + 1 < rows.front().second.size() ? ',' : '\n';
        }
        for (const auto& [coords, summary] : rows) {
            for (const double v : coords) {
                csv += fiscap::format_double(v);
                csv += ',';
            }
            for (std::size_t k = 0; k < summary.size(); ++k) {
                const auto& value = summary[k].second;
                if (value.is_string())
                    csv += value.get<std::string>();
                else if (value.is_number_integer())
                    csv += std::to_string(value.get<long long>());
                else
                    csv += fiscap::format_double(value.get<double>());
                csv += k + 1 < summary.size() ? ',' : '\n';
            }
        }
        emit(out, csv);
        return 0;
    }

    ordered_json jaxes = ordered_json::array();
    for (const auto& axis : axes)
        jaxes.push_back(ordered_json{
            {"param", axis.param}, {"lo", axis.lo}, {"hi", axis.hi}, {"n", axis.n}});
    ordered_json jrows = ordered_json::array();
    for (const auto& [coords, summary] : rows) {
        ordered_json row = ordered_json::object();
        for (std::size_t k = 0; k < coords.size(); ++k) row[axes[k].param] = coords[k];
        for (const auto& [name, value] : summary) row[name] = value;
        jrows.push_back(std::move(row));
    }
    emit_json(out, ordered_json{{"cmd", cmd}, {"axes", jaxes}, {"rows", jrows}});
    return 0;
}

// ------------------------------------------------------- config handling ---

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Loads the flat key=value config named by --config (if any) and splices the
// pairs in as options: app-level keys right after the program name,
// subcommand keys right after the subcommand token. Every option uses
// take-last policy, so explicit flags override the file.
std::vector<std::string> with_config_defaults(const std::vector<std::string>& argv,
                                              const CLI::App& app) {
    std::string config_path;
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i] == "--config" && i + 1 < argv.size()) config_path = argv[i + 1];
        else if (argv[i].rfind("--config=", 0) == 0) config_path = argv[i].substr(9);
    }
    if (config_path.empty()) return argv;

    std::ifstream file(config_path);
    if (!file) throw UsageError("cannot read config file: " + config_path);

    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    while (std::getline(file, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line is not key=value: " + stripped);
        std::string key = trim(stripped.substr(0, eq));
        for (auto& ch : key)
            if (ch == '_') ch = '-';
        pairs.emplace_back(key, trim(stripped.substr(eq + 1)));
    }

    std::size_t sub_pos = 0;
    const CLI::App* sub = nullptr;
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i].empty() || argv[i][0] == '-') continue;
        if (const auto* candidate = app.get_subcommand_no_throw(argv[i]); candidate != nullptr) {
            sub_pos = i;
            sub = candidate;
            break;
        }
    }

    auto option_of = [](const CLI::App* owner, const std::string& key) -> const CLI::Option* {
        if (owner == nullptr) return nullptr;
        return const_cast<CLI::App*>(owner)->get_option_no_throw("--" + key);
    };

    std::vector<std::string> result;
    result.push_back(argv[0]);
    for (const auto& [key, value] : pairs)
        if (key != "config" && option_of(&app, key) != nullptr)
            result.push_back("--" + key + "=" + value);
    for (std::size_t i = 1; i < argv.size(); ++i) {
        result.push_back(argv[i]);
        if (sub != nullptr && i == sub_pos)
            for (const auto& [key, value] : pairs)
                if (key != "config" && option_of(sub, key) != nullptr)
                    result.push_back("--" + key + "=" + value);
    }
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    EconArgs a;
    std::string format;
    std::string output_path;
    std::string config_path;
    std::string sweep_cmd;
    std::vector<std::string> axis_specs;
    std::uint64_t seed = 42;
    int draws = 1000;

    CLI::App app{"Closed-form solvers for compliance, Laffer curves, elite allocation and the "
                 "dynamic signaling equilibrium, with a brute-force verification suite."};
    app.name("fiscap");
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    // Fallthrough lets --format/--output/--config appear after the
    // subcommand as well.
    auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    app.add_option("--format", format, "Output format: json or csv (default: FISCAP_FORMAT or json)");
    app.add_option("--output", output_path, "Write output bytes to this file instead of stdout");
    app.add_option("--config", config_path, "Flat key=value config file; flags override it");

    auto add_model_options = [&a](CLI::App* cmd) {
        cmd->add_option("--w", a.w, "Income level (> 0)");
        cmd->add_option("--c", a.c, "Enforcement intensity (> 0)");
        cmd->add_option("--sigma", a.sigma, "Institutional strength, in (0,1)");
        cmd->add_option("--kappa", a.kappa, "Degree of morality, in [0,1)");
    };

    auto* report = add_subcommand("report", "Optimal income report for a policy");
    add_model_options(report);
    report->add_option("--alpha", a.alpha, "Citizen-side valuation")->required();
    report->add_option("--t", a.t, "Tax rate")->required();
    report->add_option("--g", a.g, "Allocation share in [0,1]")->required();

    auto* laffer = add_subcommand("laffer", "Laffer curve and revenue peak");
    add_model_options(laffer);
    laffer->add_option("--alpha", a.alpha, "Public-good valuation")->required();
    laffer->add_option("--g", a.g, "Allocation share in [0,1]")->required();
    laffer->add_option("--t-min", a.t_min, "Lower end of the sampled rate range (default 0)");
    laffer->add_option("--t-max", a.t_max,
                       "Upper end of the sampled rate range (default: positive arc end)");
    laffer->add_option("--n-points", a.n_points, "Number of samples (default 1001)");

    auto* elite = add_subcommand("elite", "Elite allocation, region and thresholds");
    add_model_options(elite);
    elite->add_option("--alpha", a.alpha, "Shared valuation (aligned case)");
    elite->add_option("--alpha-e", a.alpha_e, "Elite valuation (unaligned case)");
    elite->add_option("--alpha-c", a.alpha_c, "Citizen valuation (unaligned case)");

    auto* classify = add_subcommand("classify", "Dynamic PBE classification");
    add_model_options(classify);
    classify->add_option("--alpha-l", a.alpha_l, "Low-state valuation")->required();
    classify->add_option("--alpha-h", a.alpha_h, "High-state valuation")->required();
    classify->add_option("--rho", a.rho, "Prior Pr(alpha = alpha_h)")->required();
    classify->add_flag("--strict", a.strict, "Exit 2 when no pure equilibrium exists");

    auto* jump = add_subcommand("jump", "Same-period fiscal multiplier");
    add_model_options(jump);
    jump->add_option("--alpha-h", a.alpha_h, "High-state valuation")->required();

    auto* simulate = add_subcommand("simulate", "Deterministic timeline of the dynamic game");
    add_model_options(simulate);
    simulate->add_option("--alpha-l", a.alpha_l, "Low-state valuation")->required();
    simulate->add_option("--alpha-h", a.alpha_h, "High-state valuation")->required();
    simulate->add_option("--rho", a.rho, "Prior Pr(alpha = alpha_h)")->required();
    simulate->add_option("--horizon", a.horizon, "Number of periods (>= 1)");
    simulate->add_option("--shock-period", a.shock_period,
                         "Period at which the state switches from low to high");
    simulate->add_option("--initial-state", a.initial_state, "low or high")
        ->check(CLI::IsMember({"low", "high"}));

    auto* sweep = add_subcommand("sweep", "Grid a wrapped subcommand over 1-2 parameters");
    add_model_options(sweep);
    sweep->add_option("--cmd", sweep_cmd, "Wrapped subcommand: report|laffer|elite|classify|jump")
        ->required();
    sweep->add_option("--axis", axis_specs, "Axis as name=lo:hi:n (repeat for a second axis)")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    sweep->add_option("--alpha", a.alpha, "Shared valuation");
    sweep->add_option("--alpha-e", a.alpha_e, "Elite valuation");
    sweep->add_option("--alpha-c", a.alpha_c, "Citizen valuation");
    sweep->add_option("--alpha-l", a.alpha_l, "Low-state valuation");
    sweep->add_option("--alpha-h", a.alpha_h, "High-state valuation");
    sweep->add_option("--rho", a.rho, "Prior Pr(alpha = alpha_h)");
    sweep->add_option("--g", a.g, "Allocation share");
    sweep->add_option("--t", a.t, "Tax rate");

    auto* verify = add_subcommand("verify", "Run the oracle agreement suite");
    verify->add_option("--seed", seed, "RNG seed (default 42)");
    verify->add_option("--draws", draws, "Number of random draws (default 1000)");

    std::vector<std::string> raw_args(argv, argv + argc);
    try {
        const auto args = with_config_defaults(raw_args, app);
        std::vector<const char*> cargs;
        cargs.reserve(args.size());
        for (const auto& s : args) cargs.push_back(s.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    }

    OutputConfig out;
    out.path = output_path;
    if (!format.empty()) {
        out.format = format;
    } else if (const char* env = std::getenv("FISCAP_FORMAT"); env != nullptr && *env != '\0') {
        out.format = env;
    } else {
        out.format = "json";
    }
    if (out.format != "json" && out.format != "csv") {
        std::cerr << "usage error: format must be json or csv, got " << out.format << "\n";
        return 64;
    }

    try {
        if (app.got_subcommand(report)) return cmd_report(a, out);
        if (app.got_subcommand(laffer)) return cmd_laffer(a, out);
        if (app.got_subcommand(elite)) return cmd_elite(a, out);
        if (app.got_subcommand(classify)) return cmd_classify(a, out);
        if (app.got_subcommand(jump)) return cmd_jump(a, out);
        if (app.got_subcommand(simulate)) return cmd_simulate(a, out);
        if (app.got_subcommand(sweep)) return cmd_sweep(a, sweep_cmd, axis_specs, out);
        if (app.got_subcommand(verify)) return cmd_verify(seed, draws, out);
        std::cerr << "usage error: no subcommand selected\n";
        return 64;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const fiscap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == fiscap::Errc::no_equilibrium ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
