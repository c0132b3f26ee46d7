#include "fiscap/model.hpp"

#include <cmath>
#include <sstream>

namespace fiscap {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::domain_violation: return "domain_violation";
        case Errc::kappa_infeasible: return "kappa_infeasible";
        case Errc::phi_infeasible: return "phi_infeasible";
        case Errc::region_mismatch: return "region_mismatch";
        case Errc::grid_too_coarse: return "grid_too_coarse";
        case Errc::no_equilibrium: return "no_equilibrium";
        case Errc::infeasible_scenario: return "infeasible_scenario";
        case Errc::index_out_of_range: return "index_out_of_range";
    }
    return "unknown_error";
}

namespace {

std::string bound_msg(const char* name, double value, const char* bound) {
    std::ostringstream os;
    os << name << " = " << value << " violates " << bound;
    return os.str();
}

}  // namespace

double theta(double sigma) {
    if (!(sigma >= 0.0 && sigma <= 1.0))
        fail(Errc::domain_violation, bound_msg("sigma", sigma, "sigma in [0,1]"));
    return 1.0 / (1.0 + sigma);
}

double phi(double g, double alpha, double sigma) {
    if (!(g >= 0.0 && g <= 1.0)) fail(Errc::domain_violation, bound_msg("g", g, "g in [0,1]"));
    if (!(alpha > 0.0)) fail(Errc::domain_violation, bound_msg("alpha", alpha, "alpha > 0"));
    if (!(sigma > 0.0 && sigma < 1.0))
        fail(Errc::domain_violation, bound_msg("sigma", sigma, "sigma in (0,1)"));
    return g * alpha + (1.0 - g) * sigma * theta(sigma);
}

double relevant_alpha(const ValueConfig& values) {
    if (const auto* a = std::get_if<Aligned>(&values)) return a->alpha;
    if (const auto* u = std::get_if<Unaligned>(&values)) return u->alpha_c;
    return std::get<TwoState>(values).alpha_h;
}

ValidatedModel validate(const ModelParams& params, const ValueConfig& values) {
    if (!(params.w > 0.0)) fail(Errc::domain_violation, bound_msg("w", params.w, "w > 0"));
    if (!(params.c > 0.0)) fail(Errc::domain_violation, bound_msg("c", params.c, "c > 0"));
    if (!(params.sigma > 0.0 && params.sigma < 1.0))
        fail(Errc::domain_violation, bound_msg("sigma", params.sigma, "sigma in (0,1)"));
    // The operative upper bound on kappa is Assumption 1 (kappa < 1/alpha),
    // checked below once the relevant valuation is known; the dynamic
    // analysis needs kappa above 1 whenever alpha_h < 1.
    if (!(params.kappa >= 0.0))
        fail(Errc::domain_violation, bound_msg("kappa", params.kappa, "kappa >= 0"));

    if (const auto* a = std::get_if<Aligned>(&values)) {
        if (!(a->alpha > 0.0)) fail(Errc::domain_violation, bound_msg("alpha", a->alpha, "alpha > 0"));
    } else if (const auto* u = std::get_if<Unaligned>(&values)) {
        if (!(u->alpha_e > 0.0))
            fail(Errc::domain_violation, bound_msg("alpha_e", u->alpha_e, "alpha_e > 0"));
        if (!(u->alpha_c > 0.0))
            fail(Errc::domain_violation, bound_msg("alpha_c", u->alpha_c, "alpha_c > 0"));
    } else {
        const auto& ts = std::get<TwoState>(values);
        if (!(ts.alpha_l > 0.0))
            fail(Errc::domain_violation, bound_msg("alpha_l", ts.alpha_l, "alpha_l > 0"));
        if (!(ts.alpha_h > 0.0))
            fail(Errc::domain_violation, bound_msg("alpha_h", ts.alpha_h, "alpha_h > 0"));
        if (!(ts.alpha_l < ts.alpha_h))
            fail(Errc::domain_violation, bound_msg("alpha_l", ts.alpha_l, "alpha_l < alpha_h"));
        if (!(ts.rho >= 0.0 && ts.rho <= 1.0))
            fail(Errc::domain_violation, bound_msg("rho", ts.rho, "rho in [0,1]"));
    }

    const double cap = relevant_alpha(values);
    if (!(params.kappa * cap < 1.0))
        fail(Errc::kappa_infeasible,
             bound_msg("kappa", params.kappa, "kappa < 1/alpha (over-compliance bound)"));

    ValidatedModel model;
    model.params = params;
    model.values = values;
    model.theta = theta(params.sigma);
    model.s = params.sigma * model.theta;
    return model;
}

void check_policy(const Policy& policy) {
    if (!(policy.t >= 0.0)) fail(Errc::domain_violation, bound_msg("t", policy.t, "t >= 0"));
    if (!(policy.g >= 0.0 && policy.g <= 1.0))
        fail(Errc::domain_violation, bound_msg("g", policy.g, "g in [0,1]"));
}

}  // namespace fiscap
