#include "fiscap/signaling.hpp"

#include "fiscap/elite.hpp"

namespace fiscap {

const char* regime_name(Regime regime) {
    return regime == Regime::weak_high ? "weak_high" : "strong_high";
}

const char* eq_tag_name(EqTag tag) {
    switch (tag) {
        case EqTag::pooling_rents: return "pooling_rents";
        case EqTag::separation: return "separation";
        case EqTag::pooling_provision: return "pooling_provision";
        case EqTag::no_pure_equilibrium: return "no_pure_equilibrium";
    }
    return "unknown_tag";
}

const char* strategy_name(StrategyTag tag) {
    switch (tag) {
        case StrategyTag::separating: return "separating";
        case StrategyTag::pooling_rents: return "pooling_rents";
        case StrategyTag::pooling_provision: return "pooling_provision";
    }
    return "unknown_strategy";
}

std::optional<StrategyTag> strategy_of(EqTag tag) {
    switch (tag) {
        case EqTag::separation: return StrategyTag::separating;
        case EqTag::pooling_rents: return StrategyTag::pooling_rents;
        case EqTag::pooling_provision: return StrategyTag::pooling_provision;
        case EqTag::no_pure_equilibrium: return std::nullopt;
    }
    return std::nullopt;
}

double provision_gain(const ValidatedModel& model, double alpha, double p) {
    if (!(alpha > 0.0)) fail(Errc::domain_violation, "alpha must be > 0");
    if (!(p > 0.0)) fail(Errc::domain_violation, "belief p must be > 0");
    const auto& mp = model.params;
    if (!(mp.kappa * p < 1.0))
        fail(Errc::phi_infeasible, "kappa*p >= 1: believed tax base unbounded");
    const double quarter = 0.25 * mp.w * mp.c;
    return quarter * (alpha / (1.0 - mp.kappa * p) - model.theta / (1.0 - mp.kappa * model.s));
}

namespace {

void check_two_state_ordering(double alpha_l, double s) {
    if (!(alpha_l > 0.0)) fail(Errc::domain_violation, "alpha_l must be > 0");
    if (!(alpha_l < s))
        fail(Errc::region_mismatch, "two-state analysis requires alpha_l < sigma*theta");
}

}  // namespace

double kappa_min_high(double alpha_h, double sigma) {
    const double th = theta(sigma);
    if (!(sigma > 0.0 && sigma < 1.0)) fail(Errc::domain_violation, "sigma must be in (0,1)");
    if (!(alpha_h > sigma * th && alpha_h <= th))
        fail(Errc::region_mismatch, "kappa_min_h requires sigma*theta < alpha_h <= theta");
    return (th - alpha_h) / (th * alpha_h * (1.0 - sigma));
}

double kappa_max_low(double alpha_l, double alpha_h, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) fail(Errc::domain_violation, "sigma must be in (0,1)");
    const double th = theta(sigma);
    const double s = sigma * th;
    check_two_state_ordering(alpha_l, s);
    if (!(alpha_h > s)) fail(Errc::region_mismatch, "kappa_max_l requires alpha_h > sigma*theta");
    return (th - alpha_l) / (th * alpha_h - alpha_l * s);
}

ThresholdSet weak_high_thresholds(double alpha_l, double alpha_h, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) fail(Errc::domain_violation, "sigma must be in (0,1)");
    const double th = theta(sigma);
    const double s = sigma * th;
    check_two_state_ordering(alpha_l, s);
    if (!(s < alpha_h && alpha_h <= th))
        fail(Errc::region_mismatch,
             "weak high state requires alpha_l < sigma*theta < alpha_h <= theta");
    ThresholdSet ts;
    ts.kappa_min_h = kappa_min_high(alpha_h, sigma);
    ts.kappa_max_l = kappa_max_low(alpha_l, alpha_h, sigma);
    return ts;
}

ThresholdSet pooling_thresholds(double alpha_l, double alpha_h, double rho, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) fail(Errc::domain_violation, "sigma must be in (0,1)");
    if (!(rho >= 0.0 && rho <= 1.0)) fail(Errc::domain_violation, "rho must be in [0,1]");
    const double th = theta(sigma);
    const double s = sigma * th;
    check_two_state_ordering(alpha_l, s);
    if (!(alpha_h > s)) fail(Errc::region_mismatch, "two-state analysis requires alpha_h > sigma*theta");

    ThresholdSet ts;
    const double abar = rho * alpha_h + (1.0 - rho) * alpha_l;
    ts.alpha_bar = abar;
    ts.kappa_pool = (th - alpha_l) / (th * (abar - alpha_l * sigma));
    if (alpha_h * sigma < abar) {
        // High type's pooling IC is a lower bound only when alpha_h <= theta;
        // above theta it holds automatically.
        if (alpha_h <= th) ts.kappa_h_min = (th - alpha_h) / (th * (abar - alpha_h * sigma));
    } else if (alpha_h * sigma > abar) {
        // An upper bound exists only in the strong high state; in the weak
        // high state pooling at provision is infeasible here.
        if (alpha_h > th) ts.kappa_h_max = (alpha_h - th) / (th * (alpha_h * sigma - abar));
    }
    return ts;
}

EquilibriumClass classify_equilibrium(const ValidatedModel& model, double alpha_l, double alpha_h,
                                      double rho) {
    const auto& mp = model.params;
    const double th = model.theta;
    const double s = model.s;
    check_two_state_ordering(alpha_l, s);
    if (!(alpha_h > s))
        fail(Errc::region_mismatch, "two-state analysis requires alpha_h > sigma*theta");
    if (!(rho >= 0.0 && rho <= 1.0)) fail(Errc::domain_violation, "rho must be in [0,1]");
    if (!(mp.kappa * alpha_h < 1.0))
        fail(Errc::kappa_infeasible, "kappa >= 1/alpha_h (over-compliance bound)");

    EquilibriumClass eq;
    eq.regime = (alpha_h <= th) ? Regime::weak_high : Regime::strong_high;

    eq.thresholds = pooling_thresholds(alpha_l, alpha_h, rho, model.params.sigma);
    eq.thresholds.kappa_max_l = kappa_max_low(alpha_l, alpha_h, model.params.sigma);
    if (eq.regime == Regime::weak_high)
        eq.thresholds.kappa_min_h = kappa_min_high(alpha_h, model.params.sigma);

    const double kappa = mp.kappa;
    const double abar = *eq.thresholds.alpha_bar;
    const double kmax = *eq.thresholds.kappa_max_l;
    const double kpool = *eq.thresholds.kappa_pool;

    // Incentive flags. Pooling's high-type IC is evaluated in the
    // cross-multiplied form alpha_h - theta >= kappa*(alpha_h*s - theta*abar)
    // when no finite threshold exists (knife edges included).
    const bool sep_low_ok = kappa < kmax;
    bool sep_high_ok = true;
    bool rents_high_ok = false;
    if (eq.regime == Regime::weak_high) {
        const double kmin = *eq.thresholds.kappa_min_h;
        sep_high_ok = kappa >= kmin;
        rents_high_ok = kappa <= kmin;
    }
    const bool rents_low_ok = kappa <= kmax;
    const bool pool_low_ok = kappa >= kpool;
    bool pool_high_ok;
    if (eq.thresholds.kappa_h_min)
        pool_high_ok = kappa >= *eq.thresholds.kappa_h_min;
    else if (eq.thresholds.kappa_h_max)
        pool_high_ok = kappa <= *eq.thresholds.kappa_h_max;
    else
        pool_high_ok = alpha_h - th >= kappa * (alpha_h * s - th * abar);

    if (eq.regime == Regime::weak_high && !sep_high_ok) {
        eq.tag = EqTag::pooling_rents;
    } else if (sep_low_ok) {
        eq.tag = EqTag::separation;
    } else {
        eq.tag = (pool_low_ok && pool_high_ok) ? EqTag::pooling_provision
                                               : EqTag::no_pure_equilibrium;
    }

    eq.tax_base_g0 = equilibrium_tax_base(model, 0, alpha_h);
    switch (eq.tag) {
        case EqTag::separation:
        case EqTag::pooling_rents:
            // On-path (separation) or off-path deviation belief (rents): the
            // observed provision is attributed to the high type.
            eq.tax_base_g1 = equilibrium_tax_base(model, 1, alpha_h);
            break;
        case EqTag::pooling_provision:
            eq.tax_base_g1 = equilibrium_tax_base(model, 1, abar);
            break;
        case EqTag::no_pure_equilibrium:
            eq.tax_base_g1 = std::nullopt;
            break;
    }

    const double d_high_sep = provision_gain(model, alpha_h, alpha_h);
    const double d_low_sep = provision_gain(model, alpha_l, alpha_h);
    const double d_high_pool = provision_gain(model, alpha_h, abar);
    const double d_low_pool = provision_gain(model, alpha_l, abar);
    eq.diagnostics = {
        {"separation_high", d_high_sep, sep_high_ok},
        {"separation_low", d_low_sep, sep_low_ok},
        {"pooling_rents_high", d_high_sep, rents_high_ok},
        {"pooling_rents_low", d_low_sep, rents_low_ok},
        {"pooling_provision_high", d_high_pool, pool_high_ok},
        {"pooling_provision_low", d_low_pool, pool_low_ok},
    };
    return eq;
}

double posterior(StrategyTag strategy, int observed_g, double alpha_l, double alpha_h, double rho) {
    if (observed_g != 0 && observed_g != 1)
        fail(Errc::domain_violation, "observed_g must be 0 or 1");
    if (!(rho >= 0.0 && rho <= 1.0)) fail(Errc::domain_violation, "rho must be in [0,1]");
    if (!(alpha_l < alpha_h)) fail(Errc::domain_violation, "alpha_l must be < alpha_h");
    const double abar = rho * alpha_h + (1.0 - rho) * alpha_l;
    switch (strategy) {
        case StrategyTag::separating:
            return observed_g == 1 ? alpha_h : alpha_l;
        case StrategyTag::pooling_rents:
            return observed_g == 0 ? abar : alpha_h;  // deviation read as high type
        case StrategyTag::pooling_provision:
            return observed_g == 1 ? abar : alpha_l;  // deviation read as low type
    }
    fail(Errc::domain_violation, "unknown strategy tag");
}

double jump_factor(const ValidatedModel& model, double alpha_h) {
    if (!(alpha_h > 0.0)) fail(Errc::domain_violation, "alpha_h must be > 0");
    const auto& mp = model.params;
    if (!(mp.kappa * alpha_h < 1.0))
        fail(Errc::phi_infeasible, "kappa*alpha_h >= 1: high-state tax base unbounded");
    return (1.0 - mp.kappa * model.s) / (1.0 - mp.kappa * alpha_h);
}

}  // namespace fiscap
