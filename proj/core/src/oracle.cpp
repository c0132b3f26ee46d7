#include "fiscap/oracle.hpp"

#include <cmath>

#include "fiscap/citizen.hpp"
#include "fiscap/elite.hpp"
#include "fiscap/fiscal.hpp"

namespace fiscap {

namespace {

// Treat |delta| below this scale-aware band as exact indifference when
// reading signs off numerically computed gains.
double zero_band(const ValidatedModel& model) {
    return 1e-12 * std::max(1.0, 0.25 * model.params.w * model.params.c);
}

GridSpec peak_grid(const ValidatedModel& model, double g, double alpha) {
    GridSpec grid;
    grid.lo = 0.0;
    grid.hi = revenue_arc_end(model, g, alpha);
    grid.step = grid.hi / 1000.0;
    return grid;
}

}  // namespace

double brute_force_report(const ValidatedModel& model, const Policy& policy, double alpha,
                          const GridSpec& grid) {
    // Ambient aggregates fixed at zero: they shift the objective additively
    // and leave the maximizer untouched.
    return maximize_scalar(
        [&](double report) { return hm_utility(report, model, policy, alpha, 0.0, 0.0); }, grid);
}

PeakEstimate brute_force_peak(const ValidatedModel& model, double g, double alpha,
                              const GridSpec& grid) {
    const double t_hat = maximize_scalar(
        [&](double t) { return revenue(model, Policy{t, g}, alpha); }, grid);
    return {t_hat, revenue(model, Policy{t_hat, g}, alpha)};
}

int brute_force_allocation(const ValidatedModel& model, double alpha_e, double alpha_c) {
    const double base1 = brute_force_peak(model, 1.0, alpha_c, peak_grid(model, 1.0, alpha_c)).revenue;
    const double base0 = brute_force_peak(model, 0.0, alpha_c, peak_grid(model, 0.0, alpha_c)).revenue;
    const double v1 = base1 * alpha_e;
    const double v0 = base0 * model.theta;
    return v1 >= v0 ? 1 : 0;  // ties resolve to provision, matching the library
}

double bisect_aligned_threshold(double alpha, double sigma, double w, double c, double kappa_hi,
                                int iters) {
    auto value_gap = [&](double kappa) {
        const auto m = validate(ModelParams{w, c, sigma, kappa}, Aligned{alpha});
        return elite_value(m, 1, alpha, alpha) - elite_value(m, 0, alpha, alpha);
    };
    double lo = 0.0;
    double hi = kappa_hi;
    double f_lo = value_gap(lo);
    double f_hi = value_gap(hi);
    if (!(f_lo < 0.0 && f_hi > 0.0))
        fail(Errc::domain_violation,
             "corner comparison does not change sign on [0, kappa_hi]; no threshold to bracket");
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (value_gap(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

EqTag classify_by_ic(const ValidatedModel& model, double alpha_l, double alpha_h, double rho) {
    const double band = zero_band(model);
    const double abar = rho * alpha_h + (1.0 - rho) * alpha_l;
    const double d_high_sep = provision_gain(model, alpha_h, alpha_h);
    const double d_low_sep = provision_gain(model, alpha_l, alpha_h);

    if (alpha_h <= model.theta && d_high_sep < -band) return EqTag::pooling_rents;
    if (d_low_sep < -band) return EqTag::separation;

    const bool pool_high = provision_gain(model, alpha_h, abar) >= -band;
    const bool pool_low = provision_gain(model, alpha_l, abar) >= -band;
    return (pool_high && pool_low) ? EqTag::pooling_provision : EqTag::no_pure_equilibrium;
}

namespace {

enum class IcDirection { nonnegative, nonpositive };

struct IcSpec {
    std::string name;
    double type_alpha;
    double belief;
    IcDirection direction;
};

OracleReport ic_report(const ValidatedModel& model, const IcSpec& ic, double base0_bf,
                       bool expect_violation = false) {
    const GridSpec grid1 = peak_grid(model, 1.0, ic.belief);
    const double base1_bf = brute_force_peak(model, 1.0, ic.belief, grid1).revenue;
    const double delta_bf = base1_bf * ic.type_alpha - base0_bf * model.theta;
    const double delta_cf = provision_gain(model, ic.type_alpha, ic.belief);

    const double band = zero_band(model);
    const bool holds = ic.direction == IcDirection::nonnegative ? delta_bf >= -band
                                                                : delta_bf <= band;
    OracleReport report;
    report.target = ic.name;
    report.closed_form = delta_cf;
    report.oracle_value = delta_bf;
    report.abs_err = std::abs(delta_cf - delta_bf);
    report.grid = grid1;
    report.passed = report.abs_err <= report.grid.tolerance &&
                    (expect_violation ? !holds : holds);
    return report;
}

}  // namespace

std::vector<OracleReport> verify_pbe(const EquilibriumClass& candidate, const ValidatedModel& model,
                                     double alpha_l, double alpha_h, double rho) {
    const double abar = rho * alpha_h + (1.0 - rho) * alpha_l;
    const double base0_bf =
        brute_force_peak(model, 0.0, alpha_l, peak_grid(model, 0.0, alpha_l)).revenue;

    const IcSpec sep_high{"pbe/separation/high_ic", alpha_h, alpha_h, IcDirection::nonnegative};
    const IcSpec sep_low{"pbe/separation/low_ic", alpha_l, alpha_h, IcDirection::nonpositive};
    const IcSpec rents_high{"pbe/pooling_rents/high_ic", alpha_h, alpha_h,
                            IcDirection::nonpositive};
    const IcSpec rents_low{"pbe/pooling_rents/low_ic", alpha_l, alpha_h, IcDirection::nonpositive};
    const IcSpec pool_high{"pbe/pooling_provision/high_ic", alpha_h, abar,
                           IcDirection::nonnegative};
    const IcSpec pool_low{"pbe/pooling_provision/low_ic", alpha_l, abar, IcDirection::nonnegative};

    std::vector<OracleReport> reports;
    switch (candidate.tag) {
        case EqTag::separation:
            reports.push_back(ic_report(model, sep_high, base0_bf));
            reports.push_back(ic_report(model, sep_low, base0_bf));
            break;
        case EqTag::pooling_rents:
            reports.push_back(ic_report(model, rents_high, base0_bf));
            reports.push_back(ic_report(model, rents_low, base0_bf));
            break;
        case EqTag::pooling_provision:
            reports.push_back(ic_report(model, pool_high, base0_bf));
            reports.push_back(ic_report(model, pool_low, base0_bf));
            break;
        case EqTag::no_pure_equilibrium: {
            // Confirming the gap means refuting every pure candidate: report
            // the constraint that breaks each one.
            auto refute = [&](const IcSpec& first, const IcSpec& second, const char* name) {
                OracleReport a = ic_report(model, first, base0_bf, /*expect_violation=*/true);
                OracleReport b = ic_report(model, second, base0_bf, /*expect_violation=*/true);
                OracleReport chosen = a.passed ? a : b;
                chosen.target = std::string(name) + "(" + (a.passed ? first.name : second.name) + ")";
                return chosen;
            };
            reports.push_back(refute(sep_high, sep_low, "pbe/refute_separation"));
            reports.push_back(refute(rents_high, rents_low, "pbe/refute_pooling_rents"));
            reports.push_back(refute(pool_high, pool_low, "pbe/refute_pooling_provision"));
            break;
        }
    }
    return reports;
}

std::vector<OracleReport> run_agreement_suite(std::uint64_t seed, int draws) {
    if (draws < 1) fail(Errc::domain_violation, "draws must be >= 1");
    Rng rng(seed);
    std::vector<OracleReport> out;
    out.reserve(static_cast<std::size_t>(draws) * 7);

    auto push = [&out](const char* target, double closed, double oracle, double tol,
                       GridSpec grid) {
        OracleReport r;
        r.target = target;
        r.closed_form = closed;
        r.oracle_value = oracle;
        r.abs_err = std::abs(closed - oracle);
        r.grid = grid;
        r.grid.tolerance = tol;
        r.passed = r.abs_err <= tol;
        out.push_back(std::move(r));
    };

    for (int i = 0; i < draws; ++i) {
        // Aligned economy drawn inside the validity box with 1% margins.
        const double w = rng.uniform(0.5, 2.0);
        const double c = rng.uniform(0.5, 2.0);
        const double sigma = rng.uniform(0.02, 0.98);
        const double alpha = rng.uniform(0.2, 2.5);
        const double kcap = std::min(1.0, 1.0 / alpha);
        const double kappa = rng.uniform(0.01 * kcap, 0.99 * kcap);
        const auto model = validate(ModelParams{w, c, sigma, kappa}, Aligned{alpha});
        const double g = rng.next01();
        const double arc = revenue_arc_end(model, g, alpha);
        const Policy policy{rng.uniform(0.01, 0.99) * arc, g};

        GridSpec report_grid;
        report_grid.lo = 0.0;
        report_grid.hi = 2.0 * w;
        report_grid.step = 1e-3;
        push("optimal_report", optimal_report(model, policy, alpha).report,
             brute_force_report(model, policy, alpha, report_grid), 1e-6, report_grid);

        const GridSpec pg = peak_grid(model, g, alpha);
        const PeakEstimate peak = brute_force_peak(model, g, alpha, pg);
        push("laffer_peak_rate", laffer_peak_rate(model, g, alpha), peak.t_hat, 1e-6, pg);
        push("laffer_peak_revenue", laffer_peak_revenue(model, g, alpha), peak.revenue, 1e-6, pg);

        // Weak-provision economy whose corner comparison flips inside the
        // admissible kappa range; resample until the flip is observable.
        for (int attempt = 0; attempt < 256; ++attempt) {
            const double sig = rng.uniform(0.05, 0.95);
            const double th = theta(sig);
            const double s = sig * th;
            const double a = s + rng.uniform(0.01, 0.99) * (th - s);
            const double khi = 0.999 * std::min(1.0, 1.0 / a);
            const auto gap_sign = [&](double k) {
                const auto m = validate(ModelParams{w, c, sig, k}, Aligned{a});
                return elite_value(m, 1, a, a) - elite_value(m, 0, a, a);
            };
            if (!(gap_sign(0.0) < 0.0 && gap_sign(khi) > 0.0)) continue;
            GridSpec bisect_grid;
            bisect_grid.lo = 0.0;
            bisect_grid.hi = khi;
            bisect_grid.step = khi;
            bisect_grid.refine_iters = 200;
            push("morality_threshold_aligned", morality_threshold_aligned(a, sig),
                 bisect_aligned_threshold(a, sig, w, c, khi), 1e-9, bisect_grid);
            break;
        }

        // Unaligned allocation against brute-force corner values.
        {
            const double alpha_e = rng.uniform(0.1, 2.0);
            const double alpha_c = rng.uniform(0.1, 2.0);
            const double cap = std::min(1.0, 1.0 / alpha_c);
            const double k2 = rng.uniform(0.01 * cap, 0.99 * cap);
            const auto m2 = validate(ModelParams{w, c, sigma, k2}, Unaligned{alpha_e, alpha_c});
            const int closed = optimal_allocation(m2, alpha_e, alpha_c).g_star;
            const int brute = brute_force_allocation(m2, alpha_e, alpha_c);
            push("optimal_allocation", closed, brute, 0.5, peak_grid(m2, 1.0, alpha_c));
        }

        // Two-state economy: jump identity and classifier/IC agreement.
        {
            const double sig = rng.uniform(0.05, 0.95);
            const double s = sig * theta(sig);
            const double alpha_l = rng.uniform(0.01, 0.99) * s;
            const double alpha_h = 1.01 * s + rng.next01() * (3.0 - 1.01 * s);
            const double cap = std::min(1.0, 1.0 / alpha_h);
            const double k3 = rng.uniform(0.01 * cap, 0.99 * cap);
            const double rho = rng.next01();
            const auto m3 = validate(ModelParams{w, c, sig, k3}, TwoState{alpha_l, alpha_h, rho});

            const double ratio = equilibrium_tax_base(m3, 1, alpha_h) /
                                 equilibrium_tax_base(m3, 0, alpha_h);
            push("jump_factor", jump_factor(m3, alpha_h), ratio, 1e-12, GridSpec{});

            const EquilibriumClass eq = classify_equilibrium(m3, alpha_l, alpha_h, rho);
            const EqTag by_ic = classify_by_ic(m3, alpha_l, alpha_h, rho);
            push("classify_equilibrium", static_cast<double>(eq.tag),
                 static_cast<double>(by_ic), 0.5, GridSpec{});
        }
    }
    return out;
}

}  // namespace fiscap
