#include "fiscap/fiscal.hpp"

#include <algorithm>

namespace fiscap {

namespace {

double checked_compliance_slope(const ValidatedModel& model, double g, double alpha) {
    const double kf = model.params.kappa * phi(g, alpha, model.params.sigma);
    if (!(kf < 1.0))
        fail(Errc::phi_infeasible, "kappa*phi >= 1: revenue has no interior maximum");
    return 1.0 - kf;
}

}  // namespace

double revenue(const ValidatedModel& model, const Policy& policy, double alpha) {
    check_policy(policy);
    // Clamped at the reporting corner: past the upper root the induced report
    // is zero, so collections stay at zero instead of going negative.
    return std::max(0.0, revenue_parabola(model, policy.t, policy.g, alpha));
}

double revenue_parabola(const ValidatedModel& model, double t, double g, double alpha) {
    const auto& p = model.params;
    const double kf = p.kappa * phi(g, alpha, p.sigma);
    return t * p.w / p.c * (p.c - t * (1.0 - kf));
}

double induced_report(const ValidatedModel& model, double t, double g, double alpha) {
    const auto& p = model.params;
    const double kf = p.kappa * phi(g, alpha, p.sigma);
    return std::max(0.0, p.w / p.c * (p.c - t * (1.0 - kf)));
}

double laffer_peak_rate(const ValidatedModel& model, double g, double alpha) {
    return 0.5 * model.params.c / checked_compliance_slope(model, g, alpha);
}

double laffer_peak_revenue(const ValidatedModel& model, double g, double alpha) {
    return model.params.w * model.params.c / (4.0 * checked_compliance_slope(model, g, alpha));
}

double revenue_arc_end(const ValidatedModel& model, double g, double alpha) {
    return model.params.c / checked_compliance_slope(model, g, alpha);
}

std::vector<LafferPoint> laffer_curve(const ValidatedModel& model, double g, double alpha,
                                      double t_min, double t_max, int n_points) {
    if (!(t_min >= 0.0)) fail(Errc::domain_violation, "t_min must be >= 0");
    if (!(t_min < t_max)) fail(Errc::domain_violation, "t_min must be < t_max");
    if (n_points < 2) fail(Errc::domain_violation, "n_points must be >= 2");

    std::vector<LafferPoint> points;
    points.reserve(static_cast<std::size_t>(n_points));
    const double step = (t_max - t_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double t = (i == n_points - 1) ? t_max : t_min + step * i;
        LafferPoint pt;
        pt.t = t;
        pt.report = induced_report(model, t, g, alpha);
        pt.revenue = t * pt.report;
        points.push_back(pt);
    }
    return points;
}

}  // namespace fiscap
