#include "fiscap/citizen.hpp"

#include <algorithm>

namespace fiscap {

namespace {

inline double concealment_cost(double c, double deviation) {
    return c * 0.5 * deviation * deviation;
}

}  // namespace

ReportOutcome optimal_report(const ValidatedModel& model, const Policy& policy, double alpha) {
    check_policy(policy);
    const auto& p = model.params;
    const double moral_return = phi(policy.g, alpha, p.sigma);
    const double unclamped = p.w + policy.t / p.c * (p.kappa * moral_return - 1.0);

    ReportOutcome out;
    out.interior = unclamped >= 0.0;
    out.report = std::max(0.0, unclamped);
    out.deviation = out.report - p.w;
    out.concealment_cost = concealment_cost(p.c, out.deviation);
    out.net_income = p.w - policy.t * out.report - out.concealment_cost;
    return out;
}

UniversalizedComponents universalized_components(double report, const Policy& policy,
                                                 const ValidatedModel& model) {
    const auto& p = model.params;
    UniversalizedComponents u;
    u.revenue = policy.t * report;
    u.public_good = policy.g * u.revenue;
    u.transfer = model.s * (1.0 - policy.g) * u.revenue;
    u.net_income = p.w - policy.t * report - concealment_cost(p.c, report - p.w);
    return u;
}

double hm_utility(double report, const ValidatedModel& model, const Policy& policy, double alpha,
                  double ambient_public_good, double ambient_transfer) {
    const auto& p = model.params;
    const auto u = universalized_components(report, policy, model);
    // z(report) coincides with the universalized net income: both subtract the
    // same tax bill and concealment cost from w.
    const double selfish = alpha * ambient_public_good + ambient_transfer + u.net_income;
    const double universalized = alpha * u.public_good + u.transfer + u.net_income;
    return (1.0 - p.kappa) * selfish + p.kappa * universalized;
}

double hm_utility(double report, const ValidatedModel& model, const Policy& policy, double alpha) {
    const auto everyone = optimal_report(model, policy, alpha);
    const auto agg = universalized_components(everyone.report, policy, model);
    return hm_utility(report, model, policy, alpha, agg.public_good, agg.transfer);
}

}  // namespace fiscap
