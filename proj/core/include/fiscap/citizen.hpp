#pragma once

#include "fiscap/model.hpp"

namespace fiscap {

// Outcome of the citizen's reporting problem under the quadratic
// concealment cost C(d) = d^2/2.
struct ReportOutcome {
    double report;            // chosen report, clamped at 0
    bool interior;            // false when the unclamped solution was negative
    double deviation;         // report - w
    double net_income;        // w - t*report - c*C(deviation)
    double concealment_cost;  // c*C(deviation)
};

// Per-capita aggregates when every citizen files the same report: revenue
// t*report, public good g*revenue, matched transfers sigma*theta*(1-g)*revenue
// and net income.
struct UniversalizedComponents {
    double revenue;
    double public_good;
    double transfer;
    double net_income;
};

// Closed-form optimal report max(0, w + (t/c)*(kappa*phi - 1)). alpha is the
// citizen-side valuation: the common alpha, alpha_c, or the believed posterior
// mean in the dynamic game.
ReportOutcome optimal_report(const ValidatedModel& model, const Policy& policy, double alpha);

UniversalizedComponents universalized_components(double report, const Policy& policy,
                                                 const ValidatedModel& model);

// Utility of a report: (1-kappa) times the selfish evaluation at the ambient
// aggregates plus kappa times the evaluation under universalized behavior,
// with material payoff alpha*G + y.
double hm_utility(double report, const ValidatedModel& model, const Policy& policy, double alpha,
                  double ambient_public_good, double ambient_transfer);

// Ambient aggregates default to the universalized fixed point in which every
// citizen plays the optimal report.
double hm_utility(double report, const ValidatedModel& model, const Policy& policy, double alpha);

}  // namespace fiscap
