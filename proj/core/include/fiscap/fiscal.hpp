#pragma once

#include <vector>

#include "fiscap/model.hpp"

namespace fiscap {

struct LafferPoint {
    double t;
    double revenue;
    double report;
};

// Per-capita revenue (t*w/c)*(c - t*(1 - kappa*phi)), clamped at zero past
// the reporting corner so the curve flattens instead of going negative.
double revenue(const ValidatedModel& model, const Policy& policy, double alpha);

// Unclamped closed form; the algebraic parabola with roots at 0 and
// c/(1-kappa*phi), exposed for shape tests.
double revenue_parabola(const ValidatedModel& model, double t, double g, double alpha);

// Report induced by rate t on the revenue curve: revenue/t, clamped at zero.
double induced_report(const ValidatedModel& model, double t, double g, double alpha);

// Revenue-maximizing rate (c/2)/(1 - kappa*phi). Throws Errc::phi_infeasible
// when kappa*phi >= 1 (unbounded revenue).
double laffer_peak_rate(const ValidatedModel& model, double g, double alpha);

// Peak revenue w*c/(4*(1 - kappa*phi)).
double laffer_peak_revenue(const ValidatedModel& model, double g, double alpha);

// Upper root c/(1 - kappa*phi) of the revenue parabola; the end of the
// positive arc and the natural sampling range for curves.
double revenue_arc_end(const ValidatedModel& model, double g, double alpha);

// Uniform sampling of the curve on [t_min, t_max]; n_points >= 2.
std::vector<LafferPoint> laffer_curve(const ValidatedModel& model, double g, double alpha,
                                      double t_min, double t_max, int n_points);

}  // namespace fiscap
