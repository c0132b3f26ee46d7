#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fiscap/model.hpp"
#include "fiscap/signaling.hpp"

namespace fiscap {

// Scan grid for the brute-force maximizers: absolute step over [lo, hi],
// then golden-section refinement of the bracketing interval.
struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    double step = 1e-3;
    int refine_iters = 60;
    double tolerance = 1e-6;
};

struct OracleReport {
    std::string target;
    double closed_form;
    double oracle_value;
    double abs_err;
    bool passed;
    GridSpec grid;
};

struct PeakEstimate {
    double t_hat;
    double revenue;
};

// Deterministic uniform doubles; the mt19937_64 stream is fully specified by
// the standard and the [0,1) mapping avoids distribution objects, so a fixed
// seed yields identical draws on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double next01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }
    int pick(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  private:
    std::mt19937_64 engine_;
};

// Generic grid scan + golden-section maximizer for a unimodal objective.
// Throws Errc::grid_too_coarse when the spec yields fewer than three points.
template <typename F>
double maximize_scalar(F&& objective, const GridSpec& grid);

// Numerical maximizer of the reporting utility over [grid.lo, grid.hi]
// (ambient aggregates fixed at zero; the argmax does not depend on them).
double brute_force_report(const ValidatedModel& model, const Policy& policy, double alpha,
                          const GridSpec& grid);

// Numerical maximizer of revenue over the tax rate.
PeakEstimate brute_force_peak(const ValidatedModel& model, double g, double alpha,
                              const GridSpec& grid);

// Corner comparison with both tax bases recomputed by brute_force_peak.
int brute_force_allocation(const ValidatedModel& model, double alpha_e, double alpha_c);

// Bisection of the corner-value comparison V(1;kappa) - V(0;kappa) on
// [0, kappa_hi]; recovers the aligned morality threshold without its closed
// form. Requires a sign change on the interval.
double bisect_aligned_threshold(double alpha, double sigma, double w, double c, double kappa_hi,
                                int iters = 200);

// Reconstructs the equilibrium tag purely from provision_gain sign checks
// under the strategy belief rules, bypassing every threshold formula.
EqTag classify_by_ic(const ValidatedModel& model, double alpha_l, double alpha_h, double rho);

// Re-checks a classified equilibrium: one report per incentive constraint,
// with the provision gain recomputed from brute-force tax bases. For
// no_pure_equilibrium the reports instead document that each pure candidate
// strategy is refuted. Every report must pass for the tag to stand.
std::vector<OracleReport> verify_pbe(const EquilibriumClass& candidate, const ValidatedModel& model,
                                     double alpha_l, double alpha_h, double rho);

// Seeded agreement suite: every closed form against its independent oracle,
// one pass per draw and target. Reports stream in draw order.
std::vector<OracleReport> run_agreement_suite(std::uint64_t seed, int draws);

// --- implementation ---

template <typename F>
double maximize_scalar(F&& objective, const GridSpec& grid) {
    if (!(grid.hi > grid.lo)) fail(Errc::domain_violation, "grid requires hi > lo");
    if (!(grid.step > 0.0)) fail(Errc::domain_violation, "grid step must be > 0");
    const int intervals = static_cast<int>((grid.hi - grid.lo) / grid.step);
    if (intervals < 2)
        fail(Errc::grid_too_coarse, "grid has fewer than 3 points; cannot bracket a maximum");

    double best_x = grid.lo;
    double best_v = objective(grid.lo);
    for (int i = 1; i <= intervals; ++i) {
        const double x = (i == intervals) ? grid.hi : grid.lo + grid.step * i;
        const double v = objective(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }

    double lo = std::max(grid.lo, best_x - grid.step);
    double hi = std::min(grid.hi, best_x + grid.step);
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    for (int i = 0; i < grid.refine_iters; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace fiscap
