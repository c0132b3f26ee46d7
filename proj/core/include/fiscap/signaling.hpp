#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiscap/model.hpp"

namespace fiscap {

// Two-state regimes: weak_high has alpha_l < sigma*theta < alpha_h <= theta
// (provision needs morality), strong_high has alpha_h > theta (provision is
// privately optimal even at kappa = 0).
enum class Regime { weak_high, strong_high };

enum class EqTag { pooling_rents, separation, pooling_provision, no_pure_equilibrium };

// Candidate strategy profiles used for posterior formation.
enum class StrategyTag { separating, pooling_rents, pooling_provision };

const char* regime_name(Regime regime);
const char* eq_tag_name(EqTag tag);
const char* strategy_name(StrategyTag tag);

struct Beliefs {
    double rho;             // prior Pr(alpha = alpha_h)
    double posterior_mean;  // alpha_l, alpha_h or the prior mean, by strategy
};

// Morality thresholds of the dynamic game. A field is present only when its
// defining region applies; absent bounds signal an infeasible (or vacuous)
// incentive constraint.
struct ThresholdSet {
    std::optional<double> kappa_min_h;  // high type starts providing (weak high)
    std::optional<double> kappa_max_l;  // low type starts mimicking
    std::optional<double> kappa_pool;   // low type's pooling-at-provision bound
    std::optional<double> kappa_h_min;  // high type's pooling lower bound
    std::optional<double> kappa_h_max;  // high type's pooling upper bound (strong high)
    std::optional<double> alpha_bar;    // prior mean rho*alpha_h + (1-rho)*alpha_l
};

// One incentive-compatibility check: the payoff gain from provision for a
// type under the relevant belief, and whether it satisfies the direction the
// classified equilibrium requires.
struct IcCheck {
    std::string name;
    double delta;
    bool satisfied;
};

struct EquilibriumClass {
    EqTag tag;
    Regime regime;
    ThresholdSet thresholds;
    double tax_base_g0;                  // compliance after observing g = 0 (belief-free)
    std::optional<double> tax_base_g1;   // compliance after observing g = 1; absent
                                         // when no pure equilibrium pins beliefs down
    std::vector<IcCheck> diagnostics;
};

// Payoff gain from provision for an elite of type alpha facing citizen belief
// p: (w*c/4) * [alpha/(1 - kappa*p) - theta/(1 - kappa*s)].
double provision_gain(const ValidatedModel& model, double alpha, double p);

// Separation thresholds of the weak high state:
//   kappa_min_h = (theta - alpha_h)/(theta*alpha_h*(1 - sigma))
//   kappa_max_l = (theta - alpha_l)/(theta*alpha_h - alpha_l*s)
double kappa_min_high(double alpha_h, double sigma);
double kappa_max_low(double alpha_l, double alpha_h, double sigma);
ThresholdSet weak_high_thresholds(double alpha_l, double alpha_h, double sigma);

// Pooling-at-provision bounds under the prior mean alpha_bar. kappa_h_min
// appears in the weak high state when alpha_h*sigma <= alpha_bar; kappa_h_max
// in the strong high state when alpha_h*sigma > alpha_bar.
ThresholdSet pooling_thresholds(double alpha_l, double alpha_h, double rho, double sigma);

// Full PBE classification for the model's kappa. The threshold comparisons
// decide the tag; the diagnostics re-verify it with explicit provision_gain
// checks under the strategy's belief rule (off-path provision is believed to
// come from the high type, off-path rents from the low type).
EquilibriumClass classify_equilibrium(const ValidatedModel& model, double alpha_l, double alpha_h,
                                      double rho);

// Posterior mean after observing g under a candidate strategy.
double posterior(StrategyTag strategy, int observed_g, double alpha_l, double alpha_h, double rho);

// Same-period fiscal multiplier (1 - kappa*s)/(1 - kappa*alpha_h); equals
// T1(alpha_h)/T0 exactly.
double jump_factor(const ValidatedModel& model, double alpha_h);

// Strategy profile played under a classified tag; empty for
// no_pure_equilibrium.
std::optional<StrategyTag> strategy_of(EqTag tag);

}  // namespace fiscap
