#pragma once

#include <variant>

#include "fiscap/errors.hpp"

namespace fiscap {

// Economy primitives. sigma is the institutional matching requirement
// (each unit of elite rents forces sigma units of transfers to citizens),
// kappa the degree of morality of every citizen.
struct ModelParams {
    double w = 1.0;      // income, > 0
    double c = 1.0;      // enforcement intensity, > 0
    double sigma = 0.5;  // institutional strength, in (0,1)
    double kappa = 0.0;  // degree of morality, >= 0 and < 1/alpha (Assumption 1)
};

// Public-good valuations. Aligned: elite and citizens share one alpha.
// Unaligned: the elite values provision at alpha_e, citizens at alpha_c.
// TwoState: the dynamic game's privately observed low/high values with
// prior rho = Pr(alpha = alpha_h).
struct Aligned {
    double alpha;
};
struct Unaligned {
    double alpha_e;
    double alpha_c;
};
struct TwoState {
    double alpha_l;
    double alpha_h;
    double rho;
};
using ValueConfig = std::variant<Aligned, Unaligned, TwoState>;

// The citizen-side valuation that the over-compliance bound kappa < 1/alpha
// must hold against: alpha (Aligned), alpha_c (Unaligned), alpha_h (TwoState).
double relevant_alpha(const ValueConfig& values);

struct Policy {
    double t = 0.0;  // tax rate, >= 0
    double g = 0.0;  // share of revenue allocated to the public good, in [0,1]
};

// Elite's residual share 1/(1+sigma). Accepts the closed interval [0,1] so the
// reference anchors theta(0)=1 and theta(1)=1/2 stay checkable; economies
// themselves are restricted to sigma in (0,1) by validate().
double theta(double sigma);

// Effective moral return to reporting: g*alpha + (1-g)*sigma*theta(sigma).
double phi(double g, double alpha, double sigma);

// Parameter bundle that passed validation, with theta and s = sigma*theta
// cached. Treat as immutable after construction.
struct ValidatedModel {
    ModelParams params;
    ValueConfig values;
    double theta;  // 1/(1+sigma)
    double s;      // sigma*theta(sigma)
};

// Checks every feasibility restriction and returns the cached bundle.
// Throws Errc::domain_violation naming the violated bound, or
// Errc::kappa_infeasible when kappa >= 1/relevant_alpha (over-compliance).
ValidatedModel validate(const ModelParams& params, const ValueConfig& values);

// t >= 0 and g in [0,1]; throws Errc::domain_violation otherwise.
void check_policy(const Policy& policy);

}  // namespace fiscap
