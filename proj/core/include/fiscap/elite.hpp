#pragma once

#include <optional>
#include <string>

#include "fiscap/model.hpp"

namespace fiscap {

// Static regions of (alpha, sigma) space. The first three tags partition the
// aligned case; the rest classify unaligned elites, with knife_edge marking
// alpha_e*sigma*theta == theta*alpha_c where kappa drops out of the corner
// comparison entirely.
enum class RegionTag {
    strong_provision,
    weak_provision,
    transfer,
    common_interest,
    weak,
    contested_common_interest,
    contested_transfer,
    knife_edge,
};

const char* region_name(RegionTag tag);

struct StaticRegion {
    RegionTag tag;
    // The morality cutoff attached to the region when one exists: the aligned
    // threshold for weak_provision, the contested cutoffs otherwise.
    std::optional<double> kappa_cutoff;
};

struct AllocationDecision {
    int g_star;  // 0 or 1
    bool tie;    // |v1 - v0| within relative tolerance; resolved to g_star = 1
    double v0;
    double v1;
    StaticRegion region;
    // Non-empty when the analytic region statement and the corner comparison
    // disagree on the direction of g* across the cutoff; the decision always
    // follows the corner comparison.
    std::string note;
};

// Elite corner values under Laffer-maximizing taxation:
//   V(1) = w*c/(4*(1 - kappa*alpha_c)) * alpha_e
//   V(0) = w*c/(4*(1 - kappa*s)) * theta
// The aligned case passes alpha_e == alpha_c.
double elite_value(const ValidatedModel& model, int g, double alpha_e, double alpha_c);

// Direct comparison of the two corners, with the analytic region tag attached
// as a diagnostic. Ties resolve to provision.
AllocationDecision optimal_allocation(const ValidatedModel& model, double alpha_e, double alpha_c);

// Aligned morality threshold (theta - alpha)/(alpha*theta*(1-sigma)); only
// defined in the weak-provision region sigma*theta < alpha <= theta
// (Errc::region_mismatch outside it).
double morality_threshold_aligned(double alpha, double sigma);

struct ThresholdSlopes {
    double d_alpha;
    double d_sigma;
};

// Central finite differences of the aligned threshold with step h; every
// evaluation point must stay inside the weak-provision region.
ThresholdSlopes threshold_comparative_statics(double alpha, double sigma, double h);

// Equilibrium tax base at the elite's optimum:
//   g_star = 1: w*c/(4*(1 - kappa*alpha));  g_star = 0: w*c/(4*(1 - kappa*s)).
double equilibrium_tax_base(const ValidatedModel& model, int g_star, double alpha);

// Aligned region of (alpha, sigma): strong_provision, weak_provision (with
// the kappa threshold) or transfer.
StaticRegion classify_aligned(double alpha, double sigma);

// Unaligned regions with their cutoffs. The direction of g* across a cutoff
// is decided by optimal_allocation's corner comparison, not by the tag.
StaticRegion classify_unaligned(const ValidatedModel& model, double alpha_e, double alpha_c);

}  // namespace fiscap
