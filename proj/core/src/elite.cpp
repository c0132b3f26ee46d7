#include "fiscap/elite.hpp"

#include <cmath>

namespace fiscap {

const char* region_name(RegionTag tag) {
    switch (tag) {
        case RegionTag::strong_provision: return "strong_provision";
        case RegionTag::weak_provision: return "weak_provision";
        case RegionTag::transfer: return "transfer";
        case RegionTag::common_interest: return "common_interest";
        case RegionTag::weak: return "weak";
        case RegionTag::contested_common_interest: return "contested_common_interest";
        case RegionTag::contested_transfer: return "contested_transfer";
        case RegionTag::knife_edge: return "knife_edge";
    }
    return "unknown_region";
}

double elite_value(const ValidatedModel& model, int g, double alpha_e, double alpha_c) {
    if (g != 0 && g != 1) fail(Errc::domain_violation, "allocation corner g must be 0 or 1");
    if (!(alpha_e > 0.0)) fail(Errc::domain_violation, "alpha_e must be > 0");
    if (!(alpha_c > 0.0)) fail(Errc::domain_violation, "alpha_c must be > 0");
    const auto& p = model.params;
    const double quarter = 0.25 * p.w * p.c;
    if (g == 1) {
        if (!(p.kappa * alpha_c < 1.0))
            fail(Errc::phi_infeasible, "kappa*alpha_c >= 1: provision tax base unbounded");
        return quarter / (1.0 - p.kappa * alpha_c) * alpha_e;
    }
    return quarter / (1.0 - p.kappa * model.s) * model.theta;
}

StaticRegion classify_aligned(double alpha, double sigma) {
    if (!(alpha > 0.0)) fail(Errc::domain_violation, "alpha must be > 0");
    const double th = theta(sigma);
    const double s = sigma * th;
    if (alpha > th) return {RegionTag::strong_provision, std::nullopt};
    if (alpha > s) return {RegionTag::weak_provision, morality_threshold_aligned(alpha, sigma)};
    return {RegionTag::transfer, std::nullopt};
}

StaticRegion classify_unaligned(const ValidatedModel& model, double alpha_e, double alpha_c) {
    if (!(alpha_e > 0.0)) fail(Errc::domain_violation, "alpha_e must be > 0");
    if (!(alpha_c > 0.0)) fail(Errc::domain_violation, "alpha_c must be > 0");
    if (!(model.params.kappa * alpha_c < 1.0))
        fail(Errc::kappa_infeasible, "kappa >= 1/alpha_c");
    const double th = model.theta;
    const double s = model.s;

    // kappa multiplies (alpha_e*s - theta*alpha_c) in the corner comparison;
    // when that factor vanishes the comparison is kappa-free.
    if (alpha_e * s == th * alpha_c) return {RegionTag::knife_edge, std::nullopt};

    if (alpha_e <= th && alpha_c <= s) return {RegionTag::weak, std::nullopt};
    if (alpha_e >= th && alpha_c >= s) return {RegionTag::common_interest, std::nullopt};
    if (alpha_e > th && alpha_c < s) {
        const double cutoff = (alpha_e - th) / (alpha_e * s - th * alpha_c);
        return {RegionTag::contested_common_interest, cutoff};
    }
    // alpha_e < theta && alpha_c > s
    const double cutoff = (th - alpha_e) / (th * alpha_c - alpha_e * s);
    return {RegionTag::contested_transfer, cutoff};
}

AllocationDecision optimal_allocation(const ValidatedModel& model, double alpha_e, double alpha_c) {
    AllocationDecision d;
    d.v0 = elite_value(model, 0, alpha_e, alpha_c);
    d.v1 = elite_value(model, 1, alpha_e, alpha_c);
    d.tie = std::abs(d.v1 - d.v0) <= 1e-12 * std::max(1.0, std::abs(d.v0));
    d.g_star = (d.tie || d.v1 > d.v0) ? 1 : 0;
    d.region = (alpha_e == alpha_c) ? classify_aligned(alpha_e, model.params.sigma)
                                    : classify_unaligned(model, alpha_e, alpha_c);
    if (d.region.tag == RegionTag::contested_common_interest) {
        d.note =
            "contested common-interest direction conflict: the stated case has g*=0 below the "
            "cutoff and g*=1 above; the corner comparison V(1) vs V(0) gives provision below "
            "the cutoff and rents above. The decision follows the corner comparison.";
    }
    return d;
}

double morality_threshold_aligned(double alpha, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) fail(Errc::domain_violation, "sigma must be in (0,1)");
    if (!(alpha > 0.0)) fail(Errc::domain_violation, "alpha must be > 0");
    const double th = theta(sigma);
    const double s = sigma * th;
    if (!(alpha > s && alpha <= th))
        fail(Errc::region_mismatch,
             "aligned morality threshold requires sigma*theta < alpha <= theta");
    return (th - alpha) / (alpha * th * (1.0 - sigma));
}

ThresholdSlopes threshold_comparative_statics(double alpha, double sigma, double h) {
    if (!(h > 0.0)) fail(Errc::domain_violation, "step h must be > 0");
    // All four satellite points must stay in the weak-provision region;
    // morality_threshold_aligned throws region_mismatch if one leaves it.
    const double up_a = morality_threshold_aligned(alpha + h, sigma);
    const double dn_a = morality_threshold_aligned(alpha - h, sigma);
    const double up_s = morality_threshold_aligned(alpha, sigma + h);
    const double dn_s = morality_threshold_aligned(alpha, sigma - h);
    return {(up_a - dn_a) / (2.0 * h), (up_s - dn_s) / (2.0 * h)};
}

double equilibrium_tax_base(const ValidatedModel& model, int g_star, double alpha) {
    if (g_star != 0 && g_star != 1) fail(Errc::domain_violation, "g_star must be 0 or 1");
    if (!(alpha > 0.0)) fail(Errc::domain_violation, "alpha must be > 0");
    const auto& p = model.params;
    const double quarter = 0.25 * p.w * p.c;
    if (g_star == 1) {
        if (!(p.kappa * alpha < 1.0))
            fail(Errc::phi_infeasible, "kappa*alpha >= 1: tax base unbounded");
        return quarter / (1.0 - p.kappa * alpha);
    }
    return quarter / (1.0 - p.kappa * model.s);
}

}  // namespace fiscap
