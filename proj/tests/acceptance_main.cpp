// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here; nothing defers to later calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fiscap/citizen.hpp"
#include "fiscap/elite.hpp"
#include "fiscap/fiscal.hpp"
#include "fiscap/oracle.hpp"
#include "fiscap/serialize.hpp"
#include "fiscap/sim.hpp"

using namespace fiscap;

namespace {

int failures = 0;

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

void run_criterion(int number, const std::string& title,
                   const std::function<void(Checker&)>& body) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.ok) {
        std::printf("PASS  criterion %d: %s (%.3fs)\n", number, title.c_str(), seconds);
    } else {
        ++failures;
        std::printf("FAIL  criterion %d: %s (%.3fs) -- %s\n", number, title.c_str(), seconds,
                    check.detail.c_str());
    }
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

int main() {
    // 1. Figure 1 reproduction: six curves, peaks from the closed forms,
    //    grid maxima within 1e-3, oracle maxima within 1e-6, under 1 s.
    run_criterion(1, "Figure 1 peaks for g in {0,1} x kappa in {0,0.1,0.2}", [](Checker& check) {
        const auto start = std::chrono::steady_clock::now();
        for (const double g : {0.0, 1.0}) {
            for (const double kappa : {0.0, 0.1, 0.2}) {
                const auto m = validate(ModelParams{1.0, 1.0, 0.1, kappa}, Aligned{1.5});
                const double f = phi(g, 1.5, 0.1);
                const double t_hat = 0.5 / (1.0 - kappa * f);
                const double peak = 1.0 / (4.0 * (1.0 - kappa * f));
                check.require(std::abs(laffer_peak_rate(m, g, 1.5) - t_hat) <= 1e-12,
                              "closed-form rate mismatch at kappa=" + fmt(kappa));
                check.require(std::abs(laffer_peak_revenue(m, g, 1.5) - peak) <= 1e-12,
                              "closed-form revenue mismatch at kappa=" + fmt(kappa));

                const double arc = revenue_arc_end(m, g, 1.5);
                const auto curve = laffer_curve(m, g, 1.5, 0.0, arc, 4001);
                double best_t = 0.0;
                double best_rev = -1.0;
                for (const auto& pt : curve) {
                    if (pt.revenue > best_rev) {
                        best_rev = pt.revenue;
                        best_t = pt.t;
                    }
                }
                check.require(std::abs(best_t - t_hat) <= 1e-3,
                              "grid argmax off by more than 1e-3 at kappa=" + fmt(kappa));
                check.require(std::abs(best_rev - peak) <= 1e-3,
                              "grid max off by more than 1e-3 at kappa=" + fmt(kappa));

                GridSpec grid;
                grid.hi = arc;
                grid.step = arc / 1000.0;
                const auto brute = brute_force_peak(m, g, 1.5, grid);
                check.require(std::abs(brute.t_hat - t_hat) <= 1e-6,
                              "oracle argmax off by more than 1e-6 at kappa=" + fmt(kappa));
                check.require(std::abs(brute.revenue - peak) <= 1e-6,
                              "oracle max off by more than 1e-6 at kappa=" + fmt(kappa));
            }
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(elapsed < 1.0, "runtime " + fmt(elapsed) + "s exceeds 1s");
    });

    // 2. Lemma 1 oracle equivalence on 1000 seeded draws within 1e-6, < 10 s.
    run_criterion(2, "optimal report vs brute-force utility maximization (1000 draws)",
                  [](Checker& check) {
        const auto start = std::chrono::steady_clock::now();
        Rng rng(20250810);
        for (int i = 0; i < 1000; ++i) {
            const double w = rng.uniform(0.5, 2.0);
            const double c = rng.uniform(0.5, 2.0);
            const double sigma = rng.uniform(0.02, 0.98);
            const double alpha = rng.uniform(0.2, 2.5);
            const double kappa = rng.uniform(0.01, 0.99) * std::min(1.0, 1.0 / alpha);
            const double g = rng.next01();
            const auto m = validate(ModelParams{w, c, sigma, kappa}, Aligned{alpha});
            const double kf = kappa * phi(g, alpha, sigma);
            const Policy policy{rng.uniform(0.05, 0.95) * c / (1.0 - kf), g};

            GridSpec grid;
            grid.hi = 2.0 * w;
            const double closed = optimal_report(m, policy, alpha).report;
            const double brute = brute_force_report(m, policy, alpha, grid);
            check.require(std::abs(closed - brute) <= 1e-6,
                          "draw " + std::to_string(i) + ": |closed-brute| = " +
                              fmt(std::abs(closed - brute)));
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(elapsed < 10.0, "runtime " + fmt(elapsed) + "s exceeds 10s");
    });

    // 3. Prop 1 threshold: bisection within 1e-9 on 100 draws; slope signs by
    //    finite differences at 20 points on each side of alpha = 1/2.
    run_criterion(3, "aligned morality threshold and comparative statics", [](Checker& check) {
        Rng rng(914);
        int tested = 0;
        while (tested < 100) {
            const double sigma = rng.uniform(0.05, 0.95);
            const double th = theta(sigma);
            const double s = sigma * th;
            const double alpha = s + rng.uniform(0.01, 0.99) * (th - s);
            const double closed = morality_threshold_aligned(alpha, sigma);
            const double hi = 0.999 * std::min(1.0, 1.0 / alpha);
            if (!(closed > 0.005 && closed < 0.95 * hi)) continue;
            const double flip = bisect_aligned_threshold(alpha, sigma, 1.0, 1.0, hi);
            check.require(std::abs(flip - closed) <= 1e-9,
                          "bisection misses the closed form by " + fmt(std::abs(flip - closed)));
            ++tested;
        }

        for (int k = 0; k < 20; ++k) {
            const double offset = 0.01 + 0.09 * k / 19.0;
            const auto above = threshold_comparative_statics(0.5 + offset, 0.5, 1e-5);
            const auto below = threshold_comparative_statics(0.5 - offset, 0.5, 1e-5);
            check.require(above.d_alpha < 0.0 && below.d_alpha < 0.0,
                          "d(kappa_bar)/d(alpha) must be negative");
            check.require(above.d_sigma < 0.0,
                          "d(kappa_bar)/d(sigma) must be negative for alpha > 1/2");
            check.require(below.d_sigma > 0.0,
                          "d(kappa_bar)/d(sigma) must be positive for alpha < 1/2");
        }
        check.require(std::abs(threshold_comparative_statics(0.5, 0.5, 1e-5).d_sigma) <= 1e-6,
                      "d(kappa_bar)/d(sigma) must vanish at alpha = 1/2");
    });

    // 4. Cor 1 / Cor 2 identities: ratio within 1e-12 on 1000 draws; J > 1
    //    off kappa = 0; J strictly increasing on a 100-point kappa grid.
    run_criterion(4, "tax-base ratio equals the jump factor", [](Checker& check) {
        Rng rng(415);
        for (int i = 0; i < 1000; ++i) {
            const double w = rng.uniform(0.5, 2.0);
            const double c = rng.uniform(0.5, 2.0);
            const double sigma = rng.uniform(0.05, 0.95);
            const double s = sigma * theta(sigma);
            const double alpha_l = rng.uniform(0.01, 0.99) * s;
            const double alpha_h = 1.01 * s + rng.next01() * (3.0 - 1.01 * s);
            const double kappa = rng.uniform(0.01, 0.99) * std::min(1.0, 1.0 / alpha_h);
            const auto m =
                validate(ModelParams{w, c, sigma, kappa}, TwoState{alpha_l, alpha_h, 0.5});
            const double j = jump_factor(m, alpha_h);
            const double ratio =
                equilibrium_tax_base(m, 1, alpha_h) / equilibrium_tax_base(m, 0, alpha_h);
            check.require(std::abs(j - ratio) <= 1e-12, "ratio identity violated");
            check.require(j > 1.0, "J must exceed 1 for kappa > 0 and alpha_h > sigma*theta");
        }

        double prev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double kappa = (0.99 / 0.6) * i / 99.0;
            const auto m = validate(ModelParams{1, 1, 0.5, kappa}, TwoState{0.2, 0.6, 0.5});
            const double j = jump_factor(m, 0.6);
            if (i > 0) check.require(j > prev, "J must increase strictly in kappa");
            prev = j;
        }
    });

    // 5. Prop 3 classification with thresholds against hand substitution.
    run_criterion(5, "weak-high classification at kappa = 0.2 / 0.5 / 1.5", [](Checker& check) {
        const struct {
            double kappa;
            EqTag tag;
        } cases[] = {{0.2, EqTag::pooling_rents},
                     {0.5, EqTag::separation},
                     {1.5, EqTag::no_pure_equilibrium}};
        for (const auto& cs : cases) {
            const auto m =
                validate(ModelParams{1, 1, 0.5, cs.kappa}, TwoState{0.2, 0.6, 0.5});
            const auto eq = classify_equilibrium(m, 0.2, 0.6, 0.5);
            check.require(eq.tag == cs.tag,
                          "kappa=" + fmt(cs.kappa) + " classified as " + eq_tag_name(eq.tag));
            for (const auto& report : verify_pbe(eq, m, 0.2, 0.6, 0.5))
                check.require(report.passed, "IC check failed: " + report.target);

            check.require(std::abs(*eq.thresholds.kappa_min_h - 1.0 / 3.0) <= 1e-9,
                          "kappa_min_h != 1/3");
            check.require(std::abs(*eq.thresholds.kappa_max_l - 1.4) <= 1e-9,
                          "kappa_max_l != 1.4");
            check.require(std::abs(*eq.thresholds.kappa_pool - 7.0 / 3.0) <= 1e-9,
                          "kappa_pool != 7/3");
            check.require(std::abs(*eq.thresholds.kappa_h_min - 1.0) <= 1e-9,
                          "kappa_h_min != 1");
        }
    });

    // 6. Prop 4 regime: separation on all of [0, kappa_max_l), morality not
    //    required, at 50 grid points with explicit IC signs.
    run_criterion(6, "strong-high separation for kappa in [0, 7/11)", [](Checker& check) {
        const double kmax = kappa_max_low(0.2, 1.2, 0.5);
        check.require(std::abs(kmax - 7.0 / 11.0) <= 1e-12, "kappa_max_l != 7/11");
        for (int i = 0; i < 50; ++i) {
            const double kappa = kmax * 0.999999 * i / 49.0;
            const auto m = validate(ModelParams{1, 1, 0.5, kappa}, TwoState{0.2, 1.2, 0.5});
            const auto eq = classify_equilibrium(m, 0.2, 1.2, 0.5);
            check.require(eq.regime == Regime::strong_high, "regime must be strong_high");
            check.require(eq.tag == EqTag::separation,
                          "kappa=" + fmt(kappa) + " classified as " + eq_tag_name(eq.tag));
            check.require(provision_gain(m, 1.2, 1.2) > 0.0,
                          "high type's provision gain must be positive");
            check.require(provision_gain(m, 0.2, 1.2) < 0.0,
                          "low type's mimicking gain must be negative");
        }
    });

    // 7. Appendix B direction discrepancy: the corner comparison gives
    //    provision at kappa = 0, the diagnostic flags the conflict, and the
    //    implementation must not be "fixed" to the stated case direction.
    run_criterion(7, "contested common-interest direction follows the corner values",
                  [](Checker& check) {
        const auto m = validate(ModelParams{1, 1, 0.5, 0.0}, Unaligned{1.0, 0.2});
        check.require(brute_force_allocation(m, 1.0, 0.2) == 1,
                      "brute-force corner comparison must pick provision at kappa = 0");
        const auto d = optimal_allocation(m, 1.0, 0.2);
        check.require(d.g_star == 1, "library must follow the corner comparison (g* = 1)");
        check.require(d.v1 > d.v0, "V(1) must exceed V(0) at these parameters");
        check.require(d.region.tag == RegionTag::contested_common_interest,
                      "region must be contested_common_interest");
        check.require(std::abs(*d.region.kappa_cutoff - 5.0 / 3.0) <= 1e-9,
                      "cutoff must equal 5/3");
        check.require(!d.note.empty(), "diagnostic note must flag the direction conflict");
        check.require(d.note.find("corner comparison") != std::string::npos,
                      "note must reference the corner comparison");
    });

    // 8. Simulation jump: tax-base path and same-period multiplier, < 0.1 s.
    run_criterion(8, "separation path jumps by 25/21 at the shock period", [](Checker& check) {
        const auto start = std::chrono::steady_clock::now();
        Scenario sc{validate(ModelParams{1, 1, 0.5, 0.5}, TwoState{0.2, 0.6, 0.5}),
                    0.2, 0.6, 0.5, 6, 3, StateTag::low};
        const auto traj = run_timeline(sc);
        for (int period = 0; period < 6; ++period) {
            const double expected = period < 3 ? 0.3 : 1.0 / 2.8;
            check.require(std::abs(traj.records[static_cast<std::size_t>(period)].tax_base -
                                   expected) <= 1e-9,
                          "tax base off at period " + std::to_string(period));
        }
        check.require(std::abs(trajectory_jump(traj, 3) - 25.0 / 21.0) <= 1e-9,
                      "jump at the shock period must equal 25/21 = 1.190476...");
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(elapsed < 0.1, "runtime " + fmt(elapsed) + "s exceeds 0.1s");
    });

    // 9. Full agreement suite: 1000 draws, seed 42, all rows pass, < 60 s.
    run_criterion(9, "oracle agreement suite (seed 42, 1000 draws)", [](Checker& check) {
        const auto start = std::chrono::steady_clock::now();
        const auto reports = run_agreement_suite(42, 1000);
        for (const auto& report : reports)
            check.require(report.passed, report.target + ": |closed-oracle| = " +
                                             fmt(report.abs_err));
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(elapsed < 60.0, "runtime " + fmt(elapsed) + "s exceeds 60s");
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
