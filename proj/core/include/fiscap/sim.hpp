#pragma once

#include <optional>
#include <vector>

#include "fiscap/model.hpp"
#include "fiscap/signaling.hpp"

namespace fiscap {

enum class StateTag { low, high };

const char* state_name(StateTag state);

// A deterministic timeline of the dynamic game. The optional shock_period is
// an extension beyond the baseline timing: the realized state switches from
// low to high at that period, so a path can cross the reform threshold
// mid-run. Trajectories produced with a shock are tagged as such.
struct Scenario {
    ValidatedModel model;  // must be validated with the matching TwoState config
    double alpha_l;
    double alpha_h;
    double rho0;
    int horizon = 1;
    std::optional<int> shock_period;  // in [0, horizon); requires initial_state == low
    StateTag initial_state = StateTag::low;
};

struct TrajectoryRecord {
    int period;
    double realized_alpha;
    int g;
    double posterior;
    double report;
    double tax_base;
    EqTag tag;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    EquilibriumClass equilibrium;
    bool shock_extension;
    std::optional<int> shock_period;
};

// Runs the per-period loop: the elite plays its equilibrium action for the
// realized state, citizens form the strategy-consistent posterior, the tax
// rate is Laffer-maximizing for that posterior, and the resulting tax base is
// recorded. Throws Errc::no_equilibrium when classification yields
// no_pure_equilibrium and Errc::infeasible_scenario on bad timing fields.
Trajectory run_timeline(const Scenario& scenario);

// tax_base[period] / tax_base[period-1]; period must be in [1, horizon).
double trajectory_jump(const Trajectory& trajectory, int period);

}  // namespace fiscap
