#include "fiscap/sim.hpp"

#include "fiscap/fiscal.hpp"

namespace fiscap {

const char* state_name(StateTag state) { return state == StateTag::low ? "low" : "high"; }

Trajectory run_timeline(const Scenario& scenario) {
    if (scenario.horizon < 1) fail(Errc::infeasible_scenario, "horizon must be >= 1");
    if (scenario.shock_period) {
        if (*scenario.shock_period < 0 || *scenario.shock_period >= scenario.horizon)
            fail(Errc::infeasible_scenario, "shock_period must lie in [0, horizon)");
        if (scenario.initial_state != StateTag::low)
            fail(Errc::infeasible_scenario,
                 "a shock switches the state from low to high; the path must start low");
    }

    const auto eq =
        classify_equilibrium(scenario.model, scenario.alpha_l, scenario.alpha_h, scenario.rho0);
    const auto strategy = strategy_of(eq.tag);
    if (!strategy)
        fail(Errc::no_equilibrium, "no pure-strategy equilibrium at these parameters");

    Trajectory trajectory;
    trajectory.equilibrium = eq;
    trajectory.shock_extension = scenario.shock_period.has_value();
    trajectory.shock_period = scenario.shock_period;
    trajectory.records.reserve(static_cast<std::size_t>(scenario.horizon));

    for (int period = 0; period < scenario.horizon; ++period) {
        const bool high = scenario.initial_state == StateTag::high ||
                          (scenario.shock_period && period >= *scenario.shock_period);

        TrajectoryRecord rec;
        rec.period = period;
        rec.realized_alpha = high ? scenario.alpha_h : scenario.alpha_l;
        rec.tag = eq.tag;
        switch (*strategy) {
            case StrategyTag::separating: rec.g = high ? 1 : 0; break;
            case StrategyTag::pooling_rents: rec.g = 0; break;
            case StrategyTag::pooling_provision: rec.g = 1; break;
        }
        rec.posterior =
            posterior(*strategy, rec.g, scenario.alpha_l, scenario.alpha_h, scenario.rho0);

        // The tax rate is re-optimized each period against the citizens'
        // current posterior; compliance and the tax base follow from it.
        const double rate =
            laffer_peak_rate(scenario.model, static_cast<double>(rec.g), rec.posterior);
        rec.report = induced_report(scenario.model, rate, static_cast<double>(rec.g),
                                    rec.posterior);
        rec.tax_base = rate * rec.report;
        trajectory.records.push_back(rec);
    }
    return trajectory;
}

double trajectory_jump(const Trajectory& trajectory, int period) {
    const int n = static_cast<int>(trajectory.records.size());
    if (period < 1 || period >= n)
        fail(Errc::index_out_of_range, "jump requires a period in [1, horizon)");
    return trajectory.records[static_cast<std::size_t>(period)].tax_base /
           trajectory.records[static_cast<std::size_t>(period - 1)].tax_base;
}

}  // namespace fiscap
