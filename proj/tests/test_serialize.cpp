#include <doctest.h>

#include "fiscap/serialize.hpp"
#include "test_support.hpp"

using namespace fiscap;

TEST_CASE("doubles format with nine significant digits") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.0 / 2.8) == "0.357142857");
    CHECK(format_double(5.0 / 7.0) == "0.714285714");
    CHECK(format_double(-0.35) == "-0.35");
    CHECK(format_double(2.5e-7) == "2.5e-07");
}

TEST_CASE("canonical dump is idempotent under reparse") {
    const auto m = test::two_state(1, 1, 0.5, 0.5, 0.2, 0.6, 0.5);
    const auto eq = classify_equilibrium(m, 0.2, 0.6, 0.5);
    const std::string once = dump_canonical(to_json(eq));
    const std::string twice = dump_canonical(ordered_json::parse(once));
    CHECK(once == twice);

    // key order is insertion order, not alphabetical
    CHECK(once.find("\"tag\"") < once.find("\"regime\""));
    CHECK(once.find("\"regime\"") < once.find("\"thresholds\""));
}

TEST_CASE("equilibrium json carries the documented fields") {
    const auto m = test::two_state(1, 1, 0.5, 0.5, 0.2, 0.6, 0.5);
    const auto j = to_json(classify_equilibrium(m, 0.2, 0.6, 0.5));
    CHECK(j["tag"] == "separation");
    CHECK(j["regime"] == "weak_high");
    CHECK(j["thresholds"]["kappa_max_l"].get<double>() == doctest::Approx(1.4));
    CHECK(j["tax_base_g0"].get<double>() == doctest::Approx(0.3));
    CHECK(j["diagnostics"].size() == 6);

    const auto gap = test::two_state(1, 1, 0.5, 1.5, 0.2, 0.6, 0.5);
    const auto jg = to_json(classify_equilibrium(gap, 0.2, 0.6, 0.5));
    CHECK(jg["tax_base_g1"].is_null());
}

TEST_CASE("region tags serialize as stable snake_case strings") {
    CHECK(std::string(region_name(RegionTag::strong_provision)) == "strong_provision");
    CHECK(std::string(region_name(RegionTag::contested_common_interest)) ==
          "contested_common_interest");
    CHECK(std::string(eq_tag_name(EqTag::no_pure_equilibrium)) == "no_pure_equilibrium");

    const auto m = test::unaligned(1, 1, 0.5, 0.0, 1.0, 0.2);
    const auto j = to_json(optimal_allocation(m, 1.0, 0.2));
    CHECK(j["region"]["tag"] == "contested_common_interest");
    CHECK(j["region"]["kappa_cutoff"].get<double>() == doctest::Approx(5.0 / 3.0));
    CHECK(j.contains("note"));
}

TEST_CASE("csv emitters") {
    const auto m = test::aligned(1, 1, 0.1, 0.0, 1.5);
    const auto csv = to_csv(laffer_curve(m, 1.0, 1.5, 0.0, 1.0, 3));
    CHECK(csv == "t,revenue,report\n0,0,1\n0.5,0.25,0.5\n1,0,0\n");

    std::vector<OracleReport> reports(1);
    reports[0].target = "laffer_peak_rate";
    reports[0].closed_form = 0.5;
    reports[0].oracle_value = 0.5;
    reports[0].abs_err = 0.0;
    reports[0].passed = true;
    CHECK(to_csv(reports) ==
          "target,closed_form,oracle,abs_err,passed\nlaffer_peak_rate,0.5,0.5,0,true\n");

    Scenario sc{test::two_state(1, 1, 0.5, 0.5, 0.2, 0.6, 0.5), 0.2, 0.6, 0.5, 2, 1,
                StateTag::low};
    const auto traj_csv = to_csv(run_timeline(sc));
    CHECK(traj_csv ==
          "period,alpha,g,posterior,report,tax_base,tag\n"
          "0,0.2,0,0.2,0.5,0.3,separation\n"
          "1,0.6,1,0.6,0.5,0.357142857,separation\n");
}

TEST_CASE("csv fields with separators are quoted") {
    std::vector<OracleReport> reports(1);
    reports[0].target = "a,b\"c";
    reports[0].closed_form = 1.0;
    reports[0].oracle_value = 1.0;
    reports[0].abs_err = 0.0;
    reports[0].passed = true;
    const auto csv = to_csv(reports);
    CHECK(csv.find("\"a,b\"\"c\"") != std::string::npos);
}
