#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "\"" + FISCAP_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("laffer csv peak row") {
    const auto r = run_cli(
        "laffer --g 1 --alpha 1.5 --sigma 0.1 --kappa 0.2 --w 1 --c 1 --format csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t,revenue,report");
    double best_t = 0.0;
    double best_rev = -1.0;
    while (std::getline(lines, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double t = std::stod(line.substr(0, c1));
        const double rev = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        if (rev > best_rev) {
            best_rev = rev;
            best_t = t;
        }
    }
    CHECK(best_t == doctest::Approx(0.714286).epsilon(2e-3));
    CHECK(best_rev == doctest::Approx(0.357143).epsilon(1e-4));
}

TEST_CASE("classify json tag and byte-stable round trip") {
    const auto r =
        run_cli("classify --alpha-l 0.2 --alpha-h 0.6 --sigma 0.5 --kappa 0.5 --rho 0.5");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["tag"] == "separation");
    CHECK(j["thresholds"]["kappa_min_h"].get<double>() == doctest::Approx(1.0 / 3.0));

    // identical invocation produces identical bytes
    const auto again =
        run_cli("classify --alpha-l 0.2 --alpha-h 0.6 --sigma 0.5 --kappa 0.5 --rho 0.5");
    CHECK(r.out == again.out);
}

TEST_CASE("verify subcommand exits zero when all rows pass") {
    const auto r = run_cli("verify --seed 42 --draws 40 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("target,closed_form,oracle,abs_err,passed\n", 0) == 0);
    CHECK(r.out.find(",false\n") == std::string::npos);

    const auto deterministic = run_cli("verify --seed 42 --draws 40 --format csv");
    CHECK(deterministic.out == r.out);
    const auto other_seed = run_cli("verify --seed 1 --draws 40 --format csv");
    CHECK(other_seed.out != r.out);
}

TEST_CASE("sweep grids") {
    const auto r =
        run_cli("sweep --cmd laffer --axis kappa=0:0.2:3 --g 1 --alpha 1.5 --sigma 0.1 "
                "--format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "kappa,t_hat,revenue\n"
          "0,0.5,0.25\n"
          "0.1,0.588235294,0.294117647\n"
          "0.2,0.714285714,0.357142857\n");

    const auto flip = run_cli(
        "sweep --cmd elite --axis kappa=0.3:0.4:2 --alpha 0.6 --sigma 0.5 --format csv");
    CHECK(flip.out ==
          "kappa,g_star,region\n"
          "0.3,0,weak_provision\n"
          "0.4,1,weak_provision\n");

    const auto grid2 = run_cli(
        "sweep --cmd jump --axis kappa=0:0.5:2 --axis alpha-h=0.5:0.6:2 --sigma 0.5 "
        "--format csv");
    REQUIRE(grid2.exit_code == 0);
    std::istringstream lines(grid2.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "kappa,alpha-h,jump_factor");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 4);

    const auto single = run_cli("sweep --cmd jump --axis kappa=0:0.5:1 --alpha-h 0.6 --sigma 0.5");
    CHECK(single.exit_code == 1);  // n = 1 violates the two-point minimum
}

TEST_CASE("exit codes") {
    CHECK(run_cli("classify --alpha-l 0.2 --alpha-h 0.6 --sigma 0.5 --kappa 1.5 --rho 0.5")
              .exit_code == 0);
    CHECK(run_cli("classify --alpha-l 0.2 --alpha-h 0.6 --sigma 0.5 --kappa 1.5 --rho 0.5 "
                  "--strict")
              .exit_code == 2);
    CHECK(run_cli("simulate --alpha-l 0.2 --alpha-h 0.6 --sigma 0.5 --kappa 1.5 --rho 0.5 "
                  "--horizon 3")
              .exit_code == 2);
    CHECK(run_cli("report --alpha 1.5 --t 0.5 --g 1 --sigma 1.5").exit_code == 1);
    CHECK(run_cli("report --alpha 1.5 --t 0.5 --g 1 --kappa 0.7").exit_code == 1);
    CHECK(run_cli("report --alpha 1.5 --t 0.5").exit_code == 64);  // missing --g
    CHECK(run_cli("report --alpha 1.5 --t 0.5 --g 1 --bogus 2").exit_code == 64);
    CHECK(run_cli("").exit_code == 64);  // a subcommand is required
    CHECK(run_cli("elite --alpha 0.6 --alpha-e 0.5 --alpha-c 0.5 --sigma 0.5").exit_code == 64);
    CHECK(run_cli("jump --alpha-h 0.6 --sigma 0.5 --format yaml").exit_code == 64);
}

TEST_CASE("format resolution: flag over env over default") {
    const auto flagged =
        run_cli("jump --alpha-h 0.6 --sigma 0.5 --kappa 0.5 --format csv",
                "FISCAP_FORMAT=json ");
    CHECK(flagged.out == "jump_factor\n1.19047619\n");

    const auto from_env =
        run_cli("jump --alpha-h 0.6 --sigma 0.5 --kappa 0.5", "FISCAP_FORMAT=csv ");
    CHECK(from_env.out == flagged.out);

    const auto by_default = run_cli("jump --alpha-h 0.6 --sigma 0.5 --kappa 0.5");
    CHECK(by_default.out.rfind("{", 0) == 0);
}

TEST_CASE("config file binds parameters and flags override it") {
    const std::string path = "/tmp/fiscap_cli_test.cfg";
    {
        std::ofstream cfg(path);
        cfg << "# two-state example\n"
            << "alpha_l = 0.2\n"
            << "alpha-h = 0.6\n"
            << "sigma = 0.5\n"
            << "kappa = 0.2\n"
            << "rho = 0.5\n"
            << "format = json\n";
    }
    const auto from_cfg = run_cli("classify --config " + path);
    REQUIRE(from_cfg.exit_code == 0);
    CHECK(nlohmann::ordered_json::parse(from_cfg.out)["tag"] == "pooling_rents");

    const auto overridden = run_cli("classify --config " + path + " --kappa 0.5");
    CHECK(nlohmann::ordered_json::parse(overridden.out)["tag"] == "separation");

    const auto missing = run_cli("classify --config /tmp/does_not_exist.cfg");
    CHECK(missing.exit_code == 64);
    std::remove(path.c_str());
}

TEST_CASE("output file receives the exact bytes") {
    const std::string path = "/tmp/fiscap_cli_test_out.json";
    const auto direct = run_cli("jump --alpha-h 0.6 --sigma 0.5 --kappa 0.5");
    const auto filed = run_cli("jump --alpha-h 0.6 --sigma 0.5 --kappa 0.5 --output " + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("simulate csv matches the documented columns") {
    const auto r = run_cli(
        "simulate --alpha-l 0.2 --alpha-h 0.6 --sigma 0.5 --kappa 0.5 --rho 0.5 --horizon 6 "
        "--shock-period 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "period,alpha,g,posterior,report,tax_base,tag\n"
          "0,0.2,0,0.2,0.5,0.3,separation\n"
          "1,0.2,0,0.2,0.5,0.3,separation\n"
          "2,0.2,0,0.2,0.5,0.3,separation\n"
          "3,0.6,1,0.6,0.5,0.357142857,separation\n"
          "4,0.6,1,0.6,0.5,0.357142857,separation\n"
          "5,0.6,1,0.6,0.5,0.357142857,separation\n");
}
