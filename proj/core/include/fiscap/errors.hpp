#pragma once

#include <stdexcept>
#include <string>

namespace fiscap {

// Every failure the library reports, keyed so callers can branch without
// string matching. The names double as the stable identifiers used in
// CLI diagnostics.
enum class Errc {
    domain_violation,
    kappa_infeasible,
    phi_infeasible,
    region_mismatch,
    grid_too_coarse,
    no_equilibrium,
    infeasible_scenario,
    index_out_of_range,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fiscap
