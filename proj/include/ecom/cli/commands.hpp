#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ecom/cli/report.hpp"

namespace ecom::cli {

/// Smith normal form of an integer matrix given as JSON rows, "[[2,4],[6,8]]".
Report cmd_snf(const std::string& matrix_json);

/// H^d(G; module) for 0 <= d <= max_degree; p = 0 integral, else p-primary parts.
Report cmd_group_cohomology(const std::string& group, const std::string& module, std::size_t max_degree,
                            unsigned p = 0);

/// H^*(Fl_n) degree by degree as Σ_n-modules; with `square`, the Künneth summands of Fl3 x Fl3.
Report cmd_flag(std::size_t n, bool square);

/// A bundled fibration name (with or without the _p<prime> suffix) or a config path.
Report cmd_serre(const std::string& config, std::optional<unsigned> prime = std::nullopt,
                 std::optional<int> top_dimension = std::nullopt);

Report cmd_u3t2(unsigned p);

struct RobustnessOptions {
    bool enabled = true;
    std::uint64_t budget = 1ull << 40;
    std::uint64_t samples = 4000;
    std::uint32_t seed = 1;
};

/// Validation, higher limits per degree and robustness for a diagram file or bundled name.
Report cmd_holim(const std::string& diagram, std::optional<int> max_degree = std::nullopt,
                 const RobustnessOptions& robustness = {});

/// The end-to-end U(3) pipeline on the bundled diagram.
Report cmd_ecom_u3(unsigned p);

Report cmd_rational_ring();

/// Runs `f`, turning an ecom::Error into an error report for `command`.
template <class F>
Report guarded(const std::string& command, F&& f);

}  // namespace ecom::cli

#include "ecom/error.hpp"

template <class F>
ecom::cli::Report ecom::cli::guarded(const std::string& command, F&& f) {
    try {
        return f();
    } catch (const ecom::Error& e) {
        Report r(command);
        r.set_error(e.kind(), e.what());
        return r;
    }
}
