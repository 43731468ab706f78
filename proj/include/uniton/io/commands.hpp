#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include "uniton/io/json_io.hpp"

namespace uniton {

namespace exit_code {
constexpr int ok = 0;
constexpr int parse_error = 2;
constexpr int pattern_violation = 3;
constexpr int infeasible = 4;
constexpr int check_failed = 5;
}  // namespace exit_code

struct CommandResult {
    int code = exit_code::ok;
    json out;             // printed on standard output
    std::string summary;  // printed on standard error
};

struct RunOptions {
    double tol = 1e-6;
    double h = 1e-5;
    std::optional<std::uint64_t> seed;  // overrides the scenario's seed
    size_t float_points = 3;
    /// Empty selects every check.
    std::set<std::string> checks;
};

/// Names accepted by --checks, in report order.
const std::set<std::string>& known_checks();

CommandResult cmd_build(const Scenario& s, const RunOptions& opt = {});
CommandResult cmd_verify(const Scenario& s, const RunOptions& opt = {});
CommandResult cmd_enumerate(size_t n, size_t p, size_t r, std::optional<size_t> only_k = std::nullopt,
                            bool realizability = true);
CommandResult cmd_bound(size_t n, size_t p);
CommandResult cmd_model(const Scenario& s, const RunOptions& opt = {});
/// {"n", "k", "F0_basis"?, "blocks", "point"?, "sections": [...]} with sections of length blocks * n.
CommandResult cmd_model_raw(const json& raw);

/// Maps library exceptions to the exit-code contract.
CommandResult run_guarded(const std::function<CommandResult()>& body);

/// Full command line: JSON on out, human summary on err; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uniton
