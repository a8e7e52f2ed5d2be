#pragma once

#include <adm/engine.hpp>
#include <adm/problem.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace adm {

enum class OutputFormat { table, csv };

struct RunConfig {
    /// Built-in name (ex41..ex44) or path to a problem document.
    std::string problem;
    std::size_t k_components = 4;
    std::size_t truncation_order = default_truncation_order;
    double grid_step = 0.1;
    double tol = 1e-12;
    std::optional<std::filesystem::path> output;
    OutputFormat format = OutputFormat::table;
    std::optional<std::filesystem::path> plot;
};

namespace exit_code {
inline constexpr int converged = 0;
inline constexpr int invalid_input = 1;
inline constexpr int not_converged = 2;
inline constexpr int io_failure = 3;
} // namespace exit_code

/// Config problems for this spec; empty means runnable.
std::vector<std::string> check_config(const RunConfig& config, const ProblemSpec& spec);

ProblemSpec load_problem(const RunConfig& config);

/// 10 significant digits, shared by table and CSV output.
std::string format_number(double v);

void write_table(std::ostream& os, const ProblemSpec& spec, const SolveResult& result);
void write_summary(std::ostream& os, const ProblemSpec& spec, const SolveResult& result);

/// Header x,exact,approx,abs_error; missing exact leaves both fields empty.
void write_csv(std::ostream& os, const SolveResult& result);

/**
 * Writes <script>.csv next to `script` and a gnuplot script plotting
 * approx and exact against x, plus abs_error in a second panel. Without an
 * exact solution only the approx curve is drawn. Throws std::ios_base::failure.
 */
void emit_plot_script(const SolveResult& result, const std::filesystem::path& script,
                      const std::string& title = "");

/// Solves and writes outputs. Returns one of the exit_code values.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace adm
