#include <adm/runner.hpp>

#include <adm/problem_file.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ios>
#include <ostream>

namespace adm {

namespace {

bool is_builtin(const std::string& name)
{
    const auto names = builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string optional_number(const std::optional<double>& v)
{
    return v ? format_number(*v) : std::string();
}

std::optional<double> max_error(const SolveResult& result)
{
    if (!result.grid_report) {
        return std::nullopt;
    }
    std::optional<double> worst;
    for (const auto& row : *result.grid_report) {
        if (row.abs_error) {
            worst = std::max(worst.value_or(0.0), *row.abs_error);
        }
    }
    return worst;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream os(path);
    if (!os) {
        throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    }
    return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path)
{
    os.flush();
    if (!os) {
        throw std::ios_base::failure("write to " + path.string() + " failed");
    }
}

} // namespace

std::vector<std::string> check_config(const RunConfig& config, const ProblemSpec& spec)
{
    std::vector<std::string> out;
    if (config.k_components < 1) {
        out.push_back("--components must be at least 1");
    }
    if (config.truncation_order < spec.order + 7) {
        out.push_back(fmt::format("--order {} is below ODE order + 7 = {}", config.truncation_order,
                                  spec.order + 7));
    }
    if (!(config.tol >= 0.0) || !std::isfinite(config.tol)) {
        out.push_back("--tol must be a finite non-negative number");
    }
    const double b = spec.bc.b;
    if (!(config.grid_step > 0.0) || !std::isfinite(config.grid_step)) {
        out.push_back("--grid must be positive");
    } else if (config.grid_step > b) {
        out.push_back(fmt::format("--grid {} exceeds b = {}; the grid would be empty",
                                  config.grid_step, b));
    } else {
        const double intervals = std::round(b / config.grid_step);
        if (std::abs(intervals * config.grid_step - b) > 1e-9) {
            out.push_back(fmt::format("--grid {} does not divide b = {}", config.grid_step, b));
        }
    }
    return out;
}

ProblemSpec load_problem(const RunConfig& config)
{
    if (is_builtin(config.problem)) {
        return builtin(config.problem, config.truncation_order);
    }
    return parse_problem_file(config.problem, config.truncation_order);
}

std::string format_number(double v)
{
    return fmt::format("{:.10g}", v);
}

void write_summary(std::ostream& os, const ProblemSpec& spec, const SolveResult& result)
{
    os << "status: " << to_string(result.status) << '\n';
    if (!result.message.empty()) {
        os << "message: " << result.message << '\n';
    }
    os << "newton iterations: " << result.newton_iterations << '\n';
    os << "residual norm: " << format_number(result.residual_norm) << '\n';
    os << "parameters:\n";
    for (std::size_t i = 0; i < result.params.size(); ++i) {
        os << fmt::format("  u^({})(0) = {}\n", spec.n_left() + i,
                          fmt::format("{:.17g}", result.params.values[i]));
    }
    if (const auto worst = max_error(result)) {
        os << "max abs error: " << format_number(*worst) << '\n';
    }
}

void write_table(std::ostream& os, const ProblemSpec& spec, const SolveResult& result)
{
    os << fmt::format("problem {}: order {}, b = {}, {} components, truncation order {}\n\n",
                      spec.name, spec.order, spec.bc.b, result.approximant.n_terms,
                      spec.truncation_order());
    constexpr int width = 18;
    os << fmt::format("{:>{}}{:>{}}{:>{}}{:>{}}\n", "x", 8, "exact", width, "approx", width,
                      "abs_error", width);
    if (result.grid_report) {
        for (const auto& row : *result.grid_report) {
            os << fmt::format("{:>{}}{:>{}}{:>{}}{:>{}}\n", format_number(row.x), 8,
                              row.exact ? format_number(*row.exact) : "-", width,
                              format_number(row.approx), width,
                              row.abs_error ? format_number(*row.abs_error) : "-", width);
        }
    }
    os << '\n';
    write_summary(os, spec, result);
}

void write_csv(std::ostream& os, const SolveResult& result)
{
    os << "x,exact,approx,abs_error\n";
    if (!result.grid_report) {
        return;
    }
    for (const auto& row : *result.grid_report) {
        os << format_number(row.x) << ',' << optional_number(row.exact) << ','
           << format_number(row.approx) << ',' << optional_number(row.abs_error) << '\n';
    }
}

void emit_plot_script(const SolveResult& result, const std::filesystem::path& script,
                      const std::string& title)
{
    if (!result.grid_report) {
        throw std::invalid_argument("emit_plot_script: result has no grid report");
    }
    std::filesystem::path data = script;
    data.replace_extension(".csv");

    {
        auto os = open_output(data);
        write_csv(os, result);
        finish(os, data);
    }

    const bool has_exact = std::any_of(result.grid_report->begin(), result.grid_report->end(),
                                       [](const GridRow& r) { return r.exact.has_value(); });
    const std::string label = title.empty() ? "solution" : title;

    auto os = open_output(script);
    os << "# gnuplot script; data columns: x,exact,approx,abs_error\n";
    os << "set datafile separator ','\n";
    os << "set key autotitle columnhead\n";
    os << "set xlabel 'x'\n";
    if (has_exact) {
        os << "set multiplot layout 2,1\n";
    }
    os << "set title '" << label << "'\n";
    os << "plot '" << data.filename().string() << "' using 1:3 with points pt 7 title 'approx'";
    if (has_exact) {
        os << ", \\\n     '' using 1:2 with lines title 'exact'\n";
        os << "set title 'absolute error'\n";
        os << "set logscale y\n";
        os << "plot '" << data.filename().string()
           << "' using 1:($4 > 0 ? $4 : 1e-17) with linespoints title 'abs_error'\n";
        os << "unset multiplot\n";
    } else {
        os << '\n';
    }
    finish(os, script);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    ProblemSpec spec;
    try {
        spec = load_problem(config);
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::io_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_input;
    }

    if (const auto problems = check_config(config, spec); !problems.empty()) {
        for (const auto& p : problems) {
            err << "error: " << p << '\n';
        }
        return exit_code::invalid_input;
    }

    NewtonOptions options;
    options.tol = config.tol;
    SolveResult result;
    try {
        result = solve(spec, config.k_components, options, config.grid_step);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_input;
    }

    try {
        std::ofstream file;
        if (config.output) {
            file = open_output(*config.output);
        }
        std::ostream& dest = config.output ? static_cast<std::ostream&>(file) : out;
        if (config.format == OutputFormat::csv) {
            write_csv(dest, result);
            write_summary(err, spec, result);
        } else {
            write_table(dest, spec, result);
        }
        if (config.output) {
            finish(file, *config.output);
        }
        if (config.plot) {
            emit_plot_script(result, *config.plot, spec.name);
        }
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::io_failure;
    }

    return result.converged() ? exit_code::converged : exit_code::not_converged;
}

} // namespace adm
