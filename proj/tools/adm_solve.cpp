// Solves a two-point boundary value problem by Adomian decomposition and
// prints the error table against the exact solution, when one is known.

#include <adm/runner.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    adm::RunConfig config;
    std::string out_path;
    std::string plot_path;

    CLI::App app{"Adomian decomposition solver for high-order two-point BVPs"};
    app.add_option("--problem", config.problem, "built-in name (ex41..ex44) or problem file")
        ->required();
    app.add_option("--components", config.k_components, "decomposition components k")
        ->capture_default_str();
    app.add_option("--order", config.truncation_order, "series truncation order M")
        ->capture_default_str();
    app.add_option("--grid", config.grid_step, "report grid spacing")->capture_default_str();
    app.add_option("--tol", config.tol, "Newton tolerance on boundary residuals")
        ->capture_default_str();
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv"}, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the table/CSV here instead of stdout");
    app.add_option("--plot", plot_path, "write a gnuplot script (and its CSV) here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : adm::exit_code::invalid_input;
    }

    std::transform(format.begin(), format.end(), format.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    config.format = format == "csv" ? adm::OutputFormat::csv : adm::OutputFormat::table;
    if (!out_path.empty()) {
        config.output = out_path;
    }
    if (!plot_path.empty()) {
        config.plot = plot_path;
    }
    return adm::run(config, std::cout, std::cerr);
}
