#pragma once

#include <adm/power_series.hpp>
#include <adm/problem.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace adm {

/// Unknown initial derivatives u^(n_left)(0), ..., u^(order-1)(0).
struct ParameterVector {
    std::vector<double> values;

    static ParameterVector zeros(std::size_t n) { return {std::vector<double>(n, 0.0)}; }
    std::size_t size() const noexcept { return values.size(); }
    bool operator==(const ParameterVector&) const = default;
};

/// Decomposition components u_0..u_k for one parameter vector.
class ADMState {
public:
    /// Validates the spec and builds u_0.
    ADMState(const ProblemSpec& spec, ParameterVector params);
    /// The state keeps a reference to the spec.
    ADMState(ProblemSpec&&, ParameterVector) = delete;

    const ProblemSpec& spec() const noexcept { return *spec_; }
    const ParameterVector& params() const noexcept { return params_; }
    const std::vector<PowerSeries>& components() const noexcept { return components_; }

    /// Appends recursion_step(*this).
    void advance();

private:
    const ProblemSpec* spec_;
    ParameterVector params_;
    std::vector<PowerSeries> components_;
};

/// Known left data, the free parameters and L^{-1} psi.
PowerSeries build_u0(const ProblemSpec& spec, const ParameterVector& params);

/// u_{k+1} = L^{-1}(phi u_k) + L^{-1}(A_k).
PowerSeries recursion_step(const ADMState& state);

struct Approximant {
    PowerSeries series{default_truncation_order};
    std::size_t n_terms = 0;
};

Approximant approximant(const ProblemSpec& spec, const ParameterVector& params,
                        std::size_t k_components);

/// u^(j)(b) - beta_j for each right condition, on a given approximant series.
std::vector<double> boundary_residuals(const ProblemSpec& spec, const PowerSeries& series);

std::vector<double> residuals(const ProblemSpec& spec, const ParameterVector& params,
                              std::size_t k_components);

struct NewtonOptions {
    double tol = 1e-12;
    int max_iter = 25;
    /// Zero vector when absent.
    std::optional<std::vector<double>> initial_guess;
    /// Forward-difference step is fd_step * max(1, |p_i|).
    double fd_step = 1e-6;
    /// Used instead of fd_step when the problem has no nonlinear terms. The
    /// residual map is then affine in the parameters, so a forward difference
    /// is exact up to rounding and a unit-scale step keeps rounding out of J.
    double affine_fd_step = 1.0;
    double max_condition = 1e14;
};

enum class SolveStatus { converged, max_iterations, singular_jacobian, diverged };

std::string to_string(SolveStatus status);

struct GridRow {
    double x = 0.0;
    double approx = 0.0;
    std::optional<double> exact;
    std::optional<double> abs_error;
};

struct SolveResult {
    Approximant approximant;
    ParameterVector params;
    /// max |residual|, recomputed from `approximant`.
    double residual_norm = 0.0;
    int newton_iterations = 0;
    SolveStatus status = SolveStatus::max_iterations;
    std::string message;
    std::optional<std::vector<GridRow>> grid_report;

    bool converged() const noexcept { return status == SolveStatus::converged; }
};

/// Rows at x = 0, step, ..., b. Throws std::invalid_argument unless step divides b.
std::vector<GridRow> grid_report(const ProblemSpec& spec, const PowerSeries& series, double step);

/**
 * Resolves the free parameters by Newton iteration on the right-boundary
 * residuals of the k-term approximant, with a forward-difference Jacobian.
 *
 * Failures (singular Jacobian, max_iter reached, non-finite iterates) do not
 * throw; they come back with the last finite iterate and a status other than
 * converged. A grid report is attached when grid_step is given.
 */
SolveResult solve(const ProblemSpec& spec, std::size_t k_components,
                  const NewtonOptions& options = {}, std::optional<double> grid_step = 0.1);

/// Same, after rebuilding the spec at truncation order M.
SolveResult solve(const ProblemSpec& spec, std::size_t k_components, std::size_t truncation_order,
                  const NewtonOptions& options, std::optional<double> grid_step = 0.1);

} // namespace adm
