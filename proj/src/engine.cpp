#include <adm/engine.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace adm {

namespace {

double factorial(std::size_t n)
{
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

double max_abs(const std::vector<double>& v)
{
    double worst = 0.0;
    for (double x : v) {
        worst = std::max(worst, std::abs(x));
    }
    return worst;
}

bool all_finite(const std::vector<double>& v)
{
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void require_params(const ProblemSpec& spec, const ParameterVector& params)
{
    if (params.size() != spec.n_params()) {
        throw std::invalid_argument("expected " + std::to_string(spec.n_params())
                                    + " parameters, got " + std::to_string(params.size()));
    }
    if (!all_finite(params.values)) {
        throw std::invalid_argument("non-finite parameter value");
    }
}

} // namespace

ADMState::ADMState(const ProblemSpec& spec, ParameterVector params)
    : spec_(&validate(spec)), params_(std::move(params))
{
    components_.push_back(build_u0(*spec_, params_));
}

void ADMState::advance()
{
    components_.push_back(recursion_step(*this));
}

PowerSeries build_u0(const ProblemSpec& spec, const ParameterVector& params)
{
    validate(spec);
    require_params(spec, params);

    const std::size_t m = spec.truncation_order();
    std::vector<double> c(m, 0.0);
    for (const auto& cond : spec.bc.left) {
        c[cond.derivative_order] = cond.value / factorial(cond.derivative_order);
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        const std::size_t degree = spec.n_left() + i;
        c[degree] = params.values[i] / factorial(degree);
    }
    return add(make_series(std::move(c)), integrate(spec.psi, spec.order));
}

PowerSeries recursion_step(const ADMState& state)
{
    const ProblemSpec& spec = state.spec();
    const auto& components = state.components();
    const std::size_t k = components.size() - 1;

    PowerSeries integrand = mul(spec.phi, components[k]);
    for (const auto& term : spec.nonlinear) {
        // A_k depends on u_0..u_k only; the whole prefix is regraded each step.
        const AdomianSequence seq = adomian_sequence(components, term, true);
        integrand = add(integrand, seq.polys[k]);
    }
    return integrate(integrand, spec.order);
}

Approximant approximant(const ProblemSpec& spec, const ParameterVector& params,
                        std::size_t k_components)
{
    if (k_components == 0) {
        throw std::invalid_argument("approximant needs at least one component");
    }
    ADMState state(spec, params);
    while (state.components().size() < k_components) {
        state.advance();
    }
    PowerSeries sum(spec.truncation_order());
    for (const auto& u : state.components()) {
        sum = add(sum, u);
    }
    return Approximant{std::move(sum), k_components};
}

std::vector<double> boundary_residuals(const ProblemSpec& spec, const PowerSeries& series)
{
    std::vector<double> r;
    r.reserve(spec.bc.right.size());
    for (const auto& cond : spec.bc.right) {
        r.push_back(eval_derivative(series, cond.derivative_order, spec.bc.b) - cond.value);
    }
    return r;
}

std::vector<double> residuals(const ProblemSpec& spec, const ParameterVector& params,
                              std::size_t k_components)
{
    return boundary_residuals(spec, approximant(spec, params, k_components).series);
}

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::converged:
        return "converged";
    case SolveStatus::max_iterations:
        return "max_iterations";
    case SolveStatus::singular_jacobian:
        return "singular_jacobian";
    case SolveStatus::diverged:
        return "diverged";
    }
    return "unknown";
}

std::vector<GridRow> grid_report(const ProblemSpec& spec, const PowerSeries& series, double step)
{
    const double b = spec.bc.b;
    if (!(step > 0.0) || step > b) {
        throw std::invalid_argument("grid step must lie in (0, b]");
    }
    const double ratio = b / step;
    const auto intervals = static_cast<long long>(std::llround(ratio));
    if (std::abs(static_cast<double>(intervals) * step - b) > 1e-9) {
        throw std::invalid_argument("grid step does not divide b");
    }

    std::vector<GridRow> rows;
    rows.reserve(static_cast<std::size_t>(intervals) + 1);
    for (long long i = 0; i <= intervals; ++i) {
        const double x = i == intervals ? b : static_cast<double>(i) * step;
        GridRow row;
        row.x = x;
        row.approx = eval(series, x);
        row.exact = eval_exact(spec, x);
        if (row.exact) {
            row.abs_error = std::abs(row.approx - *row.exact);
        }
        rows.push_back(row);
    }
    return rows;
}

SolveResult solve(const ProblemSpec& spec, std::size_t k_components, const NewtonOptions& options,
                  std::optional<double> grid_step)
{
    validate(spec);
    const std::size_t n = spec.n_params();

    ParameterVector params = ParameterVector::zeros(n);
    if (options.initial_guess) {
        params.values = *options.initial_guess;
    }
    require_params(spec, params);

    SolveResult result;
    result.status = SolveStatus::max_iterations;

    const auto eval_residuals = [&](const ParameterVector& p) -> std::optional<std::vector<double>> {
        try {
            auto r = residuals(spec, p, k_components);
            if (!all_finite(r)) {
                return std::nullopt;
            }
            return r;
        } catch (const SeriesError&) {
            return std::nullopt;
        }
    };

    auto r = eval_residuals(params);
    if (!r) {
        throw SeriesError("residuals are non-finite at the initial guess");
    }

    const double rel_step = spec.nonlinear.empty() ? options.affine_fd_step : options.fd_step;
    int updates = 0;
    while (true) {
        if (max_abs(*r) <= options.tol) {
            result.status = SolveStatus::converged;
            break;
        }
        if (updates >= options.max_iter) {
            result.status = SolveStatus::max_iterations;
            result.message = "no convergence after " + std::to_string(updates) + " Newton updates";
            break;
        }

        Eigen::MatrixXd jac(static_cast<Eigen::Index>(r->size()), static_cast<Eigen::Index>(n));
        bool jac_ok = true;
        for (std::size_t i = 0; i < n && jac_ok; ++i) {
            ParameterVector probe = params;
            const double h = rel_step * std::max(1.0, std::abs(params.values[i]));
            probe.values[i] += h;
            const auto rp = eval_residuals(probe);
            if (!rp) {
                jac_ok = false;
                break;
            }
            for (std::size_t row = 0; row < r->size(); ++row) {
                jac(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i)) =
                    ((*rp)[row] - (*r)[row]) / h;
            }
        }
        if (!jac_ok) {
            result.status = SolveStatus::diverged;
            result.message = "non-finite residual while forming the Jacobian";
            break;
        }

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sigma = svd.singularValues();
        const double smax = sigma.size() ? sigma(0) : 0.0;
        const double smin = sigma.size() ? sigma(sigma.size() - 1) : 0.0;
        if (!(smin > 0.0) || smax / smin > options.max_condition) {
            result.status = SolveStatus::singular_jacobian;
            result.message = "Jacobian condition estimate exceeds "
                             + std::to_string(options.max_condition);
            break;
        }

        const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(
            r->data(), static_cast<Eigen::Index>(r->size()));
        const Eigen::VectorXd delta = svd.solve(rhs);

        ParameterVector next = params;
        for (std::size_t i = 0; i < n; ++i) {
            next.values[i] += delta(static_cast<Eigen::Index>(i));
        }
        const auto rn = eval_residuals(next);
        ++updates;
        if (!rn || !all_finite(next.values)) {
            result.status = SolveStatus::diverged;
            result.message = "Newton update produced a non-finite iterate";
            break;
        }
        params = std::move(next);
        r = rn;
    }

    result.params = params;
    result.newton_iterations = updates;
    result.approximant = approximant(spec, params, k_components);
    result.residual_norm = max_abs(boundary_residuals(spec, result.approximant.series));
    if (grid_step) {
        result.grid_report = grid_report(spec, result.approximant.series, *grid_step);
    }
    return result;
}

SolveResult solve(const ProblemSpec& spec, std::size_t k_components, std::size_t truncation_order,
                  const NewtonOptions& options, std::optional<double> grid_step)
{
    return solve(with_truncation_order(spec, truncation_order), k_components, options, grid_step);
}

} // namespace adm
