#pragma once

#include <adm/adomian.hpp>
#include <adm/exp_polynomial.hpp>
#include <adm/power_series.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace adm {

struct BoundaryCondition {
    unsigned derivative_order = 0;
    double value = 0.0;

    bool operator==(const BoundaryCondition&) const = default;
};

/// u^(i)(0) = alpha_i for the left block, u^(j)(b) = beta_j for the right block.
struct BoundaryConditions {
    double b = 1.0;
    std::vector<BoundaryCondition> left;
    std::vector<BoundaryCondition> right;

    /// Conditions for orders 0..n-1 taken from a value list.
    static std::vector<BoundaryCondition> block(std::span<const double> values);

    bool operator==(const BoundaryConditions&) const = default;
};

/**
 * u^(order)(x) = phi(x) u + psi(x) + sum_t N_t(x, u, u') on [0, b].
 *
 * phi, psi and every nonlinear weight are truncated series sharing one
 * truncation order. The *_form members keep the closed forms these series
 * came from (when known), which is what problem files serialize.
 */
struct ProblemSpec {
    std::string name;
    unsigned order = 7;
    PowerSeries phi{default_truncation_order};
    PowerSeries psi{default_truncation_order};
    std::vector<NonlinearTerm> nonlinear;
    BoundaryConditions bc;
    std::optional<ExpPolynomial> exact;

    std::optional<ExpPolynomial> phi_form;
    std::optional<ExpPolynomial> psi_form;

    std::size_t truncation_order() const noexcept { return phi.truncation_order(); }
    std::size_t n_left() const noexcept { return bc.left.size(); }
    std::size_t n_params() const noexcept { return order - bc.left.size(); }

    bool operator==(const ProblemSpec&) const = default;
};

struct Violation {
    std::string field;
    std::string message;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Every invariant violation of the spec; empty means valid.
std::vector<Violation> check(const ProblemSpec& spec);

/// Returns the spec unchanged or throws ValidationError listing all violations.
const ProblemSpec& validate(const ProblemSpec& spec);

/// Spec with phi, psi and the weights rebuilt from their closed forms at order M.
ProblemSpec with_truncation_order(const ProblemSpec& spec, std::size_t truncation_order);

/// Assembles a spec from closed forms; phi and psi may be empty (zero).
ProblemSpec make_problem(std::string name, unsigned order, ExpPolynomial phi, ExpPolynomial psi,
                         std::vector<NonlinearTerm> nonlinear, BoundaryConditions bc,
                         std::optional<ExpPolynomial> exact, std::size_t truncation_order);

std::vector<std::string> builtin_names();

/// ex41, ex42, ex43 or ex44. Throws std::invalid_argument otherwise.
ProblemSpec builtin(std::string_view name, std::size_t truncation_order = default_truncation_order);

/// Closed-form exact solution at x, or nullopt when the spec has none.
std::optional<double> eval_exact(const ProblemSpec& spec, double x);

} // namespace adm
