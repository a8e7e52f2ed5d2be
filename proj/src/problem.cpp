#include <adm/problem.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace adm {

namespace {

std::string describe(const std::vector<Violation>& violations)
{
    std::ostringstream os;
    os << "invalid problem:";
    for (const auto& v : violations) {
        os << "\n  " << v.field << ": " << v.message;
    }
    return os.str();
}

void check_block(const std::vector<BoundaryCondition>& block, const char* side,
                 std::vector<Violation>& out)
{
    for (std::size_t i = 0; i < block.size(); ++i) {
        const std::string field = std::string("bc.") + side + "[" + std::to_string(i) + "]";
        if (block[i].derivative_order != i) {
            std::ostringstream msg;
            msg << "non-contiguous " << side << " derivative orders: order " << i
                << " missing (found " << block[i].derivative_order << ")";
            out.push_back({field, msg.str()});
        }
        if (!std::isfinite(block[i].value)) {
            out.push_back({field, "non-finite boundary value"});
        }
    }
}

} // namespace

std::vector<BoundaryCondition> BoundaryConditions::block(std::span<const double> values)
{
    std::vector<BoundaryCondition> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.push_back({static_cast<unsigned>(i), values[i]});
    }
    return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations))
{
}

std::vector<Violation> check(const ProblemSpec& spec)
{
    std::vector<Violation> out;
    if (spec.order < 2) {
        out.push_back({"order", "ODE order must be at least 2"});
    }
    if (!std::isfinite(spec.bc.b) || spec.bc.b <= 0.0) {
        out.push_back({"b", "domain endpoint must be finite and positive"});
    }
    check_block(spec.bc.left, "left", out);
    check_block(spec.bc.right, "right", out);

    const std::size_t count = spec.bc.left.size() + spec.bc.right.size();
    if (count != spec.order) {
        out.push_back({"bc", "condition count " + std::to_string(count) + " ≠ order "
                                 + std::to_string(spec.order)});
    }

    const std::size_t m = spec.truncation_order();
    if (spec.psi.truncation_order() != m) {
        out.push_back({"psi", "truncation order differs from phi"});
    }
    for (std::size_t t = 0; t < spec.nonlinear.size(); ++t) {
        if (spec.nonlinear[t].x_weight().truncation_order() != m) {
            out.push_back({"nonlinear[" + std::to_string(t) + "]",
                           "weight truncation order differs from phi"});
        }
    }
    if (m <= spec.order) {
        out.push_back({"truncation_order", "truncation order " + std::to_string(m)
                                               + " leaves no room above the ODE order"});
    }
    return out;
}

const ProblemSpec& validate(const ProblemSpec& spec)
{
    auto violations = check(spec);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return spec;
}

ProblemSpec make_problem(std::string name, unsigned order, ExpPolynomial phi, ExpPolynomial psi,
                         std::vector<NonlinearTerm> nonlinear, BoundaryConditions bc,
                         std::optional<ExpPolynomial> exact, std::size_t truncation_order)
{
    ProblemSpec spec;
    spec.name = std::move(name);
    spec.order = order;
    spec.phi = phi.to_series(truncation_order);
    spec.psi = psi.to_series(truncation_order);
    spec.phi_form = std::move(phi);
    spec.psi_form = std::move(psi);
    spec.nonlinear = std::move(nonlinear);
    spec.bc = std::move(bc);
    spec.exact = std::move(exact);
    return spec;
}

ProblemSpec with_truncation_order(const ProblemSpec& spec, std::size_t truncation_order)
{
    if (spec.truncation_order() == truncation_order) {
        return spec;
    }
    if (!spec.phi_form || !spec.psi_form) {
        throw std::invalid_argument("cannot change truncation order without closed forms for phi/psi");
    }
    std::vector<NonlinearTerm> nonlinear;
    for (const auto& term : spec.nonlinear) {
        if (!term.weight_form()) {
            throw std::invalid_argument(
                "cannot change truncation order without closed forms for nonlinear weights");
        }
        nonlinear.push_back(
            NonlinearTerm::from_form(term.monomials(), *term.weight_form(), truncation_order));
    }
    return make_problem(spec.name, spec.order, *spec.phi_form, *spec.psi_form, std::move(nonlinear),
                        spec.bc, spec.exact, truncation_order);
}

std::vector<std::string> builtin_names()
{
    return {"ex41", "ex42", "ex43", "ex44"};
}

ProblemSpec builtin(std::string_view name, std::size_t m)
{
    using std::numbers::e;
    const double inv_e = 1.0 / e;
    const auto conditions = [](double b, std::vector<double> left, std::vector<double> right) {
        return BoundaryConditions{b, BoundaryConditions::block(left), BoundaryConditions::block(right)};
    };

    if (name == "ex41") {
        // u^(7) = x u + e^x (x^2 - 2x - 6), u = (1 - x) e^x
        return make_problem("ex41", 7, ExpPolynomial({{{0.0, 1.0}, 0.0}}),
                            ExpPolynomial({{{-6.0, -2.0, 1.0}, 1.0}}), {},
                            conditions(1.0, {1.0, 0.0, -1.0, -2.0}, {0.0, -e, -2.0 * e}),
                            ExpPolynomial({{{1.0, -1.0}, 1.0}}), m);
    }
    if (name == "ex42") {
        // u^(7) = -e^x u^2, u = e^{-x}
        std::vector<NonlinearTerm> nl;
        nl.push_back(NonlinearTerm::from_form({{1.0, 2, 0}}, ExpPolynomial({{{-1.0}, 1.0}}), m));
        return make_problem("ex42", 7, ExpPolynomial{}, ExpPolynomial{}, std::move(nl),
                            conditions(1.0, {1.0, -1.0, 1.0, -1.0}, {inv_e, -inv_e, inv_e}),
                            ExpPolynomial({{{1.0}, -1.0}}), m);
    }
    if (name == "ex43") {
        // u^(7) = -u - e^x (35 + 12x + 2x^2), u = x (1 - x) e^x
        return make_problem("ex43", 7, ExpPolynomial({{{-1.0}, 0.0}}),
                            ExpPolynomial({{{-35.0, -12.0, -2.0}, 1.0}}), {},
                            conditions(1.0, {0.0, 1.0, 0.0, -3.0}, {0.0, -e, -4.0 * e}),
                            ExpPolynomial({{{0.0, 1.0, -1.0}, 1.0}}), m);
    }
    if (name == "ex44") {
        // u^(7) = u u' + e^{-2x} (2 - 3x + x^2) + e^{-x} (x - 8), u = (1 - x) e^{-x}
        std::vector<NonlinearTerm> nl;
        nl.push_back(NonlinearTerm::from_form({{1.0, 1, 1}}, ExpPolynomial({{{1.0}, 0.0}}), m));
        return make_problem("ex44", 7, ExpPolynomial{},
                            ExpPolynomial({{{2.0, -3.0, 1.0}, -2.0}, {{-8.0, 1.0}, -1.0}}),
                            std::move(nl),
                            conditions(1.0, {1.0, -2.0, 3.0, -4.0}, {0.0, -inv_e, 2.0 * inv_e}),
                            ExpPolynomial({{{1.0, -1.0}, -1.0}}), m);
    }
    throw std::invalid_argument("unknown built-in problem '" + std::string(name) + "'");
}

std::optional<double> eval_exact(const ProblemSpec& spec, double x)
{
    if (!spec.exact) {
        return std::nullopt;
    }
    const double value = (*spec.exact)(x);
    if (!std::isfinite(value)) {
        throw std::domain_error("exact solution is non-finite at x = " + std::to_string(x));
    }
    return value;
}

} // namespace adm
