#include <adm/adomian.hpp>

#include <stdexcept>
#include <utility>

namespace adm {

namespace {

using Graded = std::vector<PowerSeries>;

Graded graded_product(const Graded& f, const Graded& g, std::size_t grades)
{
    const std::size_t m = f.front().truncation_order();
    Graded out(grades, PowerSeries(m));
    for (std::size_t n = 0; n < grades; ++n) {
        PowerSeries acc(m);
        for (std::size_t i = 0; i <= n; ++i) {
            acc = add(acc, mul(f[i], g[n - i]));
        }
        out[n] = std::move(acc);
    }
    return out;
}

Graded monomial_grades(const Monomial& mono, const Graded& u, const Graded& du)
{
    const std::size_t grades = u.size();
    std::vector<const Graded*> factors;
    factors.insert(factors.end(), mono.u_power, &u);
    factors.insert(factors.end(), mono.du_power, &du);

    Graded acc = *factors.front();
    for (std::size_t f = 1; f < factors.size(); ++f) {
        acc = graded_product(acc, *factors[f], grades);
    }
    for (auto& s : acc) {
        s = scale(s, mono.coefficient);
    }
    return acc;
}

} // namespace

NonlinearTerm::NonlinearTerm(std::vector<Monomial> monomials, PowerSeries x_weight,
                             std::optional<ExpPolynomial> weight_form)
    : monomials_(std::move(monomials)), x_weight_(std::move(x_weight)),
      weight_form_(std::move(weight_form))
{
    if (monomials_.empty()) {
        throw std::invalid_argument("nonlinear term needs at least one monomial");
    }
    for (const auto& m : monomials_) {
        if (m.u_power + m.du_power == 0) {
            throw std::invalid_argument("monomial of total degree 0 belongs in the source term");
        }
    }
}

NonlinearTerm NonlinearTerm::from_form(std::vector<Monomial> monomials, ExpPolynomial weight,
                                       std::size_t truncation_order)
{
    PowerSeries series = weight.to_series(truncation_order);
    return NonlinearTerm(std::move(monomials), std::move(series), std::move(weight));
}

PowerSeries NonlinearTerm::apply(const PowerSeries& u) const
{
    const std::size_t m = u.truncation_order();
    const PowerSeries du = differentiate(u);
    const PowerSeries one = monomial(0, m);
    PowerSeries total(m);
    for (const auto& mono : monomials_) {
        PowerSeries prod = one;
        for (unsigned i = 0; i < mono.u_power; ++i) {
            prod = mul(prod, u);
        }
        for (unsigned i = 0; i < mono.du_power; ++i) {
            prod = mul(prod, du);
        }
        total = add(total, scale(prod, mono.coefficient));
    }
    return mul(total, x_weight_);
}

AdomianSequence adomian_sequence(std::span<const PowerSeries> components, const NonlinearTerm& term,
                                 bool apply_x_weight)
{
    if (components.empty()) {
        throw std::invalid_argument("adomian_sequence: no components");
    }
    const std::size_t m = components.front().truncation_order();
    for (const auto& c : components) {
        if (c.truncation_order() != m) {
            throw SeriesError("adomian_sequence: components disagree on truncation order");
        }
    }
    if (apply_x_weight && term.x_weight().truncation_order() != m) {
        throw SeriesError("adomian_sequence: x weight truncation order differs from components");
    }

    const Graded u(components.begin(), components.end());
    Graded du;
    du.reserve(u.size());
    for (const auto& c : u) {
        du.push_back(differentiate(c));
    }

    Graded total(u.size(), PowerSeries(m));
    for (const auto& mono : term.monomials()) {
        const Graded part = monomial_grades(mono, u, du);
        for (std::size_t n = 0; n < total.size(); ++n) {
            total[n] = add(total[n], part[n]);
        }
    }
    if (apply_x_weight) {
        for (auto& a : total) {
            a = mul(a, term.x_weight());
        }
    }
    return AdomianSequence{std::move(total)};
}

} // namespace adm
