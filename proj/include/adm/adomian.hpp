#pragma once

#include <adm/exp_polynomial.hpp>
#include <adm/power_series.hpp>

#include <optional>
#include <span>
#include <vector>

namespace adm {

/// coefficient * u^u_power * (u')^du_power
struct Monomial {
    double coefficient = 1.0;
    unsigned u_power = 0;
    unsigned du_power = 0;

    bool operator==(const Monomial&) const = default;
};

/**
 * Polynomial nonlinearity w(x) * sum_m c_m u^{a_m} (u')^{b_m}.
 *
 * Every monomial has a + b >= 1; terms free of u belong in the source.
 * weight_form, when present, is the closed form the weight series was built
 * from and is what gets written back to problem files.
 */
class NonlinearTerm {
public:
    NonlinearTerm(std::vector<Monomial> monomials, PowerSeries x_weight,
                  std::optional<ExpPolynomial> weight_form = std::nullopt);

    /// Builds the weight series from its closed form.
    static NonlinearTerm from_form(std::vector<Monomial> monomials, ExpPolynomial weight,
                                   std::size_t truncation_order);

    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const PowerSeries& x_weight() const noexcept { return x_weight_; }
    const std::optional<ExpPolynomial>& weight_form() const noexcept { return weight_form_; }

    /// N(u) evaluated on a full series, weight included.
    PowerSeries apply(const PowerSeries& u) const;

    bool operator==(const NonlinearTerm&) const = default;

private:
    std::vector<Monomial> monomials_;
    PowerSeries x_weight_;
    std::optional<ExpPolynomial> weight_form_;
};

/// A_0..A_n, each already multiplied by the x weight when requested.
struct AdomianSequence {
    std::vector<PowerSeries> polys;
};

/**
 * Adomian polynomials of `term` for the components u_0..u_n.
 *
 * Works by grading rather than differentiating in the formal parameter:
 * U = sum p^k u_k and U' = sum p^k u_k' are multiplied factor by factor,
 * keeping grades up to n, so a monomial u^a (u')^b costs a + b - 1 graded
 * convolutions. A_k only ever sees u_0..u_k.
 */
AdomianSequence adomian_sequence(std::span<const PowerSeries> components, const NonlinearTerm& term,
                                 bool apply_x_weight = true);

} // namespace adm
