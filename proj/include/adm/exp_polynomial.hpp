#pragma once

#include <adm/power_series.hpp>

#include <cstddef>
#include <vector>

namespace adm {

/// One term poly(x) * e^{rate x}; poly[i] is the coefficient of x^i.
struct ExpPolyTerm {
    std::vector<double> poly;
    double exp_rate = 0.0;

    bool operator==(const ExpPolyTerm&) const = default;
};

/**
 * Closed-form function sum_t poly_t(x) e^{rate_t x}.
 *
 * This is the vocabulary for linear coefficients, sources, nonlinearity
 * weights and exact solutions. Evaluation goes straight through std::exp and
 * never touches the series machinery, so it can serve as an independent
 * baseline for error tables.
 */
class ExpPolynomial {
public:
    ExpPolynomial() = default;
    explicit ExpPolynomial(std::vector<ExpPolyTerm> terms);

    const std::vector<ExpPolyTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    double operator()(double x) const;

    /// Exact closed-form derivative: (p e^{ax})' = (p' + a p) e^{ax}.
    ExpPolynomial derivative() const;
    double derivative(std::size_t order, double x) const;

    /// Maclaurin series assembled from exp_scaled and mul.
    PowerSeries to_series(std::size_t truncation_order) const;

    bool operator==(const ExpPolynomial&) const = default;

private:
    std::vector<ExpPolyTerm> terms_;
};

} // namespace adm
