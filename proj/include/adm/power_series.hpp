#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adm {

/// Raised on truncation-order mismatches and non-finite coefficients.
class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_truncation_order = 30;

/**
 * Truncated Maclaurin series c_0 + c_1 x + ... + c_{M-1} x^{M-1}.
 *
 * Every instance stores exactly M coefficients and all of them are finite.
 * Values are immutable once built: the algebra below returns new series.
 * Binary operations require both operands to carry the same M, and products
 * silently drop every term of degree >= M.
 */
class PowerSeries {
public:
    /// Zero series with M coefficients.
    explicit PowerSeries(std::size_t truncation_order);

    /// Leading coefficients zero-padded to M. Throws if there are more than M.
    PowerSeries(std::span<const double> leading, std::size_t truncation_order);
    PowerSeries(std::initializer_list<double> leading, std::size_t truncation_order);

    std::size_t truncation_order() const noexcept { return coeffs_.size(); }
    std::span<const double> coefficients() const noexcept { return coeffs_; }
    double operator[](std::size_t j) const { return coeffs_.at(j); }

    bool operator==(const PowerSeries&) const = default;

private:
    explicit PowerSeries(std::vector<double> coeffs);

    friend PowerSeries make_series(std::vector<double> coeffs);

    std::vector<double> coeffs_;
};

/// Adopts a full coefficient vector (its length becomes M). Checks finiteness.
PowerSeries make_series(std::vector<double> coeffs);

PowerSeries from_coefficients(std::span<const double> values, std::size_t truncation_order);

/// Series of e^{a x}: c_j = a^j / j!.
PowerSeries exp_scaled(double a, std::size_t truncation_order);

/// Series of x^degree (zero series when degree >= M).
PowerSeries monomial(std::size_t degree, std::size_t truncation_order);

PowerSeries add(const PowerSeries& p, const PowerSeries& q);
PowerSeries subtract(const PowerSeries& p, const PowerSeries& q);
PowerSeries scale(const PowerSeries& p, double s);

/// Truncated Cauchy product.
PowerSeries mul(const PowerSeries& p, const PowerSeries& q);

/// Term-by-term derivative; the top coefficient becomes 0.
PowerSeries differentiate(const PowerSeries& p);

/// k-fold antiderivative from 0 with zero integration constants.
PowerSeries integrate(const PowerSeries& p, std::size_t k);

double eval(const PowerSeries& p, double x);
double eval_derivative(const PowerSeries& p, std::size_t j, double x);

inline PowerSeries operator+(const PowerSeries& p, const PowerSeries& q) { return add(p, q); }
inline PowerSeries operator-(const PowerSeries& p, const PowerSeries& q) { return subtract(p, q); }
inline PowerSeries operator*(const PowerSeries& p, const PowerSeries& q) { return mul(p, q); }
inline PowerSeries operator*(double s, const PowerSeries& p) { return scale(p, s); }

/// Largest coefficientwise absolute difference. Orders must match.
double max_abs_difference(const PowerSeries& p, const PowerSeries& q);

std::string to_string(const PowerSeries& p);

} // namespace adm
