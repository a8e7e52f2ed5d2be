#include <adm/power_series.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace adm {

namespace {

std::size_t require_positive_order(std::size_t m)
{
    if (m == 0) {
        throw SeriesError("truncation order must be positive");
    }
    return m;
}

void require_same_order(const PowerSeries& p, const PowerSeries& q, const char* op)
{
    if (p.truncation_order() != q.truncation_order()) {
        std::ostringstream msg;
        msg << op << ": truncation order mismatch (" << p.truncation_order() << " vs "
            << q.truncation_order() << ")";
        throw SeriesError(msg.str());
    }
}

void require_finite(const std::vector<double>& c)
{
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!std::isfinite(c[j])) {
            throw SeriesError("non-finite coefficient at x^" + std::to_string(j));
        }
    }
}

} // namespace

PowerSeries::PowerSeries(std::size_t truncation_order)
    : coeffs_(require_positive_order(truncation_order), 0.0)
{
}

PowerSeries::PowerSeries(std::span<const double> leading, std::size_t truncation_order)
    : PowerSeries(truncation_order)
{
    if (leading.size() > truncation_order) {
        throw SeriesError("more leading coefficients (" + std::to_string(leading.size())
                          + ") than truncation order " + std::to_string(truncation_order));
    }
    std::copy(leading.begin(), leading.end(), coeffs_.begin());
    require_finite(coeffs_);
}

PowerSeries::PowerSeries(std::initializer_list<double> leading, std::size_t truncation_order)
    : PowerSeries(std::span<const double>(leading.begin(), leading.size()), truncation_order)
{
}

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    require_positive_order(coeffs_.size());
    require_finite(coeffs_);
}

PowerSeries make_series(std::vector<double> coeffs)
{
    return PowerSeries(std::move(coeffs));
}

PowerSeries from_coefficients(std::span<const double> values, std::size_t truncation_order)
{
    return PowerSeries(values, truncation_order);
}

PowerSeries exp_scaled(double a, std::size_t truncation_order)
{
    require_positive_order(truncation_order);
    std::vector<double> c(truncation_order);
    c[0] = 1.0;
    for (std::size_t j = 1; j < truncation_order; ++j) {
        c[j] = c[j - 1] * a / static_cast<double>(j);
    }
    return make_series(std::move(c));
}

PowerSeries monomial(std::size_t degree, std::size_t truncation_order)
{
    std::vector<double> c(truncation_order, 0.0);
    if (degree < truncation_order) {
        c[degree] = 1.0;
    }
    return make_series(std::move(c));
}

PowerSeries add(const PowerSeries& p, const PowerSeries& q)
{
    require_same_order(p, q, "add");
    std::vector<double> c(p.truncation_order());
    for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = p[j] + q[j];
    }
    return make_series(std::move(c));
}

PowerSeries subtract(const PowerSeries& p, const PowerSeries& q)
{
    require_same_order(p, q, "subtract");
    std::vector<double> c(p.truncation_order());
    for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = p[j] - q[j];
    }
    return make_series(std::move(c));
}

PowerSeries scale(const PowerSeries& p, double s)
{
    std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
    for (auto& v : c) {
        v *= s;
    }
    return make_series(std::move(c));
}

PowerSeries mul(const PowerSeries& p, const PowerSeries& q)
{
    require_same_order(p, q, "mul");
    const auto a = p.coefficients();
    const auto b = q.coefficients();
    const std::size_t m = a.size();
    std::vector<double> c(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0.0) {
            continue;
        }
        for (std::size_t j = 0; i + j < m; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return make_series(std::move(c));
}

PowerSeries differentiate(const PowerSeries& p)
{
    const std::size_t m = p.truncation_order();
    std::vector<double> c(m, 0.0);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        c[j] = static_cast<double>(j + 1) * p[j + 1];
    }
    return make_series(std::move(c));
}

PowerSeries integrate(const PowerSeries& p, std::size_t k)
{
    if (k == 0) {
        throw SeriesError("integrate: fold count must be positive");
    }
    const std::size_t m = p.truncation_order();
    std::vector<double> c(m, 0.0);
    for (std::size_t j = 0; j + k < m; ++j) {
        // j! / (j+k)! = 1 / ((j+1)(j+2)...(j+k))
        double factor = 1.0;
        for (std::size_t i = 1; i <= k; ++i) {
            factor /= static_cast<double>(j + i);
        }
        c[j + k] = p[j] * factor;
    }
    return make_series(std::move(c));
}

double eval(const PowerSeries& p, double x)
{
    const auto c = p.coefficients();
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double eval_derivative(const PowerSeries& p, std::size_t j, double x)
{
    PowerSeries d = p;
    for (std::size_t i = 0; i < j; ++i) {
        d = differentiate(d);
    }
    return eval(d, x);
}

double max_abs_difference(const PowerSeries& p, const PowerSeries& q)
{
    require_same_order(p, q, "max_abs_difference");
    double worst = 0.0;
    for (std::size_t j = 0; j < p.truncation_order(); ++j) {
        worst = std::max(worst, std::abs(p[j] - q[j]));
    }
    return worst;
}

std::string to_string(const PowerSeries& p)
{
    std::ostringstream os;
    os.precision(17);
    os << '[';
    for (std::size_t j = 0; j < p.truncation_order(); ++j) {
        if (j != 0) {
            os << ", ";
        }
        os << p[j];
    }
    os << ']';
    return os.str();
}

} // namespace adm
