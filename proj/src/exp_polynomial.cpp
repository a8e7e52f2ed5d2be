#include <adm/exp_polynomial.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace adm {

ExpPolynomial::ExpPolynomial(std::vector<ExpPolyTerm> terms) : terms_(std::move(terms))
{
    for (const auto& t : terms_) {
        if (!std::isfinite(t.exp_rate)) {
            throw SeriesError("non-finite exponential rate");
        }
        for (double c : t.poly) {
            if (!std::isfinite(c)) {
                throw SeriesError("non-finite polynomial coefficient");
            }
        }
    }
}

double ExpPolynomial::operator()(double x) const
{
    double total = 0.0;
    for (const auto& t : terms_) {
        double p = 0.0;
        for (auto it = t.poly.rbegin(); it != t.poly.rend(); ++it) {
            p = p * x + *it;
        }
        total += p * std::exp(t.exp_rate * x);
    }
    return total;
}

ExpPolynomial ExpPolynomial::derivative() const
{
    std::vector<ExpPolyTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        ExpPolyTerm d{std::vector<double>(t.poly.size(), 0.0), t.exp_rate};
        for (std::size_t i = 0; i < t.poly.size(); ++i) {
            d.poly[i] += t.exp_rate * t.poly[i];
            if (i + 1 < t.poly.size()) {
                d.poly[i] += static_cast<double>(i + 1) * t.poly[i + 1];
            }
        }
        out.push_back(std::move(d));
    }
    return ExpPolynomial(std::move(out));
}

double ExpPolynomial::derivative(std::size_t order, double x) const
{
    ExpPolynomial d = *this;
    for (std::size_t i = 0; i < order; ++i) {
        d = d.derivative();
    }
    return d(x);
}

PowerSeries ExpPolynomial::to_series(std::size_t truncation_order) const
{
    PowerSeries total(truncation_order);
    for (const auto& t : terms_) {
        if (t.poly.size() > truncation_order) {
            throw SeriesError("polynomial degree exceeds truncation order");
        }
        const PowerSeries poly = from_coefficients(t.poly, truncation_order);
        const PowerSeries term =
            t.exp_rate == 0.0 ? poly : mul(poly, exp_scaled(t.exp_rate, truncation_order));
        total = add(total, term);
    }
    return total;
}

} // namespace adm
