#pragma once

#include <adm/power_series.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace adm::test {

/// Random series with coefficients in [-1, 1], damped by 1/(j+1) so products stay tame.
inline PowerSeries random_series(std::mt19937_64& rng, std::size_t m)
{
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<double> c(m);
    for (std::size_t j = 0; j < m; ++j) {
        c[j] = coeff(rng) / static_cast<double>(j + 1);
    }
    return make_series(std::move(c));
}

inline std::vector<PowerSeries> random_components(std::mt19937_64& rng, std::size_t count,
                                                  std::size_t m)
{
    std::vector<PowerSeries> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_series(rng, m));
    }
    return out;
}

/// max_j |p_j - q_j| / max(1, max_j |q_j|)
inline double relative_difference(const PowerSeries& p, const PowerSeries& q)
{
    double scale = 1.0;
    for (double c : q.coefficients()) {
        scale = std::max(scale, std::abs(c));
    }
    return max_abs_difference(p, q) / scale;
}

} // namespace adm::test
