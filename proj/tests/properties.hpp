#pragma once

// Randomized property checks shared by the unit suites and the acceptance run.

#include <adm/adomian.hpp>
#include <adm/power_series.hpp>

#include "oracle/adomian_oracle.hpp"
#include "support.hpp"

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace adm::test {

struct PropertyOutcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst = 0.0;
    std::string first_failure;

    bool ok() const { return failures == 0; }

    void record(bool pass, double err, const std::string& what)
    {
        worst = std::max(worst, err);
        if (!pass) {
            if (failures == 0) {
                first_failure = what;
            }
            ++failures;
        }
    }
};

/// Ring laws, integrate/differentiate adjointness and the 7-fold zero prefix.
inline PropertyOutcome series_properties(std::size_t cases, std::uint64_t seed, std::size_t m = 30)
{
    constexpr double tol = 1e-12;
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    for (std::size_t c = 0; c < cases; ++c) {
        ++out.cases;
        const auto p = random_series(rng, m);
        const auto q = random_series(rng, m);
        const auto r = random_series(rng, m);

        double e = relative_difference(add(p, q), add(q, p));
        out.record(e == 0.0, e, "add commutativity");
        e = relative_difference(add(add(p, q), r), add(p, add(q, r)));
        out.record(e <= tol, e, "add associativity");
        e = relative_difference(mul(p, q), mul(q, p));
        out.record(e <= tol, e, "mul commutativity");
        e = relative_difference(mul(mul(p, q), r), mul(p, mul(q, r)));
        out.record(e <= tol, e, "mul associativity");
        e = relative_difference(mul(p, add(q, r)), add(mul(p, q), mul(p, r)));
        out.record(e <= tol, e, "distributivity");

        const auto back = differentiate(integrate(p, 1));
        double worst = 0.0;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            worst = std::max(worst, std::abs(back[j] - p[j]));
        }
        out.record(worst <= tol && back[m - 1] == 0.0, worst, "differentiate(integrate(p, 1))");

        const auto seven = integrate(p, 7);
        const bool zero_prefix = std::all_of(seven.coefficients().begin(),
                                             seven.coefficients().begin() + 7,
                                             [](double v) { return v == 0.0; });
        out.record(zero_prefix, 0.0, "integrate(p, 7) zero prefix");

        e = relative_difference(integrate(integrate(p, 3), 4), seven);
        out.record(e <= tol, e, "integrate composition 3 + 4 = 7");
    }
    return out;
}

/// adomian_sequence against the generating-function oracle.
inline PropertyOutcome adomian_oracle_equivalence(const NonlinearTerm& term, std::size_t sets,
                                                  std::size_t max_n, std::uint64_t seed)
{
    constexpr double tol = 1e-12;
    const std::size_t m = term.x_weight().truncation_order();
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    for (std::size_t s = 0; s < sets; ++s) {
        ++out.cases;
        const auto comps = random_components(rng, max_n + 1, m);
        const auto fast = adomian_sequence(comps, term, true);
        const auto ref = oracle::oracle_adomian(comps, term, max_n, true);
        for (std::size_t n = 0; n <= max_n; ++n) {
            const double e = max_abs_difference(fast.polys[n], ref[n]);
            out.record(e <= tol, e, "A_" + std::to_string(n));
        }
    }
    return out;
}

/// A_0..A_2 for u^2 equal u0^2, 2 u0 u1, 2 u0 u2 + u1^2 built from series operations.
inline PropertyOutcome square_closed_form(std::size_t sets, std::uint64_t seed, std::size_t m = 30)
{
    std::mt19937_64 rng(seed);
    const NonlinearTerm square({{1.0, 2, 0}}, monomial(0, m));
    PropertyOutcome out;
    for (std::size_t s = 0; s < sets; ++s) {
        ++out.cases;
        const auto u = random_components(rng, 3, m);
        const auto seq = adomian_sequence(u, square, false);
        const PowerSeries a0 = mul(u[0], u[0]);
        const PowerSeries a1 = scale(mul(u[0], u[1]), 2.0);
        const PowerSeries a2 = add(scale(mul(u[0], u[2]), 2.0), mul(u[1], u[1]));
        double e = max_abs_difference(seq.polys[0], a0);
        out.record(e == 0.0, e, "A_0 = u0^2");
        e = max_abs_difference(seq.polys[1], a1);
        out.record(e <= 1e-15, e, "A_1 = 2 u0 u1");
        e = max_abs_difference(seq.polys[2], a2);
        out.record(e <= 1e-15, e, "A_2 = 2 u0 u2 + u1^2");
    }
    return out;
}

} // namespace adm::test
