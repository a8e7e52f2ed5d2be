#include <adm/exp_polynomial.hpp>

#include <doctest.h>

#include <cmath>

using namespace adm;

TEST_CASE("closed-form evaluation")
{
    const ExpPolynomial u({{{1.0, -1.0}, 1.0}});
    CHECK(u(0.5) == doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-15));
    CHECK(ExpPolynomial{}(0.3) == 0.0);

    const ExpPolynomial two({{{2.0, -3.0, 1.0}, -2.0}, {{-8.0, 1.0}, -1.0}});
    const double x = 0.4;
    CHECK(two(x) == doctest::Approx(std::exp(-2 * x) * (2 - 3 * x + x * x)
                                    + std::exp(-x) * (x - 8)).epsilon(1e-15));
}

TEST_CASE("derivative of (1-x)e^x is -(n-1+x)e^x")
{
    const ExpPolynomial u({{{1.0, -1.0}, 1.0}});
    for (std::size_t n = 1; n <= 7; ++n) {
        for (double x : {0.0, 0.3, 1.0}) {
            const double expected = -(static_cast<double>(n) - 1.0 + x) * std::exp(x);
            CHECK(u.derivative(n, x) == doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("series of the closed form agrees with direct evaluation")
{
    const ExpPolynomial f({{{0.0, 1.0, -1.0}, 1.0}, {{3.0}, -0.5}});
    const PowerSeries s = f.to_series(30);
    for (double x : {0.0, 0.25, 0.5, 1.0}) {
        CHECK(std::abs(eval(s, x) - f(x)) <= 1e-14);
    }
    CHECK_THROWS_AS(ExpPolynomial({{{0, 1, 2, 3, 4}, 1.0}}).to_series(4), SeriesError);
}
