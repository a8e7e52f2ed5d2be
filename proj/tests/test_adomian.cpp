#include <adm/adomian.hpp>

#include "oracle/adomian_oracle.hpp"
#include "properties.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace adm;

namespace {

constexpr std::size_t M = 16;

NonlinearTerm unweighted(std::vector<Monomial> monos, std::size_t m = M)
{
    return NonlinearTerm(std::move(monos), monomial(0, m));
}

} // namespace

TEST_CASE("term invariants")
{
    CHECK_THROWS_AS(NonlinearTerm({}, monomial(0, M)), std::invalid_argument);
    CHECK_THROWS_AS(NonlinearTerm({{2.0, 0, 0}}, monomial(0, M)), std::invalid_argument);
    CHECK_NOTHROW(NonlinearTerm({{2.0, 0, 1}}, monomial(0, M)));
}

TEST_CASE("u^2 on 1 - x")
{
    const std::vector<PowerSeries> comps{PowerSeries({1.0, -1.0}, M)};
    const auto seq = adomian_sequence(comps, unweighted({{1.0, 2, 0}}));
    REQUIRE(seq.polys.size() == 1);
    CHECK(seq.polys[0] == PowerSeries({1.0, -2.0, 1.0}, M));
}

TEST_CASE("u^2 Adomian polynomials have the textbook closed form")
{
    const auto outcome = test::square_closed_form(50, 3, M);
    CHECK_MESSAGE(outcome.ok(), outcome.first_failure << " worst " << outcome.worst);
}

TEST_CASE("u u' polynomials: A0 = u0 u0', A1 = u0 u1' + u1 u0'")
{
    std::mt19937_64 rng(5);
    const auto u = test::random_components(rng, 2, M);
    const auto seq = adomian_sequence(u, unweighted({{1.0, 1, 1}}));
    const auto d0 = differentiate(u[0]);
    const auto d1 = differentiate(u[1]);
    CHECK(max_abs_difference(seq.polys[0], mul(u[0], d0)) <= 1e-15);
    CHECK(max_abs_difference(seq.polys[1], add(mul(u[0], d1), mul(u[1], d0))) <= 1e-15);
}

TEST_CASE("agrees with the generating-function oracle")
{
    SUBCASE("u^2")
    {
        const auto r = test::adomian_oracle_equivalence(unweighted({{1.0, 2, 0}}), 20, 5, 21);
        CHECK_MESSAGE(r.ok(), r.first_failure << " worst " << r.worst);
    }
    SUBCASE("u u'")
    {
        const auto r = test::adomian_oracle_equivalence(unweighted({{1.0, 1, 1}}), 20, 5, 22);
        CHECK_MESSAGE(r.ok(), r.first_failure << " worst " << r.worst);
    }
    SUBCASE("weighted mixture -e^x (u^2 - 0.5 u'^3)")
    {
        const NonlinearTerm term({{1.0, 2, 0}, {-0.5, 0, 3}}, scale(exp_scaled(1.0, M), -1.0));
        const auto r = test::adomian_oracle_equivalence(term, 10, 4, 23);
        CHECK_MESSAGE(r.ok(), r.first_failure << " worst " << r.worst);
    }
}

TEST_CASE("zeroth polynomial is N(u0)")
{
    std::mt19937_64 rng(9);
    const NonlinearTerm term({{0.75, 3, 2}, {2.0, 1, 0}}, exp_scaled(-1.0, M));
    const auto u = test::random_components(rng, 1, M);
    const auto seq = adomian_sequence(u, term);
    CHECK(max_abs_difference(seq.polys[0], term.apply(u[0])) <= 1e-14);
}

TEST_CASE("triangularity: A_0..A_k ignore u_{k+1}")
{
    std::mt19937_64 rng(13);
    const auto term = unweighted({{1.0, 3, 1}});
    auto u = test::random_components(rng, 5, M);
    const auto before = adomian_sequence(u, term);
    u[3] = test::random_series(rng, M);
    const auto after = adomian_sequence(u, term);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(before.polys[k] == after.polys[k]);
    }
    CHECK(before.polys[3] != after.polys[3]);
}

TEST_CASE("consistency sum: sum A_k is the grade <= n part of N(sum u_k)")
{
    std::mt19937_64 rng(17);
    const std::size_t n = 3;
    const auto u = test::random_components(rng, n + 1, M);
    const auto term = unweighted({{1.0, 2, 0}});
    const auto seq = adomian_sequence(u, term);

    // N(sum u_k) expands over all pairs (i, j); grades above n are i + j > n.
    PowerSeries sum(M);
    for (const auto& c : u) {
        sum = add(sum, c);
    }
    PowerSeries high(M);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (i + j > n) {
                high = add(high, mul(u[i], u[j]));
            }
        }
    }
    const PowerSeries low = subtract(mul(sum, sum), high);
    PowerSeries total(M);
    for (const auto& a : seq.polys) {
        total = add(total, a);
    }
    CHECK(test::relative_difference(total, low) <= 1e-13);
}

TEST_CASE("linear in the term")
{
    std::mt19937_64 rng(19);
    const auto u = test::random_components(rng, 4, M);
    const auto w = exp_scaled(0.5, M);
    const auto a = adomian_sequence(u, NonlinearTerm({{1.0, 2, 0}}, w));
    const auto b = adomian_sequence(u, NonlinearTerm({{1.0, 1, 1}}, w));
    const auto both = adomian_sequence(u, NonlinearTerm({{3.0, 2, 0}, {-2.0, 1, 1}}, w));
    for (std::size_t k = 0; k < 4; ++k) {
        const auto expected = add(scale(a.polys[k], 3.0), scale(b.polys[k], -2.0));
        CHECK(test::relative_difference(both.polys[k], expected) <= 1e-13);
    }
}

TEST_CASE("x weight is folded in on request")
{
    std::mt19937_64 rng(23);
    const auto u = test::random_components(rng, 3, M);
    const auto w = scale(exp_scaled(1.0, M), -1.0);
    const NonlinearTerm term({{1.0, 2, 0}}, w);
    const auto bare = adomian_sequence(u, term, false);
    const auto weighted = adomian_sequence(u, term, true);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(weighted.polys[k] == mul(bare.polys[k], w));
    }
}

TEST_CASE("order mismatch is rejected")
{
    const std::vector<PowerSeries> comps{PowerSeries(M), PowerSeries(M + 1)};
    CHECK_THROWS_AS(adomian_sequence(comps, unweighted({{1.0, 2, 0}})), SeriesError);
    const std::vector<PowerSeries> ok{PowerSeries(M)};
    CHECK_THROWS_AS(adomian_sequence(ok, unweighted({{1.0, 2, 0}}, M + 2)), SeriesError);
    CHECK_THROWS_AS(adomian_sequence(std::vector<PowerSeries>{}, unweighted({{1.0, 2, 0}})),
                    std::invalid_argument);
}
