#include "doctest.h"
#include <stdexcept>

#include <cstdlib>

#include "cluster/classify.hpp"
#include "cluster/oracle.hpp"
#include "cluster/reduction.hpp"

using namespace cluster;

namespace {

Presentation plain_chart(std::vector<std::string> names, std::vector<MultiPoly> gens) {
    Presentation P;
    for (const auto& nm : names) P.vars.add(nm, false);
    P.gens = std::move(gens);
    P.recompute_fiber_dim();
    return P;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("budget accounting") {
    Budget b(10);
    CHECK_NOTHROW(b.charge(10));
    CHECK(b.used() == 10);
    CHECK_THROWS_AS(b.charge(1), BudgetExceeded);

    setenv("CLUSTER_ORACLE_BUDGET", "123", 1);
    CHECK(Budget::from_env().limit() == 123);
    setenv("CLUSTER_ORACLE_BUDGET", "bogus", 1);
    CHECK(Budget::from_env().limit() == Budget().limit());
    unsetenv("CLUSTER_ORACLE_BUDGET");
    CHECK(Budget::from_env().limit() == Budget().limit());

    Budget tiny(10);
    CHECK_THROWS_AS(
        enumerate_fiber(reduced_presentation(DynkinType::A, 2), 3, {1, 1}, tiny),
        BudgetExceeded);
}

TEST_CASE("matrix rank") {
    CHECK(matrix_rank_mod({{1, 0}, {0, 1}}, 5) == 2);
    CHECK(matrix_rank_mod({{0, 0}, {0, 0}}, 5) == 0);
    CHECK(matrix_rank_mod({{2, 4}, {1, 2}}, 5) == 1);
    CHECK(matrix_rank_mod({{1, 1}, {1, 1}, {0, 1}}, 2) == 2);
    CHECK(matrix_rank_mod({{6, 2}, {3, 1}}, 3) == 1);
}

TEST_CASE("hessian ranks") {
    auto v = [](std::size_t k) { return MultiPoly::variable(3, k); };
    Presentation cone = plain_chart({"x", "y", "z"}, {v(0) * v(1) - v(2).pow(2)});
    CHECK(hessian_rank_at(cone, 0, {0, 1, 2}, {0, 0, 0}, 5) == 3);

    auto w = [](std::size_t k) { return MultiPoly::variable(4, k); };
    MultiPoly p4 = w(0) * w(1) * w(2) * w(3) - w(0) * w(1) - w(0) * w(3) - w(2) * w(3);
    Presentation quart = plain_chart({"z1", "z2", "z3", "z4"}, {p4});
    CHECK(hessian_rank_at(quart, 0, {0, 1, 2, 3}, {0, 0, 0, 0}, 5) == 4);

    Presentation cusp = plain_chart({"x", "y", "z"}, {v(0).pow(3) + v(1) * v(2)});
    CHECK(hessian_rank_at(cusp, 0, {0, 1, 2}, {0, 0, 0}, 5) == 2);

    CHECK_THROWS_AS(hessian_rank_at(cone, 0, {0, 1, 2}, {0, 0, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(hessian_rank_at(cone, 0, {0, 1, 2}, {0, 0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(hessian_rank_at(cone, 7, {0}, {0, 0, 0}, 5), std::invalid_argument);
}

TEST_CASE("fiber enumeration") {
    Budget b;
    auto pts = enumerate_fiber(reduced_presentation(DynkinType::A, 1), 3, {2}, b);
    std::vector<std::vector<long long>> want = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
    CHECK(pts == want);
    CHECK(b.used() == 9);
}

TEST_CASE("frozen singular point sets") {
    Budget b;
    CHECK(singular_points(reduced_presentation(DynkinType::C, 3), 2, {1, 1, 1}, b) ==
          std::vector<std::vector<long long>>{{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}});

    CHECK(singular_points(reduced_presentation(DynkinType::C, 4), 2, {1, 1, 1, 1}, b) ==
          std::vector<std::vector<long long>>{{0, 0, 1, 1, 0},
                                              {0, 1, 1, 1, 0},
                                              {1, 0, 0, 1, 0},
                                              {1, 1, 0, 0, 0},
                                              {1, 1, 1, 0, 0}});

    auto e7 = singular_points(reduced_presentation(DynkinType::E, 7),
                              2, std::vector<long long>(7, 1), b);
    CHECK(e7 == std::vector<std::vector<long long>>{{0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                                                    {0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
                                                    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                                    {0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
                                                    {0, 0, 0, 0, 0, 1, 1, 0, 0, 1}});

    auto d4 = singular_points(reduced_presentation(DynkinType::D, 4), 3, {1, 1, 1, 1}, b);
    CHECK(d4.size() == 13);
    CHECK(d4.front() == std::vector<long long>(6, 0));

    CHECK(singular_points(reduced_presentation(DynkinType::G2, 2), 3, {1, 1}, b) ==
          std::vector<std::vector<long long>>{{2, 0, 2}});
    CHECK(singular_points(reduced_presentation(DynkinType::G2, 2), 3, {2, 1}, b) ==
          std::vector<std::vector<long long>>{{1, 0, 1}});

    CHECK(singular_points(reduced_presentation(DynkinType::B, 2), 2, {1, 1}, b) ==
          std::vector<std::vector<long long>>{{0, 1, 1, 0}});

    CHECK(singular_points(reduced_presentation_rank2(2, -2), 2, {1, 1}, b) ==
          std::vector<std::vector<long long>>{{0, 1, 0, 1}, {1, 0, 1, 0}});

    CHECK(singular_points(reduced_presentation(DynkinType::A, 3), 3, {1, 1, 1}, b) ==
          std::vector<std::vector<long long>>{{0, 0, 0, 0}});
    CHECK(singular_points(reduced_presentation(DynkinType::A, 3), 3, {2, 1, 1}, b).empty());
}

TEST_CASE("a certified quadratic point") {
    SingularityReport r = classify(DynkinType::B, 3, 3, {1, 1, 1});
    REQUIRE(r.singular);
    REQUIRE(r.hessian.has_value());
    CHECK(hessian_plan_holds(r.chart, *r.hessian, 3));
}

TEST_CASE("classifier and oracle agree on small sweeps") {
    Budget b;
    DiffReport c3 = diff_against_classifier(DynkinType::C, 3, 3, b);
    CHECK(c3.ok());
    CHECK(c3.eta_checked == 8);
    CHECK(c3.singular_eta == 4);
    CHECK(c3.points_checked == 8 * 81);

    CHECK(diff_against_classifier(DynkinType::A, 1, 2, b).ok());
    CHECK(diff_against_classifier(DynkinType::B, 2, 2, b).ok());
    CHECK(diff_against_classifier(DynkinType::G2, 2, 3, b).ok());
    CHECK(diff_rank2_against_classifier(2, -2, 2, b).ok());
    CHECK(diff_rank2_against_classifier(0, 0, 3, b).ok());

    Budget tiny(5);
    CHECK_THROWS_AS(diff_against_classifier(DynkinType::A, 1, 3, tiny), BudgetExceeded);
}

} // TEST_SUITE
