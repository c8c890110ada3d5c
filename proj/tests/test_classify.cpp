#include "doctest.h"
#include <stdexcept>

#include "cluster/classify.hpp"

using namespace cluster;

namespace {

std::vector<std::vector<long long>> torus(std::size_t n, long long p) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(n, 1);
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            if (++cur[i - 1] < p) break;
            cur[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("type A fibers") {
    SingularityReport r = classify(DynkinType::A, 1, 3, {2});
    CHECK(r.singular);
    CHECK(r.verdict == "two-lines");
    CHECK(classify(DynkinType::A, 1, 3, {1}).verdict == "regular");
    CHECK(classify(DynkinType::A, 1, 2, {1}).verdict == "two-lines");

    for (const auto& eta : torus(2, 3)) CHECK(!classify(DynkinType::A, 2, 3, eta).singular);
    for (const auto& eta : torus(4, 3)) CHECK(!classify(DynkinType::A, 4, 3, eta).singular);

    int singular = 0;
    for (const auto& eta : torus(3, 5)) {
        SingularityReport s = classify(DynkinType::A, 3, 5, eta);
        if (!s.singular) continue;
        ++singular;
        CHECK(s.verdict == "isolated-a1");
        REQUIRE(s.point.has_value());
        CHECK(*s.point == std::vector<long long>{0, 0, 0, 0});
        CHECK(s.hessian.has_value());
    }
    CHECK(singular == 16);
}

TEST_CASE("type B fibers") {
    int count3 = 0, count5 = 0;
    for (const auto& eta : torus(3, 3))
        if (classify(DynkinType::B, 3, 3, eta).singular) ++count3;
    for (const auto& eta : torus(3, 5))
        if (classify(DynkinType::B, 3, 5, eta).singular) ++count5;
    CHECK(count3 == 4);
    CHECK(count5 == 16);

    SingularityReport b2 = classify(DynkinType::B, 2, 2, {1, 1});
    CHECK(b2.singular);
    CHECK(b2.verdict == "isolated-a1");
    CHECK(b2.stratum == "b-even-char2");
    REQUIRE(b2.point.has_value());
    CHECK(*b2.point == std::vector<long long>{0, 1, 1, 0});
    CHECK(!b2.hessian.has_value());

    SingularityReport b4 = classify(DynkinType::B, 4, 2, {1, 1, 1, 1});
    REQUIRE(b4.point.has_value());
    CHECK(*b4.point == std::vector<long long>{0, 0, 0, 1, 1, 0});

    for (const auto& eta : torus(2, 5)) CHECK(!classify(DynkinType::B, 2, 5, eta).singular);
}

TEST_CASE("type C fibers") {
    CHECK(!classify(DynkinType::C, 3, 5, {2, 1, 4}).singular);

    long long counts[3] = {0, 0, 0};
    long long primes[3] = {3, 5, 7};
    for (int i = 0; i < 3; ++i)
        for (const auto& eta : torus(3, primes[i]))
            if (classify(DynkinType::C, 3, primes[i], eta).singular) ++counts[i];
    CHECK(counts[0] == 4);
    CHECK(counts[1] == 16);
    CHECK(counts[2] == 36);

    SingularityReport c3 = classify(DynkinType::C, 3, 2, {1, 1, 1});
    CHECK(c3.singular);
    CHECK(c3.verdict == "c-char2-b");
    CHECK(c3.stratum == "c-char2-odd");
    REQUIRE(c3.point.has_value());
    CHECK(*c3.point == std::vector<long long>{0, 0, 0, 0});
    REQUIRE(c3.locus.size() == 1);
    CHECK(c3.locus[0].equations.size() == 3);

    SingularityReport c4 = classify(DynkinType::C, 4, 2, {1, 1, 1, 1});
    CHECK(c4.singular);
    CHECK(c4.verdict == "c-char2-c");
    CHECK(c4.stratum == "c-char2-even");
    CHECK(!c4.point.has_value());

    for (const auto& eta : torus(4, 3)) CHECK(!classify(DynkinType::C, 4, 3, eta).singular);
}

TEST_CASE("type D strata") {
    SingularityReport axes = classify(DynkinType::D, 4, 3, {1, 1, 1, 1});
    CHECK(axes.singular);
    CHECK(axes.verdict == "d-axes-y0");
    CHECK(axes.stratum == "d-axes-y0");
    CHECK(axes.locus.size() == 5);
    REQUIRE(axes.point.has_value());
    CHECK(*axes.point == std::vector<long long>(6, 0));

    SingularityReport hyp = classify(DynkinType::D, 4, 3, {1, 1, 1, 2});
    CHECK(hyp.singular);
    CHECK(hyp.verdict == "d-s1");
    CHECK(hyp.stratum == "d-s1");
    CHECK(hyp.locus.size() == 1);

    CHECK(classify(DynkinType::D, 4, 5, {2, 1, 3, 1}).stratum == "d-s1");

    SingularityReport y0 = classify(DynkinType::D, 5, 3, {1, 1, 1, 1, 1});
    CHECK(y0.singular);
    CHECK(y0.verdict == "d-y0");
    CHECK(!classify(DynkinType::D, 5, 3, {1, 1, 1, 1, 2}).singular);
}

TEST_CASE("type E fibers") {
    SingularityReport e7 = classify(DynkinType::E, 7, 2, {1, 1, 1, 1, 1, 1, 1});
    CHECK(e7.singular);
    CHECK(e7.verdict == "e-surface");
    CHECK(e7.locus.size() == 1);

    SingularityReport e9 = classify(DynkinType::E, 9, 3, std::vector<long long>(9, 1));
    CHECK(e9.singular);
    CHECK(e9.verdict == "e-surface");

    for (const auto& eta : torus(6, 3)) CHECK(!classify(DynkinType::E, 6, 3, eta).singular);
}

TEST_CASE("F4 is always smooth") {
    for (long long p : {2, 3, 5})
        for (const auto& eta : torus(4, p)) {
            SingularityReport r = classify(DynkinType::F4, 4, p, eta);
            CHECK(!r.singular);
            CHECK(r.verdict == "regular");
        }
}

TEST_CASE("G2 and the cube identity") {
    SingularityReport g1 = classify(DynkinType::G2, 2, 3, {1, 1});
    CHECK(g1.singular);
    CHECK(g1.verdict == "isolated-a2");
    REQUIRE(g1.point.has_value());
    CHECK(*g1.point == std::vector<long long>{2, 0, 2});
    REQUIRE(g1.witness.has_value());
    CHECK(!g1.hessian.has_value());
    for (const auto& [e, c] : g1.witness->difference.terms()) CHECK(c % 3 == 0);

    SingularityReport g2 = classify(DynkinType::G2, 2, 3, {2, 1});
    REQUIRE(g2.point.has_value());
    CHECK(*g2.point == std::vector<long long>{1, 0, 1});
    for (const auto& [e, c] : g2.witness->difference.terms()) CHECK(c % 3 == 0);

    for (long long p : {5, 7})
        for (const auto& eta : torus(2, p))
            CHECK(classify(DynkinType::G2, 2, p, eta).verdict == "regular");
}

TEST_CASE("rank two fibers") {
    SingularityReport r = classify_rank2(2, -2, 2, {1, 1});
    CHECK(r.singular);
    CHECK(r.verdict == "rank2-components");
    REQUIRE(r.locus.size() == 2);
    CHECK(r.locus[0].local_type == "A1");
    CHECK(r.locus[1].local_type == "A1");

    SingularityReport t = classify_rank2(2, -3, 3, {1, 1});
    CHECK(t.singular);
    REQUIRE(t.locus.size() == 1);
    CHECK(t.locus[0].local_type == "A2");

    CHECK(!classify_rank2(2, -2, 3, {1, 1}).singular);
    CHECK(!classify_rank2(1, -1, 2, {1, 1}).singular);
    CHECK(!classify_rank2(3, -3, 2, {1, 1}).singular);
    CHECK(classify_rank2(3, -3, 3, {1, 1}).singular);

    CHECK(classify_rank2(0, 0, 2, {1, 1}).verdict == "four-planes");
    CHECK(classify_rank2(0, 0, 3, {2, 2}).verdict == "four-planes");
    CHECK(classify_rank2(0, 0, 3, {2, 1}).verdict == "two-surfaces");
    CHECK(classify_rank2(0, 0, 3, {1, 2}).verdict == "two-surfaces");
    CHECK(classify_rank2(0, 0, 3, {1, 1}).verdict == "regular");
}

TEST_CASE("strata partition the coefficient torus") {
    struct Entry {
        DynkinType t;
        int n;
    };
    std::vector<Entry> grid = {{DynkinType::A, 1}, {DynkinType::A, 2}, {DynkinType::A, 3},
                               {DynkinType::B, 2}, {DynkinType::B, 3}, {DynkinType::C, 3},
                               {DynkinType::D, 4}, {DynkinType::D, 5}, {DynkinType::F4, 4},
                               {DynkinType::G2, 2}};
    for (long long p : {2, 3, 5})
        for (const auto& e : grid) {
            Stratification s = stratify(e.t, e.n, p);
            for (const auto& eta : torus(static_cast<std::size_t>(e.n), p)) {
                int matched = 0;
                std::string id;
                for (const auto& st : s.strata)
                    if (stratum_matches(st, eta, p)) {
                        ++matched;
                        id = st.id;
                    }
                CHECK(matched == 1);
                SingularityReport r = classify(e.t, e.n, p, eta);
                CHECK(r.stratum == id);
            }
        }
    for (long long p : {2, 3}) {
        struct R2 {
            long long a, b;
        };
        for (R2 ab : {R2{2, -2}, R2{2, -3}, R2{3, -3}, R2{0, 0}}) {
            Stratification s = stratify_rank2(ab.a, ab.b, p);
            for (const auto& eta : torus(2, p)) {
                int matched = 0;
                std::string id;
                for (const auto& st : s.strata)
                    if (stratum_matches(st, eta, p)) {
                        ++matched;
                        id = st.id;
                    }
                CHECK(matched == 1);
                CHECK(classify_rank2(ab.a, ab.b, p, eta).stratum == id);
            }
        }
    }
}

TEST_CASE("stratification labels") {
    CHECK(stratify(DynkinType::A, 3, 5).label == "A3");
    CHECK(stratify(DynkinType::F4, 4, 3).label == "F4");
    CHECK(stratify_rank2(2, -2, 2).label == "rank2(2,-2)");
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(classify(DynkinType::A, 3, 5, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(DynkinType::A, 3, 5, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(DynkinType::A, 3, 4, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(DynkinType::A, 3, 101, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(classify_rank2(1, 1, 3, {1, 1}), std::invalid_argument);
}

} // TEST_SUITE
