#include "doctest.h"
#include <stdexcept>

#include "cluster/fp.hpp"

namespace fp = cluster::fp;

TEST_SUITE("fp") {

TEST_CASE("primality guard") {
    CHECK(fp::is_prime(2));
    CHECK(fp::is_prime(3));
    CHECK(fp::is_prime(97));
    CHECK(!fp::is_prime(1));
    CHECK(!fp::is_prime(0));
    CHECK(!fp::is_prime(91));
    CHECK_NOTHROW(fp::require_prime(7));
    CHECK_THROWS_AS(fp::require_prime(4), std::invalid_argument);
    CHECK_THROWS_AS(fp::require_prime(101), std::invalid_argument);
}

TEST_CASE("ring operations") {
    CHECK(fp::normalize(-3, 5) == 2);
    CHECK(fp::normalize(12, 5) == 2);
    CHECK(fp::add(3, 4, 5) == 2);
    CHECK(fp::sub(1, 4, 5) == 2);
    CHECK(fp::mul(3, 4, 5) == 2);
    CHECK(fp::neg(2, 7) == 5);
    CHECK(fp::pow(2, 10, 7) == 2);
    CHECK(fp::pow(5, 0, 7) == 1);
    CHECK_THROWS_AS(fp::pow(2, -1, 7), std::invalid_argument);
}

TEST_CASE("inverses") {
    for (long long p : {2, 3, 5, 7, 97}) {
        for (long long a = 1; a < p; ++a) CHECK(fp::mul(a, fp::inv(a, p), p) == 1);
        CHECK_THROWS_AS(fp::inv(0, p), std::domain_error);
    }
}

TEST_CASE("square roots agree with brute force") {
    for (long long p : {2, 3, 5, 7, 13, 97}) {
        for (long long a = 0; a < p; ++a) {
            long long smallest = -1;
            for (long long b = 0; b < p; ++b)
                if (b * b % p == a) {
                    smallest = b;
                    break;
                }
            auto r = fp::square_root(a, p);
            if (smallest < 0) {
                CHECK(!r.has_value());
            } else {
                REQUIRE(r.has_value());
                CHECK(*r == smallest);
            }
        }
    }
}

TEST_CASE("unit squares come in half for odd p") {
    for (long long p : {3, 5, 7, 13, 97}) {
        long long squares = 0;
        for (long long a = 1; a < p; ++a)
            if (fp::is_square(a, p)) ++squares;
        CHECK(squares == (p - 1) / 2);
    }
    CHECK(fp::is_square(1, 2));
}

TEST_CASE("cube roots agree with brute force") {
    for (long long p : {2, 3, 5, 7, 13, 31}) {
        for (long long a = 0; a < p; ++a) {
            long long smallest = -1;
            for (long long b = 0; b < p; ++b)
                if (b * b % p * b % p == a) {
                    smallest = b;
                    break;
                }
            auto r = fp::cube_root(a, p);
            if (smallest < 0) {
                CHECK(!r.has_value());
            } else {
                REQUIRE(r.has_value());
                CHECK(*r == smallest);
            }
        }
    }
}

TEST_CASE("cubing is a bijection when p is not 1 mod 3") {
    for (long long p : {2, 3, 5, 11, 17}) {
        for (long long a = 0; a < p; ++a) CHECK(fp::has_cube_root(a, p));
    }
    long long with_root = 0;
    for (long long a = 1; a < 7; ++a)
        if (fp::has_cube_root(a, 7)) ++with_root;
    CHECK(with_root == 2); // cubes among the units of F_7: {1, 6}
}

} // TEST_SUITE
