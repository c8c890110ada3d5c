#pragma once

#include <optional>

namespace cluster::fp {

// Small prime field helpers.  All routines expect a prime p and work with
// representatives in [0, p).  Square / cube-root witnesses are found by
// exhaustive search, which is the point: the primes in scope are tiny.

bool is_prime(long long p);
void require_prime(long long p);

long long normalize(long long a, long long p);
long long add(long long a, long long b, long long p);
long long sub(long long a, long long b, long long p);
long long mul(long long a, long long b, long long p);
long long pow(long long a, long long e, long long p); // e >= 0
long long inv(long long a, long long p);              // throws on 0
long long neg(long long a, long long p);

// Smallest r in [0, p) with r^2 = a, if any.
std::optional<long long> square_root(long long a, long long p);
// Smallest r in [0, p) with r^3 = a, if any.
std::optional<long long> cube_root(long long a, long long p);

inline bool is_square(long long a, long long p) { return square_root(a, p).has_value(); }
inline bool has_cube_root(long long a, long long p) { return cube_root(a, p).has_value(); }

} // namespace cluster::fp
