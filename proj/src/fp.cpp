#include "cluster/fp.hpp"

#include <stdexcept>

namespace cluster::fp {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("expected a prime modulus");
    if (p > 100) throw std::invalid_argument("prime fields are capped at p <= 100");
}

long long normalize(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

long long add(long long a, long long b, long long p) { return normalize(a + b, p); }
long long sub(long long a, long long b, long long p) { return normalize(a - b, p); }
long long mul(long long a, long long b, long long p) { return normalize(normalize(a, p) * normalize(b, p), p); }

long long pow(long long a, long long e, long long p) {
    if (e < 0) throw std::invalid_argument("fp::pow: negative exponent, use inv first");
    long long r = 1 % p;
    a = normalize(a, p);
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

long long inv(long long a, long long p) {
    a = normalize(a, p);
    if (a == 0) throw std::domain_error("fp::inv: zero is not invertible");
    return pow(a, p - 2, p);
}

long long neg(long long a, long long p) { return normalize(-a, p); }

std::optional<long long> square_root(long long a, long long p) {
    a = normalize(a, p);
    for (long long r = 0; r < p; ++r)
        if (r * r % p == a) return r;
    return std::nullopt;
}

std::optional<long long> cube_root(long long a, long long p) {
    a = normalize(a, p);
    for (long long r = 0; r < p; ++r)
        if (r * r % p * r % p == a) return r;
    return std::nullopt;
}

} // namespace cluster::fp
