#include "cluster/continuant.hpp"

#include <stdexcept>

#include "cluster/fp.hpp"

namespace cluster {

MultiPoly continuant(std::size_t nvars, const std::vector<std::size_t>& vars) {
    MultiPoly pm2 = MultiPoly::constant(nvars, 1); // P_0
    if (vars.empty()) return pm2;
    MultiPoly pm1 = MultiPoly::variable(nvars, vars[0]); // P_1
    for (std::size_t l = 2; l <= vars.size(); ++l) {
        MultiPoly cur = pm1 * MultiPoly::variable(nvars, vars[l - 1]) - pm2;
        pm2 = std::move(pm1);
        pm1 = std::move(cur);
    }
    return pm1;
}

MultiPoly lambda_term(std::size_t nvars, std::size_t k, const std::vector<std::size_t>& c_slots) {
    if (k > c_slots.size()) throw std::invalid_argument("lambda_term: index exceeds coefficient count");
    MultiPoly r = MultiPoly::constant(nvars, 1);
    for (std::size_t i = (k % 2 == 0) ? 2 : 1; i <= k; i += 2)
        r *= MultiPoly::variable(nvars, c_slots[i - 1], -1);
    return r;
}

long long lambda_value(std::size_t k, const std::vector<long long>& eta, long long p) {
    if (k > eta.size()) throw std::invalid_argument("lambda_value: index exceeds coefficient count");
    long long r = 1 % p;
    for (std::size_t i = (k % 2 == 0) ? 2 : 1; i <= k; i += 2)
        r = fp::mul(r, fp::inv(eta[i - 1], p), p);
    return r;
}

} // namespace cluster
