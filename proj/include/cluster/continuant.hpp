#pragma once

#include <cstddef>
#include <vector>

#include "cluster/multipoly.hpp"

namespace cluster {

// Continuant polynomial P_l in the listed ambient slots:
//   P_0 = 1, P_1 = w_1, P_l = P_{l-1}(w_1..w_{l-1}) w_l - P_{l-2}(w_1..w_{l-2}).
// `vars` holds the slots of w_1..w_l inside a registry with `nvars` slots.
MultiPoly continuant(std::size_t nvars, const std::vector<std::size_t>& vars);

// Laurent monomial lambda_k over the coefficient slots c_1..c_len:
//   lambda_0 = 1,
//   lambda_{2s}   = c_2^-1 c_4^-1 ... c_{2s}^-1,
//   lambda_{2s+1} = c_1^-1 c_3^-1 ... c_{2s+1}^-1.
// c_slots[i] is the registry slot of c_{i+1}; k <= c_slots.size().
MultiPoly lambda_term(std::size_t nvars, std::size_t k, const std::vector<std::size_t>& c_slots);

// Same product evaluated in F_p at eta (eta[i] is the value of c_{i+1}).
long long lambda_value(std::size_t k, const std::vector<long long>& eta, long long p);

} // namespace cluster
