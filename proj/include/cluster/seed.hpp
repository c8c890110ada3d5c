#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluster/multipoly.hpp"
#include "cluster/var_registry.hpp"

namespace cluster {

// m x n extended exchange matrix: the top n x n block is the exchange matrix
// proper (mutable part), rows n..m-1 are frozen coefficient rows.
struct ExchangeMatrix {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::vector<long long>> b; // m rows of n entries

    static ExchangeMatrix zero(std::size_t m, std::size_t n);
    bool operator==(const ExchangeMatrix&) const = default;
};

// Mutation in direction k (0-based, k < n), applied to every row.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& M, std::size_t k);

// Skew-symmetrizability of the top n x n block: positive integers d with
// d_i b_ij = -d_j b_ji.  Result is gcd-normalized per connected component.
std::optional<std::vector<long long>> find_skew_symmetrizer(const ExchangeMatrix& M);

// No oriented cycle in the quiver on mutable indices (edge i -> j iff b_ij > 0).
bool is_acyclic(const ExchangeMatrix& M);

enum class DynkinType { A, B, C, D, E, F4, G2 };

std::string type_name(DynkinType t);
DynkinType type_from_name(const std::string& s);

// The fixed bipartite-free chain orientations used throughout: see dynkin_seed.
ExchangeMatrix dynkin_matrix(DynkinType t, int n);
ExchangeMatrix rank2_matrix(long long a, long long b);

struct LabeledSeed {
    ExchangeMatrix mat;
    std::vector<std::string> vars;  // m names, rows n..m-1 are frozen
    std::vector<bool> invertible;   // m flags; mutable vars are never invertible

    VarRegistry registry() const;
    bool operator==(const LabeledSeed&) const = default;
};

LabeledSeed dynkin_seed(DynkinType t, int n);
LabeledSeed rank2_seed(long long a, long long b);

// Append frozen rows I_n with variables c1..cn (invertible).
LabeledSeed with_principal_coefficients(const LabeledSeed& s);
// Append frozen rows I_n, -I_n with variables s1..sn, t1..tn (invertible).
LabeledSeed with_generic_coefficients(const LabeledSeed& s);

struct MutationResult {
    LabeledSeed seed;
    VarRegistry relation_vars; // old vars plus the new one
    MultiPoly relation;        // x_k * x_k' - (positive side) - (negative side)
};

MutationResult mutate_seed(const LabeledSeed& s, std::size_t k);

std::string seed_to_json(const LabeledSeed& s);
LabeledSeed seed_from_json(const std::string& text);

} // namespace cluster
