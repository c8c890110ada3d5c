#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluster/presentation.hpp"
#include "cluster/seed.hpp"

namespace cluster {

// One closed piece of the singular locus, cut out inside the reduced chart.
// Equations live over the full chart registry with coefficient values already
// folded in, so they only involve the plain (non-invertible) variables.
struct LocusComponent {
    std::string name;
    std::vector<MultiPoly> equations;
    std::string local_type; // "A1", "A2", "A{q-1}", or empty
    std::string note;
};

// Recipe for certifying an A1 point: the named generator must have a Hessian
// of full rank in the listed variables at the listed point.  The point covers
// every chart slot (coefficient slots carry the eta values).  Only issued for
// odd characteristic.
struct HessianPlan {
    std::size_t generator = 0;
    std::vector<std::size_t> vars;
    std::vector<long long> point;
    std::size_t expected_rank = 0;
};

// Certificate that the G2 fiber acquires an A2 point in characteristic 3:
// with delta^3 = eta1, the specialized generator equals y*u2 - w2^3 up to
// terms whose integer coefficients are all divisible by p.
struct CubeWitness {
    long long delta = 0;
    MultiPoly u2;
    MultiPoly w2;
    MultiPoly difference;
    std::string statement;
};

// expr is a Laurent polynomial in the coefficient slots; kind is one of
// "vanishes", "nonzero", "is-square", "not-square", "has-cube-root",
// "no-cube-root", applied to expr evaluated at eta.
struct Condition {
    std::string kind;
    MultiPoly expr;
    std::string text;
};

struct StratumDescriptor {
    std::string id;
    std::string verdict;
    bool singular = false;
    std::vector<Condition> conditions; // conjunction
    std::string description;
};

// The strata partition (F_p^x)^n: every eta matches exactly one descriptor.
struct Stratification {
    std::string label;
    long long p = 0;
    VarRegistry coeffs;
    std::vector<StratumDescriptor> strata;
};

struct SingularityReport {
    std::string family; // "A".."G2" or "rank2"
    int n = 0;
    long long a = 0, b = 0; // rank2 exchange entries
    long long p = 0;
    std::vector<long long> eta;
    std::string label;
    Presentation chart;
    bool singular = false;
    std::string verdict;
    std::string stratum;
    std::string detail;
    std::vector<LocusComponent> locus;
    std::optional<std::vector<long long>> point; // plain-slot values, registry order
    std::optional<HessianPlan> hessian;
    std::optional<CubeWitness> witness;
};

bool condition_holds(const Condition& c, const std::vector<long long>& eta, long long p);
bool stratum_matches(const StratumDescriptor& s, const std::vector<long long>& eta, long long p);

Stratification stratify(DynkinType t, int n, long long p);
Stratification stratify_rank2(long long a, long long b, long long p);

SingularityReport classify(DynkinType t, int n, long long p, const std::vector<long long>& eta);
SingularityReport classify_rank2(long long a, long long b, long long p,
                                 const std::vector<long long>& eta);

} // namespace cluster
