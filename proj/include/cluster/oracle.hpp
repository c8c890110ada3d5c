#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster/classify.hpp"
#include "cluster/presentation.hpp"
#include "cluster/seed.hpp"

namespace cluster {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counts points evaluated during brute-force sweeps; throws once the limit
// would be passed.
class Budget {
  public:
    explicit Budget(unsigned long long limit = 100000000ull) : limit_(limit) {}
    static Budget from_env(); // reads CLUSTER_ORACLE_BUDGET when set
    void charge(unsigned long long units) {
        if (used_ + units > limit_)
            throw BudgetExceeded("oracle budget of " + std::to_string(limit_) +
                                 " points exceeded");
        used_ += units;
    }
    unsigned long long used() const { return used_; }
    unsigned long long limit() const { return limit_; }

  private:
    unsigned long long limit_;
    unsigned long long used_ = 0;
};

// All rational points of the fiber over eta: assignments of F_p values to the
// plain variables (registry order) killing every generator.
std::vector<std::vector<long long>> enumerate_fiber(const Presentation& P, long long p,
                                                    const std::vector<long long>& eta,
                                                    Budget& budget);

// Fiber points where the Jacobian of the generators in the plain variables
// drops below full rank.
std::vector<std::vector<long long>> singular_points(const Presentation& P, long long p,
                                                    const std::vector<long long>& eta,
                                                    Budget& budget);

std::size_t matrix_rank_mod(std::vector<std::vector<long long>> M, long long p);

// Rank of the Hessian of one generator in the chosen variables at a full-slot
// point.  Refuses characteristic two.
std::size_t hessian_rank_at(const Presentation& P, std::size_t gen,
                            const std::vector<std::size_t>& vars,
                            const std::vector<long long>& point, long long p);

bool hessian_plan_holds(const Presentation& P, const HessianPlan& plan, long long p);

struct DiffEntry {
    std::vector<long long> eta;
    std::string kind; // "singular-not-in-locus", "locus-not-singular", "declared-point-not-singular"
    std::vector<long long> point;
};

struct DiffReport {
    std::string label;
    long long p = 0;
    std::size_t eta_checked = 0;
    std::size_t singular_eta = 0;
    unsigned long long points_checked = 0;
    std::vector<DiffEntry> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Exhaustive agreement check between classify() and the Jacobian criterion
// over every eta in the coefficient torus.
DiffReport diff_against_classifier(DynkinType t, int n, long long p, Budget& budget);
DiffReport diff_rank2_against_classifier(long long a, long long b, long long p, Budget& budget);

} // namespace cluster
