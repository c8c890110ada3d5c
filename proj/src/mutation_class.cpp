#include "cluster/mutation_class.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

namespace cluster {

namespace {

std::vector<long long> canonical_key(const ExchangeMatrix& M) {
    const std::size_t n = M.n, m = M.m;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<long long> best;
    std::vector<long long> cur(m * n);
    do {
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t src_row = i < n ? perm[i] : i;
            for (std::size_t j = 0; j < n; ++j)
                cur[i * n + j] = M.b[src_row][perm[j]];
        }
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

MutationClassResult mutation_class_is_finite(const ExchangeMatrix& M, std::size_t budget) {
    MutationClassResult res;
    std::set<std::vector<long long>> seen;
    std::deque<ExchangeMatrix> queue;
    seen.insert(canonical_key(M));
    queue.push_back(M);
    while (!queue.empty()) {
        ExchangeMatrix cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < cur.n; ++k) {
            ExchangeMatrix next = mutate_matrix(cur, k);
            auto key = canonical_key(next);
            if (seen.count(key)) continue;
            if (seen.size() >= budget) {
                res.decided = false;
                res.class_count = seen.size();
                return res;
            }
            seen.insert(std::move(key));
            queue.push_back(std::move(next));
        }
    }
    res.decided = true;
    res.finite = true;
    res.class_count = seen.size();
    return res;
}

} // namespace cluster
