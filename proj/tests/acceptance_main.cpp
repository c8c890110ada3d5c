// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria sweep the full grids, so run this in a Release build.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cluster/classify.hpp"
#include "cluster/continuant.hpp"
#include "cluster/oracle.hpp"
#include "cluster/reduction.hpp"
#include "cluster/seed.hpp"

using namespace cluster;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream log;
    void fail(const std::string& msg) {
        ok = false;
        log << "    " << msg << "\n";
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

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

// ---------------------------------------------------------------- criterion 1

MultiPoly cont(std::size_t count, std::size_t from = 0) {
    std::vector<std::size_t> v(count);
    std::iota(v.begin(), v.end(), from);
    return continuant(12, v);
}

void criterion_continuants(Outcome& out) {
    auto y = [](std::size_t k) { return MultiPoly::variable(12, k); };

    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t k = 1; k < n; ++k)
            out.expect(cont(n) == cont(k) * cont(n - k, k) - cont(k - 1) * cont(n - k - 1, k + 1),
                       "splitting recursion failed at n=" + std::to_string(n));

    for (std::size_t n = 0; n <= 9; ++n) {
        std::vector<std::size_t> rev(n);
        std::iota(rev.begin(), rev.end(), 0u);
        std::reverse(rev.begin(), rev.end());
        out.expect(continuant(12, rev) == cont(n),
                   "palindrome symmetry failed at n=" + std::to_string(n));
    }

    for (std::size_t n = 1; n <= 9; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            out.expect(cont(n).derivative(k - 1) == cont(k - 1) * cont(n - k, k),
                       "derivative splitting failed at n=" + std::to_string(n));

    for (std::size_t n = 0; n <= 9; ++n) {
        const MultiPoly f = cont(n);
        for (const auto& [e, c] : f.terms())
            out.expect(c == 1 || c == -1, "coefficient outside {-1,0,1}");
    }

    for (std::size_t n = 0; n <= 12; ++n) {
        long long v0 = cont(n).evaluate_mod(std::vector<long long>(12, 0), 97);
        long long want = n % 4 == 0 ? 1 : (n % 4 == 2 ? 96 : 0);
        out.expect(v0 == want, "constant term wrong at n=" + std::to_string(n));
    }

    for (std::size_t n = 0; n <= 12; ++n) {
        MultiPoly low(12);
        const MultiPoly f = cont(n);
        for (const auto& [e, c] : f.terms()) {
            int total = 0;
            for (int x : e) total += x;
            if (total <= 2) low += MultiPoly::monomial(12, e, c);
        }
        MultiPoly want(12);
        if (n % 4 == 0) {
            want += MultiPoly::constant(12, 1);
            for (std::size_t l = 1; 2 * l <= n; ++l)
                for (std::size_t m = l; 2 * m <= n; ++m) want -= y(2 * l - 2) * y(2 * m - 1);
        } else if (n % 4 == 1) {
            for (std::size_t l = 1; 2 * l - 1 <= n; ++l) want += y(2 * l - 2);
        } else if (n % 4 == 2) {
            want -= MultiPoly::constant(12, 1);
            for (std::size_t l = 1; 2 * l <= n; ++l)
                for (std::size_t m = l; 2 * m <= n; ++m) want += y(2 * l - 2) * y(2 * m - 1);
        } else {
            for (std::size_t l = 1; 2 * l - 1 <= n; ++l) want -= y(2 * l - 2);
        }
        out.expect(low == want, "low order closed form failed at n=" + std::to_string(n));
    }
}

// ---------------------------------------------------------------- criterion 2

void criterion_random_seeds(Outcome& out) {
    std::mt19937 rng(20240817u);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = static_cast<std::size_t>(pick(1, 6));
        std::vector<long long> d(n);
        for (auto& x : d) x = pick(1, 3);
        std::size_t frozen = static_cast<std::size_t>(pick(0, 3));
        ExchangeMatrix M = ExchangeMatrix::zero(n + frozen, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                long long u = pick(-2, 2);
                M.b[i][j] = u * d[j];
                M.b[j][i] = -u * d[i];
            }
        for (std::size_t i = n; i < n + frozen; ++i)
            for (std::size_t j = 0; j < n; ++j) M.b[i][j] = pick(-2, 2);

        auto sym = [&](const ExchangeMatrix& X) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (d[i] * X.b[i][j] != -d[j] * X.b[j][i]) return false;
            return true;
        };
        if (!sym(M)) {
            out.fail("random matrix was not skew-symmetrizable (generator bug)");
            return;
        }
        for (std::size_t k = 0; k < n; ++k) {
            ExchangeMatrix once = mutate_matrix(M, k);
            if (!(mutate_matrix(once, k) == M)) {
                out.fail("mutation not an involution, trial " + std::to_string(trial));
                return;
            }
            if (!sym(once)) {
                out.fail("symmetrizer lost under mutation, trial " + std::to_string(trial));
                return;
            }
            if (!find_skew_symmetrizer(once).has_value()) {
                out.fail("mutated matrix not skew-symmetrizable, trial " + std::to_string(trial));
                return;
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 3

void criterion_reductions(Outcome& out) {
    auto run = [&](const ReductionWitness& w) {
        ReductionReport rep = verify_reduction(w);
        if (!rep.ok)
            for (const auto& f : rep.failures) out.fail(w.label + ": " + f);
    };
    auto run_gp = [&](const LabeledSeed& s) {
        ReductionReport rep = verify_reduction(gen_to_prin_witness(s));
        if (!rep.ok)
            for (const auto& f : rep.failures) out.fail(rep.label + ": " + f);
    };
    for (int n = 1; n <= 6; ++n) run(reduction_witness(DynkinType::A, n));
    for (int n = 2; n <= 5; ++n) run(reduction_witness(DynkinType::B, n));
    for (int n = 3; n <= 5; ++n) run(reduction_witness(DynkinType::C, n));
    for (int n = 4; n <= 6; ++n) run(reduction_witness(DynkinType::D, n));
    for (int n = 6; n <= 8; ++n) run(reduction_witness(DynkinType::E, n));
    run(reduction_witness(DynkinType::F4, 4));
    run(reduction_witness(DynkinType::G2, 2));
    run(reduction_witness_rank2(1, -1));
    run(reduction_witness_rank2(2, -1));
    run(reduction_witness_rank2(2, -2));
    run(reduction_witness_rank2(3, -1));

    for (int n = 1; n <= 6; ++n) run_gp(dynkin_seed(DynkinType::A, n));
    for (int n = 2; n <= 5; ++n) run_gp(dynkin_seed(DynkinType::B, n));
    for (int n = 3; n <= 5; ++n) run_gp(dynkin_seed(DynkinType::C, n));
    for (int n = 4; n <= 6; ++n) run_gp(dynkin_seed(DynkinType::D, n));
    for (int n = 6; n <= 8; ++n) run_gp(dynkin_seed(DynkinType::E, n));
    run_gp(dynkin_seed(DynkinType::F4, 4));
    run_gp(dynkin_seed(DynkinType::G2, 2));
    run_gp(rank2_seed(1, -1));
    run_gp(rank2_seed(2, -1));
    run_gp(rank2_seed(2, -2));
    run_gp(rank2_seed(3, -1));
}

// ---------------------------------------------------------------- criterion 4

struct GridEntry {
    DynkinType t;
    int n;
    std::vector<long long> primes;
};

const std::vector<GridEntry>& dynkin_grid() {
    static const std::vector<GridEntry> g = {
        {DynkinType::A, 1, {2, 3, 5}},  {DynkinType::A, 2, {2, 3, 5}},
        {DynkinType::A, 3, {2, 3, 5}},  {DynkinType::A, 4, {2, 3, 5}},
        {DynkinType::B, 2, {2, 3, 5}},  {DynkinType::B, 3, {2, 3, 5}},
        {DynkinType::B, 4, {2, 3, 5}},  {DynkinType::C, 3, {2, 3, 5}},
        {DynkinType::C, 4, {2, 3, 5}},  {DynkinType::D, 4, {2, 3}},
        {DynkinType::D, 5, {2, 3}},     {DynkinType::E, 7, {2}},
        {DynkinType::F4, 4, {2, 3}},    {DynkinType::G2, 2, {3, 5, 7}},
    };
    return g;
}

struct Rank2Entry {
    long long a, b;
};

const std::vector<Rank2Entry>& rank2_grid() {
    static const std::vector<Rank2Entry> g = {{2, -2}, {2, -3}, {3, -3}, {0, 0}};
    return g;
}

void criterion_oracle_agreement(Outcome& out) {
    Budget budget = Budget::from_env();
    try {
        for (const auto& e : dynkin_grid())
            for (long long p : e.primes) {
                DiffReport rep = diff_against_classifier(e.t, e.n, p, budget);
                if (!rep.ok())
                    out.fail(rep.label + " p=" + std::to_string(p) + ": " +
                             std::to_string(rep.mismatches.size()) + " mismatches");
            }
        for (const auto& e : rank2_grid())
            for (long long p : {2, 3}) {
                DiffReport rep = diff_rank2_against_classifier(e.a, e.b, p, budget);
                if (!rep.ok())
                    out.fail(rep.label + " p=" + std::to_string(p) + ": " +
                             std::to_string(rep.mismatches.size()) + " mismatches");
            }
    } catch (const BudgetExceeded& ex) {
        out.fail(std::string("oracle budget exhausted: ") + ex.what());
    }
}

// ---------------------------------------------------------------- criterion 5

std::vector<long long> assemble(const Presentation& P, const std::vector<long long>& plain,
                                const std::vector<long long>& eta) {
    std::vector<long long> full(P.vars.size(), 0);
    auto pl = P.vars.plain_indices();
    auto in = P.vars.invertible_indices();
    for (std::size_t i = 0; i < pl.size(); ++i) full[pl[i]] = plain[i];
    for (std::size_t i = 0; i < in.size(); ++i) full[in[i]] = eta[i];
    return full;
}

bool on_component(const SingularityReport& r, const std::vector<long long>& plain, long long p) {
    std::vector<long long> full = assemble(r.chart, plain, r.eta);
    for (const auto& comp : r.locus) {
        bool member = true;
        for (const auto& eq : comp.equations)
            if (eq.evaluate_mod(full, p) != 0) {
                member = false;
                break;
            }
        if (member) return true;
    }
    return false;
}

void criterion_headlines(Outcome& out) {
    // (a) the odd chain over F_5: sixteen singular coefficient choices, each
    //     an isolated quadratic point at the origin
    {
        Budget b;
        int singular = 0;
        for (const auto& eta : torus(3, 5)) {
            SingularityReport r = classify(DynkinType::A, 3, 5, eta);
            auto pts = singular_points(r.chart, 5, eta, b);
            if (r.singular) {
                ++singular;
                out.expect(r.verdict == "isolated-a1", "A3/F5 wrong verdict");
                out.expect(r.point && *r.point == std::vector<long long>{0, 0, 0, 0},
                           "A3/F5 point is not the origin");
                out.expect(pts == std::vector<std::vector<long long>>{{0, 0, 0, 0}},
                           "A3/F5 oracle disagrees on the singular set");
            } else {
                out.expect(pts.empty(), "A3/F5 oracle found unexpected singularities");
            }
        }
        out.expect(singular == 16, "A3/F5 expected 16 singular coefficient choices, got " +
                                       std::to_string(singular));
    }
    // (b) G2 over F_3: every fiber singular, certified by the symbolic cube
    //     identity rather than a Hessian
    {
        Budget b;
        for (const auto& eta : torus(2, 3)) {
            SingularityReport r = classify(DynkinType::G2, 2, 3, eta);
            out.expect(r.singular && r.verdict == "isolated-a2", "G2/F3 not an isolated cusp");
            out.expect(!r.hessian.has_value(), "G2/F3 should not carry a Hessian plan");
            if (!r.witness) {
                out.fail("G2/F3 missing cube witness");
                continue;
            }
            bool divisible = true;
            for (const auto& [e, c] : r.witness->difference.terms())
                if (c % 3 != 0) divisible = false;
            out.expect(divisible, "G2/F3 cube identity has a coefficient not divisible by 3");
            auto pts = singular_points(r.chart, 3, eta, b);
            out.expect(r.point && pts == std::vector<std::vector<long long>>{*r.point},
                       "G2/F3 oracle point mismatch");
        }
    }
    // (c) D4 over F_3: the six-axes fiber lives on the corrected stratum; the
    //     naive coefficient test admits a counterexample that lands on a
    //     two-point hyperbola instead
    {
        Budget b;
        SingularityReport axes = classify(DynkinType::D, 4, 3, {1, 1, 1, 1});
        out.expect(axes.stratum == "d-axes-y0", "D4/F3 all-ones not on the axes stratum");
        auto pts = singular_points(axes.chart, 3, {1, 1, 1, 1}, b);
        out.expect(pts.size() == 13, "D4/F3 expected 13 singular points");
        for (const auto& q : pts)
            out.expect(on_component(axes, q, 3), "D4/F3 singular point off the declared locus");

        SingularityReport hyp = classify(DynkinType::D, 4, 3, {1, 1, 1, 2});
        out.expect(lambda_value(3, {1, 1, 1, 2}, 3) == 1,
                   "counterexample no longer satisfies the naive test");
        out.expect(hyp.stratum == "d-s1", "D4/F3 counterexample not on the S1 stratum");
        auto pts2 = singular_points(hyp.chart, 3, {1, 1, 1, 2}, b);
        out.expect(pts2 == std::vector<std::vector<long long>>{{0, 0, 1, 1, 0, 0},
                                                               {0, 0, 2, 2, 0, 0}},
                   "D4/F3 counterexample singular set is not the two-point hyperbola");
    }
    // (d) the affine rank-two chart over F_2: two crossing components, each
    //     with a quadratic point
    {
        Budget b;
        SingularityReport r = classify_rank2(2, -2, 2, {1, 1});
        out.expect(r.verdict == "rank2-components", "rank2(2,-2)/F2 wrong verdict");
        out.expect(r.locus.size() == 2, "rank2(2,-2)/F2 expected two components");
        for (const auto& comp : r.locus)
            out.expect(comp.local_type == "A1", "rank2(2,-2)/F2 wrong local type");
        auto pts = singular_points(r.chart, 2, {1, 1}, b);
        out.expect(pts == std::vector<std::vector<long long>>{{0, 1, 0, 1}, {1, 0, 1, 0}},
                   "rank2(2,-2)/F2 oracle points mismatch");
    }
}

// ---------------------------------------------------------------- criterion 6

void criterion_hessians(Outcome& out) {
    int certified = 0;
    for (long long p : {3, 5})
        for (DynkinType t : {DynkinType::A, DynkinType::B, DynkinType::C})
            for (int n : {3, 5}) {
                for (const auto& eta : torus(static_cast<std::size_t>(n), p)) {
                    SingularityReport r = classify(t, n, p, eta);
                    if (!r.hessian) continue;
                    ++certified;
                    if (!hessian_plan_holds(r.chart, *r.hessian, p))
                        out.fail(r.label + " p=" + std::to_string(p) +
                                 ": Hessian plan does not reach full rank");
                }
            }
    out.expect(certified > 0, "no quadratic points were certified");
}

// ---------------------------------------------------------------- criterion 7

void criterion_stratification(Outcome& out) {
    for (const auto& e : dynkin_grid())
        for (long long p : e.primes) {
            Stratification s = stratify(e.t, e.n, p);
            for (const auto& eta : torus(static_cast<std::size_t>(e.n), p)) {
                int matched = 0;
                const StratumDescriptor* hit = nullptr;
                for (const auto& st : s.strata)
                    if (stratum_matches(st, eta, p)) {
                        ++matched;
                        hit = &st;
                    }
                if (matched != 1) {
                    out.fail(s.label + " p=" + std::to_string(p) + ": " +
                             std::to_string(matched) + " strata matched one coefficient choice");
                    continue;
                }
                SingularityReport r = classify(e.t, e.n, p, eta);
                if (r.stratum != hit->id || r.verdict != hit->verdict ||
                    r.singular != hit->singular)
                    out.fail(s.label + " p=" + std::to_string(p) +
                             ": classifier disagrees with stratum " + hit->id);
            }
        }
    for (const auto& e : rank2_grid())
        for (long long p : {2, 3}) {
            Stratification s = stratify_rank2(e.a, e.b, p);
            for (const auto& eta : torus(2, p)) {
                int matched = 0;
                const StratumDescriptor* hit = nullptr;
                for (const auto& st : s.strata)
                    if (stratum_matches(st, eta, p)) {
                        ++matched;
                        hit = &st;
                    }
                if (matched != 1) {
                    out.fail(s.label + " p=" + std::to_string(p) + ": " +
                             std::to_string(matched) + " strata matched");
                    continue;
                }
                SingularityReport r = classify_rank2(e.a, e.b, p, eta);
                if (r.stratum != hit->id || r.verdict != hit->verdict)
                    out.fail(s.label + ": classifier disagrees with stratum " + hit->id);
            }
        }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
        double limit;
    };
    std::vector<Criterion> criteria = {
        {"continuant identities up to rank 12", criterion_continuants, 5.0},
        {"500 random seeds: involution and symmetrizer", criterion_random_seeds, 10.0},
        {"chart rewritings verified across the finite grid", criterion_reductions, 30.0},
        {"classifier matches the point-counting oracle", criterion_oracle_agreement, 600.0},
        {"headline fibers", criterion_headlines, 120.0},
        {"quadratic points certified by Hessian rank", criterion_hessians, 120.0},
        {"strata partition every coefficient torus", criterion_stratification, 120.0},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(out);
        } catch (const std::exception& ex) {
            out.fail(std::string("unhandled exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criteria[i].limit)
            out.fail("time limit exceeded: " + std::to_string(secs) + "s > " +
                     std::to_string(criteria[i].limit) + "s");
        std::string detail = out.log.str();
        if (!detail.empty()) std::fputs(detail.c_str(), stdout);
        std::printf("criterion %zu: %s ... %s (%.1fs)\n", i + 1, criteria[i].name,
                    out.ok ? "PASS" : "FAIL", secs);
        std::fflush(stdout);
        all_ok = all_ok && out.ok;
    }
    return all_ok ? 0 : 1;
}
