#include "cluster/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "cluster/fp.hpp"

namespace cluster {

namespace {

struct CTerm {
    long long coef;
    std::vector<std::pair<int, int>> factors; // (plain index, exponent)
};

struct CPoly {
    std::vector<CTerm> terms;
    int max_exp = 0;
};

// Fold the coefficient values into the generator, then map plain registry
// slots onto compact indices 0..nplain-1.
CPoly compile(const MultiPoly& f, const std::vector<int>& slot_to_plain, long long p) {
    CPoly out;
    for (const auto& [e, c] : f.terms()) {
        CTerm t;
        t.coef = fp::normalize((c % p).convert_to<long long>(), p);
        if (t.coef == 0) continue;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (slot_to_plain[v] < 0)
                throw std::logic_error("compile: coefficient slot survived specialization");
            t.factors.emplace_back(slot_to_plain[v], e[v]);
            out.max_exp = std::max(out.max_exp, e[v]);
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

struct PowTab {
    long long p;
    int maxe;
    std::vector<long long> tab; // tab[v * (maxe+1) + e] = v^e mod p
    PowTab(long long p_, int maxe_) : p(p_), maxe(maxe_), tab(p_ * (maxe_ + 1)) {
        for (long long v = 0; v < p; ++v) {
            tab[v * (maxe + 1)] = 1;
            for (int e = 1; e <= maxe; ++e)
                tab[v * (maxe + 1) + e] = tab[v * (maxe + 1) + e - 1] * v % p;
        }
    }
    long long pw(long long v, int e) const { return tab[v * (maxe + 1) + e]; }
};

long long eval_cpoly(const CPoly& f, const std::vector<long long>& pt, const PowTab& tab) {
    long long acc = 0;
    for (const auto& t : f.terms) {
        long long m = t.coef;
        for (const auto& [v, e] : t.factors) {
            m = m * tab.pw(pt[v], e) % tab.p;
            if (m == 0) break;
        }
        acc += m;
    }
    return acc % tab.p;
}

struct CompiledSystem {
    long long p;
    std::size_t nplain;
    std::vector<std::size_t> plain_slots;
    std::vector<CPoly> gens;
    std::vector<std::vector<CPoly>> jac; // jac[g][v]
    int max_exp = 1;
};

CompiledSystem compile_system(const Presentation& P, long long p,
                              const std::vector<long long>& eta, bool with_jacobian) {
    fp::require_prime(p);
    CompiledSystem S;
    S.p = p;
    S.plain_slots = P.vars.plain_indices();
    S.nplain = S.plain_slots.size();
    std::vector<int> slot_to_plain(P.vars.size(), -1);
    for (std::size_t i = 0; i < S.nplain; ++i) slot_to_plain[S.plain_slots[i]] = static_cast<int>(i);
    for (const auto& g : P.gens) {
        MultiPoly s = specialize_coefficients(g, P.vars, p, eta);
        S.gens.push_back(compile(s, slot_to_plain, p));
        S.max_exp = std::max(S.max_exp, S.gens.back().max_exp);
        if (with_jacobian) {
            std::vector<CPoly> row;
            for (std::size_t v = 0; v < S.nplain; ++v) {
                row.push_back(compile(s.derivative(S.plain_slots[v]), slot_to_plain, p));
                S.max_exp = std::max(S.max_exp, row.back().max_exp);
            }
            S.jac.push_back(std::move(row));
        }
    }
    return S;
}

bool advance(std::vector<long long>& pt, long long p) {
    for (std::size_t i = pt.size(); i-- > 0;) {
        if (++pt[i] < p) return true;
        pt[i] = 0;
    }
    return false;
}

unsigned long long ipow(long long base, std::size_t e) {
    unsigned long long r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned long long>(base);
    return r;
}

} // namespace

Budget Budget::from_env() {
    if (const char* s = std::getenv("CLUSTER_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return Budget(v);
    }
    return Budget();
}

std::vector<std::vector<long long>> enumerate_fiber(const Presentation& P, long long p,
                                                   const std::vector<long long>& eta,
                                                   Budget& budget) {
    CompiledSystem S = compile_system(P, p, eta, false);
    budget.charge(ipow(p, S.nplain));
    PowTab tab(p, S.max_exp);
    std::vector<std::vector<long long>> out;
    std::vector<long long> pt(S.nplain, 0);
    if (S.nplain == 0) return out;
    do {
        bool zero = true;
        for (const auto& g : S.gens)
            if (eval_cpoly(g, pt, tab) != 0) {
                zero = false;
                break;
            }
        if (zero) out.push_back(pt);
    } while (advance(pt, p));
    return out;
}

std::vector<std::vector<long long>> singular_points(const Presentation& P, long long p,
                                                    const std::vector<long long>& eta,
                                                    Budget& budget) {
    CompiledSystem S = compile_system(P, p, eta, true);
    budget.charge(ipow(p, S.nplain));
    PowTab tab(p, S.max_exp);
    const std::size_t ng = S.gens.size();
    std::vector<std::vector<long long>> out;
    std::vector<long long> pt(S.nplain, 0);
    if (S.nplain == 0) return out;
    std::vector<std::vector<long long>> J(ng, std::vector<long long>(S.nplain));
    do {
        bool zero = true;
        for (const auto& g : S.gens)
            if (eval_cpoly(g, pt, tab) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t v = 0; v < S.nplain; ++v) J[g][v] = eval_cpoly(S.jac[g][v], pt, tab);
        if (matrix_rank_mod(J, p) < ng) out.push_back(pt);
    } while (advance(pt, p));
    return out;
}

std::size_t matrix_rank_mod(std::vector<std::vector<long long>> M, long long p) {
    if (M.empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    for (auto& row : M)
        for (auto& v : row) v = fp::normalize(v, p);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rank]);
        long long inv = fp::inv(M[rank][c], p);
        for (std::size_t j = c; j < cols; ++j) M[rank][j] = M[rank][j] * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            long long f = M[r][c];
            for (std::size_t j = c; j < cols; ++j)
                M[r][j] = fp::normalize(M[r][j] - f * M[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

std::size_t hessian_rank_at(const Presentation& P, std::size_t gen,
                            const std::vector<std::size_t>& vars,
                            const std::vector<long long>& point, long long p) {
    fp::require_prime(p);
    if (p == 2)
        throw std::invalid_argument("hessian_rank_at: no symmetric Hessian in characteristic two");
    if (gen >= P.gens.size()) throw std::invalid_argument("hessian_rank_at: generator out of range");
    if (point.size() != P.vars.size())
        throw std::invalid_argument("hessian_rank_at: point must cover every chart slot");
    const std::size_t k = vars.size();
    std::vector<std::vector<long long>> H(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        MultiPoly di = P.gens[gen].derivative(vars[i]);
        for (std::size_t j = i; j < k; ++j) {
            long long v = di.derivative(vars[j]).evaluate_mod(point, p);
            H[i][j] = v;
            H[j][i] = v;
        }
    }
    return matrix_rank_mod(std::move(H), p);
}

bool hessian_plan_holds(const Presentation& P, const HessianPlan& plan, long long p) {
    return hessian_rank_at(P, plan.generator, plan.vars, plan.point, p) == plan.expected_rank;
}

namespace {

DiffReport diff_core(const std::string& label, long long p, std::size_t neta,
                     const std::function<SingularityReport(const std::vector<long long>&)>& cls,
                     Budget& budget) {
    DiffReport rep;
    rep.label = label;
    rep.p = p;
    std::vector<long long> eta(neta, 1);
    bool more = true;
    while (more) {
        SingularityReport r = cls(eta);
        // coefficient-free charts (F4) specialize over an empty torus
        std::vector<long long> chart_eta = r.eta;
        chart_eta.resize(r.chart.vars.invertible_indices().size(), 1);
        CompiledSystem S = compile_system(r.chart, p, chart_eta, true);
        budget.charge(ipow(p, S.nplain));
        rep.points_checked += ipow(p, S.nplain);
        const std::size_t ng = S.gens.size();

        std::vector<CPoly> locus_eqs;
        std::vector<std::size_t> locus_split; // component boundaries
        int maxe = S.max_exp;
        {
            std::vector<int> slot_to_plain(r.chart.vars.size(), -1);
            for (std::size_t i = 0; i < S.nplain; ++i)
                slot_to_plain[S.plain_slots[i]] = static_cast<int>(i);
            for (const auto& comp : r.locus) {
                for (const auto& eq : comp.equations) {
                    locus_eqs.push_back(compile(eq, slot_to_plain, p));
                    maxe = std::max(maxe, locus_eqs.back().max_exp);
                }
                locus_split.push_back(locus_eqs.size());
            }
        }
        PowTab tab(p, maxe);

        std::set<std::vector<long long>> sing, locus;
        std::vector<long long> pt(S.nplain, 0);
        std::vector<std::vector<long long>> J(ng, std::vector<long long>(S.nplain));
        do {
            bool zero = true;
            for (const auto& g : S.gens)
                if (eval_cpoly(g, pt, tab) != 0) {
                    zero = false;
                    break;
                }
            if (zero) {
                for (std::size_t g = 0; g < ng; ++g)
                    for (std::size_t v = 0; v < S.nplain; ++v)
                        J[g][v] = eval_cpoly(S.jac[g][v], pt, tab);
                if (matrix_rank_mod(J, p) < ng) sing.insert(pt);
            }
            std::size_t start = 0;
            for (std::size_t ci = 0; ci < locus_split.size(); ++ci) {
                bool member = true;
                for (std::size_t j = start; j < locus_split[ci]; ++j)
                    if (eval_cpoly(locus_eqs[j], pt, tab) != 0) {
                        member = false;
                        break;
                    }
                if (member) {
                    locus.insert(pt);
                    break;
                }
                start = locus_split[ci];
            }
        } while (advance(pt, p));

        for (const auto& q : sing)
            if (!locus.count(q)) rep.mismatches.push_back({r.eta, "singular-not-in-locus", q});
        for (const auto& q : locus)
            if (!sing.count(q)) rep.mismatches.push_back({r.eta, "locus-not-singular", q});
        if (r.point && !sing.count(*r.point))
            rep.mismatches.push_back({r.eta, "declared-point-not-singular", *r.point});
        ++rep.eta_checked;
        if (r.singular) ++rep.singular_eta;

        more = false;
        for (std::size_t i = eta.size(); i-- > 0;) {
            if (++eta[i] < p) {
                more = true;
                break;
            }
            eta[i] = 1;
        }
        if (neta == 0) break;
    }
    return rep;
}

} // namespace

DiffReport diff_against_classifier(DynkinType t, int n, long long p, Budget& budget) {
    std::string label = type_name(t);
    if (t != DynkinType::F4 && t != DynkinType::G2) label += std::to_string(n);
    return diff_core(
        label, p, static_cast<std::size_t>(n),
        [&](const std::vector<long long>& eta) { return classify(t, n, p, eta); }, budget);
}

DiffReport diff_rank2_against_classifier(long long a, long long b, long long p, Budget& budget) {
    std::ostringstream lbl;
    lbl << "rank2(" << a << "," << b << ")";
    return diff_core(
        lbl.str(), p, 2,
        [&](const std::vector<long long>& eta) { return classify_rank2(a, b, p, eta); }, budget);
}

} // namespace cluster
