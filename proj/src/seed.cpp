#include "cluster/seed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace cluster {

ExchangeMatrix ExchangeMatrix::zero(std::size_t m, std::size_t n) {
    ExchangeMatrix M;
    M.m = m;
    M.n = n;
    M.b.assign(m, std::vector<long long>(n, 0));
    return M;
}

namespace {
long long sgn(long long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
long long pos(long long v) { return v > 0 ? v : 0; }
} // namespace

ExchangeMatrix mutate_matrix(const ExchangeMatrix& M, std::size_t k) {
    if (k >= M.n) throw std::invalid_argument("mutate_matrix: direction out of range");
    ExchangeMatrix R = M;
    for (std::size_t i = 0; i < M.m; ++i) {
        for (std::size_t j = 0; j < M.n; ++j) {
            if (i == k || j == k)
                R.b[i][j] = -M.b[i][j];
            else
                R.b[i][j] = M.b[i][j] + sgn(M.b[i][k]) * pos(M.b[i][k] * M.b[k][j]);
        }
    }
    return R;
}

std::optional<std::vector<long long>> find_skew_symmetrizer(const ExchangeMatrix& M) {
    const std::size_t n = M.n;
    if (M.m < n) throw std::invalid_argument("find_skew_symmetrizer: m < n");
    for (std::size_t i = 0; i < n; ++i) {
        if (M.b[i][i] != 0) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(M.b[i][j]) != -sgn(M.b[j][i])) return std::nullopt;
    }
    // d_j / d_i = b_ij / (-b_ji) on every edge; propagate fractions.
    std::vector<long long> num(n, 0), den(n, 0);
    std::vector<long long> d(n, 0);
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        int cid = ncomp++;
        num[root] = 1;
        den[root] = 1;
        comp[root] = cid;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (M.b[i][j] == 0) continue;
                long long rn = num[i] * std::abs(M.b[i][j]);
                long long rd = den[i] * std::abs(M.b[j][i]);
                long long g = std::gcd(rn, rd);
                rn /= g;
                rd /= g;
                if (comp[j] < 0) {
                    comp[j] = cid;
                    num[j] = rn;
                    den[j] = rd;
                    stack.push_back(j);
                } else if (num[j] * rd != rn * den[j]) {
                    return std::nullopt;
                }
            }
        }
        long long L = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] == cid) L = std::lcm(L, den[j]);
        long long g = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] == cid) g = std::gcd(g, num[j] * (L / den[j]));
        for (std::size_t j = 0; j < n; ++j)
            if (comp[j] == cid) d[j] = num[j] * (L / den[j]) / g;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d[i] * M.b[i][j] != -d[j] * M.b[j][i]) return std::nullopt;
    return d;
}

bool is_acyclic(const ExchangeMatrix& M) {
    const std::size_t n = M.n;
    std::vector<int> state(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (state[s]) continue;
        stack.emplace_back(s, 0);
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, j] = stack.back();
            if (j == n) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            std::size_t w = j++;
            if (M.b[v][w] <= 0) continue;
            if (state[w] == 1) return false;
            if (state[w] == 0) {
                state[w] = 1;
                stack.emplace_back(w, 0);
            }
        }
    }
    return true;
}

std::string type_name(DynkinType t) {
    switch (t) {
        case DynkinType::A: return "A";
        case DynkinType::B: return "B";
        case DynkinType::C: return "C";
        case DynkinType::D: return "D";
        case DynkinType::E: return "E";
        case DynkinType::F4: return "F4";
        case DynkinType::G2: return "G2";
    }
    throw std::logic_error("type_name: bad tag");
}

DynkinType type_from_name(const std::string& s) {
    if (s == "A") return DynkinType::A;
    if (s == "B") return DynkinType::B;
    if (s == "C") return DynkinType::C;
    if (s == "D") return DynkinType::D;
    if (s == "E") return DynkinType::E;
    if (s == "F4" || s == "F") return DynkinType::F4;
    if (s == "G2" || s == "G") return DynkinType::G2;
    throw std::invalid_argument("unknown Dynkin type '" + s + "'");
}

ExchangeMatrix dynkin_matrix(DynkinType t, int n) {
    auto chain = [](ExchangeMatrix& M, int upto) {
        for (int i = 0; i + 1 <= upto; ++i) {
            M.b[i][i + 1] = 1;
            M.b[i + 1][i] = -1;
        }
    };
    switch (t) {
        case DynkinType::A: {
            if (n < 1) throw std::invalid_argument("type A needs n >= 1");
            auto M = ExchangeMatrix::zero(n, n);
            chain(M, n - 1);
            return M;
        }
        case DynkinType::B: {
            if (n < 2) throw std::invalid_argument("type B needs n >= 2");
            auto M = ExchangeMatrix::zero(n, n);
            chain(M, n - 2);
            M.b[n - 2][n - 1] = 1;
            M.b[n - 1][n - 2] = -2;
            return M;
        }
        case DynkinType::C: {
            if (n < 3) throw std::invalid_argument("type C needs n >= 3");
            auto M = ExchangeMatrix::zero(n, n);
            chain(M, n - 2);
            M.b[n - 2][n - 1] = 2;
            M.b[n - 1][n - 2] = -1;
            return M;
        }
        case DynkinType::D: {
            if (n < 4) throw std::invalid_argument("type D needs n >= 4");
            auto M = ExchangeMatrix::zero(n, n);
            chain(M, n - 3);
            M.b[n - 3][n - 2] = 1;
            M.b[n - 2][n - 3] = -1;
            M.b[n - 3][n - 1] = 1;
            M.b[n - 1][n - 3] = -1;
            return M;
        }
        case DynkinType::E: {
            if (n < 6) throw std::invalid_argument("type E needs n >= 6");
            auto M = ExchangeMatrix::zero(n, n);
            chain(M, n - 4);
            M.b[n - 4][n - 3] = 1;
            M.b[n - 3][n - 4] = -1;
            M.b[n - 4][n - 2] = 1;
            M.b[n - 2][n - 4] = -1;
            M.b[n - 2][n - 1] = 1;
            M.b[n - 1][n - 2] = -1;
            return M;
        }
        case DynkinType::F4: {
            if (n != 4) throw std::invalid_argument("type F4 has n = 4");
            auto M = ExchangeMatrix::zero(4, 4);
            M.b = {{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -2, 0, 1}, {0, 0, -1, 0}};
            return M;
        }
        case DynkinType::G2: {
            if (n != 2) throw std::invalid_argument("type G2 has n = 2");
            auto M = ExchangeMatrix::zero(2, 2);
            M.b = {{0, 1}, {-3, 0}};
            return M;
        }
    }
    throw std::logic_error("dynkin_matrix: bad tag");
}

ExchangeMatrix rank2_matrix(long long a, long long b) {
    if (!((a > 0 && b < 0) || (a == 0 && b == 0)))
        throw std::invalid_argument("rank2_matrix: need a > 0 > b or a = b = 0");
    auto M = ExchangeMatrix::zero(2, 2);
    M.b[0][1] = a;
    M.b[1][0] = b;
    return M;
}

VarRegistry LabeledSeed::registry() const {
    VarRegistry reg;
    for (std::size_t i = 0; i < vars.size(); ++i) reg.add(vars[i], invertible[i]);
    return reg;
}

namespace {
LabeledSeed plain_seed(ExchangeMatrix M) {
    LabeledSeed s;
    s.mat = std::move(M);
    for (std::size_t i = 0; i < s.mat.m; ++i) {
        s.vars.push_back("x" + std::to_string(i + 1));
        s.invertible.push_back(false);
    }
    return s;
}
} // namespace

LabeledSeed dynkin_seed(DynkinType t, int n) { return plain_seed(dynkin_matrix(t, n)); }
LabeledSeed rank2_seed(long long a, long long b) { return plain_seed(rank2_matrix(a, b)); }

LabeledSeed with_principal_coefficients(const LabeledSeed& s) {
    if (s.mat.m != s.mat.n)
        throw std::invalid_argument("with_principal_coefficients: seed already has frozen rows");
    LabeledSeed r = s;
    const std::size_t n = s.mat.n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> row(n, 0);
        row[i] = 1;
        r.mat.b.push_back(row);
        r.vars.push_back("c" + std::to_string(i + 1));
        r.invertible.push_back(true);
    }
    r.mat.m = 2 * n;
    return r;
}

LabeledSeed with_generic_coefficients(const LabeledSeed& s) {
    if (s.mat.m != s.mat.n)
        throw std::invalid_argument("with_generic_coefficients: seed already has frozen rows");
    LabeledSeed r = s;
    const std::size_t n = s.mat.n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> row(n, 0);
        row[i] = 1;
        r.mat.b.push_back(row);
        r.vars.push_back("s" + std::to_string(i + 1));
        r.invertible.push_back(true);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> row(n, 0);
        row[i] = -1;
        r.mat.b.push_back(row);
        r.vars.push_back("t" + std::to_string(i + 1));
        r.invertible.push_back(true);
    }
    r.mat.m = 3 * n;
    return r;
}

MutationResult mutate_seed(const LabeledSeed& s, std::size_t k) {
    if (k >= s.mat.n) throw std::invalid_argument("mutate_seed: direction out of range");
    MutationResult out;
    out.seed = s;
    out.seed.mat = mutate_matrix(s.mat, k);
    const std::string new_name = s.vars[k] + "'";
    out.seed.vars[k] = new_name;

    VarRegistry reg;
    for (std::size_t i = 0; i < s.vars.size(); ++i) reg.add(s.vars[i], s.invertible[i]);
    std::size_t kp = reg.add(new_name, false);
    const std::size_t nv = reg.size();

    MultiPoly lhs = MultiPoly::variable(nv, k) * MultiPoly::variable(nv, kp);
    MultiPoly plus = MultiPoly::constant(nv, 1);
    MultiPoly minus = MultiPoly::constant(nv, 1);
    for (std::size_t i = 0; i < s.mat.m; ++i) {
        long long e = s.mat.b[i][k];
        if (e > 0)
            plus *= MultiPoly::variable(nv, i, static_cast<int>(e));
        else if (e < 0)
            minus *= MultiPoly::variable(nv, i, static_cast<int>(-e));
    }
    out.relation_vars = reg;
    out.relation = lhs - plus - minus;
    return out;
}

std::string seed_to_json(const LabeledSeed& s) {
    nlohmann::ordered_json j;
    j["m"] = s.mat.m;
    j["n"] = s.mat.n;
    j["entries"] = s.mat.b;
    j["vars"] = s.vars;
    j["invertible"] = s.invertible;
    return j.dump();
}

LabeledSeed seed_from_json(const std::string& text) {
    LabeledSeed s;
    try {
        auto j = nlohmann::json::parse(text);
        s.mat.m = j.at("m").get<std::size_t>();
        s.mat.n = j.at("n").get<std::size_t>();
        s.mat.b = j.at("entries").get<std::vector<std::vector<long long>>>();
        s.vars = j.at("vars").get<std::vector<std::string>>();
        s.invertible = j.at("invertible").get<std::vector<bool>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("seed_from_json: ") + e.what());
    }
    if (s.mat.b.size() != s.mat.m || s.vars.size() != s.mat.m || s.invertible.size() != s.mat.m)
        throw std::invalid_argument("seed_from_json: row count mismatch");
    for (const auto& row : s.mat.b)
        if (row.size() != s.mat.n) throw std::invalid_argument("seed_from_json: column count mismatch");
    return s;
}

} // namespace cluster
