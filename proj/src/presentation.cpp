#include "cluster/presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "cluster/fp.hpp"

namespace cluster {

void Presentation::validate() const {
    for (const auto& g : gens) {
        if (g.nvars() != vars.size())
            throw std::logic_error("Presentation: generator over wrong registry");
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (!vars.invertible(v) && g.has_negative_exponent(v))
                throw std::logic_error("Presentation: negative power of non-invertible variable " +
                                       vars.name(v));
    }
    int want = static_cast<int>(vars.plain_indices().size()) - static_cast<int>(gens.size());
    if (expected_fiber_dim != want)
        throw std::logic_error("Presentation: expected_fiber_dim is stale");
}

Presentation bfz_presentation(const LabeledSeed& s, PrimedNaming style) {
    const std::size_t n = s.mat.n, m = s.mat.m;
    if (!is_acyclic(s.mat))
        throw std::invalid_argument("bfz_presentation: exchange matrix is not acyclic");
    if (!find_skew_symmetrizer(s.mat))
        throw std::invalid_argument("bfz_presentation: exchange matrix is not skew-symmetrizable");

    Presentation P;
    for (std::size_t i = 0; i < n; ++i) P.vars.add(s.vars[i], false);
    for (std::size_t i = 0; i < n; ++i) {
        std::string nm = style == PrimedNaming::Y ? "y" + std::to_string(i + 1) : s.vars[i] + "'";
        P.vars.add(nm, false);
    }
    for (std::size_t i = n; i < m; ++i) P.vars.add(s.vars[i], s.invertible[i]);

    const std::size_t nv = P.vars.size();
    auto slot_of_row = [&](std::size_t i) { return i < n ? i : n + i; };
    for (std::size_t k = 0; k < n; ++k) {
        MultiPoly lhs = MultiPoly::variable(nv, k) * MultiPoly::variable(nv, n + k);
        MultiPoly plus = MultiPoly::constant(nv, 1);
        MultiPoly minus = MultiPoly::constant(nv, 1);
        for (std::size_t i = 0; i < m; ++i) {
            long long e = s.mat.b[i][k];
            if (e > 0)
                plus *= MultiPoly::variable(nv, slot_of_row(i), static_cast<int>(e));
            else if (e < 0)
                minus *= MultiPoly::variable(nv, slot_of_row(i), static_cast<int>(-e));
        }
        P.gens.push_back(lhs - plus - minus);
    }
    P.recompute_fiber_dim();
    return P;
}

MultiPoly specialize_mod(const MultiPoly& f, const std::vector<std::optional<long long>>& values,
                         long long p) {
    if (values.size() != f.nvars())
        throw std::invalid_argument("specialize_mod: value count mismatch");
    MultiPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        long long coef = static_cast<long long>(c % p);
        coef = fp::normalize(coef, p);
        MultiPoly::Exps ex(e);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!values[v] || e[v] == 0) continue;
            long long base = e[v] > 0 ? fp::normalize(*values[v], p) : fp::inv(*values[v], p);
            coef = fp::mul(coef, fp::pow(base, e[v] > 0 ? e[v] : -static_cast<long long>(e[v]), p), p);
            ex[v] = 0;
        }
        r += MultiPoly::monomial(f.nvars(), ex, Int(coef));
    }
    // renormalize accumulated coefficients into [0, p)
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : r.terms()) {
        long long coef = fp::normalize(static_cast<long long>(c % p), p);
        if (coef) out += MultiPoly::monomial(f.nvars(), e, Int(coef));
    }
    return out;
}

MultiPoly specialize_coefficients(const MultiPoly& f, const VarRegistry& reg, long long p,
                                  const std::vector<long long>& eta) {
    auto inv_slots = reg.invertible_indices();
    if (inv_slots.size() != eta.size())
        throw std::invalid_argument("specialize_coefficients: eta length mismatch");
    std::vector<std::optional<long long>> values(reg.size());
    for (std::size_t i = 0; i < inv_slots.size(); ++i) values[inv_slots[i]] = eta[i];
    return specialize_mod(f, values, p);
}

std::string presentation_to_text(const Presentation& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.gens.size(); ++i)
        out << "g" << (i + 1) << " = " << p.gens[i].to_string(p.vars) << "\n";
    return out.str();
}

} // namespace cluster
