#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluster/multipoly.hpp"
#include "cluster/seed.hpp"
#include "cluster/var_registry.hpp"

namespace cluster {

// Generators of an affine chart: polynomials over an ambient registry whose
// invertible slots are coefficient variables.  expected_fiber_dim is the
// number of non-invertible ambient variables minus the number of generators.
struct Presentation {
    VarRegistry vars;
    std::vector<MultiPoly> gens;
    int expected_fiber_dim = 0;

    void recompute_fiber_dim() {
        expected_fiber_dim =
            static_cast<int>(vars.plain_indices().size()) - static_cast<int>(gens.size());
    }
    void validate() const; // Laurent exponents only on invertible slots, sizes
};

enum class PrimedNaming { Y, Prime };

// One exchange relation per mutable index: x_k y_k - (product over positive
// column entries, frozen rows included) - (product over negative entries).
// The seed's top block must be acyclic and skew-symmetrizable.
Presentation bfz_presentation(const LabeledSeed& s, PrimedNaming style = PrimedNaming::Y);

// Fold the listed slots into the coefficients mod p (inverses taken for
// negative exponents); coefficients land in [0, p).
MultiPoly specialize_mod(const MultiPoly& f, const std::vector<std::optional<long long>>& values,
                         long long p);

// Substitute eta for the invertible slots of the chart, in slot order.
MultiPoly specialize_coefficients(const MultiPoly& f, const VarRegistry& reg, long long p,
                                  const std::vector<long long>& eta);

std::string presentation_to_text(const Presentation& p);

} // namespace cluster
