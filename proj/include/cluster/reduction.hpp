#pragma once

#include <string>
#include <vector>

#include "cluster/presentation.hpp"
#include "cluster/seed.hpp"

namespace cluster {

// gens[target] += coef * gens[source]
struct RowOp {
    std::size_t target = 0;
    std::size_t source = 0;
    MultiPoly coef;
};

// Coordinate shear on one chart slot: the OLD value of the slot equals
// expr(new coordinates), where expr mentions the slot itself as the new
// coordinate (expr = slot + h(other vars)).
struct VarShear {
    std::size_t slot = 0;
    MultiPoly expr;
};

// Eliminate `var` using generator `rel`, which at that moment must equal
// unit * (var - rhs) with rhs free of var.  The relation is dropped and var
// is substituted away everywhere else.
struct Elimination {
    std::size_t var = 0;
    std::size_t rel = 0;
    MultiPoly unit;
    MultiPoly rhs;
};

// A checked chain from a BFZ chart to its reduced chart:
//   (i)   monomial change of variables `images` (source slot -> mid poly),
//         after which generator k equals units[k] * inter[k] exactly;
//   (ii)  row operations, shears, ordered eliminations on the intermediates;
//   (iii) renaming of surviving mid slots onto the target registry, after
//         which the surviving generators (in final_order) equal target.gens;
//   (iv)  forward point map: target variable -> expression in source
//         variables, used to transport fiber points (empty when the source
//         and target coefficient tori differ, as in gen_to_prin).
struct ReductionWitness {
    std::string label;
    Presentation source;
    VarRegistry mid;
    std::vector<MultiPoly> images;
    std::vector<MultiPoly> units;
    std::vector<MultiPoly> inter;
    std::vector<RowOp> rowops;
    std::vector<VarShear> shears;
    std::vector<Elimination> elims;
    std::vector<std::size_t> final_order;
    std::vector<int> slot_to_target; // mid slot -> target slot, -1 = consumed
    Presentation target;
    std::vector<MultiPoly> forward;
};

struct ReductionReport {
    bool ok = true;
    std::string label;
    std::vector<std::string> steps;
    std::vector<std::string> failures;
};

Presentation reduced_presentation(DynkinType t, int n);
Presentation reduced_presentation_rank2(long long a, long long b);

ReductionWitness reduction_witness(DynkinType t, int n);
ReductionWitness reduction_witness_rank2(long long a, long long b);

// Rewrites the principal-coefficient chart of the seed into its generic-
// coefficient chart via y_k -> t_k^-1 x_k', c_k -> t_k^-1 s_k.
ReductionWitness gen_to_prin_witness(const LabeledSeed& trivial_seed);

ReductionReport verify_reduction(const ReductionWitness& w);
ReductionReport verify_reduction(DynkinType t, int n);
ReductionReport verify_reduction_rank2(long long a, long long b);

} // namespace cluster
