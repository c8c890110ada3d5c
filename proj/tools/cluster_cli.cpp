#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cluster/classify.hpp"
#include "cluster/mutation_class.hpp"
#include "cluster/oracle.hpp"
#include "cluster/presentation.hpp"
#include "cluster/reduction.hpp"
#include "cluster/report_json.hpp"
#include "cluster/seed.hpp"

namespace {

struct FamilyArgs {
    std::string type;
    int rank = 0;
    std::vector<long long> rank2;

    void attach(CLI::App* cmd, bool need_rank = true) {
        auto* t = cmd->add_option("--type,-t", type, "Dynkin family: A B C D E F4 G2");
        auto* r = cmd->add_option("--rank,-n", rank, "rank of the family");
        auto* r2 = cmd->add_option("--rank2", rank2,
                                   "rank-two exchange entries a b (a > 0 > b, or 0 0)")
                       ->expected(2);
        t->excludes(r2);
        r2->excludes(t);
        if (need_rank) r->needs(t);
    }

    bool is_rank2() const { return rank2.size() == 2; }

    cluster::DynkinType dynkin() const {
        if (type.empty()) throw std::invalid_argument("--type or --rank2 is required");
        return cluster::type_from_name(type);
    }

    int resolved_rank() const {
        cluster::DynkinType t = dynkin();
        if (t == cluster::DynkinType::F4) return 4;
        if (t == cluster::DynkinType::G2) return 2;
        if (rank <= 0) throw std::invalid_argument("--rank is required for this family");
        return rank;
    }

    cluster::LabeledSeed seed() const {
        if (is_rank2()) return cluster::rank2_seed(rank2[0], rank2[1]);
        return cluster::dynkin_seed(dynkin(), resolved_rank());
    }

    std::string label() const {
        if (is_rank2())
            return "rank2(" + std::to_string(rank2[0]) + "," + std::to_string(rank2[1]) + ")";
        cluster::DynkinType t = dynkin();
        std::string s = cluster::type_name(t);
        if (t != cluster::DynkinType::F4 && t != cluster::DynkinType::G2)
            s += std::to_string(resolved_rank());
        return s;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"cluster algebra charts, reductions, and fiber classification"};
    app.require_subcommand(1);

    FamilyArgs fam;
    long long p = 0;
    std::vector<long long> eta;
    std::vector<int> directions;
    std::string coeffs = "none";
    unsigned long long budget_flag = 0;
    bool generic = false;
    bool relations = false;

    auto* seed_cmd = app.add_subcommand("seed", "print a seed as JSON");
    fam.attach(seed_cmd);
    seed_cmd->add_option("--coefficients", coeffs,
                         "coefficient pattern: none, principal, generic")
        ->check(CLI::IsMember({"none", "principal", "generic"}));

    auto* mutate_cmd = app.add_subcommand("mutate", "mutate a seed and print the result as JSON");
    fam.attach(mutate_cmd);
    mutate_cmd->add_option("--coefficients", coeffs,
                           "coefficient pattern: none, principal, generic")
        ->check(CLI::IsMember({"none", "principal", "generic"}));
    mutate_cmd
        ->add_option("--at,-k", directions, "mutation directions, 1-based, applied in order")
        ->required()
        ->delimiter(',');
    mutate_cmd->add_flag("--relations", relations, "also print the exchange relations");

    auto* present_cmd = app.add_subcommand("present", "print the chart presentation");
    fam.attach(present_cmd);
    present_cmd->add_flag("--generic", generic, "use generic coefficients instead of principal");

    auto* reduce_cmd =
        app.add_subcommand("reduce", "print the reduced chart and check the rewriting");
    fam.attach(reduce_cmd);

    auto* classify_cmd =
        app.add_subcommand("classify", "classify the fiber over eta as JSON");
    fam.attach(classify_cmd);
    classify_cmd->add_option("-p", p, "field characteristic (prime, at most 100)")->required();
    classify_cmd->add_option("--eta", eta, "coefficient values, comma separated")
        ->required()
        ->delimiter(',');

    auto* stratify_cmd =
        app.add_subcommand("stratify", "print the coefficient-space strata as JSON");
    fam.attach(stratify_cmd);
    stratify_cmd->add_option("-p", p, "field characteristic (prime, at most 100)")->required();

    auto* verify_cmd = app.add_subcommand(
        "verify", "sweep every eta and compare the classifier against the Jacobian criterion");
    fam.attach(verify_cmd);
    verify_cmd->add_option("-p", p, "field characteristic (prime, at most 100)")->required();
    verify_cmd->add_option("--budget", budget_flag, "maximum points to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*seed_cmd || *mutate_cmd) {
            cluster::LabeledSeed s = fam.seed();
            if (coeffs == "principal") s = cluster::with_principal_coefficients(s);
            if (coeffs == "generic") s = cluster::with_generic_coefficients(s);
            if (*mutate_cmd) {
                for (int k : directions) {
                    if (k < 1 || k > s.mat.n)
                        throw std::invalid_argument("mutation direction out of range");
                    cluster::MutationResult step = cluster::mutate_seed(s, k - 1);
                    if (relations)
                        std::cout << "mu_" << k << ": "
                                  << step.relation.to_string(step.relation_vars) << "\n";
                    s = step.seed;
                }
            }
            std::cout << cluster::seed_to_json(s) << "\n";
            return 0;
        }
        if (*present_cmd) {
            cluster::LabeledSeed s = fam.seed();
            s = generic ? cluster::with_generic_coefficients(s)
                        : cluster::with_principal_coefficients(s);
            cluster::Presentation pres = cluster::bfz_presentation(
                s, generic ? cluster::PrimedNaming::Prime : cluster::PrimedNaming::Y);
            std::cout << cluster::presentation_to_text(pres);
            return 0;
        }
        if (*reduce_cmd) {
            cluster::ReductionWitness w =
                fam.is_rank2() ? cluster::reduction_witness_rank2(fam.rank2[0], fam.rank2[1])
                               : cluster::reduction_witness(fam.dynkin(), fam.resolved_rank());
            std::cout << cluster::presentation_to_text(w.target);
            cluster::ReductionReport rep = cluster::verify_reduction(w);
            if (!rep.ok) {
                for (const auto& f : rep.failures) std::cerr << "failed: " << f << "\n";
                return 1;
            }
            std::cout << "verified: " << rep.label << " (" << rep.steps.size() << " steps)\n";
            return 0;
        }
        if (*classify_cmd) {
            cluster::SingularityReport r =
                fam.is_rank2() ? cluster::classify_rank2(fam.rank2[0], fam.rank2[1], p, eta)
                               : cluster::classify(fam.dynkin(), fam.resolved_rank(), p, eta);
            std::cout << cluster::to_stable_string(cluster::report_to_json(r));
            return 0;
        }
        if (*stratify_cmd) {
            cluster::Stratification s =
                fam.is_rank2() ? cluster::stratify_rank2(fam.rank2[0], fam.rank2[1], p)
                               : cluster::stratify(fam.dynkin(), fam.resolved_rank(), p);
            std::cout << cluster::to_stable_string(cluster::stratification_to_json(s));
            return 0;
        }
        if (*verify_cmd) {
            cluster::Budget budget =
                budget_flag > 0 ? cluster::Budget(budget_flag) : cluster::Budget::from_env();
            cluster::DiffReport rep =
                fam.is_rank2()
                    ? cluster::diff_rank2_against_classifier(fam.rank2[0], fam.rank2[1], p, budget)
                    : cluster::diff_against_classifier(fam.dynkin(), fam.resolved_rank(), p,
                                                       budget);
            std::cout << cluster::to_stable_string(cluster::diff_report_to_json(rep));
            return rep.ok() ? 0 : 1;
        }
    } catch (const cluster::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
