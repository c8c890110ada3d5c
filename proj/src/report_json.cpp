#include "cluster/report_json.hpp"

namespace cluster {

namespace {

nlohmann::json registry_json(const VarRegistry& reg) {
    nlohmann::json vars = nlohmann::json::array();
    nlohmann::json inv = nlohmann::json::array();
    for (std::size_t i = 0; i < reg.size(); ++i) {
        vars.push_back(reg.name(i));
        inv.push_back(reg.invertible(i));
    }
    return nlohmann::json{{"names", vars}, {"invertible", inv}};
}

nlohmann::json chart_json(const Presentation& P) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : P.gens) gens.push_back(g.to_string(P.vars));
    nlohmann::json j = registry_json(P.vars);
    j["generators"] = gens;
    j["expected_fiber_dim"] = P.expected_fiber_dim;
    return j;
}

} // namespace

nlohmann::json report_to_json(const SingularityReport& r) {
    nlohmann::json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["a"] = r.a;
    j["b"] = r.b;
    j["p"] = r.p;
    j["eta"] = r.eta;
    j["label"] = r.label;
    j["singular"] = r.singular;
    j["verdict"] = r.verdict;
    j["stratum"] = r.stratum;
    j["detail"] = r.detail;
    j["chart"] = chart_json(r.chart);

    nlohmann::json locus = nlohmann::json::array();
    for (const auto& comp : r.locus) {
        nlohmann::json eqs = nlohmann::json::array();
        for (const auto& eq : comp.equations) eqs.push_back(eq.to_string(r.chart.vars));
        locus.push_back({{"name", comp.name},
                         {"equations", eqs},
                         {"local_type", comp.local_type},
                         {"note", comp.note}});
    }
    j["locus"] = locus;

    if (r.point)
        j["point"] = *r.point;
    else
        j["point"] = nullptr;

    if (r.hessian)
        j["hessian"] = {{"generator", r.hessian->generator},
                        {"vars", r.hessian->vars},
                        {"point", r.hessian->point},
                        {"expected_rank", r.hessian->expected_rank}};
    else
        j["hessian"] = nullptr;

    if (r.witness)
        j["witness"] = {{"delta", r.witness->delta},
                        {"u2", r.witness->u2.to_string(r.chart.vars)},
                        {"w2", r.witness->w2.to_string(r.chart.vars)},
                        {"difference", r.witness->difference.to_string(r.chart.vars)},
                        {"statement", r.witness->statement}};
    else
        j["witness"] = nullptr;

    return j;
}

nlohmann::json stratification_to_json(const Stratification& s) {
    nlohmann::json j;
    j["label"] = s.label;
    j["p"] = s.p;
    j["coefficients"] = registry_json(s.coeffs)["names"];
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& st : s.strata) {
        nlohmann::json conds = nlohmann::json::array();
        for (const auto& c : st.conditions)
            conds.push_back({{"kind", c.kind}, {"expr", c.expr.to_string(s.coeffs)}, {"text", c.text}});
        strata.push_back({{"id", st.id},
                          {"verdict", st.verdict},
                          {"singular", st.singular},
                          {"conditions", conds},
                          {"description", st.description}});
    }
    j["strata"] = strata;
    return j;
}

nlohmann::json diff_report_to_json(const DiffReport& r) {
    nlohmann::json j;
    j["label"] = r.label;
    j["p"] = r.p;
    j["eta_checked"] = r.eta_checked;
    j["singular_eta"] = r.singular_eta;
    j["points_checked"] = r.points_checked;
    j["ok"] = r.ok();
    nlohmann::json mm = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"eta", m.eta}, {"kind", m.kind}, {"point", m.point}});
    j["mismatches"] = mm;
    return j;
}

std::string to_stable_string(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace cluster
