#include "cluster/classify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cluster/continuant.hpp"
#include "cluster/fp.hpp"
#include "cluster/reduction.hpp"

namespace cluster {

namespace {

long long sign_pow(int m) { return m % 2 == 0 ? 1 : -1; }

std::string num(long long v) { return std::to_string(v); }

VarRegistry coeff_registry(int n) {
    VarRegistry r;
    for (int i = 1; i <= n; ++i) r.add("c" + std::to_string(i), true);
    return r;
}

MultiPoly lam_expr(int n, int k) {
    std::vector<std::size_t> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    return lambda_term(n, k, slots);
}

Condition make_cond(const std::string& kind, MultiPoly expr, const std::string& text) {
    Condition c;
    c.kind = kind;
    c.expr = std::move(expr);
    c.text = text;
    return c;
}

StratumDescriptor stratum(const std::string& id, const std::string& verdict, bool singular,
                          std::vector<Condition> conds, const std::string& description) {
    StratumDescriptor s;
    s.id = id;
    s.verdict = verdict;
    s.singular = singular;
    s.conditions = std::move(conds);
    s.description = description;
    return s;
}

MultiPoly cvar(const Presentation& P, const std::string& name, int e = 1) {
    return MultiPoly::variable(P.vars.size(), P.vars.index_of(name), e);
}

MultiPoly cconst(const Presentation& P, long long v) {
    return MultiPoly::constant(P.vars.size(), v);
}

MultiPoly zcont(const Presentation& P, int count) {
    std::vector<std::size_t> slots;
    for (int i = 1; i <= count; ++i) slots.push_back(P.vars.index_of("z" + std::to_string(i)));
    return continuant(P.vars.size(), slots);
}

LocusComponent component(const std::string& name, std::vector<MultiPoly> eqs,
                         const std::string& local_type, const std::string& note) {
    LocusComponent c;
    c.name = name;
    c.equations = std::move(eqs);
    c.local_type = local_type;
    c.note = note;
    return c;
}

// equations picking out one rational point of the chart
LocusComponent point_component(const Presentation& P, const std::string& name,
                               const std::vector<long long>& plain_vals,
                               const std::string& local_type, const std::string& note) {
    auto plain = P.vars.plain_indices();
    std::vector<MultiPoly> eqs;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        MultiPoly e = MultiPoly::variable(P.vars.size(), plain[i]);
        if (plain_vals[i] != 0) e -= MultiPoly::constant(P.vars.size(), plain_vals[i]);
        eqs.push_back(e);
    }
    return component(name, std::move(eqs), local_type, note);
}

std::vector<long long> full_point(const Presentation& P, const std::vector<long long>& plain_vals,
                                  const std::vector<long long>& eta) {
    std::vector<long long> pt(P.vars.size(), 0);
    auto plain = P.vars.plain_indices();
    for (std::size_t i = 0; i < plain.size(); ++i) pt[plain[i]] = plain_vals[i];
    auto inv = P.vars.invertible_indices();
    for (std::size_t i = 0; i < inv.size() && i < eta.size(); ++i) pt[inv[i]] = eta[i];
    return pt;
}

void realize_A(SingularityReport& r, int n) {
    const auto& P = r.chart;
    std::vector<long long> origin(P.vars.plain_indices().size(), 0);
    r.point = origin;
    if (n == 1) {
        r.locus = {point_component(P, "origin", origin, "A1",
                                   "the fiber x1*y1 = 0 is two lines through a node")};
    } else {
        r.locus = {point_component(P, "origin", origin, "A1", "isolated singular point")};
    }
    if (r.p != 2) {
        HessianPlan h;
        h.generator = 0;
        h.vars = P.vars.plain_indices();
        h.point = full_point(P, origin, r.eta);
        h.expected_rank = h.vars.size();
        r.hessian = h;
    }
}

void realize_B(SingularityReport& r, int n) {
    const auto& P = r.chart;
    const long long p = r.p;
    if (n % 2 == 1) {
        std::vector<long long> origin(P.vars.plain_indices().size(), 0);
        r.point = origin;
        r.locus = {point_component(P, "origin", origin, "A1", "isolated singular point")};
        if (p != 2) {
            HessianPlan h;
            h.generator = 1;
            for (int i = 1; i <= n - 1; ++i) h.vars.push_back(P.vars.index_of("z" + num(i)));
            h.vars.push_back(P.vars.index_of("u1"));
            h.vars.push_back(P.vars.index_of("u2"));
            h.point = full_point(P, origin, r.eta);
            h.expected_rank = h.vars.size();
            r.hessian = h;
        }
    } else {
        long long rho = fp::square_root(lambda_value(n - 1, r.eta, p), p).value();
        long long ln = lambda_value(n, r.eta, p);
        std::vector<long long> q(P.vars.plain_indices().size(), 0);
        q[n - 1] = rho;                          // u1
        q[n] = fp::mul(fp::inv(rho, p), ln, p);  // u2
        r.point = q;
        r.locus = {point_component(P, "q", q, "A1",
                                   "degenerate quadric point, characteristic two")};
    }
}

void realize_C(SingularityReport& r, int n) {
    const auto& P = r.chart;
    const long long p = r.p;
    if (p != 2) {
        std::vector<long long> origin(P.vars.plain_indices().size(), 0);
        r.point = origin;
        r.locus = {point_component(P, "origin", origin, "A1", "isolated singular point")};
        HessianPlan h;
        h.generator = 0;
        h.vars = P.vars.plain_indices();
        h.point = full_point(P, origin, r.eta);
        h.expected_rank = h.vars.size();
        r.hessian = h;
        return;
    }
    // characteristic two: the whole singular locus is the curve D
    long long rho = lambda_value(n - 2, r.eta, p); // delta = 1 over F_2
    std::vector<MultiPoly> eqs;
    eqs.push_back(cvar(P, "z" + num(n + 1)));
    eqs.push_back(cconst(P, rho) * cvar(P, "z" + num(n)) + zcont(P, n - 2));
    eqs.push_back(zcont(P, n - 1) + cconst(P, rho));
    if (n % 2 == 1) {
        r.locus = {component("D", std::move(eqs), "",
                             "singular at the origin; two lines when n = 3")};
        std::vector<long long> origin(P.vars.plain_indices().size(), 0);
        r.point = origin;
    } else {
        r.locus = {component("D", std::move(eqs), "A1", "regular curve, cylinder over an A1")};
    }
}

void realize_D(SingularityReport& r, int n) {
    const auto& P = r.chart;
    const long long p = r.p;
    long long l1 = lambda_value(n - 1, r.eta, p);
    auto zeq = [&]() {
        std::vector<MultiPoly> eqs;
        for (int i = 1; i <= n - 2; ++i) eqs.push_back(cvar(P, "z" + num(i)));
        return eqs;
    };
    auto ueq = [&](std::initializer_list<int> us, std::vector<MultiPoly> eqs) {
        for (int u : us) eqs.push_back(cvar(P, "u" + num(u)));
        return eqs;
    };
    MultiPoly y0eq = zcont(P, n - 2) + cconst(P, l1);
    if (r.verdict == "d-axes-y0") {
        r.locus.push_back(component("Y1", ueq({2, 3, 4}, zeq()), "A1", "coordinate axis"));
        r.locus.push_back(component("Y2", ueq({1, 3, 4}, zeq()), "A1", "coordinate axis"));
        r.locus.push_back(component("Y3", ueq({1, 2, 4}, zeq()), "A1", "coordinate axis"));
        r.locus.push_back(component("Y4", ueq({1, 2, 3}, zeq()), "A1", "coordinate axis"));
        std::string note = n == 4 ? "z1*z2 = 0, two further axes" : "hypersurface in the z chart";
        r.locus.push_back(component("Y0", ueq({1, 2, 3, 4}, {y0eq}), "", note));
        std::vector<long long> origin(P.vars.plain_indices().size(), 0);
        r.point = origin;
    } else if (r.verdict == "d-s1" || r.verdict == "d-s2") {
        long long l2 = fp::mul(lambda_value(n - 3, r.eta, p), fp::inv(r.eta[n - 1], p), p);
        long long d = fp::sub(l1, l2, p);
        if (r.verdict == "d-s1") {
            auto eqs = ueq({3, 4}, zeq());
            eqs.push_back(cvar(P, "u1") * cvar(P, "u2") + cconst(P, d));
            r.locus = {component("S1", std::move(eqs), "A1", "hyperbola u1*u2 = -delta")};
        } else {
            auto eqs = ueq({1, 2}, zeq());
            eqs.push_back(cvar(P, "u3") * cvar(P, "u4") - cconst(P, d));
            r.locus = {component("S2", std::move(eqs), "A1", "hyperbola u3*u4 = delta")};
        }
    } else { // d-y0
        r.locus = {component("Y0", ueq({1, 2, 3, 4}, {y0eq}), "",
                             "hypersurface in the z chart")};
    }
}

void realize_E(SingularityReport& r, int n) {
    const auto& P = r.chart;
    long long l = lambda_value(n - 2, r.eta, r.p);
    std::vector<MultiPoly> eqs;
    for (int i = 1; i <= n - 2; ++i) eqs.push_back(cvar(P, "z" + num(i)));
    eqs.push_back(cvar(P, "u3"));
    eqs.push_back(cvar(P, "u4"));
    MultiPoly p3 = continuant(P.vars.size(), {P.vars.index_of("u1"), P.vars.index_of("u2"),
                                              P.vars.index_of("u5")});
    eqs.push_back(p3 + cconst(P, l));
    r.locus = {component("Y", std::move(eqs), "A1", "surface, cylinder over an A1")};
    std::vector<long long> pt(P.vars.plain_indices().size(), 0);
    pt[n - 2] = l; // u1
    r.point = pt;
    if (r.p != 2) {
        HessianPlan h;
        h.generator = 1;
        for (int i = 1; i <= n - 3; ++i) h.vars.push_back(P.vars.index_of("z" + num(i)));
        h.vars.push_back(P.vars.index_of("u3"));
        h.vars.push_back(P.vars.index_of("u4"));
        h.point = full_point(P, pt, r.eta);
        h.expected_rank = h.vars.size();
        r.hessian = h;
    }
}

void realize_G2(SingularityReport& r) {
    const auto& P = r.chart;
    const long long p = r.p;
    long long delta = fp::cube_root(r.eta[0], p).value();
    std::vector<long long> pt = {fp::neg(delta, p), 0, fp::neg(fp::inv(delta, p), p)};
    r.point = pt;
    r.locus = {point_component(P, "a2-point", pt, "A2", "cusp point of the fiber")};

    CubeWitness w;
    w.delta = delta;
    const std::size_t nv = P.vars.size();
    std::vector<MultiPoly> images(nv, MultiPoly(nv));
    images[P.vars.index_of("x")] = cvar(P, "x");
    images[P.vars.index_of("y")] = cvar(P, "y");
    images[P.vars.index_of("z")] = cvar(P, "z");
    images[P.vars.index_of("c1")] = cconst(P, r.eta[0]);
    images[P.vars.index_of("c2")] = cconst(P, 1);
    MultiPoly f = P.gens[0].substitute(images);
    w.u2 = cvar(P, "x") * cvar(P, "z") - cconst(P, 1);
    w.w2 = cvar(P, "x") + cconst(P, delta);
    MultiPoly rhs = cvar(P, "y") * w.u2 - w.w2.pow(3);
    w.difference = f - rhs;
    w.statement = "y*(x*z - 1) - (x + delta)^3 matches the fiber equation up to "
                  "coefficients divisible by " + num(p) + ", delta^3 = eta1";
    r.witness = w;
}

void realize_rank2(SingularityReport& r) {
    const auto& P = r.chart;
    const long long p = r.p;
    const long long a = r.a, bb = r.b < 0 ? -r.b : r.b;
    auto torsion_component = [&](const char* name, long long deg, const std::string& xv,
                                 const std::string& yv, const std::string& xo,
                                 const std::string& yo, long long eta_same,
                                 long long eta_other) {
        // V(xo, yo, xv^deg + eta_other, xv*yv - eta_same)
        std::vector<MultiPoly> eqs;
        eqs.push_back(cvar(P, xo));
        eqs.push_back(cvar(P, yo));
        eqs.push_back(cvar(P, xv, static_cast<int>(deg)) + cconst(P, eta_other));
        eqs.push_back(cvar(P, xv) * cvar(P, yv) - cconst(P, eta_same));
        long long q = deg;
        long long pm = 1;
        while (q % p == 0) {
            q /= p;
            pm *= p;
        }
        long long count = 0;
        long long target = fp::neg(eta_other, p);
        for (long long t = 1; t < p; ++t)
            if (fp::pow(t, q, p) == target) ++count;
        std::ostringstream note;
        note << "transverse type A" << (pm - 1) << "; " << count << " rational point(s)";
        return component(name, std::move(eqs), "A" + num(pm - 1), note.str());
    };
    if (a == 0 && r.b == 0) {
        long long h1 = fp::normalize(r.eta[0] + 1, p);
        long long h2 = fp::normalize(r.eta[1] + 1, p);
        if (h1 == 0) {
            std::vector<MultiPoly> eqs = {cvar(P, "x1"), cvar(P, "y1"),
                                          cvar(P, "x2") * cvar(P, "y2") - cconst(P, h2)};
            r.locus.push_back(component("L1", std::move(eqs), "A1",
                                        h2 == 0 ? "plane pair crossing" : "hyperbola section"));
        }
        if (h2 == 0) {
            std::vector<MultiPoly> eqs = {cvar(P, "x2"), cvar(P, "y2"),
                                          cvar(P, "x1") * cvar(P, "y1") - cconst(P, h1)};
            r.locus.push_back(component("L2", std::move(eqs), "A1",
                                        h1 == 0 ? "plane pair crossing" : "hyperbola section"));
        }
        return;
    }
    if (a % p == 0)
        r.locus.push_back(
            torsion_component("Ya", a, "x1", "y1", "x2", "y2", r.eta[0], r.eta[1]));
    if (bb % p == 0)
        r.locus.push_back(
            torsion_component("Yb", bb, "x2", "y2", "x1", "y1", r.eta[1], r.eta[0]));
}

std::vector<long long> normalize_eta(const std::vector<long long>& eta, long long p,
                                     std::size_t expect) {
    if (eta.size() != expect)
        throw std::invalid_argument("eta has wrong length");
    std::vector<long long> out(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) {
        out[i] = fp::normalize(eta[i], p);
        if (out[i] == 0) throw std::invalid_argument("eta must consist of units");
    }
    return out;
}

const StratumDescriptor& match_stratum(const Stratification& S,
                                       const std::vector<long long>& eta) {
    const StratumDescriptor* hit = nullptr;
    for (const auto& st : S.strata) {
        if (!stratum_matches(st, eta, S.p)) continue;
        if (hit) throw std::logic_error("strata overlap at a point of the torus");
        hit = &st;
    }
    if (!hit) throw std::logic_error("strata do not cover the torus");
    return *hit;
}

} // namespace

bool condition_holds(const Condition& c, const std::vector<long long>& eta, long long p) {
    std::vector<long long> pt(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) pt[i] = fp::normalize(eta[i], p);
    long long v = c.expr.evaluate_mod(pt, p);
    if (c.kind == "vanishes") return v == 0;
    if (c.kind == "nonzero") return v != 0;
    if (c.kind == "is-square") return fp::is_square(v, p);
    if (c.kind == "not-square") return !fp::is_square(v, p);
    if (c.kind == "has-cube-root") return fp::has_cube_root(v, p);
    if (c.kind == "no-cube-root") return !fp::has_cube_root(v, p);
    throw std::invalid_argument("unknown condition kind '" + c.kind + "'");
}

bool stratum_matches(const StratumDescriptor& s, const std::vector<long long>& eta, long long p) {
    for (const auto& c : s.conditions)
        if (!condition_holds(c, eta, p)) return false;
    return true;
}

Stratification stratify(DynkinType t, int n, long long p) {
    fp::require_prime(p);
    dynkin_matrix(t, n); // validates the rank
    Stratification S;
    S.p = p;
    S.coeffs = coeff_registry(n);
    switch (t) {
        case DynkinType::A:
        case DynkinType::B:
        case DynkinType::C:
        case DynkinType::D:
        case DynkinType::E:
            S.label = type_name(t) + std::to_string(n);
            break;
        default:
            S.label = type_name(t);
            break;
    }
    const MultiPoly one = MultiPoly::constant(n, 1);
    switch (t) {
        case DynkinType::A: {
            if (n == 1) {
                MultiPoly e = MultiPoly::variable(1, 0) + one;
                S.strata.push_back(stratum("a1-two-lines", "two-lines", true,
                                           {make_cond("vanishes", e, "eta1 = -1")},
                                           "fiber degenerates to two crossing lines"));
                S.strata.push_back(stratum("a1-smooth", "regular", false,
                                           {make_cond("nonzero", e, "eta1 != -1")},
                                           "smooth conic fiber"));
            } else if (n % 2 == 0) {
                S.strata.push_back(
                    stratum("a-even-smooth", "regular", false, {}, "even rank, always smooth"));
            } else {
                int m = (n + 1) / 2;
                MultiPoly e = lam_expr(n, n) - MultiPoly::constant(n, sign_pow(m));
                S.strata.push_back(stratum(
                    "a-odd-a1", "isolated-a1", true,
                    {make_cond("vanishes", e, "lambda_n(eta) = (-1)^m")},
                    "isolated A1 at the origin of the reduced chart"));
                S.strata.push_back(stratum("a-odd-smooth", "regular", false,
                                           {make_cond("nonzero", e, "lambda_n(eta) != (-1)^m")},
                                           "smooth fiber"));
            }
            break;
        }
        case DynkinType::B: {
            if (n % 2 == 1) {
                int m = (n - 1) / 2;
                MultiPoly e = lam_expr(n, n) - MultiPoly::constant(n, sign_pow(m + 1));
                S.strata.push_back(stratum(
                    "b-odd-a1", "isolated-a1", true,
                    {make_cond("vanishes", e, "lambda_n(eta) = (-1)^(m+1)")},
                    "isolated A1 at the origin of the reduced chart"));
                S.strata.push_back(
                    stratum("b-odd-smooth", "regular", false,
                            {make_cond("nonzero", e, "lambda_n(eta) != (-1)^(m+1)")},
                            "smooth fiber"));
            } else if (p == 2) {
                MultiPoly e = lam_expr(n, n - 1);
                S.strata.push_back(stratum(
                    "b-even-char2", "isolated-a1", true,
                    {make_cond("is-square", e, "lambda_{n-1}(eta) is a square")},
                    "characteristic two: degenerate quadric point off the origin"));
                S.strata.push_back(
                    stratum("b-even-char2-nonsquare", "regular", false,
                            {make_cond("not-square", e, "lambda_{n-1}(eta) is not a square")},
                            "smooth fiber"));
            } else {
                S.strata.push_back(stratum("b-even-smooth", "regular", false, {},
                                           "even rank, smooth away from characteristic two"));
            }
            break;
        }
        case DynkinType::C: {
            if (p == 2) {
                S.strata.push_back(stratum(
                    n % 2 == 1 ? "c-char2-odd" : "c-char2-even",
                    n % 2 == 1 ? "c-char2-b" : "c-char2-c", true, {},
                    n % 2 == 1 ? "characteristic two: singular curve D, itself singular at 0"
                               : "characteristic two: regular curve D, cylinder over an A1"));
            } else if (n % 2 == 1) {
                MultiPoly e = lam_expr(n, n - 2) * lam_expr(n, n) + one;
                S.strata.push_back(stratum(
                    "c-odd-a1", "isolated-a1", true,
                    {make_cond("vanishes", e, "-lambda_{n-2}(eta)*lambda_n(eta) = 1")},
                    "isolated A1 at the origin of the reduced chart"));
                S.strata.push_back(
                    stratum("c-odd-smooth", "regular", false,
                            {make_cond("nonzero", e, "-lambda_{n-2}(eta)*lambda_n(eta) != 1")},
                            "smooth fiber"));
            } else {
                S.strata.push_back(stratum("c-even-smooth", "regular", false, {},
                                           "even rank, smooth in odd characteristic"));
            }
            break;
        }
        case DynkinType::D: {
            MultiPoly l1 = lam_expr(n, n - 1);
            MultiPoly l2 = lam_expr(n, n - 3) * MultiPoly::variable(n, n - 1, -1);
            MultiPoly dl = l1 - l2;
            if (n % 2 == 0) {
                int m = (n - 2) / 2;
                MultiPoly eps = MultiPoly::constant(n, sign_pow(m + 1));
                MultiPoly e1 = l1 - eps, e2 = l2 - eps;
                S.strata.push_back(stratum("d-axes-y0", "d-axes-y0", true,
                                           {make_cond("vanishes", e1, "lambda1 = eps"),
                                            make_cond("vanishes", e2, "lambda2 = eps")},
                                           "four coordinate axes plus the component Y0"));
                S.strata.push_back(stratum("d-s1", "d-s1", true,
                                           {make_cond("vanishes", e1, "lambda1 = eps"),
                                            make_cond("nonzero", e2, "lambda2 != eps")},
                                           "hyperbola S1 in the u1,u2 plane"));
                S.strata.push_back(stratum("d-s2", "d-s2", true,
                                           {make_cond("nonzero", e1, "lambda1 != eps"),
                                            make_cond("vanishes", e2, "lambda2 = eps")},
                                           "hyperbola S2 in the u3,u4 plane"));
                S.strata.push_back(stratum("d-y0", "d-y0", true,
                                           {make_cond("vanishes", dl, "lambda1 = lambda2"),
                                            make_cond("nonzero", e1, "lambda1 != eps")},
                                           "component Y0 in the z chart"));
                S.strata.push_back(stratum("d-smooth", "regular", false,
                                           {make_cond("nonzero", dl, "lambda1 != lambda2"),
                                            make_cond("nonzero", e1, "lambda1 != eps"),
                                            make_cond("nonzero", e2, "lambda2 != eps")},
                                           "smooth fiber"));
            } else {
                S.strata.push_back(stratum("d-odd-y0", "d-y0", true,
                                           {make_cond("vanishes", dl, "eta_{n-1} = eta_n")},
                                           "component Y0 in the z chart"));
                S.strata.push_back(stratum("d-odd-smooth", "regular", false,
                                           {make_cond("nonzero", dl, "eta_{n-1} != eta_n")},
                                           "smooth fiber"));
            }
            break;
        }
        case DynkinType::E: {
            if (n % 2 == 1) {
                int m = (n - 3) / 2;
                MultiPoly e = lam_expr(n, n - 2) - MultiPoly::constant(n, sign_pow(m + 1));
                S.strata.push_back(stratum(
                    "e-surface", "e-surface", true,
                    {make_cond("vanishes", e, "lambda_{n-2}(eta) = (-1)^(m+1)")},
                    "singular along a surface, cylinder over an A1"));
                S.strata.push_back(
                    stratum("e-odd-smooth", "regular", false,
                            {make_cond("nonzero", e, "lambda_{n-2}(eta) != (-1)^(m+1)")},
                            "smooth fiber"));
            } else {
                S.strata.push_back(
                    stratum("e-even-smooth", "regular", false, {}, "even rank, always smooth"));
            }
            break;
        }
        case DynkinType::F4: {
            S.strata.push_back(stratum("f4-smooth", "regular", false, {},
                                       "smooth for every eta and every characteristic"));
            break;
        }
        case DynkinType::G2: {
            if (p == 3) {
                MultiPoly e = MultiPoly::variable(2, 0);
                S.strata.push_back(stratum("g2-char3", "isolated-a2", true,
                                           {make_cond("has-cube-root", e, "eta1 is a cube")},
                                           "characteristic three: A2 point off the origin"));
                S.strata.push_back(stratum("g2-char3-nocube", "regular", false,
                                           {make_cond("no-cube-root", e, "eta1 is not a cube")},
                                           "smooth fiber"));
            } else {
                S.strata.push_back(stratum("g2-smooth", "regular", false, {},
                                           "smooth away from characteristic three"));
            }
            break;
        }
    }
    return S;
}

Stratification stratify_rank2(long long a, long long b, long long p) {
    fp::require_prime(p);
    rank2_matrix(a, b); // validates the pair
    Stratification S;
    std::ostringstream lbl;
    lbl << "rank2(" << a << "," << b << ")";
    S.label = lbl.str();
    S.p = p;
    S.coeffs = coeff_registry(2);
    const MultiPoly one = MultiPoly::constant(2, 1);
    if (a == 0 && b == 0) {
        MultiPoly e1 = MultiPoly::variable(2, 0) + one;
        MultiPoly e2 = MultiPoly::variable(2, 1) + one;
        S.strata.push_back(stratum("rank2-four-planes", "four-planes", true,
                                   {make_cond("vanishes", e1, "eta1 = -1"),
                                    make_cond("vanishes", e2, "eta2 = -1")},
                                   "both quadrics degenerate: four planes"));
        S.strata.push_back(stratum("rank2-l1", "two-surfaces", true,
                                   {make_cond("vanishes", e1, "eta1 = -1"),
                                    make_cond("nonzero", e2, "eta2 != -1")},
                                   "first quadric degenerates"));
        S.strata.push_back(stratum("rank2-l2", "two-surfaces", true,
                                   {make_cond("nonzero", e1, "eta1 != -1"),
                                    make_cond("vanishes", e2, "eta2 = -1")},
                                   "second quadric degenerates"));
        S.strata.push_back(stratum("rank2-smooth", "regular", false,
                                   {make_cond("nonzero", e1, "eta1 != -1"),
                                    make_cond("nonzero", e2, "eta2 != -1")},
                                   "smooth fiber"));
        return S;
    }
    const long long bb = -b;
    if (a % p == 0 || bb % p == 0) {
        S.strata.push_back(stratum("rank2-torsion", "rank2-components", true, {},
                                   "exchange exponent divisible by p: singular for every eta"));
    } else {
        S.strata.push_back(stratum("rank2-smooth", "regular", false, {},
                                   "exchange exponents prime to p: smooth for every eta"));
    }
    return S;
}

SingularityReport classify(DynkinType t, int n, long long p, const std::vector<long long>& eta) {
    Stratification S = stratify(t, n, p);
    SingularityReport r;
    r.family = type_name(t);
    r.n = n;
    r.p = p;
    r.eta = normalize_eta(eta, p, static_cast<std::size_t>(n));
    r.label = S.label;
    r.chart = reduced_presentation(t, n);
    const StratumDescriptor& st = match_stratum(S, r.eta);
    r.stratum = st.id;
    r.verdict = st.verdict;
    r.singular = st.singular;
    r.detail = st.description;
    if (!r.singular) return r;
    switch (t) {
        case DynkinType::A: realize_A(r, n); break;
        case DynkinType::B: realize_B(r, n); break;
        case DynkinType::C: realize_C(r, n); break;
        case DynkinType::D: realize_D(r, n); break;
        case DynkinType::E: realize_E(r, n); break;
        case DynkinType::F4: break;
        case DynkinType::G2: realize_G2(r); break;
    }
    return r;
}

SingularityReport classify_rank2(long long a, long long b, long long p,
                                 const std::vector<long long>& eta) {
    Stratification S = stratify_rank2(a, b, p);
    SingularityReport r;
    r.family = "rank2";
    r.n = 2;
    r.a = a;
    r.b = b;
    r.p = p;
    r.eta = normalize_eta(eta, p, 2);
    r.label = S.label;
    r.chart = reduced_presentation_rank2(a, b);
    const StratumDescriptor& st = match_stratum(S, r.eta);
    r.stratum = st.id;
    r.verdict = st.verdict;
    r.singular = st.singular;
    r.detail = st.description;
    if (r.singular) realize_rank2(r);
    return r;
}

} // namespace cluster
