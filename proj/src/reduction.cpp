#include "cluster/reduction.hpp"

#include <sstream>
#include <stdexcept>

#include "cluster/continuant.hpp"

namespace cluster {

namespace {

// Mid chart of a principal-coefficient reduction: rescaled cluster variables
// X1..Xn, rescaled primed variables Y1..Yn, coefficients c1..cn.
struct Chart {
    VarRegistry reg;
    std::vector<std::size_t> X, Y, C;
    std::size_t nv = 0;

    MultiPoly v(std::size_t slot, int e = 1) const { return MultiPoly::variable(nv, slot, e); }
    MultiPoly one() const { return MultiPoly::constant(nv, 1); }
    MultiPoly cst(long long c) const { return MultiPoly::constant(nv, c); }
    MultiPoly lam(std::size_t k) const { return lambda_term(nv, k, C); }
    MultiPoly lami(std::size_t k) const { return lam(k).inverse_monomial(); }
    MultiPoly cont(const std::vector<std::size_t>& slots) const { return continuant(nv, slots); }
    // slots of P_k(X1, Y1..Y_{k-1})
    std::vector<std::size_t> chain(std::size_t k) const {
        std::vector<std::size_t> s;
        if (k >= 1) s.push_back(X[0]);
        for (std::size_t i = 1; i < k; ++i) s.push_back(Y[i - 1]);
        return s;
    }
};

Chart make_mid(int n) {
    Chart m;
    for (int i = 1; i <= n; ++i) m.X.push_back(m.reg.add("X" + std::to_string(i), false));
    for (int i = 1; i <= n; ++i) m.Y.push_back(m.reg.add("Y" + std::to_string(i), false));
    for (int i = 1; i <= n; ++i) m.C.push_back(m.reg.add("c" + std::to_string(i), true));
    m.nv = m.reg.size();
    return m;
}

// Reduced target chart: z1..z_nz, u1..u_nu, c1..c_nc.
struct Target {
    VarRegistry reg;
    std::vector<std::size_t> Z, U, C;
    std::size_t nv = 0;

    MultiPoly v(std::size_t slot, int e = 1) const { return MultiPoly::variable(nv, slot, e); }
    MultiPoly one() const { return MultiPoly::constant(nv, 1); }
    MultiPoly lam(std::size_t k) const { return lambda_term(nv, k, C); }
    MultiPoly lami(std::size_t k) const { return lam(k).inverse_monomial(); }
    MultiPoly contZ(std::size_t k) const {
        std::vector<std::size_t> s(Z.begin(), Z.begin() + k);
        return continuant(nv, s);
    }
};

Target make_target(int nz, int nu, int nc) {
    Target t;
    for (int i = 1; i <= nz; ++i) t.Z.push_back(t.reg.add("z" + std::to_string(i), false));
    for (int i = 1; i <= nu; ++i) t.U.push_back(t.reg.add("u" + std::to_string(i), false));
    for (int i = 1; i <= nc; ++i) t.C.push_back(t.reg.add("c" + std::to_string(i), true));
    t.nv = t.reg.size();
    return t;
}

// Source registry layout of a principal BFZ chart in rank n:
// x_k -> k-1, y_k -> n+k-1, c_k -> 2n+k-1.
struct Src {
    int n;
    std::size_t nv;
    std::vector<std::size_t> cs;
    explicit Src(int n_) : n(n_), nv(3 * static_cast<std::size_t>(n_)) {
        for (int k = 1; k <= n; ++k) cs.push_back(2 * n + k - 1);
    }
    std::size_t x(int k) const { return k - 1; }
    std::size_t y(int k) const { return n + k - 1; }
    std::size_t c(int k) const { return 2 * n + k - 1; }
    MultiPoly v(std::size_t slot, int e = 1) const { return MultiPoly::variable(nv, slot, e); }
    MultiPoly lam(std::size_t k) const { return lambda_term(nv, k, cs); }
    MultiPoly lami(std::size_t k) const { return lam(k).inverse_monomial(); }
};

void standard_images(std::vector<MultiPoly>& im, const Chart& mid, const Src& s, int k) {
    im[s.x(k)] = mid.lami(k - 1) * mid.v(mid.X[k - 1]);
    im[s.y(k)] = mid.lami(k) * mid.lam(k - 1) * mid.v(mid.Y[k - 1]);
}

std::vector<MultiPoly> identity_c_images(const Chart& mid, const Src& s) {
    std::vector<MultiPoly> im(s.nv, MultiPoly(mid.nv));
    for (int k = 1; k <= s.n; ++k) im[s.c(k)] = mid.v(mid.C[k - 1]);
    return im;
}

MultiPoly chain_inter(const Chart& mid, int k) {
    MultiPoly left = mid.v(mid.X[k - 1]) * mid.v(mid.Y[k - 1]);
    MultiPoly prev = k == 1 ? mid.one() : mid.v(mid.X[k - 2]);
    return left - prev - mid.v(mid.X[k]);
}

void chain_elims(ReductionWitness& w, const Chart& mid, int upto) {
    // relation k eliminates X_{k+1} = P_{k+1}(X1, Y1..Yk), k = 1..upto
    for (int k = 1; k <= upto; ++k) {
        Elimination e;
        e.var = mid.X[k];
        e.rel = k - 1;
        e.unit = -mid.one();
        e.rhs = mid.cont(mid.chain(k + 1));
        w.elims.push_back(std::move(e));
    }
}

void map_slot(std::vector<int>& stt, std::size_t midslot, std::size_t tgtslot) {
    stt[midslot] = static_cast<int>(tgtslot);
}

ReductionWitness witness_A(int n) {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::A, n));
    ReductionWitness w;
    w.label = "A" + std::to_string(n);
    w.source = bfz_presentation(seed);
    Src s(n);
    Chart mid = make_mid(n);
    w.mid = mid.reg;

    if (n == 1) {
        w.images = identity_c_images(mid, s);
        w.images[s.x(1)] = mid.v(mid.X[0]);
        w.images[s.y(1)] = mid.v(mid.Y[0]);
        w.units = {mid.one()};
        w.inter = {mid.v(mid.X[0]) * mid.v(mid.Y[0]) - mid.v(mid.C[0]) - mid.one()};
        w.final_order = {0};

        Presentation t;
        std::size_t tx = t.vars.add("x1", false);
        std::size_t ty = t.vars.add("y1", false);
        std::size_t tc = t.vars.add("c1", true);
        std::size_t tv = t.vars.size();
        t.gens = {MultiPoly::variable(tv, tx) * MultiPoly::variable(tv, ty) -
                  MultiPoly::variable(tv, tc) - MultiPoly::constant(tv, 1)};
        t.recompute_fiber_dim();
        w.target = t;

        w.slot_to_target.assign(mid.nv, -1);
        map_slot(w.slot_to_target, mid.X[0], tx);
        map_slot(w.slot_to_target, mid.Y[0], ty);
        map_slot(w.slot_to_target, mid.C[0], tc);
        w.forward = {s.v(s.x(1)), s.v(s.y(1)), s.v(s.c(1))};
        return w;
    }

    w.images = identity_c_images(mid, s);
    for (int k = 1; k <= n; ++k) standard_images(w.images, mid, s, k);
    for (int k = 1; k <= n; ++k) w.units.push_back(mid.lami(k));
    for (int k = 1; k < n; ++k) w.inter.push_back(chain_inter(mid, k));
    {
        MultiPoly last = mid.v(mid.X[n - 1]) * mid.v(mid.Y[n - 1]) -
                         (n >= 2 ? mid.v(mid.X[n - 2]) : mid.one()) - mid.lam(n);
        w.inter.push_back(last);
    }
    chain_elims(w, mid, n - 1);
    w.final_order = {static_cast<std::size_t>(n - 1)};

    Target t = make_target(n + 1, 0, n);
    Presentation tp;
    tp.vars = t.reg;
    tp.gens = {t.contZ(n + 1) - t.lam(n)};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[0], t.Z[0]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.Y[k - 1], t.Z[k]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.C[k - 1], t.C[k - 1]);

    w.forward.assign(t.reg.size(), MultiPoly(s.nv));
    w.forward[t.Z[0]] = s.v(s.x(1));
    for (int k = 1; k <= n; ++k)
        w.forward[t.Z[k]] = s.lam(k) * s.lami(k - 1) * s.v(s.y(k));
    for (int k = 1; k <= n; ++k) w.forward[t.C[k - 1]] = s.v(s.c(k));
    return w;
}

ReductionWitness witness_B(int n) {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::B, n));
    ReductionWitness w;
    w.label = "B" + std::to_string(n);
    w.source = bfz_presentation(seed);
    Src s(n);
    Chart mid = make_mid(n);
    w.mid = mid.reg;

    w.images = identity_c_images(mid, s);
    for (int k = 1; k <= n; ++k) standard_images(w.images, mid, s, k);
    for (int k = 1; k <= n; ++k) w.units.push_back(mid.lami(k));
    for (int k = 1; k <= n - 2; ++k) w.inter.push_back(chain_inter(mid, k));
    {
        MultiPoly prev = n >= 3 ? mid.v(mid.X[n - 3]) : mid.one();
        w.inter.push_back(mid.v(mid.X[n - 2]) * mid.v(mid.Y[n - 2]) - prev -
                          mid.lami(n - 1) * mid.v(mid.X[n - 1], 2));
        w.inter.push_back(mid.v(mid.X[n - 1]) * mid.v(mid.Y[n - 1]) - mid.v(mid.X[n - 2]) -
                          mid.lam(n));
    }
    {
        RowOp op;
        op.target = n - 2;
        op.source = n - 1;
        op.coef = mid.v(mid.Y[n - 2]);
        w.rowops.push_back(std::move(op));
    }
    chain_elims(w, mid, n - 2);
    w.final_order = {static_cast<std::size_t>(n - 2), static_cast<std::size_t>(n - 1)};

    Target t = make_target(n - 1, 3, n);
    Presentation tp;
    tp.vars = t.reg;
    MultiPoly core = t.v(t.U[0]) * t.v(t.U[1]) - t.lam(n);
    MultiPoly g = core * t.v(t.U[2]) - t.lami(n - 1) * t.v(t.U[0], 2) - t.contZ(n - 2);
    MultiPoly h = core - t.contZ(n - 1);
    tp.gens = {g, h};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[0], t.Z[0]);
    for (int k = 1; k <= n - 2; ++k) map_slot(w.slot_to_target, mid.Y[k - 1], t.Z[k]);
    map_slot(w.slot_to_target, mid.X[n - 1], t.U[0]);
    map_slot(w.slot_to_target, mid.Y[n - 1], t.U[1]);
    map_slot(w.slot_to_target, mid.Y[n - 2], t.U[2]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.C[k - 1], t.C[k - 1]);

    w.forward.assign(t.reg.size(), MultiPoly(s.nv));
    w.forward[t.Z[0]] = s.v(s.x(1));
    for (int k = 1; k <= n - 2; ++k)
        w.forward[t.Z[k]] = s.lam(k) * s.lami(k - 1) * s.v(s.y(k));
    w.forward[t.U[0]] = s.lam(n - 1) * s.v(s.x(n));
    w.forward[t.U[1]] = s.lam(n) * s.lami(n - 1) * s.v(s.y(n));
    w.forward[t.U[2]] = s.lam(n - 1) * s.lami(n - 2) * s.v(s.y(n - 1));
    for (int k = 1; k <= n; ++k) w.forward[t.C[k - 1]] = s.v(s.c(k));
    return w;
}

ReductionWitness witness_C(int n) {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::C, n));
    ReductionWitness w;
    w.label = "C" + std::to_string(n);
    w.source = bfz_presentation(seed);
    Src s(n);
    Chart mid = make_mid(n);
    w.mid = mid.reg;

    w.images = identity_c_images(mid, s);
    for (int k = 1; k <= n; ++k) standard_images(w.images, mid, s, k);
    // the last primed variable is rescaled once more by lambda_{n-2}
    w.images[s.y(n)] = mid.lami(n) * mid.lam(n - 1) * mid.lami(n - 2) * mid.v(mid.Y[n - 1]);
    for (int k = 1; k <= n - 1; ++k) w.units.push_back(mid.lami(k));
    w.units.push_back(mid.lami(n - 2) * mid.lami(n));
    for (int k = 1; k <= n - 1; ++k) w.inter.push_back(chain_inter(mid, k));
    w.inter.push_back(mid.v(mid.X[n - 1]) * mid.v(mid.Y[n - 1]) - mid.v(mid.X[n - 2], 2) -
                      mid.lam(n - 2) * mid.lam(n));
    chain_elims(w, mid, n - 1);
    w.final_order = {static_cast<std::size_t>(n - 1)};

    Target t = make_target(n + 1, 0, n);
    Presentation tp;
    tp.vars = t.reg;
    MultiPoly sq = t.contZ(n - 1);
    tp.gens = {t.contZ(n) * t.v(t.Z[n]) - sq * sq - t.lam(n - 2) * t.lam(n)};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[0], t.Z[0]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.Y[k - 1], t.Z[k]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.C[k - 1], t.C[k - 1]);

    w.forward.assign(t.reg.size(), MultiPoly(s.nv));
    w.forward[t.Z[0]] = s.v(s.x(1));
    for (int k = 1; k <= n - 1; ++k)
        w.forward[t.Z[k]] = s.lam(k) * s.lami(k - 1) * s.v(s.y(k));
    w.forward[t.Z[n]] = s.lam(n - 2) * s.lam(n) * s.lami(n - 1) * s.v(s.y(n));
    for (int k = 1; k <= n; ++k) w.forward[t.C[k - 1]] = s.v(s.c(k));
    return w;
}

ReductionWitness witness_D(int n) {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::D, n));
    ReductionWitness w;
    w.label = "D" + std::to_string(n);
    w.source = bfz_presentation(seed);
    Src s(n);
    Chart mid = make_mid(n);
    w.mid = mid.reg;

    // lam2mon is the corrected constant on the last antenna relation.
    MultiPoly lam2mon = mid.lam(n - 3) * mid.v(mid.C[n - 1], -1);

    w.images = identity_c_images(mid, s);
    for (int k = 1; k <= n - 2; ++k) standard_images(w.images, mid, s, k);
    w.images[s.x(n - 1)] = mid.lami(n - 2) * mid.v(mid.X[n - 2]);
    w.images[s.y(n - 1)] = mid.lam(n - 2) * mid.lami(n - 1) * mid.v(mid.Y[n - 2]);
    w.images[s.x(n)] = mid.v(mid.X[n - 1]); // not rescaled
    w.images[s.y(n)] = lam2mon.inverse_monomial() * mid.v(mid.Y[n - 1]);

    for (int k = 1; k <= n - 2; ++k) w.units.push_back(mid.lami(k));
    w.units.push_back(mid.lami(n - 1));
    w.units.push_back(lam2mon.inverse_monomial());

    for (int k = 1; k <= n - 3; ++k) w.inter.push_back(chain_inter(mid, k));
    {
        w.inter.push_back(mid.v(mid.X[n - 3]) * mid.v(mid.Y[n - 3]) - mid.v(mid.X[n - 4]) -
                          mid.v(mid.X[n - 2]) * mid.v(mid.X[n - 1]));
        w.inter.push_back(mid.v(mid.X[n - 2]) * mid.v(mid.Y[n - 2]) - mid.v(mid.X[n - 3]) -
                          mid.lam(n - 1));
        w.inter.push_back(mid.v(mid.X[n - 1]) * mid.v(mid.Y[n - 1]) - mid.v(mid.X[n - 3]) -
                          lam2mon);
    }
    {
        RowOp a; // last relation minus the antenna relation before it
        a.target = n - 1;
        a.source = n - 2;
        a.coef = -mid.one();
        w.rowops.push_back(std::move(a));
        RowOp b; // branch relation plus Y_{n-2} times the antenna relation
        b.target = n - 3;
        b.source = n - 2;
        b.coef = mid.v(mid.Y[n - 3]);
        w.rowops.push_back(std::move(b));
    }
    {
        VarShear sh; // old X_n = new X_n + Y_{n-2} Y_{n-1}
        sh.slot = mid.X[n - 1];
        sh.expr = mid.v(mid.X[n - 1]) + mid.v(mid.Y[n - 3]) * mid.v(mid.Y[n - 2]);
        w.shears.push_back(std::move(sh));
    }
    chain_elims(w, mid, n - 3);
    {
        Elimination e; // branch relation, now linear in Y_{n-2}
        e.var = mid.Y[n - 3];
        e.rel = n - 3;
        e.unit = -mid.lam(n - 1);
        e.rhs = -(mid.lami(n - 1) * (mid.cont(mid.chain(n - 3)) +
                                     mid.v(mid.X[n - 1]) * mid.v(mid.X[n - 2])));
        w.elims.push_back(std::move(e));
    }
    w.final_order = {static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 2)};

    Target t = make_target(n - 2, 4, n);
    Presentation tp;
    tp.vars = t.reg;
    MultiPoly delta = t.lam(n - 1) - t.lam(n - 3) * t.v(t.C[n - 1], -1);
    MultiPoly h1 = t.v(t.U[0]) * t.v(t.U[1]) - t.v(t.U[2]) * t.v(t.U[3]) -
                   t.lami(n - 1) * t.v(t.U[1]) * t.v(t.U[3]) *
                       (t.v(t.U[0]) * t.v(t.U[2]) + t.contZ(n - 3)) +
                   delta;
    MultiPoly h2 = t.v(t.U[2]) * t.v(t.U[3]) - t.contZ(n - 2) - t.lam(n - 1);
    tp.gens = {h1, h2};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[0], t.Z[0]);
    for (int k = 1; k <= n - 3; ++k) map_slot(w.slot_to_target, mid.Y[k - 1], t.Z[k]);
    map_slot(w.slot_to_target, mid.X[n - 1], t.U[0]);
    map_slot(w.slot_to_target, mid.Y[n - 1], t.U[1]);
    map_slot(w.slot_to_target, mid.X[n - 2], t.U[2]);
    map_slot(w.slot_to_target, mid.Y[n - 2], t.U[3]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.C[k - 1], t.C[k - 1]);

    w.forward.assign(t.reg.size(), MultiPoly(s.nv));
    w.forward[t.Z[0]] = s.v(s.x(1));
    for (int k = 1; k <= n - 3; ++k)
        w.forward[t.Z[k]] = s.lam(k) * s.lami(k - 1) * s.v(s.y(k));
    w.forward[t.U[0]] = s.v(s.x(n)) - s.lami(n - 3) * s.lam(n - 1) * s.v(s.y(n - 2)) * s.v(s.y(n - 1));
    w.forward[t.U[1]] = s.lam(n - 3) * s.v(s.c(n), -1) * s.v(s.y(n));
    w.forward[t.U[2]] = s.lam(n - 2) * s.v(s.x(n - 1));
    w.forward[t.U[3]] = s.lam(n - 1) * s.lami(n - 2) * s.v(s.y(n - 1));
    for (int k = 1; k <= n; ++k) w.forward[t.C[k - 1]] = s.v(s.c(k));
    return w;
}

ReductionWitness witness_E(int n) {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::E, n));
    ReductionWitness w;
    w.label = "E" + std::to_string(n);
    w.source = bfz_presentation(seed);
    Src s(n);
    Chart mid = make_mid(n);
    w.mid = mid.reg;

    auto cn = [&](int e) { return mid.v(mid.C[n - 1], e); };
    auto cn1 = [&](int e) { return mid.v(mid.C[n - 2], e); };

    w.images = identity_c_images(mid, s);
    for (int k = 1; k <= n - 3; ++k) standard_images(w.images, mid, s, k);
    w.images[s.x(n - 2)] = cn(1) * mid.lami(n - 3) * mid.v(mid.X[n - 3]);
    w.images[s.y(n - 2)] = cn(-1) * mid.lami(n - 2) * mid.lam(n - 3) * mid.v(mid.Y[n - 3]);
    w.images[s.x(n - 1)] = cn(-1) * mid.v(mid.X[n - 2]);
    w.images[s.y(n - 1)] = cn(1) * cn1(1) * mid.lami(n - 4) * mid.v(mid.Y[n - 2]);
    w.images[s.x(n)] = cn1(1) * mid.lami(n - 4) * mid.v(mid.X[n - 1]);
    w.images[s.y(n)] = cn1(-1) * mid.lam(n - 4) * mid.v(mid.Y[n - 1]);

    for (int k = 1; k <= n - 3; ++k) w.units.push_back(mid.lami(k));
    w.units.push_back(mid.lami(n - 2));
    w.units.push_back(cn1(1) * mid.lami(n - 4));
    w.units.push_back(mid.one());

    for (int k = 1; k <= n - 4; ++k) w.inter.push_back(chain_inter(mid, k));
    {
        w.inter.push_back(mid.v(mid.X[n - 4]) * mid.v(mid.Y[n - 4]) - mid.v(mid.X[n - 5]) -
                          mid.v(mid.X[n - 3]) * mid.v(mid.X[n - 2]));
        w.inter.push_back(mid.v(mid.X[n - 3]) * mid.v(mid.Y[n - 3]) - mid.v(mid.X[n - 4]) -
                          mid.lam(n - 2));
        w.inter.push_back(mid.v(mid.X[n - 2]) * mid.v(mid.Y[n - 2]) - mid.v(mid.X[n - 4]) -
                          mid.v(mid.X[n - 1]));
        w.inter.push_back(mid.v(mid.X[n - 1]) * mid.v(mid.Y[n - 1]) - mid.v(mid.X[n - 2]) -
                          mid.one());
    }
    chain_elims(w, mid, n - 4);
    {
        Elimination e; // last relation gives X_{n-1} = P_2(X_n, Y_n)
        e.var = mid.X[n - 2];
        e.rel = n - 1;
        e.unit = -mid.one();
        e.rhs = mid.v(mid.X[n - 1]) * mid.v(mid.Y[n - 1]) - mid.one();
        w.elims.push_back(std::move(e));
    }
    w.final_order = {static_cast<std::size_t>(n - 4), static_cast<std::size_t>(n - 3),
                     static_cast<std::size_t>(n - 2)};

    Target t = make_target(n - 2, 5, n);
    Presentation tp;
    tp.vars = t.reg;
    MultiPoly p2 = continuant(t.nv, {t.U[0], t.U[1]});
    MultiPoly p3 = continuant(t.nv, {t.U[0], t.U[1], t.U[4]});
    MultiPoly h1 = t.contZ(n - 2) - t.v(t.U[2]) * p2;
    MultiPoly h2 = t.v(t.U[2]) * t.v(t.U[3]) - t.contZ(n - 3) - t.lam(n - 2);
    MultiPoly h3 = p3 - t.contZ(n - 3);
    tp.gens = {h1, h2, h3};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[0], t.Z[0]);
    for (int k = 1; k <= n - 3; ++k) map_slot(w.slot_to_target, mid.Y[k - 1], t.Z[k]);
    map_slot(w.slot_to_target, mid.X[n - 1], t.U[0]);
    map_slot(w.slot_to_target, mid.Y[n - 1], t.U[1]);
    map_slot(w.slot_to_target, mid.X[n - 3], t.U[2]);
    map_slot(w.slot_to_target, mid.Y[n - 3], t.U[3]);
    map_slot(w.slot_to_target, mid.Y[n - 2], t.U[4]);
    for (int k = 1; k <= n; ++k) map_slot(w.slot_to_target, mid.C[k - 1], t.C[k - 1]);

    auto scn = [&](int e) { return s.v(s.c(n), e); };
    auto scn1 = [&](int e) { return s.v(s.c(n - 1), e); };
    w.forward.assign(t.reg.size(), MultiPoly(s.nv));
    w.forward[t.Z[0]] = s.v(s.x(1));
    for (int k = 1; k <= n - 3; ++k)
        w.forward[t.Z[k]] = s.lam(k) * s.lami(k - 1) * s.v(s.y(k));
    w.forward[t.U[0]] = scn1(-1) * s.lam(n - 4) * s.v(s.x(n));
    w.forward[t.U[1]] = scn1(1) * s.lami(n - 4) * s.v(s.y(n));
    w.forward[t.U[2]] = scn(-1) * s.lam(n - 3) * s.v(s.x(n - 2));
    w.forward[t.U[3]] = scn(1) * s.lam(n - 2) * s.lami(n - 3) * s.v(s.y(n - 2));
    w.forward[t.U[4]] = scn(-1) * scn1(-1) * s.lam(n - 4) * s.v(s.y(n - 1));
    for (int k = 1; k <= n; ++k) w.forward[t.C[k - 1]] = s.v(s.c(k));
    return w;
}

ReductionWitness witness_F4() {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::F4, 4));
    ReductionWitness w;
    w.label = "F4";
    w.source = bfz_presentation(seed);
    Src s(4);
    Chart mid = make_mid(4);
    w.mid = mid.reg;

    auto c = [&](int k, int e) { return mid.v(mid.C[k - 1], e); };

    w.images = identity_c_images(mid, s);
    w.images[s.x(1)] = c(2, -1) * c(4, -2) * mid.v(mid.X[0]);
    w.images[s.x(2)] = c(1, 1) * mid.v(mid.X[1]);
    w.images[s.x(3)] = c(4, -1) * mid.v(mid.X[2]);
    w.images[s.x(4)] = c(1, 1) * c(3, 1) * mid.v(mid.X[3]);
    w.images[s.y(1)] = c(1, 1) * c(2, 1) * c(4, 2) * mid.v(mid.Y[0]);
    w.images[s.y(2)] = c(1, -1) * c(4, -2) * mid.v(mid.Y[1]);
    w.images[s.y(3)] = c(1, 1) * c(3, 1) * c(4, 1) * mid.v(mid.Y[2]);
    w.images[s.y(4)] = c(1, -1) * c(3, -1) * mid.v(mid.Y[3]);

    w.units = {c(1, 1), c(4, -2), c(1, 1) * c(3, 1), mid.one()};
    w.inter = {
        mid.v(mid.X[0]) * mid.v(mid.Y[0]) - mid.one() - mid.v(mid.X[1]),
        mid.v(mid.X[1]) * mid.v(mid.Y[1]) - mid.v(mid.X[0]) - mid.v(mid.X[2], 2),
        mid.v(mid.X[2]) * mid.v(mid.Y[2]) - mid.v(mid.X[1]) - mid.v(mid.X[3]),
        mid.v(mid.X[3]) * mid.v(mid.Y[3]) - mid.v(mid.X[2]) - mid.one(),
    };
    w.final_order = {0, 1, 2, 3};

    Presentation tp;
    std::vector<std::size_t> tx, ty;
    for (int i = 1; i <= 4; ++i) tx.push_back(tp.vars.add("x" + std::to_string(i), false));
    for (int i = 1; i <= 4; ++i) ty.push_back(tp.vars.add("y" + std::to_string(i), false));
    std::size_t tv = tp.vars.size();
    auto V = [&](std::size_t sl, int e = 1) { return MultiPoly::variable(tv, sl, e); };
    auto one = MultiPoly::constant(tv, 1);
    tp.gens = {
        V(tx[0]) * V(ty[0]) - one - V(tx[1]),
        V(tx[1]) * V(ty[1]) - V(tx[0]) - V(tx[2], 2),
        V(tx[2]) * V(ty[2]) - V(tx[1]) - V(tx[3]),
        V(tx[3]) * V(ty[3]) - V(tx[2]) - one,
    };
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    for (int i = 0; i < 4; ++i) {
        map_slot(w.slot_to_target, mid.X[i], tx[i]);
        map_slot(w.slot_to_target, mid.Y[i], ty[i]);
    }

    auto sc = [&](int k, int e) { return s.v(s.c(k), e); };
    w.forward.assign(tp.vars.size(), MultiPoly(s.nv));
    w.forward[tx[0]] = sc(2, 1) * sc(4, 2) * s.v(s.x(1));
    w.forward[tx[1]] = sc(1, -1) * s.v(s.x(2));
    w.forward[tx[2]] = sc(4, 1) * s.v(s.x(3));
    w.forward[tx[3]] = sc(1, -1) * sc(3, -1) * s.v(s.x(4));
    w.forward[ty[0]] = sc(1, -1) * sc(2, -1) * sc(4, -2) * s.v(s.y(1));
    w.forward[ty[1]] = sc(1, 1) * sc(4, 2) * s.v(s.y(2));
    w.forward[ty[2]] = sc(1, -1) * sc(3, -1) * sc(4, -1) * s.v(s.y(3));
    w.forward[ty[3]] = sc(1, 1) * sc(3, 1) * s.v(s.y(4));
    return w;
}

ReductionWitness witness_G2() {
    auto seed = with_principal_coefficients(dynkin_seed(DynkinType::G2, 2));
    ReductionWitness w;
    w.label = "G2";
    w.source = bfz_presentation(seed);
    Src s(2);
    Chart mid = make_mid(2);
    w.mid = mid.reg;

    w.images = identity_c_images(mid, s);
    w.images[s.x(1)] = mid.v(mid.C[1], -1) * mid.v(mid.X[0]);
    w.images[s.y(1)] = mid.v(mid.C[1], 1) * mid.v(mid.Y[0]);
    w.images[s.x(2)] = mid.v(mid.X[1]);
    w.images[s.y(2)] = mid.v(mid.Y[1]);

    w.units = {mid.one(), mid.one()};
    w.inter = {
        mid.v(mid.X[0]) * mid.v(mid.Y[0]) - mid.v(mid.C[0]) - mid.v(mid.X[1], 3),
        mid.v(mid.X[1]) * mid.v(mid.Y[1]) - mid.v(mid.X[0]) - mid.one(),
    };
    {
        Elimination e;
        e.var = mid.X[0];
        e.rel = 1;
        e.unit = -mid.one();
        e.rhs = mid.v(mid.X[1]) * mid.v(mid.Y[1]) - mid.one();
        w.elims.push_back(std::move(e));
    }
    w.final_order = {0};

    Presentation tp;
    std::size_t vx = tp.vars.add("x", false);
    std::size_t vy = tp.vars.add("y", false);
    std::size_t vz = tp.vars.add("z", false);
    std::size_t vc1 = tp.vars.add("c1", true);
    std::size_t vc2 = tp.vars.add("c2", true);
    std::size_t tv = tp.vars.size();
    auto V = [&](std::size_t sl, int e = 1) { return MultiPoly::variable(tv, sl, e); };
    tp.gens = {V(vx) * V(vy) * V(vz) - V(vy) - V(vc1) - V(vx, 3)};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[1], vx);
    map_slot(w.slot_to_target, mid.Y[0], vy);
    map_slot(w.slot_to_target, mid.Y[1], vz);
    map_slot(w.slot_to_target, mid.C[0], vc1);
    map_slot(w.slot_to_target, mid.C[1], vc2);

    w.forward.assign(tp.vars.size(), MultiPoly(s.nv));
    w.forward[vx] = s.v(s.x(2));
    w.forward[vy] = s.v(s.c(2), -1) * s.v(s.y(1));
    w.forward[vz] = s.v(s.y(2));
    w.forward[vc1] = s.v(s.c(1));
    w.forward[vc2] = s.v(s.c(2));
    return w;
}

ReductionWitness witness_rank2(long long a, long long b) {
    auto seed = with_principal_coefficients(rank2_seed(a, b));
    ReductionWitness w;
    std::ostringstream lbl;
    lbl << "rank2(" << a << "," << b << ")";
    w.label = lbl.str();
    w.source = bfz_presentation(seed);
    Src s(2);
    Chart mid = make_mid(2);
    w.mid = mid.reg;

    const int aa = static_cast<int>(a), bb = static_cast<int>(b < 0 ? -b : b);

    w.images = identity_c_images(mid, s);
    w.images[s.x(1)] = mid.v(mid.X[0]);
    w.images[s.x(2)] = mid.v(mid.X[1]);
    w.images[s.y(1)] = mid.v(mid.Y[0]);
    if (a == 0 && b == 0) {
        w.images[s.y(2)] = mid.v(mid.Y[1]);
        w.units = {mid.one(), mid.one()};
        w.inter = {
            mid.v(mid.X[0]) * mid.v(mid.Y[0]) - mid.v(mid.C[0]) - mid.one(),
            mid.v(mid.X[1]) * mid.v(mid.Y[1]) - mid.v(mid.C[1]) - mid.one(),
        };
    } else {
        // the second relation is normalized by the torus automorphism c2 -> c2^-1
        w.images[s.y(2)] = mid.v(mid.C[1], -1) * mid.v(mid.Y[1]);
        w.images[s.c(2)] = mid.v(mid.C[1], -1);
        w.units = {mid.one(), mid.v(mid.C[1], -1)};
        w.inter = {
            mid.v(mid.X[0]) * mid.v(mid.Y[0]) - mid.v(mid.C[0]) - mid.v(mid.X[1], bb),
            mid.v(mid.X[1]) * mid.v(mid.Y[1]) - mid.v(mid.C[1]) - mid.v(mid.X[0], aa),
        };
    }
    w.final_order = {0, 1};

    Presentation tp;
    std::size_t x1 = tp.vars.add("x1", false);
    std::size_t x2 = tp.vars.add("x2", false);
    std::size_t y1 = tp.vars.add("y1", false);
    std::size_t y2 = tp.vars.add("y2", false);
    std::size_t c1 = tp.vars.add("c1", true);
    std::size_t c2 = tp.vars.add("c2", true);
    std::size_t tv = tp.vars.size();
    auto V = [&](std::size_t sl, int e = 1) { return MultiPoly::variable(tv, sl, e); };
    auto one = MultiPoly::constant(tv, 1);
    MultiPoly neg1 = (a == 0 && b == 0) ? one : V(x2, bb);
    MultiPoly neg2 = (a == 0 && b == 0) ? one : V(x1, aa);
    tp.gens = {V(x1) * V(y1) - V(c1) - neg1, V(x2) * V(y2) - V(c2) - neg2};
    tp.recompute_fiber_dim();
    w.target = tp;

    w.slot_to_target.assign(mid.nv, -1);
    map_slot(w.slot_to_target, mid.X[0], x1);
    map_slot(w.slot_to_target, mid.X[1], x2);
    map_slot(w.slot_to_target, mid.Y[0], y1);
    map_slot(w.slot_to_target, mid.Y[1], y2);
    map_slot(w.slot_to_target, mid.C[0], c1);
    map_slot(w.slot_to_target, mid.C[1], c2);

    w.forward.assign(tp.vars.size(), MultiPoly(s.nv));
    w.forward[x1] = s.v(s.x(1));
    w.forward[x2] = s.v(s.x(2));
    w.forward[y1] = s.v(s.y(1));
    w.forward[y2] = (a == 0 && b == 0) ? s.v(s.y(2)) : s.v(s.c(2), -1) * s.v(s.y(2));
    w.forward[c1] = s.v(s.c(1));
    w.forward[c2] = (a == 0 && b == 0) ? s.v(s.c(2)) : s.v(s.c(2), -1);
    return w;
}

} // namespace

ReductionWitness reduction_witness(DynkinType t, int n) {
    switch (t) {
        case DynkinType::A: return witness_A(n);
        case DynkinType::B: return witness_B(n);
        case DynkinType::C: return witness_C(n);
        case DynkinType::D: return witness_D(n);
        case DynkinType::E: return witness_E(n);
        case DynkinType::F4:
            if (n != 4) throw std::invalid_argument("type F4 has n = 4");
            return witness_F4();
        case DynkinType::G2:
            if (n != 2) throw std::invalid_argument("type G2 has n = 2");
            return witness_G2();
    }
    throw std::logic_error("reduction_witness: bad tag");
}

ReductionWitness reduction_witness_rank2(long long a, long long b) { return witness_rank2(a, b); }

Presentation reduced_presentation(DynkinType t, int n) { return reduction_witness(t, n).target; }
Presentation reduced_presentation_rank2(long long a, long long b) {
    return reduction_witness_rank2(a, b).target;
}

ReductionWitness gen_to_prin_witness(const LabeledSeed& trivial_seed) {
    if (trivial_seed.mat.m != trivial_seed.mat.n)
        throw std::invalid_argument("gen_to_prin_witness: seed must have no frozen rows");
    const int n = static_cast<int>(trivial_seed.mat.n);
    ReductionWitness w;
    w.label = "gen_to_prin";
    w.source = bfz_presentation(with_principal_coefficients(trivial_seed), PrimedNaming::Y);
    Presentation gen = bfz_presentation(with_generic_coefficients(trivial_seed), PrimedNaming::Prime);
    w.mid = gen.vars;
    const std::size_t nm = w.mid.size(); // x1..xn, x1'..xn', s1..sn, t1..tn
    auto V = [&](std::size_t sl, int e = 1) { return MultiPoly::variable(nm, sl, e); };
    w.images.assign(w.source.vars.size(), MultiPoly(nm));
    for (int k = 0; k < n; ++k) {
        w.images[k] = V(k);                                // x_k
        w.images[n + k] = V(3 * n + k, -1) * V(n + k);     // y_k -> t_k^-1 x_k'
        w.images[2 * n + k] = V(3 * n + k, -1) * V(2 * n + k); // c_k -> t_k^-1 s_k
    }
    for (int k = 0; k < n; ++k) w.units.push_back(V(3 * n + k, -1));
    w.inter = gen.gens;
    for (int k = 0; k < n; ++k) w.final_order.push_back(k);
    w.slot_to_target.assign(nm, -1);
    for (std::size_t i = 0; i < nm; ++i) w.slot_to_target[i] = static_cast<int>(i);
    w.target = gen;
    // forward left empty: the coefficient tori differ
    return w;
}

ReductionReport verify_reduction(const ReductionWitness& w) {
    ReductionReport rep;
    rep.label = w.label;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    auto note = [&](const std::string& msg) { rep.steps.push_back(msg); };

    const std::size_t nm = w.mid.size();
    const std::size_t ngen = w.source.gens.size();
    if (w.images.size() != w.source.vars.size()) {
        fail("image count does not match source registry");
        return rep;
    }
    for (const auto& im : w.images)
        if (im.nvars() != nm) {
            fail("image over wrong registry");
            return rep;
        }
    if (w.units.size() != ngen || w.inter.size() != ngen) {
        fail("unit/intermediate count mismatch");
        return rep;
    }
    for (std::size_t v = 0; v < w.source.vars.size(); ++v) {
        if (!w.source.vars.invertible(v)) continue;
        if (!w.images[v].is_unit_monomial()) {
            fail("invertible variable " + w.source.vars.name(v) + " has a non-unit image");
            continue;
        }
        const auto& e = w.images[v].terms().begin()->first;
        for (std::size_t s = 0; s < nm; ++s)
            if (e[s] != 0 && !w.mid.invertible(s))
                fail("image of " + w.source.vars.name(v) + " uses non-invertible slot " +
                     w.mid.name(s));
    }

    for (std::size_t k = 0; k < ngen; ++k) {
        if (!w.units[k].is_unit_monomial()) {
            fail("unit factor " + std::to_string(k + 1) + " is not a unit monomial");
            continue;
        }
        MultiPoly got = w.source.gens[k].substitute(w.images);
        MultiPoly want = w.units[k] * w.inter[k];
        if (got == want)
            note("generator " + std::to_string(k + 1) + ": unit factor " +
                 w.units[k].to_string(w.mid));
        else
            fail("generator " + std::to_string(k + 1) +
                 " does not match its stated unit * intermediate");
    }
    if (!rep.ok) return rep;

    std::vector<MultiPoly> g = w.inter;
    for (const auto& op : w.rowops) {
        if (op.target >= ngen || op.source >= ngen || op.target == op.source) {
            fail("row operation indices out of range");
            return rep;
        }
        g[op.target] += op.coef * g[op.source];
        note("rowop: g" + std::to_string(op.target + 1) + " += (" + op.coef.to_string(w.mid) +
             ") * g" + std::to_string(op.source + 1));
    }
    for (const auto& sh : w.shears) {
        MultiPoly h = sh.expr - MultiPoly::variable(nm, sh.slot);
        if (h.involves(sh.slot)) {
            fail("shear on " + w.mid.name(sh.slot) + " is not triangular");
            return rep;
        }
        for (auto& gen : g) gen = gen.substitute_var(sh.slot, sh.expr);
        note("shear: " + w.mid.name(sh.slot) + " = " + sh.expr.to_string(w.mid));
    }

    std::vector<char> consumed(ngen, 0), dead(nm, 0);
    for (const auto& e : w.elims) {
        if (e.rel >= ngen || consumed[e.rel]) {
            fail("elimination reuses a consumed relation");
            return rep;
        }
        if (e.var >= nm || dead[e.var]) {
            fail("elimination reuses a dead slot");
            return rep;
        }
        if (e.rhs.involves(e.var)) {
            fail("elimination rhs involves the eliminated slot");
            return rep;
        }
        if (!e.unit.is_unit_monomial()) {
            fail("elimination unit is not a unit monomial");
            return rep;
        }
        MultiPoly pattern = e.unit * (MultiPoly::variable(nm, e.var) - e.rhs);
        if (!(g[e.rel] == pattern)) {
            fail("relation " + std::to_string(e.rel + 1) + " is not unit * (" +
                 w.mid.name(e.var) + " - rhs) at its elimination step");
            return rep;
        }
        for (std::size_t j = 0; j < ngen; ++j)
            if (!consumed[j] && j != e.rel) g[j] = g[j].substitute_var(e.var, e.rhs);
        consumed[e.rel] = 1;
        dead[e.var] = 1;
        note("eliminated " + w.mid.name(e.var) + " via relation " + std::to_string(e.rel + 1));
    }

    std::vector<char> in_final(ngen, 0);
    for (auto idx : w.final_order) {
        if (idx >= ngen || consumed[idx] || in_final[idx]) {
            fail("final_order lists a consumed or repeated relation");
            return rep;
        }
        in_final[idx] = 1;
    }
    for (std::size_t j = 0; j < ngen; ++j)
        if (!consumed[j] && !in_final[j]) fail("surviving relation missing from final_order");
    if (!rep.ok) return rep;

    if (w.slot_to_target.size() != nm) {
        fail("slot_to_target size mismatch");
        return rep;
    }
    const std::size_t nt = w.target.vars.size();
    std::vector<int> covered(nt, -1);
    for (std::size_t v = 0; v < nm; ++v) {
        int tgt = w.slot_to_target[v];
        if (tgt < 0) continue;
        if (static_cast<std::size_t>(tgt) >= nt || covered[tgt] >= 0) {
            fail("slot_to_target is not injective into the target registry");
            return rep;
        }
        covered[tgt] = static_cast<int>(v);
    }
    if (w.final_order.size() != w.target.gens.size()) {
        fail("target generator count mismatch");
        return rep;
    }
    for (std::size_t pos = 0; pos < w.final_order.size(); ++pos) {
        const MultiPoly& src = g[w.final_order[pos]];
        MultiPoly mapped(nt);
        bool bad = false;
        for (const auto& [e, c] : src.terms()) {
            MultiPoly::Exps te(nt, 0);
            for (std::size_t v = 0; v < nm && !bad; ++v) {
                if (e[v] == 0) continue;
                if (w.slot_to_target[v] < 0) {
                    fail("consumed slot " + w.mid.name(v) + " appears in a final generator");
                    bad = true;
                } else {
                    te[w.slot_to_target[v]] = e[v];
                }
            }
            if (bad) break;
            mapped += MultiPoly::monomial(nt, te, c);
        }
        if (bad) return rep;
        if (mapped == w.target.gens[pos])
            note("reduced generator " + std::to_string(pos + 1) + " matches");
        else
            fail("reduced generator " + std::to_string(pos + 1) + " does not match the target");
    }

    if (!w.forward.empty()) {
        if (w.forward.size() != nt) {
            fail("forward map size mismatch");
            return rep;
        }
        for (std::size_t v = 0; v < nm; ++v) {
            int tgt = w.slot_to_target[v];
            if (tgt < 0) continue;
            MultiPoly expr_mid = MultiPoly::variable(nm, v);
            for (const auto& sh : w.shears)
                if (sh.slot == v)
                    expr_mid = MultiPoly::variable(nm, v) - (sh.expr - MultiPoly::variable(nm, v));
            MultiPoly got = w.forward[tgt].substitute(w.images);
            if (!(got == expr_mid))
                fail("forward expression for " + w.target.vars.name(tgt) +
                     " does not invert the variable change");
        }
        for (std::size_t tgt = 0; tgt < nt; ++tgt)
            if (covered[tgt] < 0) fail("target slot " + w.target.vars.name(tgt) + " not produced");
        if (rep.ok) note("forward point map closes");
    }

    try {
        w.target.validate();
    } catch (const std::exception& ex) {
        fail(std::string("target presentation invalid: ") + ex.what());
    }
    return rep;
}

ReductionReport verify_reduction(DynkinType t, int n) {
    return verify_reduction(reduction_witness(t, n));
}

ReductionReport verify_reduction_rank2(long long a, long long b) {
    return verify_reduction(reduction_witness_rank2(a, b));
}

} // namespace cluster
