#pragma once

// Precrossed and crossed modules over a group: a boundary M -> P with a
// P-action on M.  Checkers scan the equivariance and Peiffer identities
// exhaustively and report witnesses.  Also: morphisms, kernels and cokernels
// of morphisms, and the coproduct of two crossed modules over the same P.

#include <string>
#include <utility>
#include <vector>

#include "xsq/check.hpp"
#include "xsq/hom.hpp"

namespace xsq {

struct CrossedModule {
    Group m, p;
    Hom boundary;     // m -> p
    GroupAction act;  // p acting on m

    void validate_shapes() const {
        if (!(boundary.source() == m) || !(boundary.target() == p))
            throw error("crossed module: boundary endpoints mismatch");
        if (!(act.acting() == p) || !(act.acted() == m))
            throw error("crossed module: action endpoints mismatch");
    }
};

// The normal inclusion N <= G with conjugation action.
inline CrossedModule normal_inclusion(const Group& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw error("normal_inclusion: subgroup is not normal");
    auto [m, incl] = subgroup_as_group(g, n);
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < m.order(); ++i)
        pos[static_cast<std::size_t>(incl(i))] = i;
    GroupAction act = GroupAction::make(
        g, m, [&](int p, int x) { return pos[static_cast<std::size_t>(g.conj(p, incl(x)))]; });
    return CrossedModule{m, g, incl, act};
}

inline CrossedModule identity_crossed_module(const Group& g) {
    return CrossedModule{g, g, Hom::identity(g), GroupAction::conjugation(g)};
}

// boundary equivariance: d(p.m) = p d(m) p^-1
inline CheckReport check_precrossed(const CrossedModule& x) {
    x.validate_shapes();
    CheckReport rep;
    for (int p = 0; p < x.p.order(); ++p)
        for (int m = 0; m < x.m.order(); ++m)
            rep.record("precrossed:equivariance",
                       x.boundary(x.act(p, m)) == x.p.conj(p, x.boundary(m)), {p, m});
    return rep;
}

// precrossed plus the Peiffer identity: (d m).m' = m m' m^-1
inline CheckReport check_crossed(const CrossedModule& x) {
    CheckReport rep = check_precrossed(x);
    for (int m = 0; m < x.m.order(); ++m)
        for (int m2 = 0; m2 < x.m.order(); ++m2)
            rep.record("crossed:peiffer", x.act(x.boundary(m), m2) == x.m.conj(m, m2), {m, m2});
    return rep;
}

struct CrossedModuleMorphism {
    CrossedModule src, dst;
    Hom fm;  // src.m -> dst.m
    Hom fp;  // src.p -> dst.p
};

inline CheckReport check_xmod_morphism(const CrossedModuleMorphism& f) {
    if (!(f.fm.source() == f.src.m) || !(f.fm.target() == f.dst.m) ||
        !(f.fp.source() == f.src.p) || !(f.fp.target() == f.dst.p))
        throw error("crossed module morphism: component endpoints mismatch");
    CheckReport rep;
    for (int m = 0; m < f.src.m.order(); ++m)
        rep.record("morphism:square", f.fp(f.src.boundary(m)) == f.dst.boundary(f.fm(m)), {m});
    for (int p = 0; p < f.src.p.order(); ++p)
        for (int m = 0; m < f.src.m.order(); ++m)
            rep.record("morphism:equivariance",
                       f.fm(f.src.act(p, m)) == f.dst.act(f.fp(p), f.fm(m)), {p, m});
    return rep;
}

struct KernelCokernel {
    CrossedModule kernel;
    Hom ker_incl_m, ker_incl_p;  // kernel corners into src corners
    CrossedModule cokernel;
    Hom coker_proj_m, coker_proj_p;  // dst corners onto cokernel corners
};

// Componentwise kernel (always a crossed module) and cokernel (requires the
// image to be normal and the induced data to be well formed; errors
// otherwise).
inline KernelCokernel kernel_cokernel(const CrossedModuleMorphism& f) {
    CheckReport morph = check_xmod_morphism(f);
    if (!morph.ok()) throw error("kernel_cokernel: not a morphism of crossed modules");

    KernelCokernel out;

    // kernel
    auto [km, ki] = subgroup_as_group(f.src.m, f.fm.kernel());
    auto [kp, kpi] = subgroup_as_group(f.src.p, f.fp.kernel());
    std::vector<int> kp_pos(static_cast<std::size_t>(f.src.p.order()), -1);
    for (int i = 0; i < kp.order(); ++i) kp_pos[static_cast<std::size_t>(kpi(i))] = i;
    std::vector<int> km_pos(static_cast<std::size_t>(f.src.m.order()), -1);
    for (int i = 0; i < km.order(); ++i) km_pos[static_cast<std::size_t>(ki(i))] = i;
    Hom kb = Hom::make(km, kp, [&](int x) {
        int v = f.src.boundary(ki(x));
        int w = kp_pos[static_cast<std::size_t>(v)];
        if (w < 0) throw error("kernel_cokernel: boundary does not restrict to the kernel");
        return w;
    });
    GroupAction kact = GroupAction::make(kp, km, [&](int p, int x) {
        int v = f.src.act(kpi(p), ki(x));
        int w = km_pos[static_cast<std::size_t>(v)];
        if (w < 0) throw error("kernel_cokernel: action does not restrict to the kernel");
        return w;
    });
    out.kernel = CrossedModule{km, kp, kb, kact};
    out.ker_incl_m = ki;
    out.ker_incl_p = kpi;

    // cokernel
    Subgroup im_m = f.fm.image();
    Subgroup im_p = f.fp.image();
    if (!is_normal(f.dst.m, im_m))
        throw error("kernel_cokernel: image of M-component is not normal in target");
    if (!is_normal(f.dst.p, im_p))
        throw error("kernel_cokernel: image of P-component is not normal in target");
    for (int p = 0; p < f.dst.p.order(); ++p)
        for (int x : im_m.elems)
            if (!im_m.contains(f.dst.act(p, x)))
                throw error("kernel_cokernel: image of M-component is not action-invariant");
    auto [qm, pm] = quotient(f.dst.m, im_m);
    auto [qp, pp] = quotient(f.dst.p, im_p);
    // induced action well-defined: im_p must act trivially on qm
    for (int u : im_p.elems)
        for (int x = 0; x < f.dst.m.order(); ++x)
            if (pm(f.dst.act(u, x)) != pm(x))
                throw error("kernel_cokernel: induced cokernel action is ill-defined");
    std::vector<int> qb(static_cast<std::size_t>(qm.order()), -1);
    for (int x = 0; x < f.dst.m.order(); ++x) {
        int c = pm(x);
        int v = pp(f.dst.boundary(x));
        if (qb[static_cast<std::size_t>(c)] >= 0 && qb[static_cast<std::size_t>(c)] != v)
            throw error("kernel_cokernel: induced cokernel boundary is ill-defined");
        qb[static_cast<std::size_t>(c)] = v;
    }
    Hom qbh(qm, qp, qb);
    std::vector<int> qa(static_cast<std::size_t>(qp.order()) * qm.order(), -1);
    for (int p = 0; p < f.dst.p.order(); ++p)
        for (int x = 0; x < f.dst.m.order(); ++x) {
            int c = pp(p) * qm.order() + pm(x);
            int v = pm(f.dst.act(p, x));
            if (qa[static_cast<std::size_t>(c)] >= 0 && qa[static_cast<std::size_t>(c)] != v)
                throw error("kernel_cokernel: induced cokernel action is ill-defined");
            qa[static_cast<std::size_t>(c)] = v;
        }
    GroupAction qact(qp, qm, qa);
    out.cokernel = CrossedModule{qm, qp, qbh, qact};
    out.coker_proj_m = pm;
    out.coker_proj_p = pp;

    if (!check_crossed(out.kernel).ok())
        throw error("kernel_cokernel: kernel failed crossed module axioms");
    if (!check_crossed(out.cokernel).ok())
        throw error("kernel_cokernel: cokernel failed crossed module axioms");
    return out;
}

// --- coproduct of crossed modules over a common P ----------------------------

struct Coproduct {
    CrossedModule xmod;
    Hom inj1;  // x1.m -> xmod.m
    Hom inj2;  // x2.m -> xmod.m
    // one decomposition x = inj1(m) inj2(n) per element of xmod.m
    std::vector<std::pair<int, int>> decomposition;
};

inline Coproduct coproduct(const CrossedModule& x1, const CrossedModule& x2) {
    x1.validate_shapes();
    x2.validate_shapes();
    if (!(x1.p == x2.p)) throw error("coproduct: crossed modules live over different groups");
    const Group& P = x1.p;
    const Group& M = x1.m;
    const Group& N = x2.m;

    // N acts on M through P
    GroupAction n_on_m =
        GroupAction::make(N, M, [&](int n, int m) { return x1.act(x2.boundary(n), m); });
    auto sd = semidirect_product(M, N, n_on_m);
    const Group& S = sd.group;
    const Hom& i0 = sd.inj_left;
    const Hom& j0 = sd.inj_right;

    // Peiffer mixing elements i(m) j(n) i(m)^-1 j(m.n)^-1
    std::vector<int> gens;
    for (int m = 0; m < M.order(); ++m)
        for (int n = 0; n < N.order(); ++n) {
            int mn = x2.act(x1.boundary(m), n);  // action of M on N through P
            int w = S.mul(S.mul(S.mul(i0(m), j0(n)), S.inv(i0(m))), S.inv(j0(mn)));
            gens.push_back(w);
        }
    Subgroup mixing = normal_closure(S, gens);
    auto [Q, q] = quotient(S, mixing);

    // induced boundary (m,n) -> d1(m) d2(n)
    Hom delta = Hom::make(S, P, [&](int s) {
        auto [m, n] = unpair_index(N, s);
        return P.mul(x1.boundary(m), x2.boundary(n));
    });
    for (int s : mixing.elems)
        if (delta(s) != P.one())
            throw error("coproduct: boundary does not kill the mixing subgroup");
    std::vector<int> db(static_cast<std::size_t>(Q.order()), -1);
    for (int s = 0; s < S.order(); ++s) {
        int c = q(s);
        if (db[static_cast<std::size_t>(c)] >= 0 && db[static_cast<std::size_t>(c)] != delta(s))
            throw error("coproduct: induced boundary is ill-defined");
        db[static_cast<std::size_t>(c)] = delta(s);
    }
    Hom dq(Q, P, db);

    // diagonal P-action descends to the quotient
    GroupAction diag = GroupAction::make(P, S, [&](int p, int s) {
        auto [m, n] = unpair_index(N, s);
        return pair_index(N, x1.act(p, m), x2.act(p, n));
    });
    for (int p = 0; p < P.order(); ++p)
        for (int s : mixing.elems)
            if (!mixing.contains(diag(p, s)))
                throw error("coproduct: mixing subgroup is not action-invariant");
    std::vector<int> qa(static_cast<std::size_t>(P.order()) * Q.order(), -1);
    for (int p = 0; p < P.order(); ++p)
        for (int s = 0; s < S.order(); ++s) {
            std::size_t c = static_cast<std::size_t>(p) * Q.order() + q(s);
            int v = q(diag(p, s));
            if (qa[c] >= 0 && qa[c] != v) throw error("coproduct: induced action is ill-defined");
            qa[c] = v;
        }
    GroupAction act(P, Q, qa);

    Coproduct out;
    out.xmod = CrossedModule{Q, P, dq, act};
    out.inj1 = i0.then(q);
    out.inj2 = j0.then(q);
    out.decomposition.assign(static_cast<std::size_t>(Q.order()), {-1, -1});
    for (int m = 0; m < M.order(); ++m)
        for (int n = 0; n < N.order(); ++n) {
            int x = q(pair_index(N, m, n));
            if (out.decomposition[static_cast<std::size_t>(x)].first < 0)
                out.decomposition[static_cast<std::size_t>(x)] = {m, n};
        }
    for (auto& d : out.decomposition)
        if (d.first < 0) throw error("coproduct: some element has no i(m) j(n) decomposition");

    if (!check_crossed(out.xmod).ok())
        throw error("coproduct: result failed crossed module axioms");
    return out;
}

// The universal morphism u with u inj1 = f1, u inj2 = f2, for crossed module
// morphisms (f1m, id_P), (f2m, id_P) into t.  Its existence and uniqueness is
// verified exhaustively; throws if the data does not define one.
inline Hom coproduct_universal(const Coproduct& cp, const CrossedModule& t, const Hom& f1m,
                               const Hom& f2m) {
    if (!(t.p == cp.xmod.p)) throw error("coproduct_universal: target lives over a different P");
    const Group& Q = cp.xmod.m;
    std::vector<int> img(static_cast<std::size_t>(Q.order()));
    for (int x = 0; x < Q.order(); ++x) {
        auto [m, n] = cp.decomposition[static_cast<std::size_t>(x)];
        img[static_cast<std::size_t>(x)] = t.m.mul(f1m(m), f2m(n));
    }
    Hom u(Q, t.m, img);  // validated: catches ill-definedness of the i(m) j(n) recipe
    // morphism conditions over P
    for (int x = 0; x < Q.order(); ++x)
        if (t.boundary(u(x)) != cp.xmod.boundary(x))
            throw error("coproduct_universal: boundary square does not commute");
    for (int p = 0; p < t.p.order(); ++p)
        for (int x = 0; x < Q.order(); ++x)
            if (u(cp.xmod.act(p, x)) != t.act(p, u(x)))
                throw error("coproduct_universal: morphism is not equivariant");
    for (int m = 0; m < f1m.source().order(); ++m)
        if (u(cp.inj1(m)) != f1m(m)) throw error("coproduct_universal: u inj1 != f1");
    for (int n = 0; n < f2m.source().order(); ++n)
        if (u(cp.inj2(n)) != f2m(n)) throw error("coproduct_universal: u inj2 != f2");
    return u;
}

}  // namespace xsq
