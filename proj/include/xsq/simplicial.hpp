#pragma once

// Truncated simplicial groups over concrete finite groups: levels G_0..G_k
// with face and degeneracy homomorphisms, the simplicial identity checker,
// Moore complexes, homotopy groups, degenerate subgroups, and level
// extensions (coskeleton via the simplicial kernel, skeleton via the
// degenerate part of the kernel).  The Moore complex uses the last-face
// boundary convention throughout: NG_n is the meet of Ker d_i for i < n and
// the boundary is d_n restricted.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xsq/check.hpp"
#include "xsq/hom.hpp"

namespace xsq {

struct TruncatedSimplicialGroup {
    int k = 0;
    std::vector<Group> level;               // size k+1
    std::vector<std::vector<Hom>> face;     // face[n][i], 1 <= n <= k, 0 <= i <= n
    std::vector<std::vector<Hom>> degen;    // degen[n][i], 0 <= n < k, 0 <= i <= n

    const Group& at(int n) const { return level.at(static_cast<std::size_t>(n)); }
    const Hom& d(int n, int i) const {
        return face.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
    }
    const Hom& s(int n, int i) const {
        return degen.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
    }

    void validate_shapes() const {
        if (static_cast<int>(level.size()) != k + 1)
            throw error("simplicial group: wrong number of levels");
        if (static_cast<int>(face.size()) != k + 1 || static_cast<int>(degen.size()) != std::max(k, 0))
            throw error("simplicial group: wrong map family sizes");
        for (int n = 1; n <= k; ++n) {
            if (static_cast<int>(face[static_cast<std::size_t>(n)].size()) != n + 1)
                throw error("simplicial group: level " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " faces");
            for (int i = 0; i <= n; ++i)
                if (!(d(n, i).source() == at(n)) || !(d(n, i).target() == at(n - 1)))
                    throw error("simplicial group: face endpoints mismatch");
        }
        for (int n = 0; n < k; ++n) {
            if (static_cast<int>(degen[static_cast<std::size_t>(n)].size()) != n + 1)
                throw error("simplicial group: level " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " degeneracies");
            for (int i = 0; i <= n; ++i)
                if (!(s(n, i).source() == at(n)) || !(s(n, i).target() == at(n + 1)))
                    throw error("simplicial group: degeneracy endpoints mismatch");
        }
    }
};

inline CheckReport check_simplicial(const TruncatedSimplicialGroup& t) {
    t.validate_shapes();
    CheckReport rep;
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= t.k; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int x = 0; x < t.at(n).order(); ++x)
                    rep.record("dd", t.d(n - 1, i)(t.d(n, j)(x)) == t.d(n - 1, j - 1)(t.d(n, i)(x)),
                               {n, i, j, x});
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 1 < t.k; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int x = 0; x < t.at(n).order(); ++x)
                    rep.record("ss", t.s(n + 1, i)(t.s(n, j)(x)) == t.s(n + 1, j + 1)(t.s(n, i)(x)),
                               {n, i, j, x});
    // mixed identities
    for (int n = 0; n < t.k; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int x = 0; x < t.at(n).order(); ++x) {
                    int lhs = t.d(n + 1, i)(t.s(n, j)(x));
                    int rhs;
                    if (i < j)
                        rhs = t.s(n - 1, j - 1)(t.d(n, i)(x));
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = t.s(n - 1, j)(t.d(n, i - 1)(x));
                    rep.record("ds", lhs == rhs, {n, i, j, x});
                }
    return rep;
}

// --- Moore complex -------------------------------------------------------------

struct MooreComplex {
    std::vector<Subgroup> ng;  // ng[n] inside level n; ng[0] is everything

    const Subgroup& at(int n) const { return ng.at(static_cast<std::size_t>(n)); }
};

inline Subgroup kernel_meet(const TruncatedSimplicialGroup& t, int n, int upto) {
    // meet of Ker d_i^n for 0 <= i < upto
    Subgroup s = full_subgroup(t.at(n));
    for (int i = 0; i < upto; ++i) s = intersect(s, t.d(n, i).kernel());
    return s;
}

inline MooreComplex moore_complex(const TruncatedSimplicialGroup& t) {
    MooreComplex mc;
    for (int n = 0; n <= t.k; ++n) mc.ng.push_back(kernel_meet(t, n, n));
    // the boundary d_n maps NG_n into NG_{n-1}; forced by the identities, but
    // verified here since this is what everything downstream leans on
    for (int n = 1; n <= t.k; ++n)
        for (int x : mc.ng[static_cast<std::size_t>(n)].elems)
            if (!mc.ng[static_cast<std::size_t>(n - 1)].contains(t.d(n, n)(x)))
                throw error("moore_complex: boundary leaves the Moore subgroup");
    return mc;
}

// image of the Moore boundary d_{n+1}(NG_{n+1}) inside level n
inline Subgroup moore_boundary_image(const TruncatedSimplicialGroup& t, const MooreComplex& mc,
                                     int n) {
    if (n + 1 > t.k) throw error("moore_boundary_image: level above truncation");
    std::vector<char> m(static_cast<std::size_t>(t.at(n).order()), 0);
    for (int x : mc.at(n + 1).elems) m[static_cast<std::size_t>(t.d(n + 1, n + 1)(x))] = 1;
    return subgroup_from_mask(std::move(m));
}

// --- homotopy groups -----------------------------------------------------------

struct HomotopyGroups {
    Group pi0;
    // pi_n for 1 <= n <= top as groups plus abelian invariants
    std::vector<Group> pin;                           // pin[n-1] is pi_n
    std::vector<std::vector<long long>> invariants;   // invariants[n-1] for pi_n
    bool top_is_truncation_relative = false;
};

// pi_n = (meet of Ker d_i^n, all i) / d_{n+1}(NG_{n+1}) for n < k.  With
// include_top the group pi_k (no boundaries available above the truncation)
// is reported as well and flagged truncation-relative.
inline HomotopyGroups homotopy_groups(const TruncatedSimplicialGroup& t, bool include_top = false) {
    t.validate_shapes();
    HomotopyGroups out;
    if (t.k == 0) {
        out.pi0 = t.at(0);
        return out;
    }
    Subgroup b0 = [&] {
        Subgroup kd0 = t.d(1, 0).kernel();
        std::vector<char> m(static_cast<std::size_t>(t.at(0).order()), 0);
        for (int x : kd0.elems) m[static_cast<std::size_t>(t.d(1, 1)(x))] = 1;
        return subgroup_from_mask(std::move(m));
    }();
    out.pi0 = quotient(t.at(0), b0).first;

    int top = include_top ? t.k : t.k - 1;
    for (int n = 1; n <= top; ++n) {
        Subgroup cycles = kernel_meet(t, n, n + 1);
        Subgroup boundaries;
        if (n < t.k) {
            std::vector<char> m(static_cast<std::size_t>(t.at(n).order()), 0);
            Subgroup ngn1 = kernel_meet(t, n + 1, n + 1);
            for (int x : ngn1.elems) m[static_cast<std::size_t>(t.d(n + 1, n + 1)(x))] = 1;
            boundaries = subgroup_from_mask(std::move(m));
        } else {
            boundaries = trivial_subgroup(t.at(n));
            out.top_is_truncation_relative = true;
        }
        auto [z, zi] = subgroup_as_group(t.at(n), cycles);
        std::vector<int> pos(static_cast<std::size_t>(t.at(n).order()), -1);
        for (int i = 0; i < z.order(); ++i) pos[static_cast<std::size_t>(zi(i))] = i;
        std::vector<int> bz;
        for (int x : boundaries.elems) {
            if (!cycles.contains(x)) throw error("homotopy_groups: boundary escapes cycles");
            bz.push_back(pos[static_cast<std::size_t>(x)]);
        }
        Subgroup bsub = subgroup_closure(z, bz);
        if (!is_normal(z, bsub)) throw error("homotopy_groups: boundaries not normal in cycles");
        Group pin = quotient(z, bsub).first;
        out.pin.push_back(pin);
        out.invariants.push_back(abelian_invariants(pin));
    }
    return out;
}

// subgroup of level n generated by degenerate elements
inline Subgroup degenerate_subgroup(const TruncatedSimplicialGroup& t, int n) {
    if (n < 1 || n > t.k) throw error("degenerate_subgroup: level must be in 1..k");
    std::vector<int> gens;
    for (int i = 0; i <= n - 1; ++i)
        for (int x = 0; x < t.at(n - 1).order(); ++x) gens.push_back(t.s(n - 1, i)(x));
    return subgroup_closure(t.at(n), gens);
}

// --- building blocks -------------------------------------------------------------

inline TruncatedSimplicialGroup constant_simplicial(const Group& g, int k) {
    TruncatedSimplicialGroup t;
    t.k = k;
    t.level.assign(static_cast<std::size_t>(k + 1), g);
    t.face.resize(static_cast<std::size_t>(k + 1));
    t.degen.resize(static_cast<std::size_t>(std::max(k, 0)));
    for (int n = 1; n <= k; ++n)
        t.face[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1),
                                                   Hom::identity(g));
    for (int n = 0; n < k; ++n)
        t.degen[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1),
                                                    Hom::identity(g));
    return t;
}

inline TruncatedSimplicialGroup from_levels_01(const Group& g0, const Group& g1, const Hom& d0,
                                               const Hom& d1, const Hom& s0) {
    TruncatedSimplicialGroup t;
    t.k = 1;
    t.level = {g0, g1};
    t.face.resize(2);
    t.face[1] = {d0, d1};
    t.degen.resize(1);
    t.degen[0] = {s0};
    CheckReport rep = check_simplicial(t);
    if (!rep.ok()) throw error("from_levels_01: simplicial identities fail: " + rep.summary());
    return t;
}

// classifying-space nerve of an abelian group: level n is A^n
inline TruncatedSimplicialGroup nerve(const Group& a, int k) {
    if (!a.is_abelian()) throw error("nerve: levels multiply pointwise only for abelian groups");
    TruncatedSimplicialGroup t;
    t.k = k;
    auto tuple_group = [&](int n) {
        Group g = Group::trivial();
        for (int i = 0; i < n; ++i) g = direct_product(g, a).group;
        return g;
    };
    auto digits = [&](int x, int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = x % a.order();
            x /= a.order();
        }
        return v;
    };
    auto undigits = [&](const std::vector<int>& v) {
        int x = 0;
        for (int d : v) x = x * a.order() + d;
        return x;
    };
    for (int n = 0; n <= k; ++n) t.level.push_back(tuple_group(n));
    t.face.resize(static_cast<std::size_t>(k + 1));
    t.degen.resize(static_cast<std::size_t>(std::max(k, 0)));
    for (int n = 1; n <= k; ++n)
        for (int i = 0; i <= n; ++i)
            t.face[static_cast<std::size_t>(n)].push_back(
                Hom::make(t.at(n), t.at(n - 1), [&](int x) {
                    std::vector<int> v = digits(x, n);
                    std::vector<int> w;
                    if (i == 0) {
                        w.assign(v.begin() + 1, v.end());
                    } else if (i == n) {
                        w.assign(v.begin(), v.end() - 1);
                    } else {
                        w = v;
                        w[static_cast<std::size_t>(i - 1)] =
                            a.mul(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
                        w.erase(w.begin() + i);
                    }
                    return undigits(w);
                }));
    for (int n = 0; n < k; ++n)
        for (int i = 0; i <= n; ++i)
            t.degen[static_cast<std::size_t>(n)].push_back(
                Hom::make(t.at(n), t.at(n + 1), [&](int x) {
                    std::vector<int> v = digits(x, n);
                    v.insert(v.begin() + i, a.one());
                    return undigits(v);
                }));
    return t;
}

// minimal 3-truncated model with pi_2 = A (A abelian): levels 1, 1, A, A^3
inline TruncatedSimplicialGroup eilenberg_mac_lane_2(const Group& a) {
    if (!a.is_abelian()) throw error("eilenberg_mac_lane_2: needs an abelian group");
    TruncatedSimplicialGroup t;
    t.k = 3;
    Group one = Group::trivial();
    Group a3 = direct_product(direct_product(a, a).group, a).group;
    // element of a3 = (u0*|a| + u1)*|a| + u2
    auto pack = [&](int u0, int u1, int u2) { return (u0 * a.order() + u1) * a.order() + u2; };
    auto un = [&](int x) {
        int u2 = x % a.order();
        x /= a.order();
        int u1 = x % a.order();
        int u0 = x / a.order();
        return std::array<int, 3>{u0, u1, u2};
    };
    t.level = {one, one, a, a3};
    t.face.resize(4);
    t.degen.resize(3);
    t.face[1] = {Hom::identity(one), Hom::identity(one)};
    t.face[2] = {Hom::trivial(a, one), Hom::trivial(a, one), Hom::trivial(a, one)};
    t.face[3] = {Hom::make(a3, a, [&](int x) { return un(x)[0]; }),
                 Hom::make(a3, a, [&](int x) { return a.mul(un(x)[0], un(x)[1]); }),
                 Hom::make(a3, a, [&](int x) { return a.mul(un(x)[1], un(x)[2]); }),
                 Hom::make(a3, a, [&](int x) { return un(x)[2]; })};
    t.degen[0] = {Hom::identity(one)};
    t.degen[1] = {Hom::trivial(one, a), Hom::trivial(one, a)};
    t.degen[2] = {Hom::make(a, a3, [&](int x) { return pack(x, a.one(), a.one()); }),
                  Hom::make(a, a3, [&](int x) { return pack(a.one(), x, a.one()); }),
                  Hom::make(a, a3, [&](int x) { return pack(a.one(), a.one(), x); })};
    CheckReport rep = check_simplicial(t);
    if (!rep.ok()) throw error("eilenberg_mac_lane_2: identities fail: " + rep.summary());
    return t;
}

inline TruncatedSimplicialGroup levelwise_product(const TruncatedSimplicialGroup& a,
                                                  const TruncatedSimplicialGroup& b) {
    if (a.k != b.k) throw error("levelwise_product: truncation mismatch");
    TruncatedSimplicialGroup t;
    t.k = a.k;
    std::vector<ProductResult> prod;
    for (int n = 0; n <= a.k; ++n) prod.push_back(direct_product(a.at(n), b.at(n)));
    for (int n = 0; n <= a.k; ++n) t.level.push_back(prod[static_cast<std::size_t>(n)].group);
    t.face.resize(static_cast<std::size_t>(a.k + 1));
    t.degen.resize(static_cast<std::size_t>(std::max(a.k, 0)));
    auto pairmap = [&](int nsrc, int ndst, const Hom& fa, const Hom& fb) {
        return Hom::make(t.at(nsrc), t.at(ndst), [&](int x) {
            int xa = prod[static_cast<std::size_t>(nsrc)].proj_left(x);
            int xb = prod[static_cast<std::size_t>(nsrc)].proj_right(x);
            return pair_index(b.at(ndst), fa(xa), fb(xb));
        });
    };
    for (int n = 1; n <= a.k; ++n)
        for (int i = 0; i <= n; ++i)
            t.face[static_cast<std::size_t>(n)].push_back(pairmap(n, n - 1, a.d(n, i), b.d(n, i)));
    for (int n = 0; n < a.k; ++n)
        for (int i = 0; i <= n; ++i)
            t.degen[static_cast<std::size_t>(n)].push_back(pairmap(n, n + 1, a.s(n, i), b.s(n, i)));
    return t;
}

// --- level extensions ------------------------------------------------------------

namespace simplicial_detail {

// group structure on a set of (k+2)-tuples of level-k elements, closed under
// componentwise multiplication
struct TupleLevel {
    std::vector<std::vector<int>> elems;  // sorted
    Group group;

    int index_of(const std::vector<int>& v) const {
        auto it = std::lower_bound(elems.begin(), elems.end(), v);
        if (it == elems.end() || *it != v) throw error("tuple level: element not found");
        return static_cast<int>(it - elems.begin());
    }
};

inline TupleLevel build_tuple_level(const Group& base, std::vector<std::vector<int>> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    TupleLevel tl;
    tl.elems = std::move(elems);
    int n = static_cast<int>(tl.elems.size());
    std::vector<int> tab(static_cast<std::size_t>(n) * n);
    std::size_t width = tl.elems.empty() ? 0 : tl.elems[0].size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> prod(width);
            for (std::size_t c = 0; c < width; ++c)
                prod[c] = base.mul(tl.elems[static_cast<std::size_t>(i)][c],
                                   tl.elems[static_cast<std::size_t>(j)][c]);
            tab[static_cast<std::size_t>(i) * n + j] = tl.index_of(prod);
        }
    tl.group = Group::from_table_trusted(std::move(tab), n);
    return tl;
}

// all simplicial-kernel tuples (x_0..x_{k+1}) with d_i x_j = d_{j-1} x_i, i<j
inline std::vector<std::vector<int>> simplicial_kernel_tuples(const TruncatedSimplicialGroup& t,
                                                              long long cap) {
    int k = t.k;
    const Group& g = t.at(k);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k + 2), -1);
    std::function<void(int)> rec = [&](int j) {
        if (j == k + 2) {
            out.push_back(cur);
            if (static_cast<long long>(out.size()) > cap)
                throw enumeration_overflow("simplicial kernel exceeds element budget");
            return;
        }
        for (int x = 0; x < g.order(); ++x) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i) {
                // constraint d_i x_j = d_{j-1} x_i  (faces at level k; both
                // indices stay within 0..k since i < j <= k+1)
                int lhs = t.d(k, i)(x);
                int rhs = t.d(k, j - 1)(cur[static_cast<std::size_t>(i)]);
                ok = lhs == rhs;
            }
            if (ok) {
                cur[static_cast<std::size_t>(j)] = x;
                rec(j + 1);
            }
        }
        cur[static_cast<std::size_t>(j)] = -1;
    };
    rec(0);
    return out;
}

inline TruncatedSimplicialGroup extend_with_level(const TruncatedSimplicialGroup& t,
                                                  const TupleLevel& tl) {
    int k = t.k;
    TruncatedSimplicialGroup out = t;
    out.k = k + 1;
    out.level.push_back(tl.group);
    out.face.resize(static_cast<std::size_t>(k + 2));
    out.degen.resize(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k + 1; ++i)
        out.face[static_cast<std::size_t>(k + 1)].push_back(
            Hom::make(tl.group, t.at(k), [&](int x) {
                return tl.elems[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
            }));
    for (int i = 0; i <= k; ++i)
        out.degen[static_cast<std::size_t>(k)].push_back(
            Hom::make(t.at(k), tl.group, [&](int x) {
                std::vector<int> v(static_cast<std::size_t>(k + 2));
                for (int j = 0; j <= k + 1; ++j) {
                    int val;
                    if (j == i || j == i + 1)
                        val = x;
                    else if (j < i)
                        val = t.s(k - 1, i - 1)(t.d(k, j)(x));
                    else
                        val = t.s(k - 1, i)(t.d(k, j - 1)(x));
                    v[static_cast<std::size_t>(j)] = val;
                }
                return tl.index_of(v);
            }));
    CheckReport rep = check_simplicial(out);
    if (!rep.ok()) throw error("level extension: simplicial identities fail: " + rep.summary());
    return out;
}

}  // namespace simplicial_detail

// Extends a k-truncated group by its simplicial kernel at level k+1: tuples
// of compatible faces, faces the projections, degeneracies induced.
inline TruncatedSimplicialGroup coskeleton_level(const TruncatedSimplicialGroup& t,
                                                 long long cap = 20000) {
    t.validate_shapes();
    if (t.k < 1) throw error("coskeleton_level: need at least one level of faces");
    auto tuples = simplicial_detail::simplicial_kernel_tuples(t, cap);
    auto tl = simplicial_detail::build_tuple_level(t.at(t.k), std::move(tuples));
    return simplicial_detail::extend_with_level(t, tl);
}

// Extends by the degenerate part of the simplicial kernel only: the level the
// (k+1)-skeleton would have.  Computed as the closure of the degeneracy
// images inside the kernel.
inline TruncatedSimplicialGroup skeleton_level(const TruncatedSimplicialGroup& t,
                                               long long cap = 20000) {
    t.validate_shapes();
    if (t.k < 1) throw error("skeleton_level: need at least one level of faces");
    int k = t.k;
    const Group& g = t.at(k);
    std::vector<std::vector<int>> elems;
    for (int i = 0; i <= k; ++i)
        for (int x = 0; x < g.order(); ++x) {
            std::vector<int> v(static_cast<std::size_t>(k + 2));
            for (int j = 0; j <= k + 1; ++j) {
                int val;
                if (j == i || j == i + 1)
                    val = x;
                else if (j < i)
                    val = t.s(k - 1, i - 1)(t.d(k, j)(x));
                else
                    val = t.s(k - 1, i)(t.d(k, j - 1)(x));
                v[static_cast<std::size_t>(j)] = val;
            }
            elems.push_back(std::move(v));
        }
    // close under componentwise products
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot = elems;
        for (const auto& xa : snapshot)
            for (const auto& xb : snapshot) {
                std::vector<int> prod(xa.size());
                for (std::size_t c = 0; c < prod.size(); ++c) prod[c] = g.mul(xa[c], xb[c]);
                auto it = std::lower_bound(elems.begin(), elems.end(), prod);
                if (it == elems.end() || *it != prod) {
                    elems.insert(it, std::move(prod));
                    if (static_cast<long long>(elems.size()) > cap)
                        throw enumeration_overflow("skeleton level exceeds element budget");
                    grew = true;
                }
            }
    }
    auto tl = simplicial_detail::build_tuple_level(g, std::move(elems));
    return simplicial_detail::extend_with_level(t, tl);
}

}  // namespace xsq
