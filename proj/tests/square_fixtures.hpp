#pragma once

// Deliberately corrupted crossed 2-cubes, one batch per cube axiom.  Each
// fixture records which axioms the corruption is expected to break; the
// expected sets were computed by running the checker on the corrupted data
// and reviewing the fallout (a single bad table entry usually trips several
// related axioms).

#include <string>
#include <vector>

#include "xsq/catalog.hpp"
#include "xsq/crossed_square.hpp"

namespace xsq {
namespace testsupport {

struct CorruptFixture {
    std::string name;
    int target_axiom;  // 1..11
    Cube2 cube;
    std::vector<std::string> expected_failing;
};

inline CrossedSquare base_square_d4() {
    Group d4 = catalog::dihedral(4);
    // rotation subgroup C4 and the Klein subgroup containing the reflections
    Subgroup c4;
    Subgroup klein;
    for (const Subgroup& s : all_normal_subgroups(d4)) {
        if (s.order() != 4) continue;
        auto [g, incl] = subgroup_as_group(d4, s);
        bool cyclic = false;
        for (int x = 0; x < 4; ++x) cyclic = cyclic || g.element_order(x) == 4;
        if (cyclic)
            c4 = s;
        else if (klein.elems.empty())
            klein = s;
    }
    if (c4.elems.empty() || klein.elems.empty()) throw error("fixture: D4 subgroups not found");
    return inclusion_square(d4, c4, klein);
}

inline CrossedSquare base_square_s4() {
    Group s4 = catalog::symmetric(4);
    Subgroup a4, v4;
    for (const Subgroup& s : all_normal_subgroups(s4)) {
        if (s.order() == 12) a4 = s;
        if (s.order() == 4) v4 = s;
    }
    return inclusion_square(s4, a4, v4);
}

inline void set_h_entry(Cube2& c, int A, int B, int a, int b, int v) {
    c.h[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)]
     [static_cast<std::size_t>(a) * c.grp[static_cast<std::size_t>(B)].order() + b] = v;
}

// first non-identity element of a corner
inline int nontrivial(const Cube2& c, int A) {
    const Group& g = c.grp[static_cast<std::size_t>(A)];
    for (int x = 0; x < g.order(); ++x)
        if (x != g.one()) return x;
    throw error("fixture: corner is trivial");
}

inline std::vector<CorruptFixture> corrupted_cube_fixtures() {
    std::vector<CorruptFixture> out;
    CrossedSquare d4sq = base_square_d4();

    {
        // mu_2 on the M corner must be the identity; swap in inversion of C4
        Cube2 c = expand_cube(d4sq);
        const Group& M = c.grp[1];
        c.mu[1][1] = Hom::make(M, M, [&](int x) { return M.inv(x); });
        out.push_back({"mu2-on-M-inverted", 1, c,
                       {"axiom1", "axiom2"}});
    }
    {
        // lambda replaced by the trivial map: the square no longer commutes
        Cube2 c = expand_cube(d4sq);
        const Group& L = c.grp[3];
        const Group& M = c.grp[1];
        c.mu[1][3] = Hom::trivial(L, M);
        out.push_back({"lambda-trivialised", 2, c, {"axiom2", "axiom3"}});
    }
    {
        // one corrupted h(m,n) entry
        Cube2 c = expand_cube(d4sq);
        int m0 = nontrivial(c, 1), n0 = nontrivial(c, 2);
        int old = c.h_at(1, 2, m0, n0);
        set_h_entry(c, 1, 2, m0, n0, c.grp[3].mul(old, nontrivial(c, 3)));
        out.push_back({"h-MN-entry", 3, c,
                       {"axiom10", "axiom3", "axiom5", "axiom6", "axiom8", "axiom9"}});
    }
    {
        // corrupt the folded h(M,L) table together with its mirror, so axiom 6
        // survives but the axiom 4 route comparisons break
        Cube2 c = expand_cube(d4sq);
        int m0 = nontrivial(c, 1), l0 = nontrivial(c, 3);
        int old = c.h_at(1, 3, m0, l0);
        int bad = c.grp[3].mul(old, nontrivial(c, 3));
        set_h_entry(c, 1, 3, m0, l0, bad);
        set_h_entry(c, 3, 1, l0, m0, c.grp[3].inv(bad));
        out.push_back({"h-ML-folded", 4, c,
                       {"axiom10", "axiom11", "axiom3", "axiom4", "axiom5", "axiom8", "axiom9"}});
    }
    {
        // same-corner pairing must be the commutator
        Cube2 c = expand_cube(d4sq);
        int m0 = nontrivial(c, 1);
        int m1 = c.grp[1].mul(m0, m0);
        set_h_entry(c, 1, 1, m0, m1, nontrivial(c, 1));
        set_h_entry(c, 1, 1, m1, m0, c.grp[1].inv(nontrivial(c, 1)));
        out.push_back({"h-MM-noncommutator", 5, c,
                       {"axiom10", "axiom11", "axiom3", "axiom4", "axiom5", "axiom8", "axiom9"}});
    }
    {
        // break only the antisymmetry pairing h(N,M) vs h(M,N)
        Cube2 c = expand_cube(d4sq);
        int m0 = nontrivial(c, 1), n0 = nontrivial(c, 2);
        int old = c.h_at(2, 1, n0, m0);
        set_h_entry(c, 2, 1, n0, m0, c.grp[3].mul(old, nontrivial(c, 3)));
        out.push_back({"h-NM-asymmetric", 6, c,
                       {"axiom10", "axiom3", "axiom5", "axiom6", "axiom8", "axiom9"}});
    }
    {
        // h with an identity argument must vanish
        Cube2 c = expand_cube(d4sq);
        int n0 = nontrivial(c, 2);
        set_h_entry(c, 1, 2, c.grp[1].one(), n0, nontrivial(c, 3));
        out.push_back({"h-identity-argument", 7, c,
                       {"axiom10", "axiom11", "axiom3", "axiom4", "axiom5", "axiom6", "axiom7", "axiom8", "axiom9"}});
    }
    {
        // corrupt a P-against-M pairing entry: breaks the action reading
        Cube2 c = expand_cube(d4sq);
        int p0 = nontrivial(c, 0), m0 = nontrivial(c, 1);
        int old = c.h_at(0, 1, p0, m0);
        set_h_entry(c, 0, 1, p0, m0, c.grp[1].mul(old, nontrivial(c, 1)));
        out.push_back({"h-PM-action", 8, c,
                       {"axiom10", "axiom11", "axiom3", "axiom4", "axiom5", "axiom6", "axiom8", "axiom9"}});
    }
    {
        // corrupt a P-against-N pairing entry
        Cube2 c = expand_cube(d4sq);
        int p0 = nontrivial(c, 0), n0 = nontrivial(c, 2);
        int old = c.h_at(0, 2, p0, n0);
        set_h_entry(c, 0, 2, p0, n0, c.grp[2].mul(old, nontrivial(c, 2)));
        out.push_back({"h-PN-action", 9, c,
                       {"axiom10", "axiom11", "axiom3", "axiom5", "axiom6", "axiom8", "axiom9"}});
    }
    {
        // corrupt the P-against-L pairing: the equivariance axiom 10 sees it
        Cube2 c = expand_cube(d4sq);
        int p0 = nontrivial(c, 0), l0 = nontrivial(c, 3);
        int old = c.h_at(0, 3, p0, l0);
        set_h_entry(c, 0, 3, p0, l0, c.grp[3].mul(old, nontrivial(c, 3)));
        out.push_back({"h-PL-action", 10, c,
                       {"axiom10", "axiom3", "axiom4", "axiom5", "axiom6", "axiom8"}});
    }
    {
        // corrupt h(M,N) on a pair of involutions chosen so the Jacobi-style
        // cycle of axiom 11 breaks as well
        CrossedSquare s4sq = base_square_s4();
        Cube2 c = expand_cube(s4sq);
        int m0 = nontrivial(c, 1), n0 = nontrivial(c, 2);
        int old = c.h_at(1, 2, m0, n0);
        set_h_entry(c, 1, 2, m0, n0, c.grp[3].mul(old, nontrivial(c, 3)));
        out.push_back({"h-MN-entry-s4", 11, c,
                       {"axiom10", "axiom11", "axiom3", "axiom4", "axiom5", "axiom6", "axiom8", "axiom9"}});
    }
    return out;
}

}  // namespace testsupport
}  // namespace xsq
