#pragma once

// The shared pool of finite 3-truncated simplicial groups used by the
// functor tests and the acceptance suite: constants, coskeleton extensions,
// nerves, and Eilenberg-Mac Lane style models with prescribed homotopy.

#include <string>
#include <utility>
#include <vector>

#include "xsq/catalog.hpp"
#include "xsq/simplicial.hpp"

namespace xsq {
namespace testsupport {

// 1-truncated model of the presentation data (one generator x of order 4,
// one relation-cell y with boundary x^2): levels C4 and C4 x C2, the extra
// C2 coordinate marking the cell.
inline TruncatedSimplicialGroup c4_cell_model_1() {
    Group c4 = catalog::cyclic(4);
    Group c2 = catalog::cyclic(2);
    auto dp = direct_product(c4, c2);
    const Group& g1 = dp.group;
    Hom d0 = Hom::make(g1, c4, [&](int z) {
        int x = dp.proj_left(z), e = dp.proj_right(z);
        return (x + 4 - 2 * e) % 4;
    });
    Hom d1 = Hom::make(g1, c4, [&](int z) { return dp.proj_left(z); });
    Hom s0 = Hom::make(c4, g1, [&](int x) { return pair_index(c2, x, 0); });
    return from_levels_01(c4, g1, d0, d1, s0);
}

inline TruncatedSimplicialGroup c4_cell_model_3() {
    return coskeleton_level(coskeleton_level(c4_cell_model_1()));
}

struct CorpusEntry {
    std::string name;
    TruncatedSimplicialGroup t;
};

// 3-truncated corpus: at least five models, mixing constants, coskeleton
// extensions, nerves, and a model with nontrivial pi_2.
inline const std::vector<CorpusEntry>& simplicial_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> v;
        v.push_back({"constant-S3", constant_simplicial(catalog::symmetric(3), 3)});
        v.push_back({"constant-C4", constant_simplicial(catalog::cyclic(4), 3)});
        v.push_back({"c4-cell-cosk", c4_cell_model_3()});
        v.push_back({"nerve-C6", nerve(catalog::cyclic(6), 3)});
        v.push_back({"K(C3,2)xC2", levelwise_product(constant_simplicial(catalog::cyclic(2), 3),
                                                     eilenberg_mac_lane_2(catalog::cyclic(3)))});
        v.push_back({"nerve-C2-skel", skeleton_level(nerve(catalog::cyclic(2), 2))});
        return v;
    }();
    return corpus;
}

}  // namespace testsupport
}  // namespace xsq
