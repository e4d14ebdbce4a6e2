#pragma once

// Built-in catalog of small concrete groups, each paired with a presentation.
// Used by the invariant cross-checks and as the fixture pool for the
// inclusion-square suite.

#include <string>
#include <vector>

#include "xsq/coset.hpp"
#include "xsq/hom.hpp"

namespace xsq {
namespace catalog {

inline Group cyclic(int n) {
    if (n <= 0) throw error("cyclic: order must be positive");
    std::vector<int> tab(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tab[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return Group::from_table_trusted(std::move(tab), n);
}

inline Group klein_four() { return direct_product(cyclic(2), cyclic(2)).group; }

inline Group symmetric(int n) {
    if (n < 1 || n > 5) throw error("symmetric: supported for n in 1..5");
    if (n == 1) return Group::trivial();
    std::vector<int> transposition(static_cast<std::size_t>(n));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        transposition[static_cast<std::size_t>(i)] = i;
        cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    std::swap(transposition[0], transposition[1]);
    return permutation_group(n, {transposition, cycle}).first;
}

inline Group alternating(int n) {
    if (n != 4) throw error("alternating: only A4 provided");
    // (0 1 2) and (1 2 3)
    return permutation_group(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}).first;
}

inline Group dihedral(int n) {  // order 2n, n >= 2
    if (n < 2) throw error("dihedral: need n >= 2");
    std::vector<int> rot(static_cast<std::size_t>(n));
    std::vector<int> flip(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = (i + 1) % n;
        flip[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return permutation_group(n, {rot, flip}).first;
}

inline Group quaternion8() {
    return coset_enumerate(fp_group({"a", "b"}, {"a^4", "b^2 a^-2", "b a b^-1 a"})).group;
}

inline Group dicyclic12() {  // also known as Q12 / Dic3
    return coset_enumerate(fp_group({"a", "b"}, {"a^6", "b^2 a^-3", "b a b^-1 a"})).group;
}

struct Entry {
    std::string name;
    Group group;
    FpGroup presentation;
};

// Groups of order <= 12, each with a defining presentation.
inline const std::vector<Entry>& small_groups() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> v;
        auto add = [&](const std::string& name, Group g, FpGroup p) {
            v.push_back({name, std::move(g), std::move(p)});
        };
        add("1", Group::trivial(), fp_group({"a"}, {"a"}));
        add("C2", cyclic(2), fp_group({"a"}, {"a^2"}));
        add("C3", cyclic(3), fp_group({"a"}, {"a^3"}));
        add("C4", cyclic(4), fp_group({"a"}, {"a^4"}));
        add("C2xC2", klein_four(), fp_group({"a", "b"}, {"a^2", "b^2", "a b a^-1 b^-1"}));
        add("C5", cyclic(5), fp_group({"a"}, {"a^5"}));
        add("C6", cyclic(6), fp_group({"a"}, {"a^6"}));
        add("S3", symmetric(3), fp_group({"a", "b"}, {"a^2", "b^3", "(a b)^2"}));
        add("C7", cyclic(7), fp_group({"a"}, {"a^7"}));
        add("C8", cyclic(8), fp_group({"a"}, {"a^8"}));
        add("C4xC2", direct_product(cyclic(4), cyclic(2)).group,
            fp_group({"a", "b"}, {"a^4", "b^2", "a b a^-1 b^-1"}));
        add("C2xC2xC2", direct_product(klein_four(), cyclic(2)).group,
            fp_group({"a", "b", "c"},
                     {"a^2", "b^2", "c^2", "a b a^-1 b^-1", "a c a^-1 c^-1", "b c b^-1 c^-1"}));
        add("D4", dihedral(4), fp_group({"a", "b"}, {"a^4", "b^2", "(a b)^2"}));
        add("Q8", quaternion8(), fp_group({"a", "b"}, {"a^4", "b^2 a^-2", "b a b^-1 a"}));
        add("C9", cyclic(9), fp_group({"a"}, {"a^9"}));
        add("C3xC3", direct_product(cyclic(3), cyclic(3)).group,
            fp_group({"a", "b"}, {"a^3", "b^3", "a b a^-1 b^-1"}));
        add("C10", cyclic(10), fp_group({"a"}, {"a^10"}));
        add("D5", dihedral(5), fp_group({"a", "b"}, {"a^5", "b^2", "(a b)^2"}));
        add("C11", cyclic(11), fp_group({"a"}, {"a^11"}));
        add("C12", cyclic(12), fp_group({"a"}, {"a^12"}));
        add("C6xC2", direct_product(cyclic(6), cyclic(2)).group,
            fp_group({"a", "b"}, {"a^6", "b^2", "a b a^-1 b^-1"}));
        add("A4", alternating(4), fp_group({"a", "b"}, {"a^2", "b^3", "(a b)^3"}));
        add("D6", dihedral(6), fp_group({"a", "b"}, {"a^6", "b^2", "(a b)^2"}));
        add("Dic3", dicyclic12(), fp_group({"a", "b"}, {"a^6", "b^2 a^-3", "b a b^-1 a"}));
        return v;
    }();
    return entries;
}

// Groups of order <= 24 used by the inclusion-square acceptance suite.
inline std::vector<std::pair<std::string, Group>> inclusion_pool() {
    std::vector<std::pair<std::string, Group>> v;
    for (const Entry& e : small_groups())
        if (e.group.order() > 1) v.emplace_back(e.name, e.group);
    v.emplace_back("S4", symmetric(4));
    v.emplace_back("D8", dihedral(8));
    v.emplace_back("C3xS3", direct_product(cyclic(3), symmetric(3)).group);
    v.emplace_back("C2xA4", direct_product(cyclic(2), alternating(4)).group);
    return v;
}

}  // namespace catalog
}  // namespace xsq
