#pragma once

// Shared helpers for the test suites: brute-force isomorphism search and
// subgroup enumeration used as independent oracles against library results.

#include <functional>
#include <optional>
#include <vector>

#include "xsq/hom.hpp"

namespace xsq {
namespace testsupport {

inline std::vector<int> generating_sequence(const Group& g) {
    std::vector<int> gens;
    Subgroup s = subgroup_closure(g, {});
    while (s.order() < g.order()) {
        for (int x = 0; x < g.order(); ++x)
            if (!s.contains(x)) {
                gens.push_back(x);
                break;
            }
        s = subgroup_closure(g, gens);
    }
    return gens;
}

// Builds the hom determined by images of a generating sequence, or nullopt if
// the map fails to be a homomorphism.
inline std::optional<Hom> hom_from_generator_images(const Group& a, const Group& b,
                                                    const std::vector<int>& gens,
                                                    const std::vector<int>& images) {
    std::vector<int> parent(static_cast<std::size_t>(a.order()), -1);
    std::vector<int> via(static_cast<std::size_t>(a.order()), -1);
    std::vector<int> order{a.one()};
    std::vector<char> seen(static_cast<std::size_t>(a.order()), 0);
    seen[static_cast<std::size_t>(a.one())] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int x = order[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int y = a.mul(x, gens[k]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                via[static_cast<std::size_t>(y)] = static_cast<int>(k);
                order.push_back(y);
            }
        }
    }
    if (static_cast<int>(order.size()) != a.order()) return std::nullopt;

    std::vector<int> img(static_cast<std::size_t>(a.order()), -1);
    img[static_cast<std::size_t>(a.one())] = b.one();
    for (std::size_t i = 1; i < order.size(); ++i) {
        int x = order[i];
        img[static_cast<std::size_t>(x)] =
            b.mul(img[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])],
                  images[static_cast<std::size_t>(via[static_cast<std::size_t>(x)])]);
    }
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (img[static_cast<std::size_t>(a.mul(x, y))] !=
                b.mul(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]))
                return std::nullopt;
    return Hom(a, b, img, false);
}

inline std::optional<Hom> find_isomorphism(const Group& a, const Group& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.element_order_histogram() != b.element_order_histogram()) return std::nullopt;
    std::vector<int> gens = generating_sequence(a);
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        int ord = a.element_order(gens[k]);
        for (int y = 0; y < b.order(); ++y)
            if (b.element_order(y) == ord) cands[k].push_back(y);
    }
    std::vector<int> images(gens.size(), 0);
    std::function<std::optional<Hom>(std::size_t)> dfs =
        [&](std::size_t k) -> std::optional<Hom> {
        if (k == gens.size()) {
            auto h = hom_from_generator_images(a, b, gens, images);
            if (h && h->is_isomorphism()) return h;
            return std::nullopt;
        }
        for (int y : cands[k]) {
            images[k] = y;
            if (auto h = dfs(k + 1)) return h;
        }
        return std::nullopt;
    };
    return dfs(0);
}

inline bool isomorphic(const Group& a, const Group& b) {
    return find_isomorphism(a, b).has_value();
}

// All homomorphisms a -> b, enumerated by images of a generating sequence.
inline std::vector<Hom> enumerate_homs(const Group& a, const Group& b) {
    std::vector<int> gens = generating_sequence(a);
    std::vector<Hom> out;
    if (gens.empty()) {
        out.push_back(Hom::trivial(a, b));
        return out;
    }
    std::vector<int> images(gens.size(), 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
        if (k == gens.size()) {
            if (auto h = hom_from_generator_images(a, b, gens, images)) out.push_back(*h);
            return;
        }
        for (int y = 0; y < b.order(); ++y) {
            // image order must divide generator order
            if (a.element_order(gens[k]) % b.element_order(y) != 0) continue;
            images[k] = y;
            dfs(k + 1);
        }
    };
    dfs(0);
    return out;
}

// All subgroups by subset enumeration; only sensible for order <= 16.
inline std::vector<Subgroup> all_subgroups_bruteforce(const Group& g) {
    if (g.order() > 16) throw error("all_subgroups_bruteforce: too large");
    std::vector<Subgroup> out;
    int n = g.order();
    for (unsigned long long bits = 0; bits < (1ULL << n); ++bits) {
        if (!(bits & (1ULL << g.one()))) continue;
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (bits & (1ULL << i)) mask[static_cast<std::size_t>(i)] = 1;
        Subgroup s = subgroup_from_mask(std::move(mask));
        if (is_subgroup(g, s)) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace testsupport
}  // namespace xsq
