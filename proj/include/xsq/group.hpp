#pragma once

// Concrete finite groups as full multiplication tables.  Elements are the
// indices 0..n-1.  A Group is a cheap-to-copy immutable handle; all derived
// objects (subgroups, homomorphisms, products, quotients) work on element
// indices.  Table validation is exhaustive up to kAssocCheckBound and sampled
// beyond it, with the choice reported by table_check_mode().

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <vector>

#include "xsq/common.hpp"

namespace xsq {

inline constexpr int kAssocCheckBound = 300;

class Group {
public:
    struct PermRealization {
        int degree = 0;
        std::vector<std::vector<int>> gens;  // images, one vector per generator
    };

    Group() : d_(trivial_data()) {}

    // Validating constructor for externally supplied tables.
    static Group from_table(const std::vector<int>& flat, int n) {
        return Group(make_data(flat, n, /*trusted=*/false));
    }
    static Group from_table(const std::vector<std::vector<int>>& rows) {
        int n = static_cast<int>(rows.size());
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw error("multiplication table is not square");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return from_table(flat, n);
    }

    // For tables produced by constructions that guarantee the axioms
    // (quotients, products, coset enumeration).  Only cheap checks run.
    static Group from_table_trusted(std::vector<int> flat, int n) {
        return Group(make_data(std::move(flat), n, /*trusted=*/true));
    }

    static Group trivial() { return Group(); }

    int order() const { return d_->n; }
    int one() const { return d_->id; }
    int mul(int a, int b) const { return d_->mul[static_cast<std::size_t>(a) * d_->n + b]; }
    int inv(int a) const { return d_->inv[static_cast<std::size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int comm(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

    int pow(int a, long long e) const {
        int r = one();
        int base = e >= 0 ? a : inv(a);
        long long k = e >= 0 ? e : -e;
        while (k > 0) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != one()) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (int a = 0; a < order(); ++a)
            for (int b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // order -> multiplicity, sorted by order
    std::vector<std::pair<int, int>> element_order_histogram() const {
        std::map<int, int> h;
        for (int a = 0; a < order(); ++a) h[element_order(a)]++;
        return {h.begin(), h.end()};
    }

    const char* table_check_mode() const { return d_->exhaustive_check ? "exhaustive" : "sampled"; }

    bool same(const Group& o) const { return d_ == o.d_; }
    friend bool operator==(const Group& a, const Group& b) {
        return a.d_ == b.d_ || (a.d_->n == b.d_->n && a.d_->mul == b.d_->mul);
    }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

    void set_perm_realization(PermRealization p) {
        const_cast<Data*>(d_.get())->perm = std::make_shared<PermRealization>(std::move(p));
    }
    const PermRealization* perm_realization() const { return d_->perm.get(); }

private:
    struct Data {
        int n = 1;
        int id = 0;
        std::vector<int> mul;
        std::vector<int> inv;
        bool exhaustive_check = true;
        std::shared_ptr<PermRealization> perm;
    };

    explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    static std::shared_ptr<const Data> trivial_data() {
        static std::shared_ptr<const Data> t = [] {
            auto d = std::make_shared<Data>();
            d->n = 1;
            d->id = 0;
            d->mul = {0};
            d->inv = {0};
            return d;
        }();
        return t;
    }

    static std::shared_ptr<const Data> make_data(std::vector<int> flat, int n, bool trusted) {
        if (n <= 0) throw error("group order must be positive");
        if (static_cast<long long>(flat.size()) != static_cast<long long>(n) * n)
            throw error("multiplication table has wrong size");
        for (int v : flat)
            if (v < 0 || v >= n) throw error("multiplication table entry out of range");

        auto d = std::make_shared<Data>();
        d->n = n;
        d->mul = std::move(flat);

        auto at = [&](int a, int b) { return d->mul[static_cast<std::size_t>(a) * n + b]; };

        // identity
        d->id = -1;
        for (int e = 0; e < n && d->id < 0; ++e) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
            if (ok) d->id = e;
        }
        if (d->id < 0) throw error("table has no identity element");

        // inverses
        d->inv.assign(static_cast<std::size_t>(n), -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (at(a, b) == d->id && at(b, a) == d->id) {
                    d->inv[static_cast<std::size_t>(a)] = b;
                    break;
                }
            if (d->inv[static_cast<std::size_t>(a)] < 0)
                throw error("table element " + std::to_string(a) + " has no inverse");
        }

        if (!trusted) {
            if (n <= kAssocCheckBound) {
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c)
                            if (at(at(a, b), c) != at(a, at(b, c)))
                                throw error("table is not associative at (" + std::to_string(a) +
                                            "," + std::to_string(b) + "," + std::to_string(c) + ")");
            } else {
                // sampled associativity; deterministic LCG
                d->exhaustive_check = false;
                std::uint64_t s = 0x9e3779b97f4a7c15ULL;
                auto rnd = [&] {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    return static_cast<int>(s % static_cast<std::uint64_t>(n));
                };
                for (int t = 0; t < 200000; ++t) {
                    int a = rnd(), b = rnd(), c = rnd();
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw error("table is not associative (sampled witness)");
                }
            }
        }
        return d;
    }

    std::shared_ptr<const Data> d_;
};

// --- subgroups --------------------------------------------------------------

struct Subgroup {
    std::vector<int> elems;  // sorted ascending
    std::vector<char> mask;  // size = ambient order

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const { return mask[static_cast<std::size_t>(x)] != 0; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems == b.elems; }
    friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elems < b.elems; }
};

inline Subgroup subgroup_from_mask(std::vector<char> mask) {
    Subgroup s;
    s.mask = std::move(mask);
    for (std::size_t i = 0; i < s.mask.size(); ++i)
        if (s.mask[i]) s.elems.push_back(static_cast<int>(i));
    return s;
}

inline Subgroup trivial_subgroup(const Group& g) {
    std::vector<char> m(static_cast<std::size_t>(g.order()), 0);
    m[static_cast<std::size_t>(g.one())] = 1;
    return subgroup_from_mask(std::move(m));
}

inline Subgroup full_subgroup(const Group& g) {
    return subgroup_from_mask(std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

// Closure of a generating set under multiplication (finite, so inverses come
// for free).
inline Subgroup subgroup_closure(const Group& g, const std::vector<int>& gens) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> queue;
    seen[static_cast<std::size_t>(g.one())] = 1;
    queue.push_back(g.one());
    for (int x : gens) {
        if (x < 0 || x >= g.order()) throw error("subgroup generator out of range");
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            queue.push_back(x);
        }
    }
    std::vector<int> base = queue;  // identity plus generators
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int y : base) {
            int z = g.mul(x, y);
            if (!seen[static_cast<std::size_t>(z)]) {
                seen[static_cast<std::size_t>(z)] = 1;
                queue.push_back(z);
            }
        }
    }
    // base may not include inverses explicitly, but closure of a finite
    // semigroup inside a group is a subgroup; still, iterate until stable
    // against all discovered elements.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) cur.push_back(static_cast<int>(i));
        for (int x : cur)
            for (int y : cur) {
                int z = g.mul(x, y);
                if (!seen[static_cast<std::size_t>(z)]) {
                    seen[static_cast<std::size_t>(z)] = 1;
                    grew = true;
                }
            }
    }
    return subgroup_from_mask(std::move(seen));
}

inline bool is_subgroup(const Group& g, const Subgroup& s) {
    if (!s.contains(g.one())) return false;
    for (int a : s.elems)
        for (int b : s.elems)
            if (!s.contains(g.mul(a, b))) return false;
    return true;
}

inline bool is_normal(const Group& g, const Subgroup& s) {
    for (int x : s.elems)
        for (int h = 0; h < g.order(); ++h)
            if (!s.contains(g.conj(h, x))) return false;
    return true;
}

// Smallest normal subgroup containing gens.
inline Subgroup normal_closure(const Group& g, const std::vector<int>& gens) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> queue;
    auto add = [&](int x) {
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            queue.push_back(x);
        }
    };
    add(g.one());
    for (int x : gens) {
        if (x < 0 || x >= g.order()) throw error("normal closure generator out of range");
        add(x);
    }
    // close under conjugation, then multiplication, repeating until stable
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int h = 0; h < g.order(); ++h) add(g.conj(h, x));
        for (std::size_t j = 0; j < queue.size(); ++j) add(g.mul(x, queue[j]));
    }
    return subgroup_from_mask(std::move(seen));
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.mask.size() != b.mask.size()) throw error("subgroup intersection: ambient mismatch");
    std::vector<char> m(a.mask.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.mask[i] && b.mask[i];
    return subgroup_from_mask(std::move(m));
}

inline Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens = a.elems;
    gens.insert(gens.end(), b.elems.begin(), b.elems.end());
    return subgroup_closure(g, gens);
}

inline Subgroup commutator_subgroup(const Group& g) {
    std::vector<int> gens;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) gens.push_back(g.comm(a, b));
    return subgroup_closure(g, gens);
}

inline Subgroup center(const Group& g) {
    std::vector<char> m(static_cast<std::size_t>(g.order()), 0);
    for (int a = 0; a < g.order(); ++a) {
        bool c = true;
        for (int b = 0; b < g.order() && c; ++b) c = g.mul(a, b) == g.mul(b, a);
        m[static_cast<std::size_t>(a)] = c;
    }
    return subgroup_from_mask(std::move(m));
}

// Every normal subgroup is a join of normal closures of single elements, so
// closing the element closures under pairwise join enumerates all of them.
inline std::vector<Subgroup> all_normal_subgroups(const Group& g) {
    std::set<Subgroup> out;
    out.insert(trivial_subgroup(g));
    for (int x = 0; x < g.order(); ++x) out.insert(normal_closure(g, {x}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subgroup> cur(out.begin(), out.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Subgroup jn = join(g, cur[i], cur[j]);
                if (out.insert(jn).second) grew = true;
            }
    }
    return {out.begin(), out.end()};
}

}  // namespace xsq
