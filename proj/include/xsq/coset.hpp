#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup, HLT strategy with
// deterministic row filling.  On success the coset action is the regular
// representation, so the live cosets form a group isomorphic to the presented
// one and we return it as a table group together with the generator images.
//
// The enumeration either completes within max_cosets or raises
// enumeration_overflow ("possibly infinite or too large").

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xsq/fp.hpp"
#include "xsq/group.hpp"

namespace xsq {

struct CosetEnumeration {
    Group group;
    std::vector<int> gen_elements;            // image of each generator
    std::vector<std::vector<int>> gen_perms;  // regular action of each generator

    // Image of a word under the quotient map F(gens) -> group.
    int eval(const Word& w) const {
        int x = group.one();
        for (const Letter& l : w.letters()) {
            int g = gen_elements[static_cast<std::size_t>(l.gen)];
            x = group.mul(x, l.exp > 0 ? g : group.inv(g));
        }
        return x;
    }
};

namespace tc_detail {

class Table {
public:
    Table(int ngens, long long max_cosets) : cols_(2 * ngens), maxc_(max_cosets) { new_coset(); }

    int cols() const { return cols_; }
    static int col(int gen, int exp) { return 2 * gen + (exp > 0 ? 0 : 1); }
    static int inv_col(int c) { return c ^ 1; }

    int find(int a) {
        while (rep_[static_cast<std::size_t>(a)] != a) {
            rep_[static_cast<std::size_t>(a)] =
                rep_[static_cast<std::size_t>(rep_[static_cast<std::size_t>(a)])];
            a = rep_[static_cast<std::size_t>(a)];
        }
        return a;
    }

    int size() const { return static_cast<int>(tab_.size()); }
    bool alive(int a) const { return rep_[static_cast<std::size_t>(a)] == a; }
    int entry(int a, int c) const {
        return tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
    }

    int new_coset() {
        if (static_cast<long long>(tab_.size()) >= maxc_)
            throw enumeration_overflow("coset enumeration exceeded max cosets (" +
                                       std::to_string(maxc_) +
                                       "): possibly infinite or too large");
        tab_.emplace_back(static_cast<std::size_t>(cols_), -1);
        rep_.push_back(static_cast<int>(tab_.size()) - 1);
        return static_cast<int>(tab_.size()) - 1;
    }

    // Install a <-c-> b, propagating coincidences.
    void set(int a, int c, int b) {
        a = find(a);
        b = find(b);
        int have = entry(a, c);
        if (have >= 0) {
            if (find(have) != b) coincide(find(have), b);
            return;
        }
        tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = b;
        int back = entry(b, inv_col(c));
        if (back >= 0) {
            if (find(back) != a) coincide(find(back), a);
        } else {
            tab_[static_cast<std::size_t>(b)][static_cast<std::size_t>(inv_col(c))] = a;
        }
    }

    void coincide(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int dead = queue.back();
            queue.pop_back();
            for (int c = 0; c < cols_; ++c) {
                int d = tab_[static_cast<std::size_t>(dead)][static_cast<std::size_t>(c)];
                if (d < 0) continue;
                tab_[static_cast<std::size_t>(dead)][static_cast<std::size_t>(c)] = -1;
                // drop the mirrored reference to the dead coset
                int& mirror = tab_[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_col(c))];
                if (mirror >= 0 && find(mirror) == find(dead)) mirror = -1;

                int mu = find(dead);
                int nu = find(d);
                int have = tab_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(c)];
                if (have >= 0) {
                    merge(find(have), nu, queue);
                } else {
                    int back = tab_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(inv_col(c))];
                    if (back >= 0) {
                        merge(find(back), mu, queue);
                        mu = find(mu);
                        if (tab_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(c)] < 0) {
                            tab_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(c)] = find(nu);
                        }
                    } else {
                        tab_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(c)] = nu;
                        tab_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(inv_col(c))] = mu;
                    }
                }
            }
        }
    }

    long long live_count() const {
        long long k = 0;
        for (int a = 0; a < size(); ++a)
            if (rep_[static_cast<std::size_t>(a)] == a) ++k;
        return k;
    }

private:
    void merge(int a, int b, std::vector<int>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        int keep = std::min(a, b);
        int kill = std::max(a, b);
        rep_[static_cast<std::size_t>(kill)] = keep;
        queue.push_back(kill);
    }

    int cols_;
    long long maxc_;
    std::vector<std::vector<int>> tab_;
    std::vector<int> rep_;
};

}  // namespace tc_detail

inline CosetEnumeration coset_enumerate(const FpGroup& fp, long long max_cosets = 1000000) {
    fp.check();
    int ng = fp.ngens();
    if (ng == 0) {
        CosetEnumeration r;
        r.group = Group::trivial();
        return r;
    }

    using TT = tc_detail::Table;
    TT tab(ng, max_cosets);

    std::vector<std::vector<int>> rel_cols;
    for (const Word& r : fp.rels) {
        if (r.empty()) continue;
        std::vector<int> cs;
        for (const Letter& l : r.letters()) cs.push_back(TT::col(l.gen, l.exp));
        rel_cols.push_back(std::move(cs));
    }

    auto scan_and_fill = [&](int alpha0, const std::vector<int>& cs) {
        for (;;) {
            if (!tab.alive(alpha0)) alpha0 = tab.find(alpha0);
            int alpha = alpha0;
            int f = alpha;
            std::size_t i = 0;
            while (i < cs.size()) {
                int nxt = tab.entry(f, cs[i]);
                if (nxt < 0) break;
                f = tab.find(nxt);
                ++i;
            }
            if (i == cs.size()) {
                if (f != tab.find(alpha)) tab.coincide(f, tab.find(alpha));
                return;
            }
            int b = tab.find(alpha);
            std::size_t j = cs.size();
            while (j > i) {
                int prv = tab.entry(b, TT::inv_col(cs[j - 1]));
                if (prv < 0) break;
                b = tab.find(prv);
                --j;
            }
            if (j == i) {
                if (f != b) tab.coincide(f, b);
                return;
            }
            if (j == i + 1) {
                tab.set(f, cs[i], b);
                return;
            }
            int fresh = tab.new_coset();
            tab.set(f, cs[i], fresh);
            // rescan from scratch; coincidences may have rearranged the trace
        }
    };

    int rounds = 0;
    for (;;) {
        long long size_before = tab.size();
        long long live_before = tab.live_count();
        for (int alpha = 0; alpha < tab.size(); ++alpha) {
            if (!tab.alive(alpha)) continue;
            for (const auto& cs : rel_cols) {
                scan_and_fill(alpha, cs);
                if (!tab.alive(alpha)) break;
            }
            if (!tab.alive(alpha)) continue;
            for (int c = 0; c < tab.cols(); ++c) {
                if (!tab.alive(alpha)) break;
                if (tab.entry(alpha, c) < 0) {
                    int fresh = tab.new_coset();
                    tab.set(alpha, c, fresh);
                }
            }
        }
        if (tab.size() == size_before && tab.live_count() == live_before) break;
        if (++rounds > 10000) throw error("internal: coset enumeration failed to stabilize");
    }

    // compress live cosets
    std::vector<int> idx(static_cast<std::size_t>(tab.size()), -1);
    std::vector<int> live;
    for (int a = 0; a < tab.size(); ++a)
        if (tab.alive(a)) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(live.size());
            live.push_back(a);
        }
    int n = static_cast<int>(live.size());

    std::vector<std::vector<int>> colperm(static_cast<std::size_t>(tab.cols()),
                                          std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < tab.cols(); ++c) {
            int t = tab.entry(live[static_cast<std::size_t>(a)], c);
            if (t < 0) throw error("internal: incomplete coset table after enumeration");
            colperm[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] =
                idx[static_cast<std::size_t>(tab.find(t))];
        }

    // spanning tree from coset 0
    std::vector<int> order{0};
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> via(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int a = order[qi];
        for (int c = 0; c < tab.cols(); ++c) {
            int b = colperm[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)];
            if (!seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = 1;
                parent[static_cast<std::size_t>(b)] = a;
                via[static_cast<std::size_t>(b)] = c;
                order.push_back(b);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) throw error("internal: coset graph disconnected");

    // regular representation: x * y, where y = parent(y)^c in the coset graph
    std::vector<int> mul(static_cast<std::size_t>(n) * n, -1);
    auto M = [&](int x, int y) -> int& { return mul[static_cast<std::size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x) M(x, 0) = x;
    for (std::size_t oi = 1; oi < order.size(); ++oi) {
        int y = order[oi];
        int p = parent[static_cast<std::size_t>(y)];
        int c = via[static_cast<std::size_t>(y)];
        for (int x = 0; x < n; ++x)
            M(x, y) = colperm[static_cast<std::size_t>(c)][static_cast<std::size_t>(M(x, p))];
    }

    CosetEnumeration res;
    res.group = Group::from_table_trusted(std::move(mul), n);
    for (int g = 0; g < ng; ++g)
        res.gen_elements.push_back(colperm[static_cast<std::size_t>(TT::col(g, 1))][0]);
    for (int g = 0; g < ng; ++g)
        res.gen_perms.push_back(colperm[static_cast<std::size_t>(TT::col(g, 1))]);
    Group::PermRealization pr;
    pr.degree = n;
    pr.gens = res.gen_perms;
    res.group.set_perm_realization(std::move(pr));
    return res;
}

// Closure of a set of permutations of {0..degree-1} into a table group.
// Returns the group plus the element index of each generator.
inline std::pair<Group, std::vector<int>> permutation_group(
    int degree, const std::vector<std::vector<int>>& gens, int max_order = 20000) {
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != degree) throw error("permutation has wrong degree");
        std::vector<char> hit(static_cast<std::size_t>(degree), 0);
        for (int v : p) {
            if (v < 0 || v >= degree) throw error("permutation image out of range");
            if (hit[static_cast<std::size_t>(v)]) throw error("permutation is not a bijection");
            hit[static_cast<std::size_t>(v)] = 1;
        }
    }
    std::vector<int> id(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;

    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(a.size());  // x -> b[a[x]]
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
        return r;
    };

    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t qi = 0; qi < elems.size(); ++qi) {
        for (const auto& g : gens) {
            auto p = compose(elems[qi], g);
            if (index.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(p);
                if (static_cast<int>(elems.size()) > max_order)
                    throw enumeration_overflow("permutation group exceeds element budget");
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<int> tab(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            tab[static_cast<std::size_t>(i) * n + j] = index.at(
                compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
    Group g = Group::from_table_trusted(std::move(tab), n);
    Group::PermRealization pr;
    pr.degree = degree;
    pr.gens = gens;
    g.set_perm_realization(std::move(pr));
    std::vector<int> gidx;
    for (const auto& p : gens) gidx.push_back(index.at(p));
    return {g, gidx};
}

}  // namespace xsq
