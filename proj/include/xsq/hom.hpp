#pragma once

// Homomorphisms between table groups (stored as full element maps, validated
// exhaustively at construction) and group actions P x M -> M.  Also the
// constructions that need them: quotients, subgroup embeddings, direct and
// semidirect products.

#include <functional>
#include <utility>
#include <vector>

#include "xsq/group.hpp"

namespace xsq {

class Hom {
public:
    Hom() = default;

    Hom(Group src, Group dst, std::vector<int> img, bool validate = true)
        : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(img)) {
        if (static_cast<int>(img_.size()) != src_.order())
            throw error("hom image vector has wrong length");
        for (int v : img_)
            if (v < 0 || v >= dst_.order()) throw error("hom image out of range");
        if (validate) {
            for (int a = 0; a < src_.order(); ++a)
                for (int b = 0; b < src_.order(); ++b)
                    if (at(src_.mul(a, b)) != dst_.mul(at(a), at(b)))
                        throw error("map is not a homomorphism at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
        }
    }

    template <class F>
    static Hom make(const Group& s, const Group& d, F f) {
        std::vector<int> img(static_cast<std::size_t>(s.order()));
        for (int a = 0; a < s.order(); ++a) img[static_cast<std::size_t>(a)] = f(a);
        return Hom(s, d, std::move(img));
    }

    static Hom identity(const Group& g) {
        return make(g, g, [](int a) { return a; });
    }
    static Hom trivial(const Group& s, const Group& d) {
        return Hom(s, d, std::vector<int>(static_cast<std::size_t>(s.order()), d.one()), false);
    }

    int operator()(int x) const { return at(x); }
    const Group& source() const { return src_; }
    const Group& target() const { return dst_; }
    const std::vector<int>& images() const { return img_; }

    Hom then(const Hom& g) const {  // x -> g(this(x))
        if (!(dst_ == g.src_)) throw error("hom composition: middle groups differ");
        return Hom(src_, g.dst_, [&] {
            std::vector<int> v(img_.size());
            for (std::size_t i = 0; i < img_.size(); ++i) v[i] = g.at(img_[i]);
            return v;
        }(), false);
    }

    Subgroup kernel() const {
        std::vector<char> m(static_cast<std::size_t>(src_.order()), 0);
        for (int a = 0; a < src_.order(); ++a) m[static_cast<std::size_t>(a)] = at(a) == dst_.one();
        return subgroup_from_mask(std::move(m));
    }

    Subgroup image() const {
        std::vector<char> m(static_cast<std::size_t>(dst_.order()), 0);
        for (int v : img_) m[static_cast<std::size_t>(v)] = 1;
        return subgroup_from_mask(std::move(m));
    }

    bool is_injective() const { return kernel().order() == 1; }
    bool is_surjective() const { return image().order() == dst_.order(); }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    Hom inverse() const {
        if (!is_isomorphism()) throw error("inverse of a non-isomorphism");
        std::vector<int> v(static_cast<std::size_t>(dst_.order()), -1);
        for (int a = 0; a < src_.order(); ++a) v[static_cast<std::size_t>(at(a))] = a;
        return Hom(dst_, src_, std::move(v), false);
    }

    bool equals(const Hom& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && img_ == o.img_;
    }

private:
    int at(int x) const { return img_[static_cast<std::size_t>(x)]; }

    Group src_, dst_;
    std::vector<int> img_;
};

// Left action of P on M by automorphisms.
class GroupAction {
public:
    GroupAction() = default;

    GroupAction(Group p, Group m, std::vector<int> tab, bool validate = true)
        : p_(std::move(p)), m_(std::move(m)), tab_(std::move(tab)) {
        if (static_cast<long long>(tab_.size()) !=
            static_cast<long long>(p_.order()) * m_.order())
            throw error("action table has wrong size");
        for (int v : tab_)
            if (v < 0 || v >= m_.order()) throw error("action table entry out of range");
        if (validate) check();
    }

    template <class F>
    static GroupAction make(const Group& p, const Group& m, F f) {
        std::vector<int> t(static_cast<std::size_t>(p.order()) * m.order());
        for (int a = 0; a < p.order(); ++a)
            for (int x = 0; x < m.order(); ++x)
                t[static_cast<std::size_t>(a) * m.order() + x] = f(a, x);
        return GroupAction(p, m, std::move(t));
    }

    static GroupAction trivial(const Group& p, const Group& m) {
        return make(p, m, [](int, int x) { return x; });
    }

    static GroupAction conjugation(const Group& g) {
        return make(g, g, [&](int a, int x) { return g.conj(a, x); });
    }

    int operator()(int p, int m) const {
        return tab_[static_cast<std::size_t>(p) * m_.order() + m];
    }

    const Group& acting() const { return p_; }
    const Group& acted() const { return m_; }

    Hom automorphism(int p) const {
        return Hom::make(m_, m_, [&](int x) { return (*this)(p, x); });
    }

    // p-action restricted/transported along a hom q: Q -> P.
    GroupAction pullback(const Hom& q) const {
        if (!(q.target() == p_)) throw error("action pullback: hom target mismatch");
        return make(q.source(), m_, [&](int a, int x) { return (*this)(q(a), x); });
    }

    bool equals(const GroupAction& o) const {
        return p_ == o.p_ && m_ == o.m_ && tab_ == o.tab_;
    }

private:
    void check() const {
        for (int x = 0; x < m_.order(); ++x)
            if ((*this)(p_.one(), x) != x) throw error("action: identity must act trivially");
        for (int a = 0; a < p_.order(); ++a) {
            // automorphism: multiplicative and (by finiteness) bijective
            std::vector<char> hit(static_cast<std::size_t>(m_.order()), 0);
            for (int x = 0; x < m_.order(); ++x) hit[static_cast<std::size_t>((*this)(a, x))] = 1;
            for (char h : hit)
                if (!h) throw error("action: some element acts non-bijectively");
            for (int x = 0; x < m_.order(); ++x)
                for (int y = 0; y < m_.order(); ++y)
                    if ((*this)(a, m_.mul(x, y)) != m_.mul((*this)(a, x), (*this)(a, y)))
                        throw error("action: element does not act as automorphism");
        }
        for (int a = 0; a < p_.order(); ++a)
            for (int b = 0; b < p_.order(); ++b)
                for (int x = 0; x < m_.order(); ++x)
                    if ((*this)(p_.mul(a, b), x) != (*this)(a, (*this)(b, x)))
                        throw error("action: composition axiom fails");
    }

    Group p_, m_;
    std::vector<int> tab_;
};

// --- quotients and embeddings ------------------------------------------------

// g / n for n normal in g (verified).  Cosets are numbered in order of first
// appearance scanning elements 0..n-1, so the identity coset is 0.
inline std::pair<Group, Hom> quotient(const Group& g, const Subgroup& n) {
    if (!is_subgroup(g, n)) throw error("quotient: not a subgroup");
    if (!is_normal(g, n)) throw error("quotient: subgroup is not normal");

    std::vector<int> coset_of(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : n.elems) coset_of[static_cast<std::size_t>(g.mul(x, h))] = c;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> tab(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            tab[static_cast<std::size_t>(a) * q + b] =
                coset_of[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(a)],
                                                        reps[static_cast<std::size_t>(b)]))];
    Group quo = Group::from_table_trusted(std::move(tab), q);
    Hom proj(g, quo, coset_of, false);
    return {quo, proj};
}

// Realizes a subgroup as a group in its own right; returns (group, inclusion).
inline std::pair<Group, Hom> subgroup_as_group(const Group& g, const Subgroup& s) {
    if (!is_subgroup(g, s)) throw error("subgroup_as_group: not a subgroup");
    int n = s.order();
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(s.elems[static_cast<std::size_t>(i)])] = i;
    std::vector<int> tab(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            tab[static_cast<std::size_t>(i) * n + j] =
                pos[static_cast<std::size_t>(g.mul(s.elems[static_cast<std::size_t>(i)],
                                                   s.elems[static_cast<std::size_t>(j)]))];
    Group h = Group::from_table_trusted(std::move(tab), n);
    Hom incl = Hom(h, g, s.elems, false);
    return {h, incl};
}

// --- products ----------------------------------------------------------------

struct ProductResult {
    Group group;
    Hom inj_left;    // first factor -> product
    Hom inj_right;   // second factor -> product
    Hom proj_left;   // defined for direct products only
    Hom proj_right;
};

inline int pair_index(const Group& right, int a, int b) { return a * right.order() + b; }

inline ProductResult direct_product(const Group& a, const Group& b) {
    int n = a.order() * b.order();
    std::vector<int> tab(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    tab[static_cast<std::size_t>(pair_index(b, x1, y1)) * n +
                        pair_index(b, x2, y2)] = pair_index(b, a.mul(x1, x2), b.mul(y1, y2));
    Group p = Group::from_table_trusted(std::move(tab), n);
    ProductResult r{p,
                    Hom::make(a, p, [&](int x) { return pair_index(b, x, b.one()); }),
                    Hom::make(b, p, [&](int y) { return pair_index(b, a.one(), y); }),
                    Hom::make(p, a, [&](int z) { return z / b.order(); }),
                    Hom::make(p, b, [&](int z) { return z % b.order(); })};
    return r;
}

// Semidirect product M x| N for an action of N on M, with multiplication
// (m,n)(m',n') = (m * (n.m'), n n').  M embeds as the normal factor.
inline ProductResult semidirect_product(const Group& m, const Group& n, const GroupAction& act) {
    if (!(act.acting() == n) || !(act.acted() == m))
        throw error("semidirect_product: action must be of the second factor on the first");
    int sz = m.order() * n.order();
    std::vector<int> tab(static_cast<std::size_t>(sz) * sz);
    for (int m1 = 0; m1 < m.order(); ++m1)
        for (int n1 = 0; n1 < n.order(); ++n1)
            for (int m2 = 0; m2 < m.order(); ++m2)
                for (int n2 = 0; n2 < n.order(); ++n2) {
                    int mm = m.mul(m1, act(n1, m2));
                    int nn = n.mul(n1, n2);
                    tab[static_cast<std::size_t>(pair_index(n, m1, n1)) * sz +
                        pair_index(n, m2, n2)] = pair_index(n, mm, nn);
                }
    Group p = Group::from_table_trusted(std::move(tab), sz);
    ProductResult r{p,
                    Hom::make(m, p, [&](int x) { return pair_index(n, x, n.one()); }),
                    Hom::make(n, p, [&](int y) { return pair_index(n, m.one(), y); }),
                    Hom(),
                    Hom()};
    return r;
}

inline std::pair<int, int> unpair_index(const Group& right, int z) {
    return {z / right.order(), z % right.order()};
}

// --- abelian invariants -------------------------------------------------------

// Invariant factors d_1 | d_2 | ... | d_k (each > 1, ascending) of g/[g,g],
// computed from the element-order structure of the abelianisation: for each
// prime p the partition exponents are recovered from the counts of elements
// of order dividing p^k.
inline std::vector<long long> abelian_invariants(const Group& g) {
    Group a = quotient(g, commutator_subgroup(g)).first;
    int n = a.order();
    if (n == 1) return {};

    std::vector<int> primes;
    {
        int m = n;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.push_back(m);
    }

    // per-prime partition, largest exponent first
    std::vector<std::vector<int>> parts;
    for (int p : primes) {
        std::vector<int> lambda;
        long long prev = 1;
        long long pk = 1;
        for (int k = 1;; ++k) {
            pk *= p;
            long long cnt = 0;
            for (int x = 0; x < n; ++x)
                if (a.pow(x, pk) == a.one()) ++cnt;
            // number of parts >= k is log_p(cnt/prev)
            long long ratio = cnt / prev;
            int parts_ge_k = 0;
            while (ratio > 1) {
                ratio /= p;
                ++parts_ge_k;
            }
            if (parts_ge_k == 0) break;
            if (static_cast<int>(lambda.size()) < parts_ge_k) lambda.resize(parts_ge_k, 0);
            for (int i = 0; i < parts_ge_k; ++i) lambda[static_cast<std::size_t>(i)] = k;
            prev = cnt;
            if (cnt == n) break;
        }
        parts.push_back(lambda);
    }

    std::size_t width = 0;
    for (const auto& l : parts) width = std::max(width, l.size());
    std::vector<long long> factors(width, 1);
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& l = parts[pi];
        for (std::size_t i = 0; i < l.size(); ++i) {
            long long pe = 1;
            for (int k = 0; k < l[i]; ++k) pe *= primes[pi];
            factors[i] *= pe;  // l sorted descending: aligns largest with largest
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace xsq
