#pragma once

// Integer matrix diagonalisation (Smith normal form) and the relation-matrix
// route to abelian invariants.  This is the independent oracle used against
// group-theoretic computations elsewhere, so it deliberately shares no code
// with them.

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <vector>

#include "xsq/common.hpp"

namespace xsq {

struct AbelianInvariants {
    std::vector<long long> torsion;  // invariant factors > 1, ascending, d_i | d_{i+1}
    int free_rank = 0;

    bool is_finite() const { return free_rank == 0; }

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.torsion == b.torsion && a.free_rank == b.free_rank;
    }
};

namespace detail {

inline long long llabs_checked(long long v) {
    if (v == LLONG_MIN) throw error("integer overflow in Smith normal form");
    return v < 0 ? -v : v;
}

inline long long mul_checked(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    __int128 r = static_cast<__int128>(a) * b;
    if (r > static_cast<__int128>(1) << 62 || r < -(static_cast<__int128>(1) << 62))
        throw error("integer overflow in Smith normal form");
    return static_cast<long long>(r);
}

}  // namespace detail

// Diagonalises m (rows x cols, row-major) in place style over Z; returns the
// diagonal entries d_0, d_1, ... with d_i | d_{i+1}, all >= 0.
inline std::vector<long long> smith_normal_form(std::vector<long long> m, int rows, int cols) {
    if (rows < 0 || cols < 0 || static_cast<long long>(m.size()) != 1LL * rows * cols)
        throw error("smith_normal_form: bad dimensions");
    auto at = [&](int i, int j) -> long long& { return m[static_cast<std::size_t>(i) * cols + j]; };

    int t = 0;
    int nmin = std::min(rows, cols);
    while (t < nmin) {
        // find pivot: smallest nonzero |entry| in the lower-right block
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                long long v = detail::llabs_checked(at(i, j));
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // all zero

        // move pivot to (t,t)
        if (pi != t)
            for (int j = 0; j < cols; ++j) std::swap(at(pi, j), at(t, j));
        if (pj != t)
            for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, t));

        bool clean = true;
        long long p = at(t, t);
        for (int i = t + 1; i < rows; ++i) {
            if (at(i, t) % p != 0) {
                clean = false;
            }
            long long q = at(i, t) / p;
            if (q != 0)
                for (int j = t; j < cols; ++j)
                    at(i, j) -= detail::mul_checked(q, at(t, j));
        }
        for (int j = t + 1; j < cols; ++j) {
            long long q = at(t, j) / p;
            if (q != 0)
                for (int i = t; i < rows; ++i)
                    at(i, j) -= detail::mul_checked(q, at(i, t));
        }

        bool zeroed = true;
        for (int i = t + 1; i < rows && zeroed; ++i) zeroed = at(i, t) == 0;
        for (int j = t + 1; j < cols && zeroed; ++j) zeroed = at(t, j) == 0;
        if (!zeroed || !clean) continue;  // re-pick a smaller pivot

        // divisibility of the remaining block by the pivot
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (at(i, j) % p != 0) {
                    // fold the offending row in and restart this pivot
                    for (int jj = t; jj < cols; ++jj) at(t, jj) += at(i, jj);
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }

    std::vector<long long> d;
    for (int i = 0; i < nmin; ++i) d.push_back(detail::llabs_checked(at(i, i)));
    return d;
}

// Abelian invariants of the abelian group presented by <ngens | rows of m>.
inline AbelianInvariants abelian_invariants_of_matrix(std::vector<long long> m, int rows,
                                                      int ngens) {
    std::vector<long long> d = smith_normal_form(std::move(m), rows, ngens);
    AbelianInvariants out;
    int rank_nonzero = 0;
    for (long long v : d)
        if (v != 0) ++rank_nonzero;
    out.free_rank = ngens - rank_nonzero;
    for (long long v : d)
        if (v > 1) out.torsion.push_back(v);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

}  // namespace xsq
