#pragma once

// Finitely presented groups: named generators plus relator words.  These are
// word domains awaiting coset enumeration; nothing here assumes finiteness.

#include <string>
#include <vector>

#include "xsq/snf.hpp"
#include "xsq/word.hpp"

namespace xsq {

struct FpGroup {
    std::vector<std::string> gens;
    std::vector<Word> rels;

    int ngens() const { return static_cast<int>(gens.size()); }

    void check() const {
        for (const Word& r : rels)
            for (const Letter& l : r.letters())
                if (l.gen < 0 || l.gen >= ngens())
                    throw error("relator uses an undeclared generator");
    }
};

inline FpGroup fp_group(std::vector<std::string> gens, const std::vector<std::string>& rels) {
    FpGroup g;
    g.gens = std::move(gens);
    for (const std::string& r : rels) g.rels.push_back(parse_word(r, g.gens));
    g.check();
    return g;
}

// Abelian invariants from the relator exponent-sum matrix.  This is exact for
// the abelianisation of the presented group (possibly infinite).
inline AbelianInvariants abelian_invariants_of_presentation(const FpGroup& g) {
    int n = g.ngens();
    std::vector<long long> m;
    m.reserve(g.rels.size() * static_cast<std::size_t>(n));
    for (const Word& r : g.rels) {
        auto row = r.exponent_sums(n);
        m.insert(m.end(), row.begin(), row.end());
    }
    return abelian_invariants_of_matrix(std::move(m), static_cast<int>(g.rels.size()), n);
}

}  // namespace xsq
