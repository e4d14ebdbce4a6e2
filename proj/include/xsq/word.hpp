#pragma once

// Freely reduced words over an indexed generating set.  A word is a sequence
// of letters (generator index, exponent +1/-1); the empty word is the
// identity.  Words are the element type for finitely presented groups and for
// the word-level free simplicial skeletons.

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "xsq/common.hpp"

namespace xsq {

struct Letter {
    int gen;
    int exp;  // +1 or -1

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }

    static Word gen(int g, int e = 1) {
        if (e == 0) return Word();
        std::vector<Letter> ls;
        int sign = e > 0 ? 1 : -1;
        for (int i = 0; i != e; i += sign) ls.push_back({g, sign});
        return Word(std::move(ls));
    }

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    Word operator*(const Word& o) const {
        std::vector<Letter> ls = letters_;
        ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
        return Word(std::move(ls));
    }

    Word inverse() const {
        std::vector<Letter> ls;
        ls.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            ls.push_back({it->gen, -it->exp});
        return Word(std::move(ls));
    }

    Word conj(const Word& by) const {  // by * w * by^-1
        return by * (*this) * by.inverse();
    }

    static Word comm(const Word& a, const Word& b) {  // [a,b] = a b a^-1 b^-1
        return a * b * a.inverse() * b.inverse();
    }

    // Applies a generator substitution g -> images[g] homomorphically.
    Word substitute(const std::vector<Word>& images) const {
        std::vector<Letter> out;
        for (const Letter& l : letters_) {
            const Word& im = images.at(static_cast<std::size_t>(l.gen));
            if (l.exp > 0) {
                out.insert(out.end(), im.letters_.begin(), im.letters_.end());
            } else {
                Word iv = im.inverse();
                out.insert(out.end(), iv.letters_.begin(), iv.letters_.end());
            }
        }
        return Word(std::move(out));
    }

    // Sum of exponents of each generator (abelianised image).
    std::vector<long long> exponent_sums(int ngens) const {
        std::vector<long long> s(static_cast<std::size_t>(ngens), 0);
        for (const Letter& l : letters_) s.at(static_cast<std::size_t>(l.gen)) += l.exp;
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        for (std::size_t i = 0; i < a.letters_.size(); ++i) {
            if (a.letters_[i].gen != b.letters_[i].gen) return a.letters_[i].gen < b.letters_[i].gen;
            if (a.letters_[i].exp != b.letters_[i].exp) return a.letters_[i].exp < b.letters_[i].exp;
        }
        return false;
    }

private:
    void reduce() {
        std::vector<Letter> out;
        out.reserve(letters_.size());
        for (const Letter& l : letters_) {
            if (l.exp != 1 && l.exp != -1) throw error("word letter exponent must be +1 or -1");
            if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
                out.pop_back();
            else
                out.push_back(l);
        }
        letters_ = std::move(out);
    }

    std::vector<Letter> letters_;
};

// --- word <-> string, over named generators -------------------------------
//
// Grammar: a word is a sequence of factors separated by optional '*' or
// whitespace; a factor is a generator name optionally followed by ^<int>.
// Single-letter names may be concatenated without separators ("abab").
// "1" denotes the empty word.

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    const auto& ls = w.letters();
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].exp == ls[i].exp) ++j;
        long long e = static_cast<long long>(j - i) * ls[i].exp;
        if (!out.empty()) out += '*';
        out += names.at(static_cast<std::size_t>(ls[i].gen));
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

namespace word_detail {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& names;
    std::size_t i = 0;

    void skip() {
        while (i < text.size() && (text[i] == ' ' || text[i] == '*' || text[i] == '\t')) ++i;
    }

    bool at_end() {
        skip();
        return i >= text.size();
    }

    long long exponent() {
        if (i >= text.size() || text[i] != '^') return 1;
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("malformed exponent in word '" + text + "'");
        long long v = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    }

    static Word power(const Word& w, long long e) {
        Word out;
        Word base = e >= 0 ? w : w.inverse();
        long long k = e >= 0 ? e : -e;
        for (long long t = 0; t < k; ++t) out = out * base;
        return out;
    }

    Word factor() {
        skip();
        if (i < text.size() && text[i] == '(') {
            ++i;
            Word inner = word(')');
            if (i >= text.size() || text[i] != ')')
                throw parse_error("unbalanced parenthesis in word '" + text + "'");
            ++i;
            return power(inner, exponent());
        }
        if (i < text.size() && text[i] == '1') {
            ++i;
            (void)exponent();
            return Word();
        }
        // longest-match generator name
        int g = -1;
        std::size_t best = 0;
        for (std::size_t k = 0; k < names.size(); ++k) {
            const std::string& nm = names[k];
            if (nm.size() > best && text.compare(i, nm.size(), nm) == 0) {
                g = static_cast<int>(k);
                best = nm.size();
            }
        }
        if (g < 0) throw parse_error("unknown generator at '" + text.substr(i) + "'");
        i += best;
        return power(Word::gen(g), exponent());
    }

    Word word(char stop) {
        Word out;
        for (;;) {
            skip();
            if (i >= text.size() || text[i] == stop) break;
            out = out * factor();
        }
        return out;
    }
};

}  // namespace word_detail

inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    word_detail::Parser p{text, names};
    Word w = p.word('\0');
    if (!p.at_end()) throw parse_error("trailing input in word '" + text + "'");
    return w;
}

}  // namespace xsq
