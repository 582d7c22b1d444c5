#pragma once

#include <vector>
#include <cstdint>

#include "rational.hpp"

namespace orbiweight {

// One syllable of a word in a free group: generator index and nonzero exponent.
struct Letter {
    int gen = 0;
    i64 exp = 0;
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

// A freely reduced word: adjacent letters have distinct generators, exponents
// are nonzero. Construction and concatenation reduce automatically.
struct Word {
    std::vector<Letter> letters;

    Word() = default;

    static Word one() { return Word{}; }

    static Word gen(int g, i64 e = 1) {
        Word w;
        w.append(g, e);
        return w;
    }

    bool empty() const { return letters.empty(); }

    void append(int g, i64 e) {
        if (e == 0) return;
        if (!letters.empty() && letters.back().gen == g) {
            letters.back().exp += e;
            if (letters.back().exp == 0) letters.pop_back();
            return;
        }
        letters.push_back({g, e});
    }

    void append(const Word& w) {
        for (const auto& l : w.letters) append(l.gen, l.exp);
    }

    Word inverse() const {
        Word w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.append(it->gen, -it->exp);
        return w;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word w = a;
        w.append(b);
        return w;
    }

    Word pow(i64 n) const {
        if (n < 0) return inverse().pow(-n);
        Word acc;
        for (i64 i = 0; i < n; ++i) acc.append(*this);
        return acc;
    }

    // Exponent sum of one generator; invariant under free reduction.
    i64 exponent_sum(int g) const {
        i128 s = 0;
        for (const auto& l : letters)
            if (l.gen == g) s += l.exp;
        return detail::checked_i64(s, "exponent sum");
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// Convenience for building relators u * v^-1 from an equation u = v.
inline Word equation_relator(const Word& lhs, const Word& rhs) {
    return lhs * rhs.inverse();
}

} // namespace orbiweight
