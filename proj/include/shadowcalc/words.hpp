// Free-group words and finite group presentations.
//
// Words are run-length encoded and kept freely reduced at all times, so
// equality of Word values is equality in the free group. Presentations carry
// named generators and a relator list; the exponent matrix abelianizes them,
// which is all the homology and Alexander-matrix code needs.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowcalc/abelian.hpp"
#include "shadowcalc/matrix.hpp"

namespace shadowcalc {

/** One maximal run g^exp inside a word; exp is never 0 in a reduced word. */
struct Letter {
    int gen = 0;
    i64 exp = 0;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
    friend bool operator<(const Letter& a, const Letter& b) {
        return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
    }
};

/** A freely reduced word in the free group on generators 0, 1, 2, ... */
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }

    /** Total letter count with multiplicity, i.e. word length after reduction. */
    i64 length() const {
        i64 n = 0;
        for (const Letter& l : letters) n += l.exp < 0 ? -l.exp : l.exp;
        return n;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

/** Build a reduced word from a raw run sequence (merges runs, drops zeros). */
inline Word reduced(const std::vector<Letter>& raw) {
    Word w;
    for (const Letter& l : raw) {
        if (l.exp == 0) continue;
        if (!w.letters.empty() && w.letters.back().gen == l.gen) {
            w.letters.back().exp += l.exp;
            if (w.letters.back().exp == 0) w.letters.pop_back();
        } else {
            w.letters.push_back(l);
        }
    }
    return w;
}

/** The word g^exp (empty when exp = 0). */
inline Word gen_pow(int gen, i64 exp) {
    Word w;
    if (exp != 0) w.letters.push_back({gen, exp});
    return w;
}

inline Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> raw = a.letters;
    raw.insert(raw.end(), b.letters.begin(), b.letters.end());
    return reduced(raw);
}

inline Word inverse(const Word& a) {
    Word w;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        w.letters.push_back({it->gen, -it->exp});
    return w;
}

/** Conjugate g^-1 * w * g. */
inline Word conjugate(const Word& w, const Word& g) { return inverse(g) * w * g; }

/** Commutator [a, b] = a*b*a^-1*b^-1. */
inline Word commutator(const Word& a, const Word& b) {
    return a * b * inverse(a) * inverse(b);
}

/** Net exponent of each generator (the image in the free abelianization). */
inline std::vector<i64> exponent_vector(const Word& w, int n_generators) {
    std::vector<i64> e(static_cast<std::size_t>(n_generators), 0);
    for (const Letter& l : w.letters) {
        if (l.gen < 0 || l.gen >= n_generators)
            throw std::out_of_range("word uses a generator outside the presentation");
        e[static_cast<std::size_t>(l.gen)] += l.exp;
    }
    return e;
}

/**
 * Cyclic reduction: strip matching first/last runs. Relators are only defined
 * up to cyclic permutation and inversion, so this is the first step of any
 * normalization.
 */
inline Word cyclically_reduced(Word w) {
    while (w.letters.size() >= 2 && w.letters.front().gen == w.letters.back().gen) {
        Letter f = w.letters.front(), b = w.letters.back();
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
        f.exp += b.exp;
        if (f.exp != 0) {
            std::vector<Letter> raw;
            raw.push_back(f);
            raw.insert(raw.end(), w.letters.begin(), w.letters.end());
            w = reduced(raw);
            break;
        }
    }
    return w;
}

/** Render using the given names, e.g. "a*t*a^-2"; "1" for the empty word. */
inline std::string to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (const Letter& l : w.letters) {
        if (!s.empty()) s += "*";
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= names.size())
            throw std::out_of_range("word uses a generator with no name");
        s += names[static_cast<std::size_t>(l.gen)];
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

// ----- presentations -----

/** Finite presentation <generators | relators>. */
struct GroupPresentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int n_generators() const { return static_cast<int>(generator_names.size()); }
};

/** Relators x generators matrix of net exponents (the abelianized relations). */
inline IntMat exponent_matrix(const GroupPresentation& p) {
    IntMat m(static_cast<int>(p.relators.size()), p.n_generators());
    for (int i = 0; i < m.rows; ++i) {
        const std::vector<i64> e = exponent_vector(p.relators[static_cast<std::size_t>(i)],
                                                   p.n_generators());
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = e[static_cast<std::size_t>(j)];
    }
    return m;
}

/** Abelianization Z^generators / (rows of the exponent matrix). */
inline AbelianGroup h1_from_presentation(const GroupPresentation& p) {
    return cokernel_of_rows(exponent_matrix(p));
}

/**
 * Light cleanup: freely and cyclically reduce relators, drop empties, drop
 * exact duplicates (up to inversion). Keeps the generator set fixed.
 */
inline GroupPresentation simplified(GroupPresentation p) {
    std::vector<Word> out;
    for (Word& r : p.relators) {
        Word c = cyclically_reduced(reduced(r.letters));
        if (c.empty()) continue;
        const Word ci = inverse(c);
        bool dup = false;
        for (const Word& q : out)
            if (q == c || q == ci) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(c);
    }
    p.relators = out;
    return p;
}

} // namespace shadowcalc
