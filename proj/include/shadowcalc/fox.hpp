// Fox free calculus and Alexander matrices of finite presentations.
//
// The Fox derivative d/dx_j maps the free group ring to itself by
// d(uv) = du + u*dv, d(x_j) = 1, d(x_j^-1) = -x_j^-1. Applying the
// abelianization generator-by-generator turns the matrix of derivatives of
// the relators into the Alexander matrix over the Laurent ring Z[t1^-1, t1,
// ...], whose elementary ideals are invariants of the presented group.

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "shadowcalc/laurent.hpp"
#include "shadowcalc/words.hpp"

namespace shadowcalc {

/** Finite integer combination of free-group words (an element of Z[F]). */
struct GroupRingElem {
    std::map<Word, i64> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Word& w, i64 c) {
        if (c == 0) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else if ((it->second += c) == 0) {
            terms.erase(it);
        }
    }

    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        return a.terms == b.terms;
    }
};

/**
 * Fox derivative of a word with respect to generator j. Runs g^k expand via
 * d(g^k) = (1 + g + ... + g^(k-1)) for k > 0 and
 * d(g^-k) = -(g^-1 + ... + g^-k).
 */
inline GroupRingElem fox_derivative(const Word& w, int j) {
    GroupRingElem out;
    Word prefix; // product of the letters consumed so far
    for (const Letter& l : w.letters) {
        if (l.gen == j) {
            if (l.exp > 0) {
                for (i64 k = 0; k < l.exp; ++k) out.add(prefix * gen_pow(j, k), 1);
            } else {
                for (i64 k = 1; k <= -l.exp; ++k) out.add(prefix * gen_pow(j, -k), -1);
            }
        }
        prefix = prefix * gen_pow(l.gen, l.exp);
    }
    return out;
}

/**
 * Abelianization data: for each generator, its exponent vector in the free
 * abelianization variables t1..tn (one column per generator).
 */
struct AbelianizationMap {
    int nvars = 0;
    std::vector<Monomial> images; // one exponent vector per generator

    /** phi(w) as a Laurent monomial exponent vector. */
    Monomial apply(const Word& w) const {
        Monomial e(static_cast<std::size_t>(nvars), 0);
        for (const Letter& l : w.letters) {
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
                throw std::out_of_range("word uses a generator outside the abelianization map");
            const Monomial& g = images[static_cast<std::size_t>(l.gen)];
            for (int k = 0; k < nvars; ++k)
                e[static_cast<std::size_t>(k)] += static_cast<int>(l.exp) * g[static_cast<std::size_t>(k)];
        }
        return e;
    }
};

/** phi extended linearly to the group ring: a Laurent polynomial. */
inline LaurentPoly apply_abelianization(const AbelianizationMap& phi, const GroupRingElem& x) {
    LaurentPoly p(phi.nvars);
    for (const auto& [w, c] : x.terms) {
        const Monomial e = phi.apply(w);
        const i64 s = (p.terms.count(e) ? p.terms[e] : 0) + c;
        if (s == 0) p.terms.erase(e);
        else p.terms[e] = s;
    }
    return p;
}

/**
 * Alexander matrix: relators x generators, entry (i, j) = phi(d r_i / d x_j).
 * Each relator must map to 1 under phi (i.e. phi genuinely factors through
 * the presented group); this is checked.
 */
inline LaurentMat alexander_matrix(const GroupPresentation& p, const AbelianizationMap& phi) {
    if (static_cast<int>(phi.images.size()) != p.n_generators())
        throw std::invalid_argument("abelianization map has wrong generator count");
    for (const Word& r : p.relators) {
        const Monomial e = phi.apply(r);
        for (const int v : e)
            if (v != 0) throw std::invalid_argument("relator does not abelianize to 1");
    }
    LaurentMat m(static_cast<int>(p.relators.size()), p.n_generators(), phi.nvars);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = apply_abelianization(
                phi, fox_derivative(p.relators[static_cast<std::size_t>(i)], j));
    return m;
}

/**
 * Whether the d-th elementary ideal is zero: E_d is generated by the
 * (n_generators - d)-minors of the Alexander matrix, so it vanishes iff all
 * those minors are zero. Oversized minor orders (more rows or columns than
 * the matrix has) contribute nothing, making the ideal vacuously zero only
 * if there are no minors of that order at all but the order is positive;
 * order 0 minors are the empty determinant 1, so E_d with
 * n_generators <= d is all of the ring and never zero.
 */
inline bool elementary_ideal_is_zero(const LaurentMat& alexander, int n_generators, int d) {
    const int k = n_generators - d;
    if (k <= 0) return false; // the 0x0 minor is 1
    if (k > alexander.rows || k > alexander.cols) return true; // no minors exist
    for (const LaurentPoly& m : laurent_minors(alexander, k))
        if (!m.is_zero()) return false;
    return true;
}

} // namespace shadowcalc
