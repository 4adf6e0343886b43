// Finitely generated abelian groups in divisor-chain normal form, plus the
// homology of a two-step chain complex C2 -> C1 -> C0 over the integers.
//
// An AbelianGroup is Z^rank + Z/d1 + Z/d2 + ... with 1 < d1 | d2 | ...; this is
// the output normal form everywhere (Z/1 factors are dropped).

#pragma once

#include <string>
#include <vector>

#include "shadowcalc/matrix.hpp"

namespace shadowcalc {

/** Z^rank plus cyclic torsion with a divisibility chain (each entry > 1). */
struct AbelianGroup {
    int rank = 0;
    std::vector<i64> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool has_torsion() const { return !torsion.empty(); }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }
};

/** Human-readable form: "0", "Z", "Z^2 + Z/3", ... */
inline std::string to_string(const AbelianGroup& g) {
    std::string s;
    if (g.rank == 1) s = "Z";
    else if (g.rank > 1) s = "Z^" + std::to_string(g.rank);
    for (const i64 d : g.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

/**
 * Cokernel Z^ambient / (column span of m), where m is an ambient x k matrix
 * whose columns are the subgroup generators.
 */
inline AbelianGroup cokernel(const IntMat& m) {
    const SnfResult s = snf(m);
    AbelianGroup g;
    g.rank = m.rows - s.rank;
    for (const i64 d : s.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

/** Quotient by the row span instead (rows = relation vectors on Z^cols). */
inline AbelianGroup cokernel_of_rows(const IntMat& m) {
    const SnfResult s = snf(m); // divisors of A equal those of A^T
    AbelianGroup g;
    g.rank = m.cols - s.rank;
    for (const i64 d : s.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

/** H0, H1, H2 of C2 --d2--> C1 --d1--> C0. */
struct HomologyTriple {
    AbelianGroup h0, h1, h2;
};

/**
 * Homology of the complex given by boundary matrices d1 (C0 x C1) and
 * d2 (C1 x C2), both column-as-image-of-basis-cell. Requires d1*d2 = 0.
 *
 * H1 is computed by expressing im d2 in an integer basis of ker d1: with
 * U*d1*V = D, the kernel basis is the trailing columns of V, and coordinates
 * of any kernel vector in that basis are read off from V^-1.
 */
inline HomologyTriple homology_from_boundaries(const IntMat& d1, const IntMat& d2) {
    if (d1.cols != d2.rows) throw std::invalid_argument("chain complex shape mismatch");
    {
        const IntMat z = d1 * d2;
        for (const i64 v : z.a)
            if (v != 0) throw std::invalid_argument("not a chain complex: d1*d2 != 0");
    }
    HomologyTriple h;
    h.h0 = cokernel(d1);

    const SnfResult s1 = snf(d1);
    const int kdim = d1.cols - s1.rank; // dim ker d1
    // Coordinates of im d2 in the kernel basis: rows (rank..end) of V^-1 * d2.
    const BigMat coords_full = s1.v_inv * to_big(d2);
    BigMat coords(kdim, d2.cols);
    for (int i = 0; i < kdim; ++i)
        for (int j = 0; j < d2.cols; ++j)
            coords.at(i, j) = coords_full.at(s1.rank + i, j);
    // Sanity: the leading rows must vanish (im d2 lies in ker d1).
    for (int i = 0; i < s1.rank; ++i)
        for (int j = 0; j < d2.cols; ++j)
            if (coords_full.at(i, j) != 0)
                throw std::invalid_argument("im d2 not contained in ker d1");
    h.h1 = cokernel(to_int(coords));

    h.h2.rank = d2.cols - rank_of(d2);
    return h;
}

} // namespace shadowcalc
