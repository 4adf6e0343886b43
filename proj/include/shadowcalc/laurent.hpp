// Multivariate Laurent polynomials with integer coefficients.
//
// Terms are kept in a map from exponent vector to coefficient, so arithmetic
// is exact and representation is canonical (no zero coefficients stored).
// These are the entries of Alexander matrices; matrices stay tiny (a handful
// of generators), so determinants by cofactor expansion are fine.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowcalc/matrix.hpp"

namespace shadowcalc {

/** Exponent vector of a Laurent monomial, one slot per variable. */
using Monomial = std::vector<int>;

/** Sum of c * t1^e1 * ... * tn^en terms; zero coefficients never stored. */
struct LaurentPoly {
    int nvars = 0;
    std::map<Monomial, i64> terms;

    explicit LaurentPoly(int n = 0) : nvars(n) {}

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
};

/** The constant polynomial c in n variables. */
inline LaurentPoly laurent_const(int nvars, i64 c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms[Monomial(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

/** The single term c * t^e. */
inline LaurentPoly laurent_term(const Monomial& e, i64 c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms[e] = c;
    return p;
}

namespace detail {
inline void laurent_shape_check(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("laurent variable count mismatch");
}
} // namespace detail

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    detail::laurent_shape_check(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms) {
        const i64 s = (r.terms.count(e) ? r.terms[e] : 0) + c;
        if (s == 0) r.terms.erase(e);
        else r.terms[e] = s;
    }
    return r;
}

inline LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.nvars);
    for (const auto& [e, c] : a.terms) r.terms[e] = -c;
    return r;
}

inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    detail::laurent_shape_check(a, b);
    LaurentPoly r(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Monomial e(static_cast<std::size_t>(a.nvars));
            for (int k = 0; k < a.nvars; ++k)
                e[static_cast<std::size_t>(k)] =
                    ea[static_cast<std::size_t>(k)] + eb[static_cast<std::size_t>(k)];
            const i64 s = (r.terms.count(e) ? r.terms[e] : 0) + ca * cb;
            if (s == 0) r.terms.erase(e);
            else r.terms[e] = s;
        }
    return r;
}

/**
 * Normalize away the unit ambiguity +-t^e: shift each variable's minimal
 * exponent to 0, then make the leading (lexicographically first) coefficient
 * positive. Laurent units are exactly the +-monomials, so two polynomials
 * agree up to a unit iff their normal forms are equal.
 */
inline LaurentPoly unit_normalized(const LaurentPoly& a) {
    if (a.terms.empty()) return a;
    Monomial shift = a.terms.begin()->first;
    for (const auto& [e, c] : a.terms)
        for (std::size_t k = 0; k < shift.size(); ++k)
            shift[k] = std::min(shift[k], e[k]);
    LaurentPoly r(a.nvars);
    for (const auto& [e, c] : a.terms) {
        Monomial s(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) s[k] = e[k] - shift[k];
        r.terms[s] = c;
    }
    if (r.terms.begin()->second < 0) r = -r;
    return r;
}

/** Whether a and b differ by a unit +-t^e (e.g. representative-independent minors). */
inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    return unit_normalized(a) == unit_normalized(b);
}

/** Render like "t1^-1*t2^2 - 2*t1 + 3"; variables print as t1, t2, ... */
inline std::string to_string(const LaurentPoly& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : p.terms) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(k + 1);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        const i64 mag = c < 0 ? -c : c;
        std::string term;
        if (mono.empty()) term = std::to_string(mag);
        else if (mag == 1) term = mono;
        else term = std::to_string(mag) + "*" + mono;
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

// ----- matrices of Laurent polynomials -----

/** Small dense matrix over the Laurent ring. */
struct LaurentMat {
    int rows = 0;
    int cols = 0;
    int nvars = 0;
    std::vector<LaurentPoly> a;

    LaurentMat() = default;
    LaurentMat(int r, int c, int n)
        : rows(r), cols(c), nvars(n),
          a(static_cast<std::size_t>(r) * c, LaurentPoly(n)) {}

    LaurentPoly& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const LaurentPoly& at(int r, int c) const {
        return a[static_cast<std::size_t>(r) * cols + c];
    }
};

/** Determinant by cofactor expansion (matrices here have at most ~5 rows). */
inline LaurentPoly laurent_det(const LaurentMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows == 0) return laurent_const(m.nvars, 1);
    if (m.rows == 1) return m.at(0, 0);
    LaurentPoly det(m.nvars);
    for (int i = 0; i < m.rows; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        LaurentMat sub(m.rows - 1, m.cols - 1, m.nvars);
        for (int r = 0, sr = 0; r < m.rows; ++r) {
            if (r == i) continue;
            for (int c = 1; c < m.cols; ++c) sub.at(sr, c - 1) = m.at(r, c);
            ++sr;
        }
        const LaurentPoly term = m.at(i, 0) * laurent_det(sub);
        det = (i % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/** The square submatrix picking the given rows and columns (used for minors). */
inline LaurentMat laurent_submatrix(const LaurentMat& m, const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
    LaurentMat s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.nvars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
    return s;
}

namespace detail {
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}
} // namespace detail

/** All k x k minors (empty when k exceeds either dimension; k=0 gives {1}). */
inline std::vector<LaurentPoly> laurent_minors(const LaurentMat& m, int k) {
    std::vector<LaurentPoly> out;
    if (k < 0 || k > m.rows || k > m.cols) return out;
    if (k == 0) {
        out.push_back(laurent_const(m.nvars, 1));
        return out;
    }
    detail::for_each_subset(m.rows, k, [&](const std::vector<int>& ri) {
        detail::for_each_subset(m.cols, k, [&](const std::vector<int>& ci) {
            out.push_back(laurent_det(laurent_submatrix(m, ri, ci)));
        });
    });
    return out;
}

} // namespace shadowcalc
