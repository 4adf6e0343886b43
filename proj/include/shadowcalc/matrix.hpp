// Dense integer matrices and Smith normal form.
//
// Matrices here are small (chain complexes of desk-scale polyhedra, random
// property-test inputs up to 8x8), so everything is plain row-major int64.
// Elimination runs on overflow-checked __int128 and falls back to
// arbitrary-precision integers if 128 bits ever overflow, so snf() either
// returns exact results or throws; it never silently wraps. snf() returns the
// full transform data U*A*V = D together with the inverses of U and V, which
// the homology code uses to change basis.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shadowcalc {

using i64 = std::int64_t;
using i128 = __int128;

/** A rows x cols integer matrix, row-major; zero-sized dimensions allowed. */
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a; // rows*cols entries

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

/** Multiply two matrices (dimension-checked). */
inline IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            i128 acc = 0;
            for (int k = 0; k < x.cols; ++k)
                acc += static_cast<i128>(x.at(i, k)) * y.at(k, j);
            if (acc > static_cast<i128>(INT64_MAX) || acc < static_cast<i128>(INT64_MIN))
                throw std::overflow_error("matrix product exceeds 64 bits");
            z.at(i, j) = static_cast<i64>(acc);
        }
    return z;
}

// ----- arbitrary-precision matrices -----

using BigInt = boost::multiprecision::cpp_int;

/**
 * Matrix of arbitrary-precision integers. SNF transform entries genuinely
 * exceed 64 bits for some small inputs (they are only determinant-bounded per
 * elimination sweep, and sweeps compound), so the transforms are stored
 * exactly rather than narrowed.
 */
struct BigMat {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a; // rows*cols entries

    BigMat() = default;
    BigMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static BigMat identity(int n) {
        BigMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const BigMat& x, const BigMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline BigMat operator*(const BigMat& x, const BigMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    BigMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            BigInt acc = 0;
            for (int k = 0; k < x.cols; ++k) acc += x.at(i, k) * y.at(k, j);
            z.at(i, j) = acc;
        }
    return z;
}

inline BigMat to_big(const IntMat& m) {
    BigMat b(m.rows, m.cols);
    for (std::size_t k = 0; k < m.a.size(); ++k) b.a[k] = m.a[k];
    return b;
}

/** Narrow back to int64, throwing std::overflow_error if an entry does not fit. */
inline IntMat to_int(const BigMat& m) {
    IntMat r(m.rows, m.cols);
    for (std::size_t k = 0; k < m.a.size(); ++k) {
        if (m.a[k] > INT64_MAX || m.a[k] < INT64_MIN)
            throw std::overflow_error("matrix entry exceeds 64 bits");
        r.a[k] = m.a[k].template convert_to<i64>();
    }
    return r;
}

// ----- Smith normal form -----

/** Result of snf(): U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... */
struct SnfResult {
    IntMat d;             // diagonal, nonnegative, divisor chain
    BigMat u, v;          // u: rows x rows, v: cols x cols
    BigMat u_inv, v_inv;  // exact integer inverses, tracked during elimination
    int rank = 0;         // number of nonzero diagonal entries of d
    std::vector<i64> divisors; // the nonzero diagonal, nonnegative, divisor chain
};

namespace detail {

// Signal that a 128-bit intermediate overflowed; snf() retries the whole
// elimination with arbitrary-precision integers when it sees this.
struct snf_retry {};

// __int128 with overflow-checked ring operations. Division guards the single
// UB case (most-negative value over -1); everything else throws snf_retry so
// the caller can rerun exactly instead of computing garbage.
struct C128 {
    i128 v = 0;
    C128() = default;
    C128(i128 x) : v(x) {}

    friend C128 operator+(C128 a, C128 b) {
        i128 r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw snf_retry{};
        return C128{r};
    }
    friend C128 operator-(C128 a, C128 b) {
        i128 r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw snf_retry{};
        return C128{r};
    }
    friend C128 operator*(C128 a, C128 b) {
        i128 r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw snf_retry{};
        return C128{r};
    }
    friend C128 operator/(C128 a, C128 b) {
        if (b.v == -1) return C128{0} - a;
        return C128{a.v / b.v};
    }
    friend C128 operator%(C128 a, C128 b) {
        if (b.v == -1) return C128{0};
        return C128{a.v % b.v};
    }
    friend bool operator==(C128 a, C128 b) { return a.v == b.v; }
    friend bool operator!=(C128 a, C128 b) { return a.v != b.v; }
    friend bool operator<(C128 a, C128 b) { return a.v < b.v; }
    friend bool operator>(C128 a, C128 b) { return a.v > b.v; }
};

template <class Z> inline Z z_abs(Z x) { return x < Z(0) ? Z(0) - x : x; }

inline i64 narrow_entry(C128 x) {
    if (x.v > static_cast<i128>(INT64_MAX) || x.v < static_cast<i128>(INT64_MIN))
        throw std::overflow_error("smith divisor exceeds 64 bits");
    return static_cast<i64>(x.v);
}
inline i64 narrow_entry(const BigInt& x) {
    if (x > INT64_MAX || x < INT64_MIN)
        throw std::overflow_error("smith divisor exceeds 64 bits");
    return x.template convert_to<i64>();
}

inline BigInt big_entry(C128 x) { return BigInt(x.v); }
inline const BigInt& big_entry(const BigInt& x) { return x; }

// Quotient rounded to nearest, so a - q*b has magnitude at most |b|/2; small
// remainders are what keep elimination multipliers, and with them the
// transform entries, from blowing up.
template <class Z>
inline Z nearest_quotient(Z a, Z b) {
    Z q = a / b;
    const Z r = a - q * b;
    if (Z(2) * z_abs(r) > z_abs(b)) q = ((r > Z(0)) == (b > Z(0))) ? q + Z(1) : q - Z(1);
    return q;
}

// Shared state of one elimination: d is the working matrix, u/v accumulate the
// row/column transforms and ui/vi their inverses, updated in lockstep so that
// u*input*v == d holds after every elementary operation.
template <class Z>
struct SnfWork {
    int rows = 0, cols = 0;
    std::vector<std::vector<Z>> d, u, v, ui, vi;

    explicit SnfWork(const IntMat& m) : rows(m.rows), cols(m.cols) {
        d.assign(rows, std::vector<Z>(cols, Z(0)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) d[i][j] = Z(m.at(i, j));
        u.assign(rows, std::vector<Z>(rows, Z(0)));
        ui.assign(rows, std::vector<Z>(rows, Z(0)));
        for (int i = 0; i < rows; ++i) u[i][i] = ui[i][i] = Z(1);
        v.assign(cols, std::vector<Z>(cols, Z(0)));
        vi.assign(cols, std::vector<Z>(cols, Z(0)));
        for (int i = 0; i < cols; ++i) v[i][i] = vi[i][i] = Z(1);
    }

    // Row op: row_i -= q*row_k on d and u; the inverse op on ui is col_k += q*col_i.
    void row_sub(int i, int k, const Z& q) {
        for (int j = 0; j < cols; ++j) d[i][j] = d[i][j] - q * d[k][j];
        for (int j = 0; j < rows; ++j) u[i][j] = u[i][j] - q * u[k][j];
        for (int j = 0; j < rows; ++j) ui[j][k] = ui[j][k] + q * ui[j][i];
    }
    // Col op: col_j -= q*col_k on d and v; the inverse op on vi is row_k += q*row_j.
    void col_sub(int j, int k, const Z& q) {
        for (int i = 0; i < rows; ++i) d[i][j] = d[i][j] - q * d[i][k];
        for (int i = 0; i < cols; ++i) v[i][j] = v[i][j] - q * v[i][k];
        for (int i = 0; i < cols; ++i) vi[k][i] = vi[k][i] + q * vi[j][i];
    }
    void row_swap(int i, int k) {
        if (i == k) return;
        std::swap(d[i], d[k]);
        std::swap(u[i], u[k]);
        for (int j = 0; j < rows; ++j) std::swap(ui[j][i], ui[j][k]);
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < rows; ++i) std::swap(d[i][j], d[i][k]);
        for (int i = 0; i < cols; ++i) std::swap(v[i][j], v[i][k]);
        std::swap(vi[j], vi[k]);
    }
    void row_negate(int i) {
        for (int j = 0; j < cols; ++j) d[i][j] = Z(0) - d[i][j];
        for (int j = 0; j < rows; ++j) u[i][j] = Z(0) - u[i][j];
        for (int j = 0; j < rows; ++j) ui[j][i] = Z(0) - ui[j][i];
    }

    // One row-echelon sweep: gcd-clear below each pivot, then size-reduce the
    // entries above it to at most half the pivot. The size reduction is what
    // keeps u (and d) near determinant scale instead of growing multiplicatively
    // across sweeps.
    void row_echelon_pass() {
        int t = 0;
        for (int j = 0; j < cols && t < rows; ++j) {
            while (true) {
                int best = -1;
                for (int i = t; i < rows; ++i)
                    if (d[i][j] != Z(0) && (best < 0 || z_abs(d[i][j]) < z_abs(d[best][j])))
                        best = i;
                if (best < 0) break;
                row_swap(t, best);
                bool clean = true;
                for (int i = t + 1; i < rows; ++i)
                    if (d[i][j] != Z(0)) {
                        row_sub(i, t, nearest_quotient(d[i][j], d[t][j]));
                        if (d[i][j] != Z(0)) clean = false;
                    }
                if (clean) break;
            }
            if (d[t][j] == Z(0)) continue; // column had no pivot
            if (d[t][j] < Z(0)) row_negate(t);
            for (int i = 0; i < t; ++i)
                if (d[i][j] != Z(0)) row_sub(i, t, nearest_quotient(d[i][j], d[t][j]));
            ++t;
        }
    }

    // Column analogue of row_echelon_pass.
    void col_echelon_pass() {
        int t = 0;
        for (int i = 0; i < rows && t < cols; ++i) {
            while (true) {
                int best = -1;
                for (int j = t; j < cols; ++j)
                    if (d[i][j] != Z(0) && (best < 0 || z_abs(d[i][j]) < z_abs(d[i][best])))
                        best = j;
                if (best < 0) break;
                col_swap(t, best);
                bool clean = true;
                for (int j = t + 1; j < cols; ++j)
                    if (d[i][j] != Z(0)) {
                        col_sub(j, t, nearest_quotient(d[i][j], d[i][t]));
                        if (d[i][j] != Z(0)) clean = false;
                    }
                if (clean) break;
            }
            if (d[i][t] == Z(0)) continue;
            for (int j = 0; j < t; ++j)
                if (d[i][j] != Z(0)) col_sub(j, t, nearest_quotient(d[i][j], d[i][t]));
            ++t;
        }
    }

    bool is_diagonal() const {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j && d[i][j] != Z(0)) return false;
        return true;
    }
};

template <class Z>
inline SnfResult snf_run(const IntMat& input) {
    SnfWork<Z> w(input);
    const int n = std::min(input.rows, input.cols);

    // Alternate row and column sweeps until d is diagonal, then weave any pair
    // of diagonal entries violating the divisor chain back into the sweeps.
    // Each weave replaces the earlier entry by a proper divisor of itself, so
    // the loop terminates; the cap is a hard backstop that should be
    // unreachable.
    for (int guard = 0;; ++guard) {
        if (guard > 400) throw std::runtime_error("snf failed to converge");
        if (w.is_diagonal()) {
            for (int i = 0; i < n; ++i)
                if (w.d[i][i] < Z(0)) w.row_negate(i);
            int bad = -1;
            for (int k = 0; k + 1 < n; ++k)
                if (w.d[k + 1][k + 1] != Z(0) &&
                    (w.d[k][k] == Z(0) || w.d[k + 1][k + 1] % w.d[k][k] != Z(0))) {
                    bad = k;
                    break;
                }
            if (bad < 0) break;
            w.col_sub(bad, bad + 1, Z(-1)); // fold col bad+1 into col bad
        }
        w.row_echelon_pass();
        w.col_echelon_pass();
    }

    SnfResult res;
    res.d = IntMat(w.rows, w.cols);
    res.u = BigMat(w.rows, w.rows);
    res.u_inv = BigMat(w.rows, w.rows);
    res.v = BigMat(w.cols, w.cols);
    res.v_inv = BigMat(w.cols, w.cols);
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < w.cols; ++j) res.d.at(i, j) = narrow_entry(w.d[i][j]);
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < w.rows; ++j) {
            res.u.at(i, j) = big_entry(w.u[i][j]);
            res.u_inv.at(i, j) = big_entry(w.ui[i][j]);
        }
    for (int i = 0; i < w.cols; ++i)
        for (int j = 0; j < w.cols; ++j) {
            res.v.at(i, j) = big_entry(w.v[i][j]);
            res.v_inv.at(i, j) = big_entry(w.vi[i][j]);
        }
    for (int i = 0; i < std::min(w.rows, w.cols) && res.d.at(i, i) != 0; ++i)
        res.divisors.push_back(res.d.at(i, i));
    res.rank = static_cast<int>(res.divisors.size());
    return res;
}

} // namespace detail

/**
 * Smith normal form with full transforms: U*A*V = D diagonal, nonnegative,
 * d1 | d2 | ..., with exact integer inverses of U and V. Runs on
 * overflow-checked 128-bit arithmetic and transparently retries with
 * arbitrary-precision integers if an intermediate ever overflows, so results
 * are always exact. The diagonal is returned as int64 (it throws
 * std::overflow_error in the out-of-scope case of divisors past 2^63); the
 * transforms are arbitrary-precision.
 */
inline SnfResult snf(const IntMat& input) {
    try {
        return detail::snf_run<detail::C128>(input);
    } catch (const detail::snf_retry&) {
        return detail::snf_run<BigInt>(input);
    }
}

/** Rank of an integer matrix (via snf). */
inline int rank_of(const IntMat& m) { return snf(m).rank; }

/**
 * Basis of the integer kernel of A (as columns of the result). With U*A*V = D,
 * A * (columns of V past the rank) = 0, and those columns are part of a basis
 * of Z^cols, so they span ker A over Z.
 */
inline IntMat kernel_basis(const IntMat& m) {
    const SnfResult s = snf(m);
    const int k = m.cols - s.rank;
    BigMat out(m.cols, k);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = s.v.at(i, s.rank + j);
    return to_int(out);
}

} // namespace shadowcalc
