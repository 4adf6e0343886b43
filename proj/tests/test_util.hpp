// Shared helpers for the test suite: deterministic RNG, a brute-force
// minor-gcd oracle for Smith normal form (divisor theorem: the product of the
// first k diagonal entries equals the gcd of all k x k minors), and a random
// isomorphic-copy generator for pairs.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "shadowcalc/cocycle.hpp"
#include "shadowcalc/graph.hpp"
#include "shadowcalc/matrix.hpp"

namespace testutil {

using shadowcalc::IntMat;
using shadowcalc::i128;
using shadowcalc::i64;

/** Deterministic RNG; every suite seeds explicitly so runs are reproducible. */
inline std::mt19937& rng(unsigned seed = 0) {
    static std::mt19937 gen(12345);
    if (seed != 0) gen.seed(seed);
    return gen;
}

inline IntMat random_matrix(std::mt19937& gen, int max_dim, int max_abs) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    std::uniform_int_distribution<int> sparse(0, 3);
    IntMat m(dim(gen), dim(gen));
    for (i64& v : m.a) v = sparse(gen) == 0 ? 0 : val(gen);
    return m;
}

/** Determinant of a k x k integer matrix by fraction-free (Bareiss) elimination. */
inline i128 det_bareiss(std::vector<std::vector<i128>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    i128 sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/** gcd of all k x k minors (0 when every minor vanishes). */
inline i128 minor_gcd(const IntMat& m, int k) {
    std::vector<int> ri(k), ci(k);
    i128 g = 0;
    // Enumerate k-subsets of rows and columns.
    std::vector<int> rsel(k), csel(k);
    for (int i = 0; i < k; ++i) rsel[i] = i;
    auto next_subset = [](std::vector<int>& s, int n) {
        int i = static_cast<int>(s.size()) - 1;
        while (i >= 0 && s[i] == n - static_cast<int>(s.size()) + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < static_cast<int>(s.size()); ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    while (true) {
        for (int i = 0; i < k; ++i) csel[i] = i;
        while (true) {
            std::vector<std::vector<i128>> sub(k, std::vector<i128>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = m.at(rsel[i], csel[j]);
            i128 d = det_bareiss(sub);
            if (d < 0) d = -d;
            if (d != 0) {
                if (g == 0) g = d;
                else {
                    // gcd on i128
                    i128 a = g, b = d;
                    while (b != 0) { const i128 t = a % b; a = b; b = t; }
                    g = a;
                }
                if (g == 1) return 1;
            }
            if (!next_subset(csel, m.cols)) break;
        }
        if (!next_subset(rsel, m.rows)) break;
    }
    return g;
}

/** Independent divisor-chain computation: d_k = minorgcd_k / minorgcd_{k-1}. */
inline std::vector<i64> oracle_divisors(const IntMat& m) {
    std::vector<i64> out;
    i128 prev = 1;
    const int n = std::min(m.rows, m.cols);
    for (int k = 1; k <= n; ++k) {
        const i128 g = minor_gcd(m, k);
        if (g == 0) break;
        out.push_back(static_cast<i64>(g / prev));
        prev = g;
    }
    return out;
}

/** Random isomorphic copy: permuted vertices/ids/ports/edge order plus a coboundary. */
inline shadowcalc::ShadowPair random_isomorphic_copy(const shadowcalc::ShadowPair& in,
                                                     std::mt19937& gen) {
    using namespace shadowcalc;
    const EncodingGraph& g = in.graph;
    const int nv = g.n_vertices();

    std::vector<int> vperm(nv);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), gen); // old index -> new index

    // Random permutation of the interchangeable ports of each vertex.
    std::vector<std::vector<int>> pperm(nv);
    for (int v = 0; v < nv; ++v) {
        const int deg = required_degree(g.vertices[v].kind);
        pperm[v].resize(deg);
        std::iota(pperm[v].begin(), pperm[v].end(), 0);
        if (ports_interchangeable(g.vertices[v].kind))
            std::shuffle(pperm[v].begin(), pperm[v].end(), gen);
    }

    ShadowPair out;
    out.graph.vertices.resize(nv);
    for (int v = 0; v < nv; ++v)
        out.graph.vertices[vperm[v]] = Vertex{"w" + std::to_string(vperm[v]), g.vertices[v].kind};

    std::vector<int> eorder(g.n_edges());
    std::iota(eorder.begin(), eorder.end(), 0);
    std::shuffle(eorder.begin(), eorder.end(), gen);
    std::bernoulli_distribution coin(0.5);
    for (int e : eorder) {
        EdgeEnd a{vperm[g.edges[e].a.vertex], pperm[g.edges[e].a.vertex][g.edges[e].a.port]};
        EdgeEnd b{vperm[g.edges[e].b.vertex], pperm[g.edges[e].b.vertex][g.edges[e].b.port]};
        if (coin(gen)) std::swap(a, b);
        out.graph.add_edge(a, b, in.labels[e]);
        out.labels.push_back(in.labels[e]);
    }

    std::vector<int> flips(nv);
    for (int& f : flips) f = coin(gen) ? 1 : 0;
    out.labels = apply_coboundary(out.graph, out.labels, flips);
    for (int e = 0; e < out.graph.n_edges(); ++e)
        out.graph.edges[e].z2_label = out.labels[e];
    return out;
}

} // namespace testutil
