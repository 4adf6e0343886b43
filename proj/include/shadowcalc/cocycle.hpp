// Z/2 cocycle classes on encoding graphs.
//
// Edge labels form a Z/2 cochain; two labelings describe the same polyhedron
// iff they differ by a coboundary, i.e. by flipping every edge incident to
// some vertex subset (a self-loop is flipped twice, so it never changes).
// The normal form fixes the gauge by zeroing a deterministic spanning forest;
// classes of a connected graph then biject with labelings of the b1 non-tree
// edges, so there are exactly 2^b1 of them.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace shadowcalc {

/** Edge labels aligned with EncodingGraph::edges; entries in {0,1}. */
using CocycleLabels = std::vector<int>;

/** A graph together with a cocycle representative: the full combinatorial datum. */
struct ShadowPair {
    EncodingGraph graph;
    CocycleLabels labels;
};

namespace detail {

inline void check_label_shape(const EncodingGraph& g, const CocycleLabels& labels) {
    if (static_cast<int>(labels.size()) != g.n_edges())
        throw std::invalid_argument("label vector length != edge count");
    for (int x : labels)
        if (x != 0 && x != 1) throw std::invalid_argument("edge label outside {0,1}");
}

/** Deterministic BFS spanning forest: roots in index order, edges scanned in index order. */
struct ForestInfo {
    std::vector<int> order;       // vertices in visit order
    std::vector<int> parent_edge; // per vertex; -1 at component roots
    std::vector<int> is_forest;   // per edge
};

inline ForestInfo bfs_forest(const EncodingGraph& g) {
    const int n = g.n_vertices();
    ForestInfo info;
    info.parent_edge.assign(n, -1);
    info.is_forest.assign(g.n_edges(), 0);
    std::vector<int> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        info.order.push_back(start);
        for (size_t head = info.order.size() - 1; head < info.order.size(); ++head) {
            const int v = info.order[head];
            for (int e = 0; e < g.n_edges(); ++e) {
                const Edge& edge = g.edges[e];
                int other = -1;
                if (edge.a.vertex == v) other = edge.b.vertex;
                else if (edge.b.vertex == v) other = edge.a.vertex;
                else continue;
                if (other < 0 || other >= n || seen[other]) continue;
                seen[other] = 1;
                info.parent_edge[other] = e;
                info.is_forest[e] = 1;
                info.order.push_back(other);
            }
        }
    }
    return info;
}

/**
 * Per-vertex potential with f = 0 at each component root and labels summing
 * to 0 along the BFS forest; gauge-fixing by this potential is independent
 * of the root values, so the fixed labeling is a class invariant.
 */
inline std::vector<int> forest_potential(const EncodingGraph& g, const CocycleLabels& labels) {
    const ForestInfo info = bfs_forest(g);
    std::vector<int> f(g.n_vertices(), 0);
    for (int v : info.order) {
        const int pe = info.parent_edge[v];
        if (pe < 0) continue; // component root
        const Edge& edge = g.edges[pe];
        const int parent = edge.a.vertex == v ? edge.b.vertex : edge.a.vertex;
        f[v] = f[parent] ^ labels[pe];
    }
    return f;
}

} // namespace detail

/** Flip the labels of all edges incident to the vertices with flips[v] = 1. */
inline CocycleLabels apply_coboundary(const EncodingGraph& g, const CocycleLabels& labels,
                                      const std::vector<int>& flips) {
    detail::check_label_shape(g, labels);
    if (static_cast<int>(flips.size()) != g.n_vertices())
        throw std::invalid_argument("flip vector length != vertex count");
    CocycleLabels out = labels;
    for (int e = 0; e < g.n_edges(); ++e)
        out[e] ^= flips[g.edges[e].a.vertex] ^ flips[g.edges[e].b.vertex];
    return out;
}

/**
 * Gauge-fixed normal form of the labeling: the unique equivalent labeling
 * that vanishes on the deterministic BFS spanning forest. Equal normal forms
 * iff the labelings differ by a coboundary.
 */
inline CocycleLabels cocycle_reduce(const EncodingGraph& g, const CocycleLabels& labels) {
    detail::check_label_shape(g, labels);
    const std::vector<int> f = detail::forest_potential(g, labels);
    return apply_coboundary(g, labels, f);
}

inline bool same_cocycle_class(const EncodingGraph& g, const CocycleLabels& x,
                               const CocycleLabels& y) {
    return cocycle_reduce(g, x) == cocycle_reduce(g, y);
}

/**
 * One gauge-fixed representative per cocycle class, 2^b1 in total, in binary
 * counting order over the non-forest edges (so the all-zero class is first).
 * Requires a connected graph with at most 30 independent cycles.
 */
inline std::vector<CocycleLabels> cocycle_classes(const EncodingGraph& g) {
    if (connected_components(g) != 1)
        throw std::invalid_argument("cocycle_classes requires a connected graph");
    const detail::ForestInfo info = detail::bfs_forest(g);
    std::vector<int> free_edges;
    for (int e = 0; e < g.n_edges(); ++e)
        if (!info.is_forest[e]) free_edges.push_back(e);

    const int b1 = static_cast<int>(free_edges.size());
    if (b1 > 30) throw std::invalid_argument("too many independent cycles to enumerate");
    std::vector<CocycleLabels> classes;
    classes.reserve(static_cast<size_t>(1) << b1);
    for (long mask = 0; mask < (1L << b1); ++mask) {
        CocycleLabels labels(g.n_edges(), 0);
        for (int k = 0; k < b1; ++k)
            if ((mask >> k) & 1) labels[free_edges[k]] = 1;
        classes.push_back(std::move(labels));
    }
    return classes;
}

} // namespace shadowcalc
