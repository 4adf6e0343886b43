// Canonical forms for (encoding graph, cocycle class) pairs.
//
// Two pairs get equal canonical bytes iff they are isomorphic: a kind- and
// port-structure-preserving graph isomorphism (the three ports of Y111 and P
// may be permuted, the two ports of Y12 may not) carrying one labeling to the
// other up to coboundary. The algorithm expands the graph into a colored
// simple graph with one node per vertex and one node per port, refines colors
// Weisfeiler–Leman style, then backtracks for the lexicographically minimal
// serialization; every ordering achieving the minimum is kept so the label
// bits can be minimized over the automorphism group as well.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocycle.hpp"
#include "graph.hpp"

namespace shadowcalc {

/** Canonical representative of a pair plus its serialized, hashable form. */
struct CanonicalPair {
    EncodingGraph graph;             // canonical representative (ids v0, v1, ...)
    CocycleLabels labels;            // gauge-fixed labels, minimal over automorphisms
    std::vector<std::uint8_t> bytes; // serialization of (graph, labels)

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (std::uint8_t b : bytes) {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 0xf]);
        }
        return out;
    }
};

namespace detail {

// Expanded colored graph: nodes 0..nv-1 are the vertices, then one node per
// (vertex, port) in index order. Edges join each port to its owner vertex and
// matched ports to each other, so the expansion is always a simple graph.
struct ExpandedGraph {
    int n_vertices = 0;
    int n_nodes = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> color;
    std::vector<int> node_of_port_flat;    // indexed by flat (vertex, port)
    std::vector<int> port_flat_base;       // vertex -> first flat port slot
};

inline ExpandedGraph build_expanded(const EncodingGraph& g) {
    ExpandedGraph x;
    x.n_vertices = g.n_vertices();
    x.port_flat_base.resize(g.n_vertices() + 1, 0);
    for (int v = 0; v < g.n_vertices(); ++v)
        x.port_flat_base[v + 1] = x.port_flat_base[v] + required_degree(g.vertices[v].kind);
    const int n_ports = x.port_flat_base[g.n_vertices()];
    x.n_nodes = x.n_vertices + n_ports;
    x.adj.resize(x.n_nodes);
    x.color.resize(x.n_nodes);
    x.node_of_port_flat.resize(n_ports);

    for (int v = 0; v < g.n_vertices(); ++v) {
        // Vertex node colors: one bucket per kind, below all port colors.
        x.color[v] = static_cast<int>(g.vertices[v].kind);
        const int deg = required_degree(g.vertices[v].kind);
        for (int p = 0; p < deg; ++p) {
            const int node = x.n_vertices + x.port_flat_base[v] + p;
            x.node_of_port_flat[x.port_flat_base[v] + p] = node;
            // Port colors separate owner kinds, and the two roles of Y12.
            const int role = g.vertices[v].kind == VertexKind::Y12 ? p : 0;
            x.color[node] = 16 + 2 * static_cast<int>(g.vertices[v].kind) + role;
            x.adj[v].push_back(node);
            x.adj[node].push_back(v);
        }
    }
    for (const Edge& e : g.edges) {
        const int pa = x.node_of_port_flat[x.port_flat_base[e.a.vertex] + e.a.port];
        const int pb = x.node_of_port_flat[x.port_flat_base[e.b.vertex] + e.b.port];
        x.adj[pa].push_back(pb);
        x.adj[pb].push_back(pa);
    }
    for (auto& nbrs : x.adj) std::sort(nbrs.begin(), nbrs.end());
    return x;
}

/** Stable 1-WL refinement; new color ids assigned in sorted signature order. */
inline void refine_colors(ExpandedGraph& x) {
    for (;;) {
        std::vector<std::vector<int>> sig(x.n_nodes);
        for (int n = 0; n < x.n_nodes; ++n) {
            sig[n].push_back(x.color[n]);
            std::vector<int> nb;
            for (int m : x.adj[n]) nb.push_back(x.color[m]);
            std::sort(nb.begin(), nb.end());
            sig[n].insert(sig[n].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        std::vector<int> fresh(x.n_nodes);
        for (int n = 0; n < x.n_nodes; ++n) fresh[n] = ids[sig[n]];
        std::map<int, int> old_count, new_count;
        for (int n = 0; n < x.n_nodes; ++n) {
            old_count[x.color[n]]++;
            new_count[fresh[n]]++;
        }
        const bool stable = old_count.size() == new_count.size();
        x.color = std::move(fresh);
        if (stable) break;
    }
}

// Per-position search key: refined color plus adjacency bits to the already
// placed prefix. Supports expanded graphs up to 128 nodes.
struct PlacementKey {
    int color = 0;
    std::array<std::uint64_t, 2> adjbits{{0, 0}};

    friend bool operator==(const PlacementKey& a, const PlacementKey& b) {
        return a.color == b.color && a.adjbits == b.adjbits;
    }
    friend bool operator<(const PlacementKey& a, const PlacementKey& b) {
        if (a.color != b.color) return a.color < b.color;
        return a.adjbits < b.adjbits;
    }
};

struct CanonicalSearch {
    const ExpandedGraph& x;
    std::vector<PlacementKey> best;        // minimal key sequence found so far
    std::vector<std::vector<int>> leaves;  // orderings achieving it (pos -> node)
    std::vector<int> order;
    std::vector<int> pos_of;
    static constexpr size_t kLeafCap = 100000;

    explicit CanonicalSearch(const ExpandedGraph& graph)
        : x(graph), pos_of(graph.n_nodes, -1) {
        if (x.n_nodes > 128)
            throw std::invalid_argument("graph too large to canonicalize (over 128 expanded nodes)");
    }

    PlacementKey key_of(int node) const {
        PlacementKey k;
        k.color = x.color[node];
        for (int m : x.adj[node]) {
            const int p = pos_of[m];
            if (p >= 0) k.adjbits[p / 64] |= (std::uint64_t{1} << (p % 64));
        }
        return k;
    }

    void dfs(int depth) {
        if (depth == x.n_nodes) {
            if (leaves.size() >= kLeafCap)
                throw std::runtime_error("canonical search leaf cap exceeded");
            leaves.push_back(order);
            return;
        }
        PlacementKey min_key;
        bool have_key = false;
        for (int n = 0; n < x.n_nodes; ++n) {
            if (pos_of[n] >= 0) continue;
            const PlacementKey k = key_of(n);
            if (!have_key || k < min_key) {
                min_key = k;
                have_key = true;
            }
        }
        if (depth < static_cast<int>(best.size())) {
            if (best[depth] < min_key) return; // prefix already worse than best
            if (min_key < best[depth]) {
                best.resize(depth);
                leaves.clear();
            }
        }
        if (depth >= static_cast<int>(best.size())) best.push_back(min_key);

        for (int n = 0; n < x.n_nodes; ++n) {
            if (pos_of[n] >= 0) continue;
            if (!(key_of(n) == min_key)) continue;
            pos_of[n] = depth;
            order.push_back(n);
            dfs(depth + 1);
            order.pop_back();
            pos_of[n] = -1;
        }
    }
};

struct CanonicalEdgeKey {
    std::array<int, 4> k{}; // va, pa, vb, pb with (va,pa) <= (vb,pb)

    friend bool operator<(const CanonicalEdgeKey& a, const CanonicalEdgeKey& b) {
        return a.k < b.k;
    }
    friend bool operator==(const CanonicalEdgeKey& a, const CanonicalEdgeKey& b) {
        return a.k == b.k;
    }
};

// Translate one minimal ordering into canonical vertex ranks and sorted-edge
// keys (Y12 keeps its port roles; interchangeable ports are numbered by their
// canonical rank).
struct DecodedLeaf {
    std::vector<int> vrank;
    std::vector<CanonicalEdgeKey> keys;
};

inline DecodedLeaf decode_leaf(const EncodingGraph& g, const ExpandedGraph& x,
                               const std::vector<int>& leaf) {
    std::vector<int> pos_of(x.n_nodes);
    for (int p = 0; p < x.n_nodes; ++p) pos_of[leaf[p]] = p;

    DecodedLeaf d;
    d.vrank.resize(g.n_vertices());
    {
        std::vector<std::pair<int, int>> by_pos; // (position, vertex)
        for (int v = 0; v < g.n_vertices(); ++v) by_pos.push_back({pos_of[v], v});
        std::sort(by_pos.begin(), by_pos.end());
        for (int r = 0; r < static_cast<int>(by_pos.size()); ++r)
            d.vrank[by_pos[r].second] = r;
    }
    const auto port_number = [&](int v, int p) {
        const VertexKind kind = g.vertices[v].kind;
        if (kind == VertexKind::Y12) return p;
        if (!ports_interchangeable(kind)) return 0;
        const int node = x.node_of_port_flat[x.port_flat_base[v] + p];
        int rank = 0;
        for (int q = 0; q < required_degree(kind); ++q) {
            const int other = x.node_of_port_flat[x.port_flat_base[v] + q];
            if (pos_of[other] < pos_of[node]) ++rank;
        }
        return rank;
    };
    d.keys.resize(g.n_edges());
    for (int e = 0; e < g.n_edges(); ++e) {
        const Edge& edge = g.edges[e];
        std::array<int, 2> enda{d.vrank[edge.a.vertex], port_number(edge.a.vertex, edge.a.port)};
        std::array<int, 2> endb{d.vrank[edge.b.vertex], port_number(edge.b.vertex, edge.b.port)};
        if (endb < enda) std::swap(enda, endb);
        d.keys[e].k = {enda[0], enda[1], endb[0], endb[1]};
    }
    return d;
}

// Canonical representative graph; identical for every minimal ordering.
inline EncodingGraph canon_graph_of(const EncodingGraph& g, const DecodedLeaf& d) {
    EncodingGraph canon;
    std::vector<VertexKind> kinds(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v) kinds[d.vrank[v]] = g.vertices[v].kind;
    for (int r = 0; r < g.n_vertices(); ++r)
        canon.add_vertex("v" + std::to_string(r), kinds[r]);
    std::vector<CanonicalEdgeKey> sorted = d.keys;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& key : sorted)
        canon.add_edge(EdgeEnd{key.k[0], key.k[1]}, EdgeEnd{key.k[2], key.k[3]}, 0);
    return canon;
}

inline std::vector<std::uint8_t> graph_bytes_of(const EncodingGraph& canon) {
    if (canon.n_vertices() > 255 || canon.n_edges() > 255)
        throw std::invalid_argument("graph too large to serialize");
    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(canon.n_vertices()));
    for (const Vertex& v : canon.vertices)
        bytes.push_back(static_cast<std::uint8_t>(v.kind));
    bytes.push_back(static_cast<std::uint8_t>(canon.n_edges()));
    for (const Edge& e : canon.edges) {
        bytes.push_back(static_cast<std::uint8_t>(e.a.vertex));
        bytes.push_back(static_cast<std::uint8_t>(e.a.port));
        bytes.push_back(static_cast<std::uint8_t>(e.b.vertex));
        bytes.push_back(static_cast<std::uint8_t>(e.b.port));
    }
    return bytes;
}

} // namespace detail

/**
 * The label-independent part of a canonicalization: the canonical graph, its
 * serialization, and every way source edges can land on canonical edge slots
 * under a minimal ordering. Computing it once per graph and reusing it across
 * cocycle classes avoids repeating the ordering search.
 */
struct PairCanonicalContext {
    EncodingGraph canon;                       // canonical graph, labels all 0
    std::vector<std::uint8_t> graph_bytes;     // graph part of the serialization
    std::vector<std::vector<int>> edge_orders; // distinct maps rank -> source edge
};

/** Build the reusable context for a valid graph. */
inline PairCanonicalContext canonical_context(const EncodingGraph& g) {
    {
        const auto diags = validate(g);
        if (!diags.empty())
            throw std::invalid_argument("invalid graph: " + diags.front());
    }
    detail::ExpandedGraph x = detail::build_expanded(g);
    detail::refine_colors(x);
    detail::CanonicalSearch search(x);
    search.dfs(0);

    PairCanonicalContext ctx;
    ctx.canon = detail::canon_graph_of(g, detail::decode_leaf(g, x, search.leaves.front()));
    ctx.graph_bytes = detail::graph_bytes_of(ctx.canon);

    // Different minimal orderings often induce the same edge transport; only
    // the distinct ones matter when minimizing labels.
    std::set<std::vector<int>> seen;
    for (const auto& leaf : search.leaves) {
        const detail::DecodedLeaf d = detail::decode_leaf(g, x, leaf);
        std::vector<std::pair<detail::CanonicalEdgeKey, int>> with_index;
        for (int e = 0; e < g.n_edges(); ++e) with_index.push_back({d.keys[e], e});
        std::sort(with_index.begin(), with_index.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> order(g.n_edges());
        for (int r = 0; r < g.n_edges(); ++r) order[r] = with_index[r].second;
        if (seen.insert(order).second) ctx.edge_orders.push_back(std::move(order));
    }
    return ctx;
}

/**
 * Canonicalize one labeling of the context's source graph: transport the
 * labels through every distinct minimal ordering and keep the least
 * gauge-fixed form, quotienting by both coboundaries and automorphisms.
 */
inline CanonicalPair canonicalize_in_context(const PairCanonicalContext& ctx,
                                             const CocycleLabels& labels) {
    detail::check_label_shape(ctx.canon, labels);
    CocycleLabels best_labels;
    bool have_labels = false;
    for (const std::vector<int>& order : ctx.edge_orders) {
        CocycleLabels transported(labels.size(), 0);
        for (int r = 0; r < static_cast<int>(labels.size()); ++r)
            transported[r] = labels[order[r]];
        const CocycleLabels reduced = cocycle_reduce(ctx.canon, transported);
        if (!have_labels || reduced < best_labels) {
            best_labels = reduced;
            have_labels = true;
        }
    }

    CanonicalPair result;
    result.graph = ctx.canon;
    result.labels = std::move(best_labels);
    for (int e = 0; e < result.graph.n_edges(); ++e)
        result.graph.edges[e].z2_label = result.labels[e];
    result.bytes = ctx.graph_bytes;
    for (int bit : result.labels) result.bytes.push_back(static_cast<std::uint8_t>(bit));
    return result;
}

/**
 * Canonicalize a valid pair. Throws std::invalid_argument on invalid graphs
 * or malformed labels. The result is identical for every isomorphic input.
 */
inline CanonicalPair canonicalize_pair(const EncodingGraph& g, const CocycleLabels& labels) {
    detail::check_label_shape(g, labels);
    return canonicalize_in_context(canonical_context(g), labels);
}

/** Hex canonical form; equal strings iff isomorphic pairs. */
inline std::string canonical_hex(const EncodingGraph& g, const CocycleLabels& labels) {
    return canonicalize_pair(g, labels).hex();
}

} // namespace shadowcalc
