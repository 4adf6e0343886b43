// Region structure and complexity of the polyhedron described by a pair.
//
// Every Y vertex contributes its singular core circle plus one annular wing
// per orbit of the arm permutation; D, P, Y2 pieces and B boundary markers
// are surface material. Regions are the connected components of all that
// material glued along the graph's edges; each region records its Euler
// characteristic, boundary status, and Z2-gleam. The r-weighted complexity
// of a summary is m + r*n with m the true vertices and n the arc count
// Sigma(1 - chi).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocycle.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace shadowcalc {

// ----- wings -----

/** One annular wing of a Y piece: the orbit of arms attached at one port. */
struct Wing {
    std::string owner;    // Y-vertex id
    int slot = 0;         // port index on the owner
    int winding = 1;      // how many times the inner circle covers the core
    int moebius_collar = 0; // 1 iff the collar band at the core is a Moebius band
};

/**
 * Wing data for one port of a Y kind. Winding is the orbit length of the arm
 * permutation; the collar band is a Moebius band exactly when the monodromy
 * around the wing swaps the two complementary arms (only the Y12 fixed arm).
 */
inline Wing wing_of_port(const std::string& owner, VertexKind kind, int slot) {
    Wing w;
    w.owner = owner;
    w.slot = slot;
    switch (kind) {
    case VertexKind::Y111:
        w.winding = 1;
        w.moebius_collar = 0;
        break;
    case VertexKind::Y12:
        if (slot == 0) { // fixed arm
            w.winding = 1;
            w.moebius_collar = 1;
        } else { // the two exchanged arms form one doubled wing
            w.winding = 2;
            w.moebius_collar = 0;
        }
        break;
    case VertexKind::Y3:
        w.winding = 3;
        w.moebius_collar = 0;
        break;
    default:
        throw std::invalid_argument("wing_of_port: not a singular piece");
    }
    return w;
}

// ----- regions -----

/** A connected component of the polyhedron minus its singular set. */
struct Region {
    std::vector<std::string> pieces; // D/P/Y2/B vertex ids, in vertex order
    std::vector<Wing> wings;
    int chi = 0;
    bool is_boundary = false;
    std::optional<int> gl2; // defined for internal regions only
};

/** The (chi, boundary, gl2) triple that summary-level operations work on. */
struct RegionStat {
    int chi = 0;
    bool is_boundary = false;
    std::optional<int> gl2;

    friend bool operator==(const RegionStat& a, const RegionStat& b) {
        return a.chi == b.chi && a.is_boundary == b.is_boundary && a.gl2 == b.gl2;
    }
};

/** Numeric description of a simple polyhedron; graphs produce true_vertices = 0. */
struct PolyhedronSummary {
    int true_vertices = 0;
    std::vector<RegionStat> regions;
    int singular_circles = 0;
    int boundary_components = 0;
    bool is_sphere = false;
    bool is_closed_surface_positive_genus = false;
};

/**
 * Split the polyhedron of a valid pair into regions. Pieces and wings are
 * the nodes; each graph edge glues the two circles it names; wings of the
 * same Y vertex stay separate (the singular core lies between them).
 * Throws std::invalid_argument on invalid input.
 */
inline std::vector<Region> extract_regions(const EncodingGraph& g, const CocycleLabels& labels) {
    {
        const auto diags = validate(g);
        if (!diags.empty())
            throw std::invalid_argument("invalid graph: " + diags.front());
    }
    detail::check_label_shape(g, labels);

    // One union-find node per (vertex, port); the ports of a non-singular
    // piece are pre-merged since they all lie on the same piece of surface.
    std::vector<int> base(g.n_vertices() + 1, 0);
    for (int v = 0; v < g.n_vertices(); ++v)
        base[v + 1] = base[v] + required_degree(g.vertices[v].kind);
    const int n_nodes = base[g.n_vertices()];
    std::vector<int> parent(n_nodes);
    for (int i = 0; i < n_nodes; ++i) parent[i] = i;
    const auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    for (int v = 0; v < g.n_vertices(); ++v) {
        if (is_singular_piece(g.vertices[v].kind)) continue;
        const int deg = required_degree(g.vertices[v].kind);
        for (int p = 1; p < deg; ++p) unite(base[v] + p, base[v]);
    }
    for (const Edge& e : g.edges)
        unite(base[e.a.vertex] + e.a.port, base[e.b.vertex] + e.b.port);

    std::map<int, int> region_of_root;
    std::vector<Region> regions;
    const auto region_index = [&](int node) {
        const int root = find(node);
        auto it = region_of_root.find(root);
        if (it == region_of_root.end()) {
            it = region_of_root.emplace(root, static_cast<int>(regions.size())).first;
            regions.emplace_back();
        }
        return it->second;
    };

    for (int v = 0; v < g.n_vertices(); ++v) {
        const Vertex& vx = g.vertices[v];
        if (is_singular_piece(vx.kind)) {
            for (int p = 0; p < required_degree(vx.kind); ++p) {
                Region& r = regions[region_index(base[v] + p)];
                r.wings.push_back(wing_of_port(vx.id, vx.kind, p));
            }
        } else {
            Region& r = regions[region_index(base[v])];
            r.pieces.push_back(vx.id);
            if (vx.kind == VertexKind::D) r.chi += 1;
            if (vx.kind == VertexKind::P) r.chi -= 1;
            if (vx.kind == VertexKind::B) r.is_boundary = true;
        }
    }
    for (Region& r : regions) {
        if (r.is_boundary) continue;
        int moebius = 0;
        for (const Wing& w : r.wings) moebius += w.moebius_collar;
        r.gl2 = moebius % 2;
    }
    return regions;
}

/** Summarize a valid pair: region stats plus the global piece counts and flags. */
inline PolyhedronSummary summarize(const EncodingGraph& g, const CocycleLabels& labels) {
    const std::vector<Region> regions = extract_regions(g, labels);
    PolyhedronSummary s;
    int total_chi = 0;
    for (const Region& r : regions) {
        s.regions.push_back(RegionStat{r.chi, r.is_boundary, r.gl2});
        total_chi += r.chi;
    }
    for (const Vertex& v : g.vertices) {
        if (is_singular_piece(v.kind)) ++s.singular_circles;
        if (v.kind == VertexKind::B) ++s.boundary_components;
    }
    if (s.singular_circles == 0 && s.boundary_components == 0) {
        s.is_sphere = total_chi == 2;
        s.is_closed_surface_positive_genus = total_chi < 2;
    }
    return s;
}

// ----- weighted complexity -----

/** The pair (m, n) with r-weighted complexity value m + r*n. */
struct WeightedComplexity {
    int m = 0; // true vertices
    int n = 0; // total arcs, Sigma(1 - chi)

    Rational value_at(const Rational& r) const {
        return Rational(m) + r * Rational(n);
    }
    friend bool operator==(const WeightedComplexity& a, const WeightedComplexity& b) {
        return a.m == b.m && a.n == b.n;
    }
};

/** Thrown where a quantity is undefined for the polyhedron at hand. */
struct UndefinedValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Total arc count Sigma max(0, 1-chi) over regions. Defined for every
 * polyhedron, closed surfaces included, and independent of the labels;
 * this is the finiteness parameter of the enumeration.
 */
inline int arc_count(const PolyhedronSummary& s) {
    int n = 0;
    for (const RegionStat& r : s.regions)
        if (r.chi < 1) n += 1 - r.chi;
    return n;
}

/**
 * Complexity data of a summary: m = true vertices, n = Sigma max(0, 1-chi).
 * The sphere is 0 by definition; closed surfaces of positive genus have no
 * complexity at all and raise UndefinedValueError.
 */
inline WeightedComplexity weighted_complexity(const PolyhedronSummary& s) {
    if (s.is_closed_surface_positive_genus)
        throw UndefinedValueError("complexity undefined for closed surfaces of positive genus");
    if (s.is_sphere) return WeightedComplexity{0, 0};
    WeightedComplexity wc;
    wc.m = s.true_vertices;
    wc.n = arc_count(s);
    return wc;
}

/** Exact comparison of values at r >= 0: -1, 0, or +1 as a <, =, > b. */
inline int compare_at(const WeightedComplexity& a, const WeightedComplexity& b,
                      const Rational& r) {
    if (r < Rational(0)) throw std::invalid_argument("compare_at: negative weight");
    const Rational va = a.value_at(r);
    const Rational vb = b.value_at(r);
    if (va < vb) return -1;
    if (vb < va) return 1;
    return 0;
}

// ----- summary-level constructions -----

/**
 * Connected sum along interior disks of regions i of s1 and j of s2: the two
 * punctured regions and the shared disk become regions of the result, and
 * the disk's boundary becomes a new singular circle. Adds 2 to the total
 * arc count, so values add with excess exactly 2r.
 */
inline PolyhedronSummary connected_sum(const PolyhedronSummary& s1, int i,
                                       const PolyhedronSummary& s2, int j) {
    if (i < 0 || i >= static_cast<int>(s1.regions.size()) || j < 0 ||
        j >= static_cast<int>(s2.regions.size()))
        throw std::out_of_range("connected_sum: region index out of range");
    PolyhedronSummary out;
    out.true_vertices = s1.true_vertices + s2.true_vertices;
    out.singular_circles = s1.singular_circles + s2.singular_circles + 1;
    out.boundary_components = s1.boundary_components + s2.boundary_components;
    for (int k = 0; k < static_cast<int>(s1.regions.size()); ++k) {
        RegionStat r = s1.regions[k];
        if (k == i) r.chi -= 1;
        out.regions.push_back(r);
    }
    for (int k = 0; k < static_cast<int>(s2.regions.size()); ++k) {
        RegionStat r = s2.regions[k];
        if (k == j) r.chi -= 1;
        out.regions.push_back(r);
    }
    out.regions.push_back(RegionStat{1, false, 0}); // the identified disk
    return out;
}

/**
 * Specialization bookkeeping: each arc costs two new true vertices and turns
 * the regions into disks, so the value of the result at every r equals the
 * input value at r = 2. Requires a nonempty singular set.
 */
inline PolyhedronSummary specialize(const PolyhedronSummary& s) {
    if (s.singular_circles == 0)
        throw std::invalid_argument("specialize requires a nonempty singular set");
    PolyhedronSummary out = s;
    int arcs = 0;
    for (RegionStat& r : out.regions) {
        if (r.chi < 1) {
            arcs += 1 - r.chi;
            r.chi = 1;
            r.gl2.reset(); // the region was rebuilt; its Z2-gleam is not tracked
        }
    }
    out.true_vertices += 2 * arcs;
    return out;
}

/** The sphere-with-k-disks family: k = 1 is the bare sphere, k >= 2 a chain tree. */
inline ShadowPair build_xk(int k) {
    if (k <= 0) throw std::invalid_argument("build_xk: k must be positive");
    ShadowPair out;
    EncodingGraph& g = out.graph;
    if (k == 1) {
        g.add_vertex("d1", VertexKind::D);
        g.add_vertex("d2", VertexKind::D);
        g.add_edge("d1", 0, "d2", 0, 0);
    } else {
        for (int i = 1; i < k; ++i) g.add_vertex("y" + std::to_string(i), VertexKind::Y111);
        int next_disk = 1;
        const auto cap = [&](const std::string& y, int port) {
            const std::string id = "d" + std::to_string(next_disk++);
            g.add_vertex(id, VertexKind::D);
            g.add_edge(y, port, id, 0, 0);
        };
        for (int i = 1; i + 1 < k; ++i)
            g.add_edge("y" + std::to_string(i), 1, "y" + std::to_string(i + 1), 0, 0);
        cap("y1", 0);
        cap("y" + std::to_string(k - 1), 1);
        for (int i = 1; i < k; ++i) cap("y" + std::to_string(i), 2);
    }
    out.labels.assign(g.n_edges(), 0);
    return out;
}

// ----- gleams -----

/** Half-integer gleam candidates, stored as integer numbers of halves per region index. */
struct GleamAssignment {
    std::map<int, std::int64_t> halves;
};

/**
 * Admissibility of a gleam: every internal region needs gl + gl2/2 integral,
 * i.e. the parity of the stored halves must equal the region's Z2-gleam.
 * Throws std::invalid_argument when an internal region has no value.
 */
inline bool gleam_admissible(const std::vector<Region>& regions, const GleamAssignment& gl) {
    for (int i = 0; i < static_cast<int>(regions.size()); ++i)
        if (!regions[i].is_boundary && gl.halves.find(i) == gl.halves.end())
            throw std::invalid_argument("gleam missing for internal region " + std::to_string(i));
    for (int i = 0; i < static_cast<int>(regions.size()); ++i) {
        if (regions[i].is_boundary) continue;
        const std::int64_t halves = gl.halves.at(i);
        const int gl2 = regions[i].gl2.value_or(0);
        if (((halves % 2 + 2) % 2) != gl2) return false;
    }
    return true;
}

// ----- JSON -----

inline nlohmann::json summary_to_json(const PolyhedronSummary& s) {
    nlohmann::json regions = nlohmann::json::array();
    for (const RegionStat& r : s.regions) {
        nlohmann::json jr{{"chi", r.chi}, {"is_boundary", r.is_boundary}};
        if (r.gl2) jr["gl2"] = *r.gl2;
        regions.push_back(jr);
    }
    return nlohmann::json{{"true_vertices", s.true_vertices},
                          {"regions", regions},
                          {"singular_circles", s.singular_circles},
                          {"boundary_components", s.boundary_components},
                          {"is_sphere", s.is_sphere},
                          {"is_closed_surface_positive_genus", s.is_closed_surface_positive_genus}};
}

inline PolyhedronSummary summary_from_json(const nlohmann::json& j) {
    PolyhedronSummary s;
    try {
        s.true_vertices = j.at("true_vertices").get<int>();
        for (const auto& jr : j.at("regions")) {
            RegionStat r;
            r.chi = jr.at("chi").get<int>();
            r.is_boundary = jr.value("is_boundary", false);
            if (jr.contains("gl2")) r.gl2 = jr.at("gl2").get<int>();
            s.regions.push_back(r);
        }
        s.singular_circles = j.at("singular_circles").get<int>();
        s.boundary_components = j.value("boundary_components", 0);
        s.is_sphere = j.value("is_sphere", false);
        s.is_closed_surface_positive_genus = j.value("is_closed_surface_positive_genus", false);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed summary JSON: ") + e.what());
    }
    return s;
}

} // namespace shadowcalc
