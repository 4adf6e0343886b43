// Encoding graphs: typed multigraphs with ports and Z/2 edge labels.
//
// An encoding graph records how a collection of elementary pieces is glued
// circle-to-circle: each vertex is a piece (disk D, pants P, Moebius band Y2,
// boundary marker B, or one of the three singular pieces Y111, Y12, Y3), each
// port is one boundary circle of that piece, and each edge glues two circles,
// carrying a Z/2 label (1 = orientation-reversing gluing). The text DSL and
// the JSON form both serialize exactly these fields.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace shadowcalc {

// ----- vertex kinds -----

/** The seven piece types an encoding-graph vertex can carry. */
enum class VertexKind { B, D, Y2, Y3, Y12, Y111, P };

/** Number of ports (boundary circles of the piece): B/D/Y2/Y3 have 1, Y12 has 2, Y111/P have 3. */
inline int required_degree(VertexKind k) {
    switch (k) {
    case VertexKind::B:
    case VertexKind::D:
    case VertexKind::Y2:
    case VertexKind::Y3:
        return 1;
    case VertexKind::Y12:
        return 2;
    case VertexKind::Y111:
    case VertexKind::P:
        return 3;
    }
    return 0; // unreachable
}

/** Kind name as written in the DSL and JSON. */
inline const char* kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::B: return "B";
    case VertexKind::D: return "D";
    case VertexKind::Y2: return "Y2";
    case VertexKind::Y3: return "Y3";
    case VertexKind::Y12: return "Y12";
    case VertexKind::Y111: return "Y111";
    case VertexKind::P: return "P";
    }
    return "?"; // unreachable
}

/** Parse a kind name; empty when the name is unknown. */
inline std::optional<VertexKind> kind_from_name(std::string_view s) {
    if (s == "B") return VertexKind::B;
    if (s == "D") return VertexKind::D;
    if (s == "Y2") return VertexKind::Y2;
    if (s == "Y3") return VertexKind::Y3;
    if (s == "Y12") return VertexKind::Y12;
    if (s == "Y111") return VertexKind::Y111;
    if (s == "P") return VertexKind::P;
    return std::nullopt;
}

/**
 * Whether all ports of the kind may be permuted by an isomorphism. The three
 * circles of Y111 and of P are interchangeable; the two circles of Y12 are
 * not (port 0 is the fixed-arm circle, port 1 the doubled-arm circle).
 */
inline bool ports_interchangeable(VertexKind k) {
    return k == VertexKind::Y111 || k == VertexKind::P;
}

/** True for the pieces with a singular core (the three mapping-torus pieces). */
inline bool is_singular_piece(VertexKind k) {
    return k == VertexKind::Y111 || k == VertexKind::Y12 || k == VertexKind::Y3;
}

// ----- graph structure -----

/** One endpoint of an edge: a vertex index and a port index on that vertex. */
struct EdgeEnd {
    int vertex = -1;
    int port = -1;

    friend bool operator==(const EdgeEnd& x, const EdgeEnd& y) {
        return x.vertex == y.vertex && x.port == y.port;
    }
    friend bool operator!=(const EdgeEnd& x, const EdgeEnd& y) { return !(x == y); }
};

/** An unordered gluing of two ports with a Z/2 label (1 = orientation-reversing). */
struct Edge {
    EdgeEnd a;
    EdgeEnd b;
    int z2_label = 0;
};

struct Vertex {
    std::string id;
    VertexKind kind = VertexKind::D;
};

/**
 * A typed multigraph with ports. Self-loops and parallel edges are allowed;
 * structural soundness (every port used exactly once, connectivity, no B-B
 * edge) is checked by validate(), not enforced by construction.
 */
struct EncodingGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }

    /** Index of the vertex with the given id, or -1 if absent. */
    int find_vertex(std::string_view id) const {
        for (int i = 0; i < n_vertices(); ++i)
            if (vertices[i].id == id) return i;
        return -1;
    }

    /** Append a vertex and return its index. */
    int add_vertex(std::string id, VertexKind kind) {
        vertices.push_back(Vertex{std::move(id), kind});
        return n_vertices() - 1;
    }

    void add_edge(EdgeEnd a, EdgeEnd b, int z2_label) {
        edges.push_back(Edge{a, b, z2_label});
    }

    /** Convenience edge insertion by vertex id; throws if an id is unknown. */
    void add_edge(std::string_view va, int pa, std::string_view vb, int pb, int z2_label) {
        const int ia = find_vertex(va);
        const int ib = find_vertex(vb);
        if (ia < 0 || ib < 0)
            throw std::invalid_argument("add_edge: unknown vertex id");
        add_edge(EdgeEnd{ia, pa}, EdgeEnd{ib, pb}, z2_label);
    }
};

// ----- incidence helpers -----

/** Where a port attaches: edge index and which endpoint (0 = a, 1 = b). */
struct PortRef {
    int edge = -1;
    int end = -1;

    bool used() const { return edge >= 0; }
};

/**
 * Map [vertex][port] -> attachment. Ports with no edge stay unused; if a port
 * is used more than once, the first use wins (validate() reports the clash).
 * Out-of-range endpoints are ignored here and likewise left to validate().
 */
inline std::vector<std::vector<PortRef>> port_map(const EncodingGraph& g) {
    std::vector<std::vector<PortRef>> pm(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v)
        pm[v].resize(required_degree(g.vertices[v].kind));
    for (int e = 0; e < g.n_edges(); ++e) {
        for (int end = 0; end < 2; ++end) {
            const EdgeEnd& ee = end == 0 ? g.edges[e].a : g.edges[e].b;
            if (ee.vertex < 0 || ee.vertex >= g.n_vertices()) continue;
            if (ee.port < 0 || ee.port >= static_cast<int>(pm[ee.vertex].size())) continue;
            if (!pm[ee.vertex][ee.port].used()) pm[ee.vertex][ee.port] = PortRef{e, end};
        }
    }
    return pm;
}

/** Number of connected components of the underlying graph (0 for the empty graph). */
inline int connected_components(const EncodingGraph& g) {
    const int n = g.n_vertices();
    std::vector<int> comp(n, -1);
    int n_comp = 0;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = n_comp;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges) {
                const int va = e.a.vertex;
                const int vb = e.b.vertex;
                if (va == v && vb >= 0 && vb < n && comp[vb] < 0) {
                    comp[vb] = n_comp;
                    stack.push_back(vb);
                }
                if (vb == v && va >= 0 && va < n && comp[va] < 0) {
                    comp[va] = n_comp;
                    stack.push_back(va);
                }
            }
        }
        ++n_comp;
    }
    return n_comp;
}

/** First Betti number |E| - |V| + #components; counts independent cycles. */
inline int first_betti(const EncodingGraph& g) {
    return g.n_edges() - g.n_vertices() + connected_components(g);
}

// ----- validation -----

/**
 * Structural diagnostics; an empty list means the graph is a sound encoding
 * graph: unique ids, every port used exactly once, connected, and no edge
 * joining two B ports (such an edge would describe a bare circle with no
 * 2-dimensional material around it).
 */
inline std::vector<std::string> validate(const EncodingGraph& g) {
    std::vector<std::string> diags;
    const auto say = [&diags](const std::string& s) { diags.push_back(s); };

    if (g.n_vertices() == 0) {
        say("empty graph");
        return diags;
    }

    std::map<std::string, int> seen_ids;
    for (const Vertex& v : g.vertices) {
        if (++seen_ids[v.id] == 2) say("duplicate vertex id " + v.id);
    }

    // Port bookkeeping: every port of every vertex used by exactly one endpoint.
    std::vector<std::vector<int>> use_count(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v)
        use_count[v].assign(required_degree(g.vertices[v].kind), 0);

    for (int e = 0; e < g.n_edges(); ++e) {
        const Edge& edge = g.edges[e];
        for (const EdgeEnd& ee : {edge.a, edge.b}) {
            if (ee.vertex < 0 || ee.vertex >= g.n_vertices()) {
                say("edge " + std::to_string(e) + " references unknown vertex index " +
                    std::to_string(ee.vertex));
                continue;
            }
            const Vertex& v = g.vertices[ee.vertex];
            const int deg = required_degree(v.kind);
            if (ee.port < 0 || ee.port >= deg) {
                say("port " + v.id + "." + std::to_string(ee.port) + " out of range (" +
                    kind_name(v.kind) + " has " + std::to_string(deg) + " ports)");
                continue;
            }
            if (++use_count[ee.vertex][ee.port] == 2)
                say("port " + v.id + "." + std::to_string(ee.port) + " used twice");
        }
        if (edge.z2_label != 0 && edge.z2_label != 1)
            say("edge " + std::to_string(e) + " has label outside {0,1}");
        const bool a_ok = edge.a.vertex >= 0 && edge.a.vertex < g.n_vertices();
        const bool b_ok = edge.b.vertex >= 0 && edge.b.vertex < g.n_vertices();
        if (a_ok && b_ok && g.vertices[edge.a.vertex].kind == VertexKind::B &&
            g.vertices[edge.b.vertex].kind == VertexKind::B) {
            say("edge " + std::to_string(e) + " joins two B vertices (bare circle)");
        }
    }

    for (int v = 0; v < g.n_vertices(); ++v)
        for (int p = 0; p < static_cast<int>(use_count[v].size()); ++p)
            if (use_count[v][p] == 0)
                say("unused port " + g.vertices[v].id + "." + std::to_string(p));

    if (connected_components(g) > 1) say("disconnected");

    return diags;
}

/** validate() condensed to a yes/no. */
inline bool is_valid(const EncodingGraph& g) { return validate(g).empty(); }

// ----- DSL -----

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] inline void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

} // namespace detail

/**
 * Parse the line-oriented graph DSL:
 *
 *     v <id> <kind>
 *     e <id>.<port> <id>.<port> <0|1>
 *
 * Statements are separated by newlines or ';'; '#' starts a comment. Throws
 * std::runtime_error naming the offending line on syntax errors, unknown
 * kinds or vertices, out-of-range ports, and ports used twice. The result is
 * otherwise unchecked; call validate() for unused ports / connectivity.
 */
inline EncodingGraph parse_graph(const std::string& text) {
    EncodingGraph g;
    std::vector<std::vector<int>> use_count;

    const auto parse_port = [&](const std::string& tok, int line) -> EdgeEnd {
        const auto dot = tok.rfind('.');
        if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
            detail::parse_fail(line, "expected <id>.<port>, got '" + tok + "'");
        const std::string id = tok.substr(0, dot);
        const std::string port_str = tok.substr(dot + 1);
        int port = 0;
        try {
            size_t used = 0;
            port = std::stoi(port_str, &used);
            if (used != port_str.size()) throw std::invalid_argument(port_str);
        } catch (const std::exception&) {
            detail::parse_fail(line, "bad port number '" + port_str + "'");
        }
        const int v = g.find_vertex(id);
        if (v < 0) detail::parse_fail(line, "unknown vertex '" + id + "'");
        const int deg = required_degree(g.vertices[v].kind);
        if (port < 0 || port >= deg)
            detail::parse_fail(line, "port " + tok + " out of range (" +
                                         kind_name(g.vertices[v].kind) + " has " +
                                         std::to_string(deg) + " ports)");
        if (use_count[v][port]++ > 0) detail::parse_fail(line, "port " + tok + " used twice");
        return EdgeEnd{v, port};
    };

    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        const auto hash = raw_line.find('#');
        if (hash != std::string::npos) raw_line.erase(hash);

        // ';' separates statements within a line.
        std::string stmt;
        std::istringstream line_in(raw_line);
        while (std::getline(line_in, stmt, ';')) {
            const std::vector<std::string> toks = detail::split_tokens(stmt);
            if (toks.empty()) continue;
            if (toks[0] == "v") {
                if (toks.size() != 3)
                    detail::parse_fail(line_no, "expected 'v <id> <kind>'");
                if (toks[1].find('.') != std::string::npos)
                    detail::parse_fail(line_no, "vertex id may not contain '.'");
                if (g.find_vertex(toks[1]) >= 0)
                    detail::parse_fail(line_no, "duplicate vertex id '" + toks[1] + "'");
                const auto kind = kind_from_name(toks[2]);
                if (!kind) detail::parse_fail(line_no, "unknown vertex kind '" + toks[2] + "'");
                g.add_vertex(toks[1], *kind);
                use_count.emplace_back(required_degree(*kind), 0);
            } else if (toks[0] == "e") {
                if (toks.size() != 4)
                    detail::parse_fail(line_no, "expected 'e <id>.<port> <id>.<port> <0|1>'");
                const EdgeEnd a = parse_port(toks[1], line_no);
                const EdgeEnd b = parse_port(toks[2], line_no);
                int label = 0;
                if (toks[3] == "0") label = 0;
                else if (toks[3] == "1") label = 1;
                else detail::parse_fail(line_no, "edge label must be 0 or 1, got '" + toks[3] + "'");
                g.add_edge(a, b, label);
            } else {
                detail::parse_fail(line_no, "unknown statement '" + toks[0] + "'");
            }
        }
    }
    return g;
}

/** Serialize back to the DSL, one statement per line; parse_graph round-trips it. */
inline std::string print_graph(const EncodingGraph& g) {
    std::ostringstream out;
    for (const Vertex& v : g.vertices) out << "v " << v.id << " " << kind_name(v.kind) << "\n";
    for (const Edge& e : g.edges) {
        out << "e " << g.vertices[e.a.vertex].id << "." << e.a.port << " "
            << g.vertices[e.b.vertex].id << "." << e.b.port << " " << e.z2_label << "\n";
    }
    return out.str();
}

// ----- JSON mirror -----

/** JSON form mirroring the fields one-to-one (ids, kinds, endpoints, labels). */
inline nlohmann::json graph_to_json(const EncodingGraph& g) {
    nlohmann::json jv = nlohmann::json::array();
    for (const Vertex& v : g.vertices)
        jv.push_back({{"id", v.id}, {"kind", kind_name(v.kind)}});
    nlohmann::json je = nlohmann::json::array();
    for (const Edge& e : g.edges) {
        je.push_back({{"endpoints",
                       {{{"vertex", g.vertices[e.a.vertex].id}, {"port", e.a.port}},
                        {{"vertex", g.vertices[e.b.vertex].id}, {"port", e.b.port}}}},
                      {"z2_label", e.z2_label}});
    }
    return nlohmann::json{{"vertices", jv}, {"edges", je}};
}

/** Inverse of graph_to_json; throws std::runtime_error on malformed input. */
inline EncodingGraph graph_from_json(const nlohmann::json& j) {
    EncodingGraph g;
    try {
        for (const auto& jv : j.at("vertices")) {
            const std::string id = jv.at("id").get<std::string>();
            const auto kind = kind_from_name(jv.at("kind").get<std::string>());
            if (!kind) throw std::runtime_error("unknown vertex kind '" +
                                                jv.at("kind").get<std::string>() + "'");
            if (g.find_vertex(id) >= 0)
                throw std::runtime_error("duplicate vertex id '" + id + "'");
            g.add_vertex(id, *kind);
        }
        for (const auto& je : j.at("edges")) {
            const auto& eps = je.at("endpoints");
            if (eps.size() != 2) throw std::runtime_error("edge needs exactly 2 endpoints");
            EdgeEnd ends[2];
            for (int k = 0; k < 2; ++k) {
                const int v = g.find_vertex(eps.at(k).at("vertex").get<std::string>());
                if (v < 0)
                    throw std::runtime_error("unknown vertex '" +
                                             eps.at(k).at("vertex").get<std::string>() + "'");
                ends[k] = EdgeEnd{v, eps.at(k).at("port").get<int>()};
            }
            const int label = je.at("z2_label").get<int>();
            g.add_edge(ends[0], ends[1], label);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed graph JSON: ") + e.what());
    }
    return g;
}

} // namespace shadowcalc
