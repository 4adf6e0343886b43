// CW structures for encoded polyhedra: cell inventories, integer boundary
// matrices, and fundamental-group presentations.
//
// The cellulation is piece-local. Every singular piece contributes one 0-cell
// v on its core circle, the core loop a, one radial arc r per wing, and one
// rectangle 2-cell per wing whose attaching word winds (winding) times around
// the core before running once around the gluing circle of the port. Every
// edge contributes the gluing circle itself (0-cell w, loop b). Disk pieces
// attach a single 2-cell along their circle; Moebius pieces contribute their
// own core (p, c) plus a connector s and the square c^2 s b^eta s^-1; pants
// pieces contribute connectors from their first circle to the other two and a
// hexagon visiting all three circles. The traversal sign eta of a circle is
// -1 when entered from endpoint 0 of its edge, and from endpoint 1 it is -1
// for label 0 and +1 for label 1 (the label records an orientation-reversing
// gluing). Boundary markers contribute nothing; their circles stay free.

#pragma once

#include <array>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadowcalc/abelian.hpp"
#include "shadowcalc/cocycle.hpp"
#include "shadowcalc/graph.hpp"
#include "shadowcalc/matrix.hpp"
#include "shadowcalc/polyhedron.hpp"
#include "shadowcalc/words.hpp"

namespace shadowcalc {

// ----- chain complex -----

/**
 * Two-step integer chain complex C2 -> C1 -> C0 with labels tracing every
 * cell back to the piece, wing, or circle it came from.
 *
 * d1 is cells0 x cells1 and d2 is cells1 x cells2, columns indexed by cells;
 * d1 * d2 = 0 always. ends1[j] holds the (from, to) 0-cells of 1-cell j
 * (equal for loops), and attaching[j] is the attaching word of 2-cell j over
 * the 1-cell generators.
 */
struct ChainComplex {
    std::vector<std::string> cells0, cells1, cells2;
    std::vector<std::array<int, 2>> ends1;
    std::vector<Word> attaching;
    IntMat d1{0, 0};
    IntMat d2{0, 0};

    int n0() const { return static_cast<int>(cells0.size()); }
    int n1() const { return static_cast<int>(cells1.size()); }
    int n2() const { return static_cast<int>(cells2.size()); }
    int euler() const { return n0() - n1() + n2(); }
};

namespace detail {

/** Sign with which a 2-cell runs around the circle of edge e, entered from the given end. */
inline int traversal_sign(int label, int end) {
    if (end == 0) return -1;
    return label == 0 ? -1 : +1;
}

} // namespace detail

/**
 * Build the chain complex of the polyhedron encoded by (g, labels).
 *
 * Cell order is deterministic: vertex-owned cells in vertex order, then
 * edge circles in edge order, then radial/connector arcs in vertex order,
 * then 2-cells in vertex order (wings in port order). Throws
 * std::invalid_argument for an invalid graph or malformed labels.
 */
inline ChainComplex chain_complex(const EncodingGraph& g, const CocycleLabels& labels) {
    {
        const std::vector<std::string> diag = validate(g);
        if (!diag.empty()) throw std::invalid_argument("invalid graph: " + diag.front());
    }
    detail::check_label_shape(g, labels);
    const std::vector<std::vector<PortRef>> pm = port_map(g);

    ChainComplex cc;
    const auto add0 = [&cc](const std::string& label) {
        cc.cells0.push_back(label);
        return cc.n0() - 1;
    };
    const auto add1 = [&cc](const std::string& label, int from, int to) {
        cc.cells1.push_back(label);
        cc.ends1.push_back({from, to});
        return cc.n1() - 1;
    };
    const auto add2 = [&cc](const std::string& label, Word word) {
        cc.cells2.push_back(label);
        cc.attaching.push_back(std::move(word));
        return cc.n2() - 1;
    };

    // 0-cells: piece cores first, then one point per gluing circle.
    std::vector<int> core0(g.vertices.size(), -1);
    std::vector<int> circle0(g.edges.size(), -1);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Vertex& vx = g.vertices[v];
        if (is_singular_piece(vx.kind)) core0[v] = add0("v(" + vx.id + ")");
        else if (vx.kind == VertexKind::Y2) core0[v] = add0("p(" + vx.id + ")");
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        circle0[e] = add0("w(e" + std::to_string(e) + ")");

    // 1-cells: core loops, circle loops, then radial and connector arcs.
    std::vector<int> core1(g.vertices.size(), -1);
    std::vector<int> circle1(g.edges.size(), -1);
    std::vector<std::array<int, 3>> radial1(g.vertices.size(), {-1, -1, -1});
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Vertex& vx = g.vertices[v];
        if (is_singular_piece(vx.kind))
            core1[v] = add1("a(" + vx.id + ")", core0[v], core0[v]);
        else if (vx.kind == VertexKind::Y2)
            core1[v] = add1("c(" + vx.id + ")", core0[v], core0[v]);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        circle1[e] = add1("b(e" + std::to_string(e) + ")", circle0[e], circle0[e]);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Vertex& vx = g.vertices[v];
        if (is_singular_piece(vx.kind)) {
            for (int p = 0; p < required_degree(vx.kind); ++p)
                radial1[v][p] = add1("r(" + vx.id + "." + std::to_string(p) + ")", core0[v],
                                     circle0[pm[v][p].edge]);
        } else if (vx.kind == VertexKind::Y2) {
            radial1[v][0] =
                add1("s(" + vx.id + ")", core0[v], circle0[pm[v][0].edge]);
        } else if (vx.kind == VertexKind::P) {
            for (int p = 1; p < 3; ++p)
                radial1[v][p] = add1("t(" + vx.id + "." + std::to_string(p) + ")",
                                     circle0[pm[v][0].edge], circle0[pm[v][p].edge]);
        }
    }

    // 2-cells with attaching words. eta_of reads the traversal sign of the
    // circle reached through a given port.
    const auto eta_of = [&](std::size_t v, int p) {
        const PortRef ref = pm[v][p];
        return detail::traversal_sign(labels[static_cast<std::size_t>(ref.edge)], ref.end);
    };
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const Vertex& vx = g.vertices[v];
        if (is_singular_piece(vx.kind)) {
            for (int p = 0; p < required_degree(vx.kind); ++p) {
                const Wing wing = wing_of_port(vx.id, vx.kind, p);
                const int b = circle1[pm[v][p].edge];
                const Word word = gen_pow(core1[v], wing.winding) * gen_pow(radial1[v][p], 1) *
                                  gen_pow(b, eta_of(v, p)) * gen_pow(radial1[v][p], -1);
                add2("wing(" + vx.id + "." + std::to_string(p) + ")", word);
            }
        } else if (vx.kind == VertexKind::D) {
            add2("disk(" + vx.id + ")", gen_pow(circle1[pm[v][0].edge], eta_of(v, 0)));
        } else if (vx.kind == VertexKind::Y2) {
            const Word word = gen_pow(core1[v], 2) * gen_pow(radial1[v][0], 1) *
                              gen_pow(circle1[pm[v][0].edge], eta_of(v, 0)) *
                              gen_pow(radial1[v][0], -1);
            add2("moebius(" + vx.id + ")", word);
        } else if (vx.kind == VertexKind::P) {
            Word word = gen_pow(circle1[pm[v][0].edge], eta_of(v, 0));
            for (int p = 1; p < 3; ++p)
                word = word * gen_pow(radial1[v][p], 1) *
                       gen_pow(circle1[pm[v][p].edge], eta_of(v, p)) *
                       gen_pow(radial1[v][p], -1);
            add2("pants(" + vx.id + ")", word);
        }
    }

    // Boundary matrices.
    cc.d1 = IntMat(cc.n0(), cc.n1());
    for (int j = 0; j < cc.n1(); ++j) {
        cc.d1.at(cc.ends1[static_cast<std::size_t>(j)][1], j) += 1;
        cc.d1.at(cc.ends1[static_cast<std::size_t>(j)][0], j) -= 1;
    }
    cc.d2 = IntMat(cc.n1(), cc.n2());
    for (int j = 0; j < cc.n2(); ++j) {
        const std::vector<i64> e =
            exponent_vector(cc.attaching[static_cast<std::size_t>(j)], cc.n1());
        for (int i = 0; i < cc.n1(); ++i) cc.d2.at(i, j) = e[static_cast<std::size_t>(i)];
    }
    {
        const IntMat z = cc.d1 * cc.d2;
        for (const i64 x : z.a)
            if (x != 0) throw std::logic_error("cell construction broke d1*d2 = 0");
    }
    return cc;
}

// ----- homology -----

/** H0, H1, H2 of the polyhedron encoded by (g, labels). */
inline HomologyTriple homology(const EncodingGraph& g, const CocycleLabels& labels) {
    const ChainComplex cc = chain_complex(g, labels);
    return homology_from_boundaries(cc.d1, cc.d2);
}

// ----- fundamental group -----

/**
 * Presentation of the fundamental group: generators are the 1-cells outside
 * a spanning tree of the 1-skeleton (BFS from 0-cell 0, arcs in index
 * order), relators are the 2-cell attaching words with tree letters erased.
 * Generator names are the surviving 1-cell labels; relators come out freely
 * reduced.
 */
inline GroupPresentation pi1_presentation(const EncodingGraph& g, const CocycleLabels& labels) {
    const ChainComplex cc = chain_complex(g, labels);

    // Spanning tree over 0-cells through non-loop 1-cells.
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(cc.n0()));
    for (int j = 0; j < cc.n1(); ++j) {
        const auto [from, to] = cc.ends1[static_cast<std::size_t>(j)];
        if (from == to) continue;
        adj[static_cast<std::size_t>(from)].push_back({to, j});
        adj[static_cast<std::size_t>(to)].push_back({from, j});
    }
    std::vector<char> in_tree(static_cast<std::size_t>(cc.n1()), 0);
    std::vector<char> seen(static_cast<std::size_t>(cc.n0()), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    while (!bfs.empty()) {
        const int u = bfs.front();
        bfs.pop();
        for (const auto& [nbr, j] : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(nbr)]) continue;
            seen[static_cast<std::size_t>(nbr)] = 1;
            in_tree[static_cast<std::size_t>(j)] = 1;
            bfs.push(nbr);
        }
    }
    for (const char s : seen)
        if (!s) throw std::logic_error("cell 1-skeleton disconnected for a connected graph");

    GroupPresentation pres;
    std::vector<int> gen_index(static_cast<std::size_t>(cc.n1()), -1);
    for (int j = 0; j < cc.n1(); ++j) {
        if (in_tree[static_cast<std::size_t>(j)]) continue;
        gen_index[static_cast<std::size_t>(j)] = pres.n_generators();
        pres.generator_names.push_back(cc.cells1[static_cast<std::size_t>(j)]);
    }
    for (const Word& w : cc.attaching) {
        std::vector<Letter> raw;
        for (const Letter& l : w.letters)
            if (!in_tree[static_cast<std::size_t>(l.gen)])
                raw.push_back({gen_index[static_cast<std::size_t>(l.gen)], l.exp});
        Word relator = reduced(raw);
        if (!relator.empty()) pres.relators.push_back(std::move(relator));
    }
    return pres;
}

// ----- serialization -----

/** JSON form of a chain complex: cell labels, boundary matrices as row arrays, attaching words. */
inline nlohmann::json chain_complex_to_json(const ChainComplex& cc) {
    const auto matrix_rows = [](const IntMat& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    nlohmann::json j;
    j["cells0"] = cc.cells0;
    j["cells1"] = cc.cells1;
    j["cells2"] = cc.cells2;
    j["d1"] = matrix_rows(cc.d1);
    j["d2"] = matrix_rows(cc.d2);
    nlohmann::json words = nlohmann::json::array();
    for (const Word& w : cc.attaching) words.push_back(to_string(w, cc.cells1));
    j["attaching"] = words;
    return j;
}

} // namespace shadowcalc
