// Exhaustive census generation: reduction of pants-plus-cap configurations
// to a normal form, bounded enumeration of all valid reduced (graph,
// cocycle class) pairs by kind multiset and port matching with symmetry
// pruning, and the line-oriented census file format.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadowcalc/analysis.hpp"
#include "shadowcalc/canonical.hpp"
#include "shadowcalc/census.hpp"
#include "shadowcalc/cocycle.hpp"
#include "shadowcalc/cw.hpp"
#include "shadowcalc/graph.hpp"
#include "shadowcalc/polyhedron.hpp"
#include "shadowcalc/rational.hpp"
#include "shadowcalc/words.hpp"

namespace shadowcalc {

// ----- reduction to normal form -----

namespace detail {

/** Per-P-vertex reduction facts: cap edges and the remaining attachments. */
struct PantsCaps {
    std::vector<int> cap_edges;   // edges whose far end is a D vertex
    std::vector<int> other_ports; // ports of this P not leading to a D
};

inline PantsCaps pants_caps(const EncodingGraph& g, int p_vertex) {
    const auto ports = port_map(g);
    PantsCaps pc;
    for (int port = 0; port < 3; ++port) {
        const PortRef ref = ports[p_vertex][port];
        const Edge& e = g.edges[ref.edge];
        const EdgeEnd far = ref.end == 0 ? e.b : e.a;
        if (far.vertex != p_vertex && g.vertices[far.vertex].kind == VertexKind::D)
            pc.cap_edges.push_back(ref.edge);
        else
            pc.other_ports.push_back(port);
    }
    return pc;
}

/** Rebuild the graph keeping only vertices marked true, remapping edges. */
inline void rebuild_without(EncodingGraph& g, CocycleLabels& labels,
                            const std::vector<bool>& keep_vertex,
                            const std::vector<bool>& keep_edge) {
    EncodingGraph out;
    std::vector<int> vmap(g.n_vertices(), -1);
    for (int v = 0; v < g.n_vertices(); ++v)
        if (keep_vertex[v]) vmap[v] = out.add_vertex(g.vertices[v].id, g.vertices[v].kind);
    CocycleLabels out_labels;
    for (int e = 0; e < g.n_edges(); ++e) {
        if (!keep_edge[e]) continue;
        const Edge& edge = g.edges[e];
        out.add_edge(EdgeEnd{vmap[edge.a.vertex], edge.a.port},
                     EdgeEnd{vmap[edge.b.vertex], edge.b.port}, labels[e]);
        out_labels.push_back(labels[e]);
    }
    g = std::move(out);
    labels = std::move(out_labels);
}

inline std::string fresh_id(const EncodingGraph& g, const std::string& base) {
    if (g.find_vertex(base) < 0) return base;
    for (int k = 0;; ++k) {
        const std::string id = base + std::to_string(k);
        if (g.find_vertex(id) < 0) return id;
    }
}

} // namespace detail

/**
 * True when neither rewrite applies to any P vertex: no P has two or more
 * D caps, and a P with exactly one D cap either carries a self-loop on its
 * other two circles or has both of them attached to B vertices.
 */
inline bool is_reduced(const EncodingGraph& g) {
    const auto ports = port_map(g);
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (g.vertices[v].kind != VertexKind::P) continue;
        const detail::PantsCaps pc = detail::pants_caps(g, v);
        if (pc.cap_edges.size() >= 2) return false;
        if (pc.cap_edges.size() != 1) continue;
        const PortRef rx = ports[v][pc.other_ports[0]];
        const PortRef ry = ports[v][pc.other_ports[1]];
        if (rx.edge == ry.edge) continue; // self-loop: irreducible closed surface
        const Edge& ex = g.edges[rx.edge];
        const Edge& ey = g.edges[ry.edge];
        const EdgeEnd fx = rx.end == 0 ? ex.b : ex.a;
        const EdgeEnd fy = ry.end == 0 ? ey.b : ey.a;
        if (g.vertices[fx.vertex].kind == VertexKind::B &&
            g.vertices[fy.vertex].kind == VertexKind::B)
            continue; // the annulus-with-boundary configuration stays
        return false;
    }
    return true;
}

/**
 * Reduce a valid pair to normal form. A P with two or more D caps becomes
 * a single D on its remaining circle (fresh pendant edge, label 0); a P
 * with exactly one D cap is an annulus and is replaced by a direct edge
 * between its two other attachment points, with label the sum of the two
 * removed edge labels — except for the kept configurations listed at
 * is_reduced. The region structure (multiset of region stats and wings)
 * is unchanged; the rewriting terminates because every step removes two
 * vertices. Throws std::invalid_argument on invalid input.
 */
inline ShadowPair reduce(const EncodingGraph& g_in, const CocycleLabels& labels_in) {
    {
        const auto diags = validate(g_in);
        if (!diags.empty())
            throw std::invalid_argument("reduce: invalid graph: " + diags.front());
    }
    detail::check_label_shape(g_in, labels_in);

    EncodingGraph g = g_in;
    CocycleLabels labels = labels_in;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto ports = port_map(g);
        for (int v = 0; v < g.n_vertices() && !changed; ++v) {
            if (g.vertices[v].kind != VertexKind::P) continue;
            const detail::PantsCaps pc = detail::pants_caps(g, v);
            std::vector<bool> keep_v(g.n_vertices(), true);
            std::vector<bool> keep_e(g.n_edges(), true);

            if (pc.cap_edges.size() >= 2) {
                // Two caps and the pants together form one disk on the
                // remaining circle.
                const int e1 = pc.cap_edges[0];
                const int e2 = pc.cap_edges[1];
                const int third_port =
                    pc.other_ports.empty() ? -1 : pc.other_ports[0];
                const int e3 = third_port >= 0
                                   ? ports[v][third_port].edge
                                   : pc.cap_edges[2]; // three caps: keep one D
                const PortRef r3 = third_port >= 0 ? ports[v][third_port]
                                                   : PortRef{e3, 0};
                const Edge& edge3 = g.edges[e3];
                EdgeEnd target = r3.end == 0 ? edge3.b : edge3.a;
                if (third_port < 0) {
                    // All three circles capped: the survivor is the third D.
                    target = g.vertices[edge3.a.vertex].kind == VertexKind::D &&
                                     edge3.a.vertex != v
                                 ? edge3.a
                                 : edge3.b;
                }
                keep_v[v] = false;
                for (const int e : {e1, e2}) {
                    const Edge& ce = g.edges[e];
                    const EdgeEnd far = ce.a.vertex == v ? ce.b : ce.a;
                    keep_v[far.vertex] = false;
                    keep_e[e] = false;
                }
                keep_e[e3] = false;
                const std::string id =
                    detail::fresh_id(g, g.vertices[v].id + "_d");
                const int nd = g.add_vertex(id, VertexKind::D);
                keep_v.push_back(true);
                g.add_edge(EdgeEnd{nd, 0}, target, 0);
                labels.push_back(0);
                keep_e.push_back(true);
                detail::rebuild_without(g, labels, keep_v, keep_e);
                changed = true;
            } else if (pc.cap_edges.size() == 1) {
                const PortRef rx = ports[v][pc.other_ports[0]];
                const PortRef ry = ports[v][pc.other_ports[1]];
                if (rx.edge == ry.edge) continue;
                const Edge& ex = g.edges[rx.edge];
                const Edge& ey = g.edges[ry.edge];
                const EdgeEnd fx = rx.end == 0 ? ex.b : ex.a;
                const EdgeEnd fy = ry.end == 0 ? ey.b : ey.a;
                if (g.vertices[fx.vertex].kind == VertexKind::B &&
                    g.vertices[fy.vertex].kind == VertexKind::B)
                    continue;
                // The pants plus cap is an annulus between fx and fy.
                const int cap = pc.cap_edges[0];
                const Edge& ce = g.edges[cap];
                const EdgeEnd far = ce.a.vertex == v ? ce.b : ce.a;
                keep_v[v] = false;
                keep_v[far.vertex] = false;
                keep_e[cap] = keep_e[rx.edge] = keep_e[ry.edge] = false;
                const int joined = labels[rx.edge] ^ labels[ry.edge];
                g.add_edge(fx, fy, joined);
                labels.push_back(joined);
                keep_e.push_back(true);
                detail::rebuild_without(g, labels, keep_v, keep_e);
                changed = true;
            }
        }
    }
    ShadowPair out;
    out.graph = g;
    out.labels = labels;
    for (int e = 0; e < out.graph.n_edges(); ++e)
        out.graph.edges[e].z2_label = labels[e];
    return out;
}

// ----- enumeration -----

/** Resource bounds for the census search; all fields must be non-negative. */
struct EnumerationBounds {
    int max_vertices = 4;
    int max_n = 1;               // cap on Sigma(1 - chi), surfaces included
    Rational r{1, 2};            // complexity weight
    Rational c_max{1, 2};        // value cutoff at r; no-value entries skip it
    std::int64_t work_limit = 50'000'000; // search-node budget
};

/** One census line: a canonical pair with its invariants and verdicts. */
struct CensusEntry {
    std::string canonical;
    std::string dsl;
    CocycleLabels labels;
    PolyhedronSummary summary;
    std::optional<WeightedComplexity> complexity; // empty for no-value surfaces
    HomologyTriple groups;
    AbelianGroup abelianization; // of the fundamental-group presentation
    ObstructionVerdict verdict;
    std::optional<CuratedFact> curated;
};

namespace detail {

template <typename Emit>
struct SearchState {
    const std::vector<VertexKind>& kinds;
    Emit& emit;                      // called with match[] on each completion
    std::vector<int> slot_vertex;    // global slot -> vertex
    std::vector<int> slot_port;      // global slot -> port
    std::vector<int> base;           // vertex -> first global slot
    std::vector<int> match;          // slot -> partner slot or -1
    std::vector<int> touched;        // vertex -> number of matched ports
    std::vector<int> caps;           // vertex -> number of D neighbours so far
    std::int64_t nodes = 0;
    std::int64_t limit = 0;
};

template <typename Emit>
inline void match_ports(SearchState<Emit>& st, int n_matched) {
    if (++st.nodes > st.limit)
        throw std::runtime_error("enumeration work limit exceeded");
    const int n_slots = static_cast<int>(st.match.size());
    if (n_matched == n_slots) {
        st.emit(st);
        return;
    }
    int s = 0;
    while (st.match[s] >= 0) ++s;
    const int vs = st.slot_vertex[s];
    const VertexKind ks = st.kinds[vs];
    const int nv = static_cast<int>(st.kinds.size());
    for (int t = s + 1; t < n_slots; ++t) {
        if (st.match[t] >= 0) continue;
        const int vt = st.slot_vertex[t];
        const VertexKind kt = st.kinds[vt];
        if (ks == VertexKind::B && kt == VertexKind::B) continue;
        // An edge between two degree-one vertices closes a two-vertex
        // component, so it only appears in the two-vertex graphs.
        if (nv > 2 && required_degree(ks) == 1 && required_degree(kt) == 1) continue;
        // A P that acquires a second D cap can never be part of a reduced
        // completion.
        const bool caps_p_s = ks == VertexKind::P && kt == VertexKind::D;
        const bool caps_p_t = kt == VertexKind::P && ks == VertexKind::D;
        if (caps_p_s && st.caps[vs] >= 1) continue;
        if (caps_p_t && st.caps[vt] >= 1) continue;
        // Among untouched vertices of one kind only the first is a
        // representative candidate.
        if (vt != vs && st.touched[vt] == 0) {
            bool shadowed = false;
            for (int u = 0; u < vt && !shadowed; ++u)
                if (u != vs && st.kinds[u] == kt && st.touched[u] == 0) shadowed = true;
            if (shadowed) continue;
        }
        // Within a vertex whose ports are interchangeable, only the lowest
        // unmatched port is a representative candidate.
        if (ports_interchangeable(kt)) {
            bool lower_free = false;
            for (int u = st.base[vt]; u < t && !lower_free; ++u)
                if (u != s && st.slot_vertex[u] == vt && st.match[u] < 0) lower_free = true;
            if (lower_free) continue;
        }
        st.match[s] = t;
        st.match[t] = s;
        st.touched[vs] += 1;
        st.touched[vt] += 1;
        if (caps_p_s) st.caps[vs] += 1;
        if (caps_p_t) st.caps[vt] += 1;
        match_ports(st, n_matched + 2);
        if (caps_p_s) st.caps[vs] -= 1;
        if (caps_p_t) st.caps[vt] -= 1;
        st.match[s] = -1;
        st.match[t] = -1;
        st.touched[vs] -= 1;
        st.touched[vt] -= 1;
    }
}

/** All kind multisets worth matching under the bounds. */
inline std::vector<std::vector<VertexKind>> kind_multisets(const EnumerationBounds& b) {
    std::vector<std::vector<VertexKind>> out;
    const std::vector<VertexKind> order = {VertexKind::B,  VertexKind::D,  VertexKind::Y2,
                                           VertexKind::Y3, VertexKind::Y12, VertexKind::Y111,
                                           VertexKind::P};
    std::vector<int> count(order.size(), 0);
    const auto emit = [&] {
        int nv = 0, degree_sum = 0, n_p = 0, n_d = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            nv += count[i];
            degree_sum += count[i] * required_degree(order[i]);
            if (order[i] == VertexKind::P) n_p = count[i];
            if (order[i] == VertexKind::D) n_d = count[i];
        }
        if (nv == 0 || degree_sum % 2 != 0) return;
        const int n_e = degree_sum / 2;
        if (n_e < nv - 1 || n_e == 0) return;
        // Every region holds at least one circle and only P merges circles,
        // so regions >= edges - 2P and sum(1 - chi) >= edges - P - D: the
        // arc cap cuts whole multisets.
        if (n_e - n_p - n_d > b.max_n) return;
        std::vector<VertexKind> kinds;
        for (std::size_t i = 0; i < order.size(); ++i)
            kinds.insert(kinds.end(), count[i], order[i]);
        out.push_back(std::move(kinds));
    };
    const auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == order.size()) {
            emit();
            return;
        }
        for (int c = 0; c <= left; ++c) {
            count[i] = c;
            self(self, i + 1, left - c);
        }
        count[i] = 0;
    };
    rec(rec, 0, b.max_vertices);
    return out;
}

inline CensusEntry make_entry(const EncodingGraph& g, const CocycleLabels& labels,
                              const std::string& canonical, const PolyhedronSummary& s) {
    CensusEntry e;
    e.canonical = canonical;
    EncodingGraph labeled = g;
    for (int i = 0; i < labeled.n_edges(); ++i) labeled.edges[i].z2_label = labels[i];
    e.dsl = print_graph(labeled);
    e.labels = labels;
    e.summary = s;
    if (!s.is_closed_surface_positive_genus) e.complexity = weighted_complexity(s);
    const Assessment a = assess(g, labels);
    e.groups = a.groups;
    e.abelianization = h1_from_presentation(pi1_presentation(g, labels));
    e.verdict = a.verdict;
    e.curated = a.curated;
    return e;
}

} // namespace detail

/**
 * Enumerate every valid, connected, reduced (graph, cocycle class) pair
 * within the bounds: at most max_vertices pieces and arc count at most
 * max_n. Pairs with a complexity value must also have value at most c_max
 * at weight r; closed surfaces of positive genus have no value, so only the
 * arc cap applies and they are emitted without complexity data. Entries are
 * keyed and sorted by canonical form. Throws std::invalid_argument on bad
 * bounds and std::runtime_error when the work limit is exhausted.
 */
inline std::vector<CensusEntry> enumerate_census(const EnumerationBounds& b,
                                                 std::optional<unsigned> shuffle_seed = {}) {
    if (b.max_vertices < 1 || b.max_n < 0 || b.r < Rational(0) || b.c_max < Rational(0) ||
        b.work_limit <= 0)
        throw std::invalid_argument("enumerate_census: bounds must be non-negative");

    std::vector<std::vector<VertexKind>> multisets = detail::kind_multisets(b);
    if (shuffle_seed) {
        // Processing order must not matter; a shuffled order exercises that.
        std::mt19937 rng(*shuffle_seed);
        std::shuffle(multisets.begin(), multisets.end(), rng);
    }
    std::map<std::string, CensusEntry> found;
    std::set<std::vector<std::uint8_t>> seen_graphs;
    std::int64_t nodes_used = 0;
    for (const std::vector<VertexKind>& kinds : multisets) {
        const int nv = static_cast<int>(kinds.size());
        const auto emit = [&](const auto& st) {
            EncodingGraph g;
            for (int v = 0; v < nv; ++v) g.add_vertex("v" + std::to_string(v), kinds[v]);
            for (int s = 0; s < static_cast<int>(st.match.size()); ++s)
                if (st.match[s] > s)
                    g.add_edge(EdgeEnd{st.slot_vertex[s], st.slot_port[s]},
                               EdgeEnd{st.slot_vertex[st.match[s]],
                                       st.slot_port[st.match[s]]},
                               0);
            if (!is_valid(g) || !is_reduced(g)) return;
            const PairCanonicalContext ctx = canonical_context(g);
            // The symmetry pruning leaves duplicates; one representative per
            // graph-isomorphism class carries all its cocycle classes.
            if (!seen_graphs.insert(ctx.graph_bytes).second) return;
            for (const CocycleLabels& labels : cocycle_classes(g)) {
                const PolyhedronSummary s = summarize(g, labels);
                if (arc_count(s) > b.max_n) continue;
                if (!s.is_closed_surface_positive_genus &&
                    !(weighted_complexity(s).value_at(b.r) <= b.c_max))
                    continue;
                const std::string key = canonicalize_in_context(ctx, labels).hex();
                if (found.count(key)) continue;
                found.emplace(key, detail::make_entry(g, labels, key, s));
            }
        };
        detail::SearchState<const decltype(emit)> st{
            kinds, emit, {}, {}, {}, {}, {}, {}, 0, b.work_limit - nodes_used};
        st.base.resize(nv);
        for (int v = 0; v < nv; ++v) {
            st.base[v] = static_cast<int>(st.slot_vertex.size());
            for (int p = 0; p < required_degree(kinds[v]); ++p) {
                st.slot_vertex.push_back(v);
                st.slot_port.push_back(p);
            }
        }
        st.match.assign(st.slot_vertex.size(), -1);
        st.touched.assign(nv, 0);
        st.caps.assign(nv, 0);
        detail::match_ports(st, 0);
        nodes_used += st.nodes;
    }
    std::vector<CensusEntry> out;
    out.reserve(found.size());
    for (auto& [key, entry] : found) out.push_back(std::move(entry));
    return out;
}

// ----- census files -----

namespace detail {

inline nlohmann::json ab_to_json(const AbelianGroup& g) {
    nlohmann::json j;
    j["rank"] = g.rank;
    j["torsion"] = g.torsion;
    return j;
}

inline AbelianGroup ab_from_json(const nlohmann::json& j) {
    AbelianGroup g;
    g.rank = j.at("rank").get<int>();
    g.torsion = j.at("torsion").get<std::vector<i64>>();
    return g;
}

} // namespace detail

inline nlohmann::json entry_to_json(const CensusEntry& e) {
    nlohmann::json j;
    j["canonical"] = e.canonical;
    j["dsl"] = e.dsl;
    j["labels"] = e.labels;
    j["summary"] = summary_to_json(e.summary);
    if (e.complexity) {
        j["complexity"] = {{"m", e.complexity->m},
                           {"n", e.complexity->n}};
    } else {
        j["complexity"] = nullptr;
    }
    j["homology"] = {{"h0", detail::ab_to_json(e.groups.h0)},
                     {"h1", detail::ab_to_json(e.groups.h1)},
                     {"h2", detail::ab_to_json(e.groups.h2)}};
    j["abelianization"] = detail::ab_to_json(e.abelianization);
    j["verdict"] = verdict_to_json(e.verdict);
    if (e.curated) j["curated"] = curated_to_json(*e.curated);
    return j;
}

/** Write one JSON object per line; parent directory must exist. */
inline void save_census(const std::vector<CensusEntry>& entries, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_census: cannot open " + path);
    for (const CensusEntry& e : entries) out << entry_to_json(e).dump() << '\n';
    if (!out) throw std::runtime_error("save_census: write failed for " + path);
}

/**
 * Read a census file back, recomputing every derived field from the stored
 * graph and labels and verifying it against what the line claims. Throws
 * std::runtime_error naming the first offending line.
 */
inline std::vector<CensusEntry> load_census(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_census: cannot open " + path);
    std::vector<CensusEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fail = [line_no](const std::string& msg) -> std::runtime_error {
            return std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
        };
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& ex) {
            throw fail(std::string("malformed JSON: ") + ex.what());
        }
        try {
            EncodingGraph g = parse_graph(j.at("dsl").get<std::string>());
            const CocycleLabels labels = j.at("labels").get<CocycleLabels>();
            detail::check_label_shape(g, labels);
            for (int e = 0; e < g.n_edges(); ++e) g.edges[e].z2_label = labels[e];
            const std::string key = canonical_hex(g, labels);
            if (key != j.at("canonical").get<std::string>())
                throw fail("canonical form does not match the stored graph");
            const PolyhedronSummary s = summarize(g, labels);
            CensusEntry e = detail::make_entry(g, labels, key, s);
            if (j.at("complexity").is_null() != !e.complexity)
                throw fail("stored complexity disagrees with recomputation");
            if (e.complexity &&
                (j.at("complexity").at("m").get<int>() != e.complexity->m ||
                 j.at("complexity").at("n").get<int>() != e.complexity->n))
                throw fail("stored complexity disagrees with recomputation");
            if (detail::ab_from_json(j.at("homology").at("h1")) != e.groups.h1 ||
                detail::ab_from_json(j.at("homology").at("h2")) != e.groups.h2)
                throw fail("stored homology disagrees with recomputation");
            const bool stored_excluded =
                j.at("verdict").at("status").get<std::string>() == "NotAShadow";
            if (stored_excluded != e.verdict.excluded())
                throw fail("stored verdict disagrees with recomputation");
            out.push_back(std::move(e));
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& ex) {
            throw fail(std::string("bad entry: ") + ex.what());
        }
    }
    return out;
}

} // namespace shadowcalc
