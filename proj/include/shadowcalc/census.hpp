// Named catalog of the small polyhedra that appear in the desk-scale census:
// every encoding graph whose weighted complexity value at r = 1/2 is exactly
// 1/2, the value-zero graphs, and the closed surfaces that carry no value.
//
// Slugs describe the assembly: which piece kinds are present and how their
// wings are attached (capped by a disk, bounded by a boundary circle, glued
// to another wing, or glued to a Moebius core). Graphs with a cycle carry
// two cocycle classes and hence describe two polyhedra each.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shadowcalc/cocycle.hpp"
#include "shadowcalc/graph.hpp"

namespace shadowcalc {

/** One catalog row: a slug naming the assembly and its graph DSL. */
struct CensusName {
    std::string slug;
    std::string dsl;
};

/** The 22 graphs whose complexity value at r = 1/2 is exactly 1/2. */
inline const std::vector<CensusName>& half_complexity_catalog() {
    static const std::vector<CensusName> table = {
        {"annulus_surface",
         "v p P; v d D; v b1 B; v b2 B; e p.0 d.0 0; e p.1 b1.0 0; e p.2 b2.0 0"},
        {"y3_bounded", "v y Y3; v b B; e y.0 b.0 0"},
        {"y111_two_caps_bounded",
         "v y Y111; v d1 D; v d2 D; v b B; e y.0 d1.0 0; e y.1 d2.0 0; e y.2 b.0 0"},
        {"y12_fixed_bounded", "v y Y12; v d D; v b B; e y.0 b.0 0; e y.1 d.0 0"},
        {"y12_double_bounded", "v y Y12; v d D; v b B; e y.0 d.0 0; e y.1 b.0 0"},
        {"y12_double_to_y3", "v x Y12; v y Y3; v d D; e x.0 d.0 0; e x.1 y.0 0"},
        {"y3_y3", "v x Y3; v y Y3; e x.0 y.0 0"},
        {"y12_fixed_to_y3", "v x Y12; v y Y3; v d D; e x.0 y.0 0; e x.1 d.0 0"},
        {"y111_y3",
         "v x Y111; v y Y3; v d1 D; v d2 D; e x.0 y.0 0; e x.1 d1.0 0; e x.2 d2.0 0"},
        {"y12_fixed_pair",
         "v x Y12; v y Y12; v d1 D; v d2 D; e x.0 y.0 0; e x.1 d1.0 0; e y.1 d2.0 0"},
        {"y111_y12_fixed",
         "v x Y111; v y Y12; v d1 D; v d2 D; v d3 D; "
         "e x.0 y.0 0; e x.1 d1.0 0; e x.2 d2.0 0; e y.1 d3.0 0"},
        {"y111_y12_double",
         "v x Y111; v y Y12; v d1 D; v d2 D; v d3 D; "
         "e x.0 y.1 0; e x.1 d1.0 0; e x.2 d2.0 0; e y.0 d3.0 0"},
        {"y12_fixed_to_double",
         "v x Y12; v y Y12; v d1 D; v d2 D; e x.0 y.1 0; e x.1 d1.0 0; e y.0 d2.0 0"},
        {"y12_double_pair",
         "v x Y12; v y Y12; v d1 D; v d2 D; e x.1 y.1 0; e x.0 d1.0 0; e y.0 d2.0 0"},
        {"y12_self_loop", "v y Y12; e y.0 y.1 0"},
        {"y111_y111",
         "v y1 Y111; v y2 Y111; v d1 D; v d2 D; v d3 D; v d4 D; "
         "e y1.1 y2.0 0; e y1.0 d1.0 0; e y1.2 d2.0 0; e y2.1 d3.0 0; e y2.2 d4.0 0"},
        {"y111_self_loop", "v y Y111; v d D; e y.0 y.1 0; e y.2 d.0 0"},
        {"moebius_surface", "v m Y2; v b B; e m.0 b.0 0"},
        {"y3_y2", "v y Y3; v m Y2; e y.0 m.0 0"},
        {"y12_double_to_y2", "v y Y12; v m Y2; v d D; e y.1 m.0 0; e y.0 d.0 0"},
        {"y12_fixed_to_y2", "v y Y12; v m Y2; v d D; e y.0 m.0 0; e y.1 d.0 0"},
        {"y111_two_caps_y2",
         "v y Y111; v d1 D; v d2 D; v m Y2; e y.0 d1.0 0; e y.1 d2.0 0; e y.2 m.0 0"},
    };
    return table;
}

/** The graphs with complexity value 0: every region a disk, or the sphere. */
inline const std::vector<CensusName>& zero_complexity_catalog() {
    static const std::vector<CensusName> table = {
        {"sphere", "v d1 D; v d2 D; e d1.0 d2.0 0"},
        {"disk", "v d D; v b B; e d.0 b.0 0"},
        {"y111_three_caps",
         "v y Y111; v d1 D; v d2 D; v d3 D; e y.0 d1.0 0; e y.1 d2.0 0; e y.2 d3.0 0"},
        {"y3_capped", "v y Y3; v d D; e y.0 d.0 0"},
        {"y12_two_caps", "v y Y12; v d1 D; v d2 D; e y.0 d1.0 0; e y.1 d2.0 0"},
    };
    return table;
}

/** Closed surfaces other than the sphere carry no complexity value at all. */
inline const std::vector<CensusName>& no_value_catalog() {
    static const std::vector<CensusName> table = {
        {"projective_plane", "v d D; v m Y2; e d.0 m.0 0"},
        // Class 0 is the Klein bottle, class 1 the torus.
        {"pants_self_loop", "v p P; v d D; e p.0 p.1 0; e p.2 d.0 0"},
    };
    return table;
}

/** Look a slug up across all three catalogs; throws for unknown slugs. */
inline const CensusName& named_entry(const std::string& slug) {
    for (const auto* table :
         {&half_complexity_catalog(), &zero_complexity_catalog(), &no_value_catalog()})
        for (const CensusName& row : *table)
            if (row.slug == slug) return row;
    throw std::invalid_argument("unknown census slug: " + slug);
}

/** Parse the named graph. */
inline EncodingGraph named_graph(const std::string& slug) {
    return parse_graph(named_entry(slug).dsl);
}

/**
 * The named polyhedron as a (graph, labels) pair. class_index selects the
 * cocycle class in enumeration order (0 = the all-zero class); graphs
 * without cycles have only class 0.
 */
inline ShadowPair named_pair(const std::string& slug, int class_index = 0) {
    ShadowPair pair;
    pair.graph = named_graph(slug);
    const std::vector<CocycleLabels> classes = cocycle_classes(pair.graph);
    if (class_index < 0 || class_index >= static_cast<int>(classes.size()))
        throw std::invalid_argument("census slug " + slug + " has no cocycle class " +
                                    std::to_string(class_index));
    pair.labels = classes[static_cast<std::size_t>(class_index)];
    for (std::size_t e = 0; e < pair.labels.size(); ++e)
        pair.graph.edges[e].z2_label = pair.labels[e];
    return pair;
}

} // namespace shadowcalc
