// Obstruction rules and bound arithmetic on top of the region and homology
// layers: which polyhedra can be shadows of closed 4-manifolds at all, the
// cut-system counts that drive the trisection-genus bound, trisection
// parameter bookkeeping, the closed classification tables at complexity
// 0 and 1/2, and the curated per-census conclusions that rest on geometric
// arguments we do not recompute.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shadowcalc/abelian.hpp"
#include "shadowcalc/canonical.hpp"
#include "shadowcalc/census.hpp"
#include "shadowcalc/cw.hpp"
#include "shadowcalc/fox.hpp"
#include "shadowcalc/polyhedron.hpp"
#include "shadowcalc/rational.hpp"

namespace shadowcalc {

// ----- obstruction verdicts -----

enum class VerdictStatus { Candidate, NotAShadow };

/** Outcome of an obstruction rule; NotAShadow always names the firing rule. */
struct ObstructionVerdict {
    VerdictStatus status = VerdictStatus::Candidate;
    std::string rule;   // empty for Candidate
    std::string detail; // human-readable explanation

    bool excluded() const { return status == VerdictStatus::NotAShadow; }

    static ObstructionVerdict candidate() { return {}; }
    static ObstructionVerdict excluded_by(std::string rule, std::string detail) {
        return ObstructionVerdict{VerdictStatus::NotAShadow, std::move(rule), std::move(detail)};
    }
};

/**
 * Homological obstruction (Costantino): a polyhedron with trivial second
 * homology but torsion in its first homology is not the shadow of any
 * closed 4-manifold.
 */
inline ObstructionVerdict costantino_check(const AbelianGroup& h1, const AbelianGroup& h2) {
    if (h2.trivial() && h1.has_torsion())
        return ObstructionVerdict::excluded_by(
            "costantino", "H2 = 0 but H1 = " + to_string(h1) + " has torsion");
    return ObstructionVerdict::candidate();
}

/**
 * Structural obstructions readable off the summary alone: closed surfaces
 * of positive genus are not shadows, and neither is a closed polyhedron
 * whose singular set is nonempty but which has only one region.
 */
inline ObstructionVerdict structural_checks(const PolyhedronSummary& s) {
    if (s.is_closed_surface_positive_genus)
        return ObstructionVerdict::excluded_by(
            "closed_surface", "a closed surface of positive genus is not a shadow");
    if (s.boundary_components == 0 && s.singular_circles > 0 && s.regions.size() == 1)
        return ObstructionVerdict::excluded_by(
            "closed_polyhedron_single_region",
            "closed polyhedron with nonempty singular set and a single region");
    return ObstructionVerdict::candidate();
}

// ----- manifold expressions -----

/** Atom of a connected-sum expression; p is used by the S_p / S'_p kinds. */
struct ManifoldAtom {
    enum class Kind { S4, S1xS3, S2xS2, CP2, CP2BAR, S_p, Sprime_p };
    Kind kind = Kind::S4;
    int p = 0;

    friend bool operator==(const ManifoldAtom& a, const ManifoldAtom& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator<(const ManifoldAtom& a, const ManifoldAtom& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.p < b.p;
    }
};

inline std::string to_string(const ManifoldAtom& a) {
    switch (a.kind) {
        case ManifoldAtom::Kind::S4: return "S4";
        case ManifoldAtom::Kind::S1xS3: return "S1xS3";
        case ManifoldAtom::Kind::S2xS2: return "S2xS2";
        case ManifoldAtom::Kind::CP2: return "CP2";
        case ManifoldAtom::Kind::CP2BAR: return "CP2bar";
        case ManifoldAtom::Kind::S_p: return "S_" + std::to_string(a.p);
        case ManifoldAtom::Kind::Sprime_p: return "S'_" + std::to_string(a.p);
    }
    return "?";
}

/**
 * A connected sum of atoms in multiset normal form: summands sorted, and
 * S4 (the identity of connected sum) kept only when it is the whole
 * expression.
 */
struct ManifoldExpr {
    std::vector<ManifoldAtom> summands; // sorted; {S4} iff the expression is S4

    ManifoldExpr() : summands{ManifoldAtom{}} {}
    explicit ManifoldExpr(std::vector<ManifoldAtom> parts) {
        for (ManifoldAtom& a : parts)
            if (a.kind != ManifoldAtom::Kind::S4) summands.push_back(a);
        if (summands.empty()) summands.push_back(ManifoldAtom{});
        std::sort(summands.begin(), summands.end());
    }

    friend bool operator==(const ManifoldExpr& a, const ManifoldExpr& b) {
        return a.summands == b.summands;
    }
    friend bool operator<(const ManifoldExpr& a, const ManifoldExpr& b) {
        return a.summands < b.summands;
    }
};

inline std::string to_string(const ManifoldExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.summands.size(); ++i) {
        if (i > 0) out += " # ";
        out += to_string(e.summands[i]);
    }
    return out;
}

namespace detail {

inline ManifoldAtom atom_s4() { return {ManifoldAtom::Kind::S4, 0}; }
inline ManifoldAtom atom_s1xs3() { return {ManifoldAtom::Kind::S1xS3, 0}; }
inline ManifoldAtom atom_s2xs2() { return {ManifoldAtom::Kind::S2xS2, 0}; }
inline ManifoldAtom atom_cp2() { return {ManifoldAtom::Kind::CP2, 0}; }
inline ManifoldAtom atom_cp2bar() { return {ManifoldAtom::Kind::CP2BAR, 0}; }
inline ManifoldAtom atom_sp(int p) { return {ManifoldAtom::Kind::S_p, p}; }
inline ManifoldAtom atom_sprime(int p) { return {ManifoldAtom::Kind::Sprime_p, p}; }

inline ManifoldExpr expr(std::vector<ManifoldAtom> parts) {
    return ManifoldExpr(std::move(parts));
}

} // namespace detail

/**
 * The complexity-zero family for a given fundamental-group order: every
 * closed 4-manifold of shadow-complexity zero with |pi1| = pi1_size is
 * W' # h(S2xS2) # k(CP2) # l(CP2bar) with W' constrained by pi1_size
 * (1 -> S4; 2 -> S_2 or S'_2; 3 -> S_3). A witness order, when supplied,
 * must agree with pi1_size. Throws std::invalid_argument otherwise.
 */
struct ManifoldFamily {
    std::vector<ManifoldExpr> base_options;   // the possible W'
    std::vector<ManifoldAtom> summand_kinds;  // free connected-sum summands
};

inline ManifoldFamily martelli_family(int pi1_size, std::optional<int> witness = std::nullopt) {
    if (pi1_size < 1 || pi1_size > 3)
        throw std::invalid_argument("martelli_family: |pi1| must be 1, 2, or 3");
    if (witness && *witness != pi1_size)
        throw std::invalid_argument("martelli_family: witness order " +
                                    std::to_string(*witness) + " contradicts |pi1| = " +
                                    std::to_string(pi1_size));
    using namespace detail;
    ManifoldFamily f;
    switch (pi1_size) {
        case 1: f.base_options = {expr({atom_s4()})}; break;
        case 2: f.base_options = {expr({atom_sp(2)}), expr({atom_sprime(2)})}; break;
        case 3: f.base_options = {expr({atom_sp(3)})}; break;
    }
    f.summand_kinds = {atom_s2xs2(), atom_cp2(), atom_cp2bar()};
    return f;
}

// ----- cut systems and genus bounds -----

/**
 * Arc counts of the cut system of a polyhedron with nonempty singular set,
 * and the derived spine/trisection numbers: a region R contributes 1-chi(R)
 * arcs; the spine graph has n_prime = m+n+1 arcs, the retraction track tau
 * has 2m+n+2 arcs, the central trisection surface has genus tau_arcs+1, and
 * one destabilization is always available.
 */
struct CutSystemStats {
    std::vector<int> arcs_per_region; // 1 - chi(R), in region order
    int total_arcs = 0;               // n
    int n_prime = 0;                  // m + n + 1
    int tau_arcs = 0;                 // 2m + n + 2
    int sigma_genus = 0;              // tau_arcs + 1
    int destabilized_bound = 0;       // sigma_genus - 1
    int chi_gamma_tilde = 0;          // -(m + n)
};

inline CutSystemStats cut_system_stats(const PolyhedronSummary& s) {
    if (s.singular_circles == 0)
        throw UndefinedValueError("cut_system_stats: needs a nonempty singular set");
    CutSystemStats st;
    for (const RegionStat& r : s.regions) {
        st.arcs_per_region.push_back(1 - r.chi);
        st.total_arcs += 1 - r.chi;
    }
    const int m = s.true_vertices;
    st.n_prime = m + st.total_arcs + 1;
    st.tau_arcs = 2 * m + st.total_arcs + 2;
    st.sigma_genus = st.tau_arcs + 1;
    st.destabilized_bound = st.sigma_genus - 1;
    st.chi_gamma_tilde = -(m + st.total_arcs);
    return st;
}

/**
 * Upper bound for the trisection genus of any closed 4-manifold with this
 * shadow: 2 + 2*c_(1/2) when the singular set is nonempty, 1 for the
 * sphere, and 2*c_(1/2) = n for surfaces with boundary. Throws
 * UndefinedValueError where complexity itself is undefined.
 */
inline int genus_bound(const PolyhedronSummary& s) {
    const WeightedComplexity wc = weighted_complexity(s); // throws when undefined
    if (s.singular_circles > 0) return 2 + 2 * wc.m + wc.n;
    if (s.is_sphere) return 1;
    if (s.boundary_components > 0) return wc.n;
    // Closed, no singular set, not positive genus: the sphere again.
    return 1;
}

// ----- trisection bookkeeping -----

/** Symmetric pairwise data of a curve triple on the central surface. */
struct CurveTripleData {
    std::array<std::array<bool, 3>, 3> parallel{}; // diagonal must stay false
    std::array<std::array<int, 3>, 3> meets{};     // geometric intersection counts
};

/**
 * Whether the triple admits the standard destabilization move: exactly one
 * pair of the three curves is parallel, and each member of that pair meets
 * the remaining curve transversely exactly once. Throws on malformed
 * (asymmetric, negative, or diagonal-polluted) data.
 */
inline bool destab_triple(const CurveTripleData& d) {
    for (int i = 0; i < 3; ++i) {
        if (d.parallel[i][i]) throw std::invalid_argument("destab_triple: diagonal parallel flag");
        if (d.meets[i][i] != 0) throw std::invalid_argument("destab_triple: diagonal count");
        for (int j = 0; j < 3; ++j) {
            if (d.parallel[i][j] != d.parallel[j][i])
                throw std::invalid_argument("destab_triple: parallel flags not symmetric");
            if (d.meets[i][j] != d.meets[j][i])
                throw std::invalid_argument("destab_triple: counts not symmetric");
            if (d.meets[i][j] < 0) throw std::invalid_argument("destab_triple: negative count");
        }
    }
    int pairs = 0, pi = -1, pj = -1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (d.parallel[i][j]) { ++pairs; pi = i; pj = j; }
    if (pairs != 1) return false;
    const int k = 3 - pi - pj;
    return d.meets[pi][k] == 1 && d.meets[pj][k] == 1;
}

/** Genus and handlebody parameters of a trisection. */
struct TrisectionParams {
    int g = 0;
    std::array<int, 3> k{0, 0, 0};

    friend bool operator==(const TrisectionParams& a, const TrisectionParams& b) {
        return a.g == b.g && a.k == b.k;
    }
};

/** Diagnostics for invalid parameters; empty means valid. */
inline std::vector<std::string> trisection_validate(const TrisectionParams& p) {
    std::vector<std::string> out;
    if (p.g < 0) out.push_back("genus must be non-negative");
    for (int i = 0; i < 3; ++i) {
        if (p.k[i] < 0) out.push_back("k" + std::to_string(i + 1) + " must be non-negative");
        if (p.k[i] > p.g)
            out.push_back("k" + std::to_string(i + 1) + " exceeds the genus");
    }
    return out;
}

/**
 * Stabilize along sector i (1-based): the central genus grows by one and
 * the chosen handlebody parameter with it. Throws on invalid input.
 */
inline TrisectionParams trisection_stabilize(const TrisectionParams& p, int i) {
    if (!trisection_validate(p).empty())
        throw std::invalid_argument("trisection_stabilize: invalid parameters");
    if (i < 1 || i > 3) throw std::invalid_argument("trisection_stabilize: sector must be 1..3");
    TrisectionParams out = p;
    out.g += 1;
    out.k[i - 1] += 1;
    return out;
}

/** Euler characteristic of the closed 4-manifold: 2 + g - (k1 + k2 + k3). */
inline int trisection_euler(const TrisectionParams& p) {
    return 2 + p.g - (p.k[0] + p.k[1] + p.k[2]);
}

// ----- classification tables -----

/**
 * The closed classification at a complexity level: 7 manifolds at 0 and
 * 10 at 1/2. Any other level throws std::invalid_argument.
 */
inline std::vector<ManifoldExpr> classification_tables(const Rational& level) {
    using namespace detail;
    if (level == Rational(0))
        return {
            expr({atom_s4()}),
            expr({atom_cp2()}),
            expr({atom_cp2bar()}),
            expr({atom_s2xs2()}),
            expr({atom_cp2(), atom_cp2()}),
            expr({atom_cp2(), atom_cp2bar()}),
            expr({atom_cp2bar(), atom_cp2bar()}),
        };
    if (level == Rational(1, 2))
        return {
            expr({atom_cp2(), atom_cp2(), atom_cp2()}),
            expr({atom_cp2(), atom_cp2(), atom_cp2bar()}),
            expr({atom_cp2(), atom_cp2bar(), atom_cp2bar()}),
            expr({atom_cp2bar(), atom_cp2bar(), atom_cp2bar()}),
            expr({atom_s1xs3()}),
            expr({atom_s1xs3(), atom_cp2()}),
            expr({atom_s1xs3(), atom_cp2bar()}),
            expr({atom_sp(2)}),
            expr({atom_sprime(2)}),
            expr({atom_sp(3)}),
        };
    throw std::invalid_argument("classification_tables: no table at level " + to_string(level));
}

// ----- boundary of the thickened looped piece -----

/**
 * Fundamental group of the boundary 3-manifold of a 4-dimensional thickening
 * of the looped-piece polyhedron (the nontrivial cocycle class of
 * y111_self_loop). The thickening is described by a two-component Kirby
 * diagram whose framings are the region gleams m and n; surgery reading of
 * the boundary gives generators x, y, z with relators
 * [x,z], [z,y^-1xy], x^n z y z y^-1, z^-1 (x y^-1 x y)^m.
 * H1 is Z when 4m+n = +-1, Z^2 when 4m+n = 0, and Z + Z/(4m+n) otherwise.
 */
inline GroupPresentation y111_self_loop_boundary(int m, int n) {
    GroupPresentation p;
    p.generator_names = {"x", "y", "z"};
    const Word x = gen_pow(0, 1), y = gen_pow(1, 1), z = gen_pow(2, 1);
    p.relators.push_back(commutator(x, z));
    p.relators.push_back(commutator(z, conjugate(x, y)));
    p.relators.push_back(gen_pow(0, n) * z * y * z * inverse(y));
    const Word block = x * inverse(y) * x * y;
    Word surgery = inverse(z);
    for (int k = 0; k < (m < 0 ? -m : m); ++k)
        surgery = surgery * (m > 0 ? block : inverse(block));
    p.relators.push_back(surgery);
    return p;
}

/**
 * The map onto the free part of H1 of that boundary group, for Alexander
 * matrices: t1 is the image of y and, when 4m+n = 0, t2 is the image of x
 * (so z = x^(2m) maps to t2^(2m)). For any other gleam pair x is torsion in
 * H1, so the free part sees only y and the map is one-variable.
 */
inline AbelianizationMap y111_self_loop_boundary_ab(int m, int n) {
    AbelianizationMap phi;
    if (4 * m + n == 0) {
        phi.nvars = 2;
        phi.images = {Monomial{0, 1}, Monomial{1, 0}, Monomial{0, 2 * m}};
    } else {
        phi.nvars = 1;
        phi.images = {Monomial{0}, Monomial{1}, Monomial{0}};
    }
    return phi;
}

// ----- curated census conclusions -----

/**
 * A conclusion about one census polyhedron that rests on a geometric
 * argument this library does not recompute (collapses, handle counting,
 * surgery descriptions, characteristic-class constraints). The basis slug
 * names the kind of argument; manifolds lists the closed 4-manifolds the
 * polyhedron can be a shadow of, when that is the conclusion's shape.
 */
struct CuratedFact {
    bool curated = true;
    std::string basis;
    std::string note;
    std::vector<ManifoldExpr> manifolds; // possible manifolds, if constrained
    bool drops_to_zero = false;  // every manifold with this shadow has complexity 0
    bool not_a_shadow = false;   // excluded by the curated argument itself
    bool realization_open = false; // listed manifolds not all known to realize it
};

namespace detail {

inline void add_curated(std::map<std::string, CuratedFact>& out, const std::string& slug,
                        int class_index, CuratedFact fact) {
    const ShadowPair pair = named_pair(slug, class_index);
    out.emplace(canonical_hex(pair.graph, pair.labels), std::move(fact));
}

} // namespace detail

/**
 * Curated conclusions keyed by the canonical form of the (graph, class)
 * pair. Entries settled purely by the computable obstructions (homology
 * torsion, structural rules) are deliberately absent.
 */
inline const std::map<std::string, CuratedFact>& curated_census() {
    static const std::map<std::string, CuratedFact> table = [] {
        using namespace detail;
        std::map<std::string, CuratedFact> out;
        const auto s1xs3_only = [] {
            CuratedFact f;
            f.basis = "interval_bundle_collapse";
            f.note = "the surface collapses onto its core circle, so the manifold is a "
                     "D3-bundle over S1 glued to S1 x B3, which is S1 x S3 either way";
            f.manifolds = {expr({atom_s1xs3()})};
            return f;
        };
        add_curated(out, "annulus_surface", 0, s1xs3_only());
        add_curated(out, "y3_bounded", 0, [&] {
            CuratedFact f = s1xs3_only();
            f.note = "the polyhedron collapses onto a circle after sliding the boundary "
                     "region across the singular core; only S1 x S3 results";
            return f;
        }());
        add_curated(out, "moebius_surface", 0, s1xs3_only());

        const auto drops = [](const std::string& why) {
            CuratedFact f;
            f.basis = "collapse_to_lower_complexity";
            f.note = why;
            f.drops_to_zero = true;
            return f;
        };
        add_curated(out, "y111_two_caps_bounded", 0,
                    drops("collapses onto the sphere, so any manifold with this shadow "
                          "has complexity 0"));
        add_curated(out, "y12_fixed_bounded", 0,
                    drops("collapses onto the projective plane; no closed manifold has "
                          "that as a shadow, and the complexity-0 conclusion holds"));
        add_curated(out, "y12_double_bounded", 0,
                    drops("collapses onto the sphere, so any manifold with this shadow "
                          "has complexity 0"));
        for (const std::string slug :
             {"y111_y12_fixed", "y111_y12_double", "y12_fixed_to_double", "y12_double_pair"})
            add_curated(out, slug, 0,
                        drops("simply connected with b2 at most 2: every candidate "
                              "manifold already appears in the complexity-0 table"));

        add_curated(out, "y12_self_loop", 0, [] {
            CuratedFact f;
            f.basis = "handle_count";
            f.note = "a manifold with this shadow would have a handle decomposition "
                     "whose chain-level count is incompatible with its homology";
            f.not_a_shadow = true;
            return f;
        }());
        add_curated(out, "y3_y2", 0, [] {
            CuratedFact f;
            f.basis = "pi1_surgery";
            f.note = "the fundamental group <x,y | x^2 y^3> of the complement is not "
                     "cyclic, ruling out the surgery descriptions a shadow would force";
            f.not_a_shadow = true;
            return f;
        }());

        add_curated(out, "y111_y3", 0, [] {
            CuratedFact f;
            f.basis = "gleam_realization";
            f.note = "admissible gleams force the order-3 spun manifold and one gleam "
                     "triple realizes it";
            f.manifolds = {expr({atom_sp(3)})};
            return f;
        }());
        add_curated(out, "y12_fixed_pair", 0, [] {
            CuratedFact f;
            f.basis = "gleam_realization";
            f.note = "fundamental group of order 2 pins the manifold to one of the two "
                     "order-2 spun manifolds; whether either actually realizes this "
                     "polyhedron is open";
            f.manifolds = {expr({atom_sp(2)}), expr({atom_sprime(2)})};
            f.realization_open = true;
            return f;
        }());
        add_curated(out, "y111_two_caps_y2", 0, [] {
            CuratedFact f;
            f.basis = "gleam_realization";
            f.note = "both order-2 spun manifolds arise from admissible gleams and "
                     "nothing else can";
            f.manifolds = {expr({atom_sp(2)}), expr({atom_sprime(2)})};
            return f;
        }());

        add_curated(out, "y111_y111", 0, [] {
            CuratedFact f;
            f.basis = "intersection_form";
            f.note = "definite rank-3 intersection forms realized by admissible gleams; "
                     "exactly the four +-definite sums of three projective planes";
            f.manifolds = {
                expr({atom_cp2(), atom_cp2(), atom_cp2()}),
                expr({atom_cp2(), atom_cp2(), atom_cp2bar()}),
                expr({atom_cp2(), atom_cp2bar(), atom_cp2bar()}),
                expr({atom_cp2bar(), atom_cp2bar(), atom_cp2bar()}),
            };
            return f;
        }());
        for (int cls : {0, 1})
            add_curated(out, "y111_self_loop", cls, [] {
                CuratedFact f;
                f.basis = "wu_elementary_ideals";
                f.note = "characteristic-class and elementary-ideal constraints leave "
                         "only S1 x S3 and its sums with one projective plane";
                f.manifolds = {
                    expr({atom_s1xs3()}),
                    expr({atom_s1xs3(), atom_cp2()}),
                    expr({atom_s1xs3(), atom_cp2bar()}),
                };
                return f;
            }());
        return out;
    }();
    return table;
}

/** Curated fact for a pair, when the census has one. */
inline std::optional<CuratedFact> curated_fact(const EncodingGraph& g,
                                               const CocycleLabels& labels) {
    const auto& table = curated_census();
    const auto it = table.find(canonical_hex(g, labels));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// ----- combined assessment -----

/** Everything the classify command reports about one pair. */
struct Assessment {
    PolyhedronSummary summary;
    HomologyTriple groups;
    ObstructionVerdict verdict;
    std::optional<CuratedFact> curated;
};

/**
 * Run all obstructions in priority order: structural rules first, then the
 * homological rule, then curated exclusions; attach curated context either
 * way.
 */
inline Assessment assess(const EncodingGraph& g, const CocycleLabels& labels) {
    Assessment a;
    a.summary = summarize(g, labels);
    a.groups = homology(g, labels);
    a.curated = curated_fact(g, labels);
    a.verdict = structural_checks(a.summary);
    if (!a.verdict.excluded()) a.verdict = costantino_check(a.groups.h1, a.groups.h2);
    if (!a.verdict.excluded() && a.curated && a.curated->not_a_shadow)
        a.verdict = ObstructionVerdict::excluded_by("curated:" + a.curated->basis,
                                                    a.curated->note);
    return a;
}

// ----- JSON emission -----

inline nlohmann::json verdict_to_json(const ObstructionVerdict& v) {
    nlohmann::json j;
    j["status"] = v.excluded() ? "NotAShadow" : "Candidate";
    if (v.excluded()) {
        j["rule"] = v.rule;
        j["detail"] = v.detail;
    }
    return j;
}

inline nlohmann::json curated_to_json(const CuratedFact& f) {
    nlohmann::json j;
    j["curated"] = f.curated;
    j["basis"] = f.basis;
    j["note"] = f.note;
    j["manifolds"] = nlohmann::json::array();
    for (const ManifoldExpr& e : f.manifolds) j["manifolds"].push_back(to_string(e));
    j["drops_to_zero"] = f.drops_to_zero;
    j["not_a_shadow"] = f.not_a_shadow;
    j["realization_open"] = f.realization_open;
    return j;
}

inline nlohmann::json assessment_to_json(const Assessment& a) {
    nlohmann::json j;
    j["summary"] = summary_to_json(a.summary);
    j["homology"] = {{"h0", to_string(a.groups.h0)},
                     {"h1", to_string(a.groups.h1)},
                     {"h2", to_string(a.groups.h2)}};
    j["verdict"] = verdict_to_json(a.verdict);
    if (a.curated) j["curated"] = curated_to_json(*a.curated);
    return j;
}

} // namespace shadowcalc
