#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "surfdiag/combinatorial_map.hpp"

namespace surfdiag {

enum class DartKind : std::uint8_t { Curve, Scaffold, Overlay };

struct Label {
    DartKind kind = DartKind::Scaffold;
    int index = 0;  // curve index in [0,k) or overlay id; unused for scaffold

    bool operator==(const Label&) const = default;
    bool is_curve() const { return kind == DartKind::Curve; }
    bool is_scaffold() const { return kind == DartKind::Scaffold; }
    bool is_overlay() const { return kind == DartKind::Overlay; }
    /// Curves and overlays both behave as transverse strands.
    bool is_strand() const { return kind != DartKind::Scaffold; }
};

inline Label curve_label(int i) { return Label{DartKind::Curve, i}; }
inline Label scaffold_label() { return Label{DartKind::Scaffold, 0}; }
inline Label overlay_label(int id) { return Label{DartKind::Overlay, id}; }

/// A realized overlay: a transversal loop or arc kept in the diagram as guide
/// geometry. Overlays are non-semantic; equivalence and strict validation
/// ignore or reject them, and moves drop the ones they create.
struct Overlay {
    bool closed = true;
    std::vector<Dart> walk;  // oriented dart sequence
};

/// A closed orientable surface of genus g carrying k cyclically indexed
/// oriented simple closed curves plus non-semantic scaffold edges that keep
/// the complement cellular. Values are immutable: every operation returns a
/// new diagram.
struct SurfaceDiagram {
    CombinatorialMap map;
    std::vector<Label> labels;                 // per dart
    int k = 0;                                 // number of curves
    std::vector<std::vector<Dart>> curves;     // oriented cycle per curve index
    std::map<int, Overlay> overlays;           // overlay id -> realized overlay
    int next_overlay_id = 0;

    int genus() const { return map.genus(); }
    int dart_count() const { return map.dart_count(); }
    const Label& label_of(Dart d) const { return labels[d]; }

    bool operator==(const SurfaceDiagram& o) const {
        return map == o.map && labels == o.labels && k == o.k && curves == o.curves;
    }
};

struct Violation {
    std::string rule;      // stable rule id, e.g. "transversality"
    std::string location;  // dart/vertex/pair description
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string rule, std::string loc, std::string msg) {
        ok = false;
        violations.push_back({std::move(rule), std::move(loc), std::move(msg)});
    }
    bool has_rule(const std::string& rule) const {
        for (const auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
};

/// Checks all structural invariants; with `strict` additionally requires no
/// overlays, genus >= 3 and the intersection condition (every cyclically
/// consecutive pair meets in exactly one point after bigon reduction of a
/// working copy).
ValidationReport validate(const SurfaceDiagram& d, bool strict);

enum class VertexType { Crossing, Anchor, OverlayEnd, PureScaffold, ScaffoldCrossing, Invalid };

/// Classifies the vertex holding dart `at` per the diagram typing rules.
VertexType classify_vertex(const SurfaceDiagram& d, Dart at);

/// Where a strand entering the vertex on `in_dart` exits: rot^2 at a
/// crossing, the unique other dart of the same strand at an anchor.
/// kNoDart when the vertex cannot continue the strand.
Dart strand_continuation(const SurfaceDiagram& d, Dart in_dart);

/// Crossing vertices shared by curves i and j in the current representative
/// (no reduction). Throws UnknownIndex via DiagramError.
int crossing_count(const SurfaceDiagram& d, int i, int j);

enum class DiagramErrorKind {
    UnknownIndex,
    WouldDisconnect,
    WouldCreateNonDiskFace,
    BadAttachPoint,
};

struct DiagramError : std::runtime_error {
    DiagramErrorKind kind;
    DiagramError(DiagramErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

/// Adds a scaffold chord across a face. Attach points are corners given by a
/// dart on the face walk (the new edge end is inserted before that dart in
/// rotation order); a point in the interior of a curve edge is specified by
/// subdividing first. Genus and curve configuration are unchanged.
SurfaceDiagram scaffold_add(const SurfaceDiagram& d, Dart corner_a, Dart corner_b);

/// Subdivides a curve edge with a fresh anchor and attaches a scaffold chord
/// from it to `corner_b`. Convenience for attach points inside curve edges.
SurfaceDiagram scaffold_add_on_edge(const SurfaceDiagram& d, Dart curve_dart, Dart corner_b);

/// Removes a scaffold edge. Rejected when the edge's two sides are the same
/// face or when the map would disconnect.
SurfaceDiagram scaffold_remove(const SurfaceDiagram& d, Dart edge_dart);

/// Deletes curve `i` and reindexes the remaining curves, preserving cyclic
/// order. Used by gadget excision and by tests building broken fixtures.
SurfaceDiagram delete_curve(const SurfaceDiagram& d, int i);

std::string describe(const ValidationReport& r);

}  // namespace surfdiag
