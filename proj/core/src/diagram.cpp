#include "surfdiag/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "surfdiag/workspace.hpp"

namespace surfdiag {

namespace {

// Strand identity at a vertex: curves and overlays are transverse strands.
struct StrandId {
    DartKind kind;
    int index;
    bool operator==(const StrandId&) const = default;
};

StrandId strand_of(const Label& l) { return {l.kind, l.index}; }

}  // namespace

VertexType classify_vertex(const SurfaceDiagram& d, Dart at) {
    auto darts = d.map.vertex_darts(at);
    int scaffolds = 0;
    std::vector<Dart> strands;
    for (Dart x : darts) {
        if (d.labels[x].is_scaffold())
            ++scaffolds;
        else
            strands.push_back(x);
    }
    if (strands.empty()) return scaffolds > 0 ? VertexType::PureScaffold : VertexType::Invalid;
    if (darts.size() == 4 && strands.size() == 4) {
        StrandId s0 = strand_of(d.labels[darts[0]]);
        StrandId s1 = strand_of(d.labels[darts[1]]);
        StrandId s2 = strand_of(d.labels[darts[2]]);
        StrandId s3 = strand_of(d.labels[darts[3]]);
        if (s0 == s2 && s1 == s3 && !(s0 == s1)) return VertexType::Crossing;
        return VertexType::Invalid;
    }
    if (darts.size() == 4 && strands.size() == 2 && scaffolds == 2) {
        // an overlay guide passing transversely through a scaffold edge
        if (d.labels[darts[0]].is_scaffold() == d.labels[darts[2]].is_scaffold() &&
            d.labels[darts[1]].is_scaffold() == d.labels[darts[3]].is_scaffold() &&
            strand_of(d.labels[strands[0]]) == strand_of(d.labels[strands[1]]) &&
            d.labels[strands[0]].is_overlay())
            return VertexType::ScaffoldCrossing;
        return VertexType::Invalid;
    }
    if (strands.size() == 2 && strand_of(d.labels[strands[0]]) == strand_of(d.labels[strands[1]])) {
        if (scaffolds >= 1) return VertexType::Anchor;
        return VertexType::Invalid;  // bare degree-2 strand vertex
    }
    if (strands.size() == 3) {
        // overlay arc terminal: two darts of one curve plus one overlay end
        std::vector<Dart> curve, over;
        for (Dart x : strands)
            (d.labels[x].is_overlay() ? over : curve).push_back(x);
        if (curve.size() == 2 && over.size() == 1 &&
            strand_of(d.labels[curve[0]]) == strand_of(d.labels[curve[1]]))
            return VertexType::OverlayEnd;
    }
    return VertexType::Invalid;
}

Dart strand_continuation(const SurfaceDiagram& d, Dart in_dart) {
    VertexType t = classify_vertex(d, in_dart);
    if (t == VertexType::Crossing) return d.map.rot(d.map.rot(in_dart));
    // anchor-like: the unique other dart of the same strand
    StrandId me = strand_of(d.labels[in_dart]);
    Dart found = kNoDart;
    for (Dart x : d.map.vertex_darts(in_dart)) {
        if (x == in_dart) continue;
        if (!d.labels[x].is_scaffold() && strand_of(d.labels[x]) == me) {
            if (found != kNoDart) return kNoDart;
            found = x;
        }
    }
    return found;
}

int crossing_count(const SurfaceDiagram& d, int i, int j) {
    if (i < 0 || i >= d.k || j < 0 || j >= d.k)
        throw DiagramError(DiagramErrorKind::UnknownIndex,
                           "unknown curve index " + std::to_string(i < 0 || i >= d.k ? i : j));
    if (i == j) return 0;
    int count = 0;
    std::vector<char> seen(d.map.dart_count(), 0);
    for (Dart x = 0; x < d.map.dart_count(); ++x) {
        if (seen[x]) continue;
        auto darts = d.map.vertex_darts(x);
        for (Dart y : darts) seen[y] = 1;
        if (darts.size() != 4) continue;
        bool has_i = false, has_j = false, other = false;
        for (Dart y : darts) {
            const Label& l = d.labels[y];
            if (l.kind == DartKind::Curve && l.index == i)
                has_i = true;
            else if (l.kind == DartKind::Curve && l.index == j)
                has_j = true;
            else
                other = true;
        }
        if (has_i && has_j && !other) ++count;
    }
    return count;
}

SurfaceDiagram scaffold_add(const SurfaceDiagram& d, Dart corner_a, Dart corner_b) {
    if (corner_a < 0 || corner_a >= d.dart_count() || corner_b < 0 || corner_b >= d.dart_count())
        throw DiagramError(DiagramErrorKind::BadAttachPoint, "attach corner out of range");
    if (d.map.face_at(corner_a) != d.map.face_at(corner_b))
        throw DiagramError(DiagramErrorKind::BadAttachPoint, "attach corners on different faces");
    Workspace w(d);
    w.add_chord(corner_a, corner_b, scaffold_label());
    return w.finish();
}

SurfaceDiagram scaffold_add_on_edge(const SurfaceDiagram& d, Dart curve_dart, Dart corner_b) {
    if (curve_dart < 0 || curve_dart >= d.dart_count())
        throw DiagramError(DiagramErrorKind::BadAttachPoint, "edge dart out of range");
    Workspace w(d);
    auto [r, s] = w.subdivide(curve_dart);
    (void)r;
    if (w.face_of(s) != w.face_of(corner_b))
        throw DiagramError(DiagramErrorKind::BadAttachPoint, "attach corner not on the edge's face");
    w.add_chord(s, corner_b, scaffold_label());
    return w.finish();
}

SurfaceDiagram scaffold_remove(const SurfaceDiagram& d, Dart edge_dart) {
    if (edge_dart < 0 || edge_dart >= d.dart_count() || !d.labels[edge_dart].is_scaffold())
        throw DiagramError(DiagramErrorKind::BadAttachPoint, "not a scaffold edge");
    if (d.map.face_at(edge_dart) == d.map.face_at(d.map.edge(edge_dart)))
        throw DiagramError(DiagramErrorKind::WouldCreateNonDiskFace,
                           "scaffold edge has the same face on both sides");
    Workspace w(d);
    w.delete_edge(edge_dart);
    if (!w.connected_alive())
        throw DiagramError(DiagramErrorKind::WouldDisconnect, "removal disconnects the map");
    if (!w.all_disks())
        throw DiagramError(DiagramErrorKind::WouldCreateNonDiskFace, "removal breaks cellularity");
    return w.finish();
}

SurfaceDiagram delete_curve(const SurfaceDiagram& d, int i) {
    if (i < 0 || i >= d.k)
        throw DiagramError(DiagramErrorKind::UnknownIndex, "unknown curve index " + std::to_string(i));
    Workspace w(d);
    std::vector<Dart> doomed;
    for (Dart x = 0; x < d.dart_count(); ++x)
        if (d.labels[x].kind == DartKind::Curve && d.labels[x].index == i) doomed.push_back(x);
    w.retire(doomed);
    w.erase_curve(i);
    // Crossings of the deleted curve leave degree-2 vertices on the other
    // strand; normalize's junk sweep and smoothing clean those up.
    return w.normalize();
}

std::string describe(const ValidationReport& r) {
    std::ostringstream os;
    if (r.ok) {
        os << "ok\n";
        return os.str();
    }
    for (const auto& v : r.violations)
        os << v.rule << " at " << v.location << ": " << v.message << "\n";
    return os.str();
}

}  // namespace surfdiag
