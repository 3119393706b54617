#include <algorithm>
#include <set>
#include <sstream>

#include "surfdiag/diagram.hpp"
#include "surfdiag/reduce.hpp"

namespace surfdiag {

namespace {

std::string dart_loc(Dart d) { return "dart " + std::to_string(d); }

void check_vertices(const SurfaceDiagram& d, ValidationReport& rep) {
    std::vector<char> seen(d.dart_count(), 0);
    for (Dart x = 0; x < d.dart_count(); ++x) {
        if (seen[x]) continue;
        auto darts = d.map.vertex_darts(x);
        for (Dart y : darts) seen[y] = 1;
        VertexType t = classify_vertex(d, x);
        if (t != VertexType::Invalid) continue;
        int strands = 0;
        for (Dart y : darts)
            if (!d.labels[y].is_scaffold()) ++strands;
        if (darts.size() == 4 && strands == 4)
            rep.add("transversality", dart_loc(x),
                    "4-valent strand vertex is not an alternating crossing of two distinct strands");
        else
            rep.add("vertex-typing", dart_loc(x),
                    "vertex is neither a crossing, an anchor, an overlay terminal nor pure scaffold");
    }
}

void check_walk(const SurfaceDiagram& d, const std::vector<Dart>& walk, bool closed,
                const Label& expect, const std::string& what, ValidationReport& rep) {
    if (walk.empty()) {
        rep.add("curve-structure", what, "empty walk");
        return;
    }
    for (Dart x : walk) {
        if (x < 0 || x >= d.dart_count() || !(d.labels[x] == expect)) {
            rep.add("curve-structure", what, "walk dart " + std::to_string(x) + " has the wrong label");
            return;
        }
    }
    std::size_t steps = closed ? walk.size() : walk.size() - 1;
    for (std::size_t t = 0; t < steps; ++t) {
        Dart cur = walk[t];
        Dart nxt = walk[(t + 1) % walk.size()];
        Dart in = d.map.edge(cur);
        if (strand_continuation(d, in) != nxt) {
            rep.add("curve-structure", what,
                    "walk breaks at dart " + std::to_string(cur) + " -> " + std::to_string(nxt));
            return;
        }
    }
}

void check_curves(const SurfaceDiagram& d, ValidationReport& rep) {
    if (static_cast<int>(d.curves.size()) != d.k) {
        rep.add("curve-index", "diagram", "curve registry size differs from k");
        return;
    }
    for (Dart x = 0; x < d.dart_count(); ++x) {
        const Label& l = d.labels[x];
        if (!(l == d.labels[d.map.edge(x)])) {
            rep.add("edge-label", dart_loc(x), "edge darts carry different labels");
            return;
        }
        if (l.kind == DartKind::Curve && (l.index < 0 || l.index >= d.k)) {
            rep.add("curve-index", dart_loc(x), "curve index out of range");
            return;
        }
        if (l.kind == DartKind::Overlay && l.index >= 0 && !d.overlays.count(l.index)) {
            rep.add("curve-index", dart_loc(x), "overlay id not registered");
            return;
        }
    }
    std::vector<int> hits(d.dart_count(), 0);
    for (int i = 0; i < d.k; ++i) {
        check_walk(d, d.curves[i], true, curve_label(i), "curve " + std::to_string(i), rep);
        for (Dart x : d.curves[i])
            if (x >= 0 && x < d.dart_count()) ++hits[x];
    }
    for (auto& [id, ov] : d.overlays) {
        check_walk(d, ov.walk, ov.closed, overlay_label(id), "overlay " + std::to_string(id), rep);
        for (Dart x : ov.walk)
            if (x >= 0 && x < d.dart_count()) ++hits[x];
    }
    if (!rep.ok) return;
    // One traversal per strand edge: exactly one dart of each pair is walked.
    for (Dart x = 0; x < d.dart_count(); ++x) {
        if (d.labels[x].is_scaffold()) continue;
        if (d.labels[x].is_overlay() && d.labels[x].index < 0) {
            rep.add("curve-index", dart_loc(x), "junk overlay dart in a finished diagram");
            return;
        }
        int total = hits[x] + hits[d.map.edge(x)];
        if (total != 1) {
            rep.add("curve-structure", dart_loc(x),
                    "strand edge traversed " + std::to_string(total) + " times");
            return;
        }
    }
}

}  // namespace

ValidationReport validate(const SurfaceDiagram& d, bool strict) {
    ValidationReport rep;
    if (d.dart_count() == 0) {
        if (d.k != 0) rep.add("curve-index", "diagram", "curves on an empty map");
        if (strict) rep.add("genus-gate", "diagram", "empty map has no genus-3 surface");
        return rep;
    }
    if (!d.map.connected()) rep.add("connected", "diagram", "map is not connected");
    check_vertices(d, rep);
    check_curves(d, rep);
    if (d.k == 1) rep.add("k1-unsupported", "diagram", "a single Z/1Z-indexed curve is not supported");
    if (!strict) return rep;

    for (Dart x = 0; x < d.dart_count(); ++x) {
        if (d.labels[x].is_overlay()) {
            rep.add("overlay-present", dart_loc(x), "strict diagrams carry no overlays");
            break;
        }
    }
    if (d.genus() < 3)
        rep.add("genus-gate", "diagram", "strict diagrams require genus >= 3, got " + std::to_string(d.genus()));
    if (!rep.ok) return rep;

    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < d.k; ++i) {
        int j = (i + 1) % d.k;
        int a = std::min(i, j), b = std::max(i, j);
        if (a == b) continue;
        if (!pairs.insert({a, b}).second) continue;
        int c = reduced_crossing_count(d, a, b);
        if (c != 1) {
            std::ostringstream os;
            os << "(" << a << "," << b << ")";
            rep.add("intersection-condition", os.str(),
                    "consecutive pair meets " + std::to_string(c) + " times after reduction, expected 1");
        }
    }
    return rep;
}

}  // namespace surfdiag
