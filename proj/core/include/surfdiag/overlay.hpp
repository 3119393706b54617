#pragma once
#include <string>
#include <vector>

#include "surfdiag/diagram.hpp"

namespace surfdiag {

/// One transversal crossing of an overlay path: the edge of `through`,
/// entered from face(through)'s side. `position` orders this path's
/// crossings along the edge (from the tail of the lower dart id).
struct OverlayStep {
    Dart through = kNoDart;
    int position = 0;
};

/// A transversal arc or loop through faces, used to specify bands, twist
/// curves and multislide loops. Anchors for arcs sit on curve edges; a loop
/// with no steps floats in face(host)'s interior.
struct OverlayPath {
    bool closed = true;
    std::vector<OverlayStep> steps;
    Dart host = kNoDart;       // zero-step loops only
    Dart start_edge = kNoDart;  // arcs: anchored on this curve dart's edge
    int start_position = 0;
    bool start_side = true;     // depart into face(start_edge)'s side?
    Dart end_edge = kNoDart;
    int end_position = 0;
    bool end_side = true;
};

enum class OverlayErrorKind { NotCofacial, NotEmbedded, BadPosition, BadAnchor };

struct OverlayError : std::runtime_error {
    OverlayErrorKind kind;
    OverlayError(OverlayErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

/// Realizes the path as a marked strand with a crossing vertex per step.
/// Returns the diagram plus the fresh overlay id.
std::pair<SurfaceDiagram, int> embed_overlay(const SurfaceDiagram& d, const OverlayPath& p);

/// Removes a realized overlay; the result has the same normal form as the
/// diagram the overlay was embedded into.
SurfaceDiagram drop_overlay(const SurfaceDiagram& d, int overlay_id);

/// Drops every overlay.
SurfaceDiagram drop_all_overlays(const SurfaceDiagram& d);

std::string to_text(const OverlayPath& p);
OverlayPath parse_overlay_path(const std::string& text);

}  // namespace surfdiag
