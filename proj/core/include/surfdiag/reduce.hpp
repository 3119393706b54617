#pragma once
#include <optional>
#include <vector>

#include "surfdiag/diagram.hpp"

namespace surfdiag {

/// An innermost bigon between curves i and j: two crossings joined by an arc
/// of each curve, bounding a disk whose interior meets neither curve. The
/// disk may contain transverse through-arcs of other curves and scaffold.
struct BigonSite {
    int curve_i = 0;
    int curve_j = 0;
    std::vector<Dart> arc_i;       // oriented walk darts of curve i, v -> w
    std::vector<Dart> arc_j;       // oriented walk darts of curve j, v -> w
    std::vector<int> fill_faces;   // faces of the enclosed disk
    std::vector<Dart> wall_side;   // the disk-side dart of every wall edge
};

/// Finds the innermost (fewest faces, lowest dart tie-break) embedded bigon
/// between curves i and j, if any.
std::optional<BigonSite> find_bigon(const SurfaceDiagram& d, int i, int j);

/// Slides the i-arc of one innermost bigon across its disk, repeatedly, until
/// curves i and j bound no bigon; the result realizes the geometric
/// intersection number of the pair. Isotopy class is unchanged.
SurfaceDiagram reduce_pair(const SurfaceDiagram& d, int i, int j);

/// Reduces every crossing pair in lexicographic index order, innermost bigon
/// first, sweeping until stable. Deterministic.
SurfaceDiagram reduce_all_pairs(const SurfaceDiagram& d);

/// crossing_count after reduce_pair on a working copy.
int reduced_crossing_count(const SurfaceDiagram& d, int i, int j);

}  // namespace surfdiag
