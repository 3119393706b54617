#pragma once
#include "surfdiag/diagram.hpp"

namespace surfdiag {

/// Blank diagram: genus-g surface, no curves, standard one-vertex polygon
/// scaffold (single scaffold edge on the sphere for g = 0).
SurfaceDiagram blank_diagram(int g);

/// Two curves meeting at one point on a genus-g surface (g >= 1); the
/// complement genus is parked on a scaffolded anchor.
SurfaceDiagram pair_diagram(int g);

/// k >= 3 cyclically indexed curves, each meeting the next at one point and
/// disjoint from the rest, on a genus-g surface. g must be at least the
/// embedding genus of the necklace, (k-1)/2 rounded down to (k-2)/2 for even
/// k; extra genus is parked on a scaffolded anchor on curve 0.
SurfaceDiagram chain_diagram(int g, int k);

}  // namespace surfdiag
