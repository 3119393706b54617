#pragma once
#include <cstdint>
#include <vector>

#include "surfdiag/diagram.hpp"

namespace surfdiag {

/// Relative-index-invariant normal form: overlays dropped, every crossing
/// pair reduced with the fixed deterministic strategy, scaffold stripped to
/// the curves-plus-regions decoration (curve darts colored by index, each
/// complementary region colored by its genus), canonically coded, minimized
/// over the k cyclic index rotations. Equal codes imply equivalent diagrams;
/// curve orientations never enter the code.
std::vector<std::int64_t> normal_code(const SurfaceDiagram& d);

/// normal_code equality.
bool equivalent(const SurfaceDiagram& a, const SurfaceDiagram& b);

/// Re-indexes curve i as (i + r) mod k.
SurfaceDiagram rotate_indices(const SurfaceDiagram& d, int r);

/// Applies the dart bijection pi (dart d becomes pi[d]); for invariance tests.
SurfaceDiagram relabel_darts(const SurfaceDiagram& d, const std::vector<Dart>& pi);

}  // namespace surfdiag
