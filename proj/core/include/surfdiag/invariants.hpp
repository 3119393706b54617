#pragma once
#include <string>

#include "surfdiag/diagram.hpp"
#include "surfdiag/int_matrix.hpp"

namespace surfdiag {

/// Cokernel shape of an integer matrix inside its ambient lattice.
struct AbelianGroupDescriptor {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;  // divisibility chain, each > 1
    bool operator==(const AbelianGroupDescriptor&) const = default;
};

/// Classes of the oriented curves in H_1 of the surface, one k-row of 2g
/// integer coordinates each. The basis comes from the lowest-dart spanning
/// tree with the face relations divided out, so it is deterministic for a
/// given diagram.
IntegerMatrix homology_classes(const SurfaceDiagram& d);

/// Signed count of the crossings of curves i and j; antisymmetric and
/// invariant under bigon reduction.
int algebraic_intersection(const SurfaceDiagram& d, int i, int j);

/// Z^{2g} / row span of homology_classes(d), in divisibility form. Reported
/// as a diagram invariant (experimental); nothing here asserts a relation to
/// any homology of the encoded 4-manifold.
AbelianGroupDescriptor quotient_group(const SurfaceDiagram& d);

struct InvariantReport {
    int genus = 0;
    int k = 0;
    IntegerMatrix geometric;  // minimized pairwise counts
    IntegerMatrix algebraic;
    IntegerMatrix homology;   // k x 2g
    AbelianGroupDescriptor quotient;
};

InvariantReport summary(const SurfaceDiagram& d);

/// Deterministic key-sorted rendering, stable for golden tests.
std::string to_text(const InvariantReport& r);

}  // namespace surfdiag
