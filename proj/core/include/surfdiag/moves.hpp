#pragma once
#include <string>
#include <vector>

#include "surfdiag/rewrite.hpp"

namespace surfdiag {

enum class MoveErrorKind {
    InvalidSite,
    NotBlank,
    CertificateMismatch,
    WouldViolateGenusGate,
    GuideIsNeighbor,
    GuideNotDisjoint,
    BandCrossesNeighbor,
    PairConsecutive,
    PairNotOnce,
    LoopTouchesPair,
    ScriptEntry,
    UnknownIndex,
};

struct MoveError : std::runtime_error {
    MoveErrorKind kind;
    int entry = -1;  // offending script entry for shift
    MoveError(MoveErrorKind k, const std::string& msg, int entry_index = -1)
        : std::runtime_error(msg), kind(k), entry(entry_index) {}
};

/// What a move did: enough to audit conservation ledgers and replay.
struct MoveRecord {
    std::string name;
    std::string params;  // serialized, format of the move-script grammar
    int pre_genus = 0, pre_k = 0;
    int post_genus = 0, post_k = 0;
};

struct MoveResult {
    SurfaceDiagram diagram;
    MoveRecord record;
};

/// One handleslide instruction inside a shift.
struct SlideInstruction {
    int b = 0;  // the partition curve being slid
    int e = 0;  // guide
    OverlayPath band;
    bool plus = true;
};

using HandleslideScript = std::vector<SlideInstruction>;

/// Stabilization at a site on curve c: genus +1, k +4, the four inserted
/// curves threaded per the torus template with `twists` turns of the middle
/// pair about the top curve.
MoveResult stabilize(const SurfaceDiagram& d, Dart site, int site_position, int twists);

/// Inverse of stabilize at a matching gadget certificate.
MoveResult destabilize(const SurfaceDiagram& d, const GadgetCertificate& cert, bool enforce_gate = true);

/// Blank-diagram special case: genus +1, two once-crossing curves appear.
MoveResult birth(const SurfaceDiagram& d);

/// Slides curve b over guide e along the band. The guide must be cyclically
/// non-adjacent to b and, after pair reduction, disjoint from b and both of
/// its neighbors; the band must avoid the neighbors.
MoveResult handleslide(const SurfaceDiagram& d, int b, int e, const OverlayPath& band, bool plus);

enum class PartitionSide { Inner, Outer };

/// Drags the curves strictly between i and j on the chosen side around the
/// loop delta, with framing m about the pair's neighborhood boundary.
/// delta and tau reference the diagram with the (i, j) pair reduced.
MoveResult multislide(const SurfaceDiagram& d, int i, int j, PartitionSide side,
                      const OverlayPath& delta, const OverlayPath& tau, int framing);

/// Applies the script's handleslides to the chosen partition of the
/// once-crossing pair (i, j).
MoveResult shift(const SurfaceDiagram& d, int i, int j, PartitionSide side,
                 const HandleslideScript& script);

/// Indices strictly between i and j on the requested side of the cyclic order.
std::vector<int> partition_indices(int k, int i, int j, PartitionSide side);

}  // namespace surfdiag
