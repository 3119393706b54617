#pragma once
#include <functional>
#include <set>

#include "surfdiag/diagram.hpp"
#include "surfdiag/overlay.hpp"

namespace surfdiag {

enum class RewriteErrorKind {
    UnknownCurve,
    BandEndpointOnWrongCurve,
    BandCrossesOperand,
    GuideNotDisjoint,
    CertificateMismatch,
    BadSite,
    BadLoop,
};

struct RewriteError : std::runtime_error {
    RewriteErrorKind kind;
    RewriteError(RewriteErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

/// Twists every curve of S about the realized overlay loop. Each unit twist
/// reroutes the S-strands crossing the loop by one parallel copy; the sign
/// follows the fixed convention that a positive twist turns to the right of
/// the loop's orientation. power = 0 returns the diagram unchanged; |power|
/// iterates the unit twist. The loop overlay survives.
SurfaceDiagram dehn_twist(const SurfaceDiagram& d, const std::set<int>& curves, int loop_overlay,
                          int power);

/// One-shot variant: embeds the loop, twists, drops the loop.
SurfaceDiagram dehn_twist(const SurfaceDiagram& d, const std::set<int>& curves,
                          const OverlayPath& loop, int power);

/// Replaces curve b by the band sum of b with a parallel copy of guide e
/// along the band arc (which must run from an edge of b to an edge of e and
/// avoid both). plus selects the direction the copy runs around e, giving
/// [b'] = [b] +- [e].
SurfaceDiagram band_sum(const SurfaceDiagram& d, int b, int e, const OverlayPath& band, bool plus);

/// Punctured-torus insertion template of the stabilization move.
struct TorusGadget {
    int twists = 0;
};

/// Where a gadget landed: the four inserted curves are first_new .. +3 and
/// the through-curve keeps index first_new - 1.
struct GadgetCertificate {
    int first_new = 0;
    int twists = 0;
};

/// Splices the gadget into curve at the site (a curve dart plus a position
/// along its edge): genus +1, four new curves threaded per the template, the
/// through-curve rerouted, later indices shifted by four.
std::pair<SurfaceDiagram, GadgetCertificate> splice_gadget(const SurfaceDiagram& d, Dart site,
                                                           int site_position, const TorusGadget& g);

/// Exact inverse of splice_gadget at a matching certificate.
SurfaceDiagram excise_gadget(const SurfaceDiagram& d, const GadgetCertificate& cert);

/// The boundary of a regular neighborhood of curves i and j (which must meet
/// exactly once in the current representative), as an embeddable overlay
/// loop path against d.
OverlayPath neighborhood_boundary(const SurfaceDiagram& d, int i, int j);

/// One boundary circle of a regular neighborhood of the sub-complex of
/// strands selected by `in_set`, plus the darts it hugs.
struct RibbonCircle {
    OverlayPath path;
    std::vector<Dart> hugged;
};

/// All boundary circles of a regular neighborhood of the selected strands.
std::vector<RibbonCircle> ribbon_boundaries(const SurfaceDiagram& d,
                                            const std::function<bool(const Label&)>& in_set);

}  // namespace surfdiag
