#pragma once
#include <optional>
#include <vector>

#include "surfdiag/diagram.hpp"

namespace surfdiag {

/// Mutable surgery arena behind every diagram-producing operation.
///
/// A public SurfaceDiagram is fully scaffolded: every face of its map is an
/// honest disk, so the map's Euler characteristic is the surface's. Mid
/// surgery that breaks down: deleting edges leaves faces that stand for
/// non-disk surface pieces. The workspace tracks those pieces explicitly
/// (which faces bound them and their Euler characteristic) so deletions are
/// always legal, then normalize() rebuilds canonical scaffold, dissolving
/// every piece back into disks, and re-checks the global Euler count.
///
/// Mutation protocol per operation: additions (subdivide / add_chord /
/// add_floating_loop) on disk-region faces first, then retirements and
/// edge deletions, then normalize().
class Workspace {
public:
    explicit Workspace(const SurfaceDiagram& d);

    // -- raw state ---------------------------------------------------------
    bool alive(Dart d) const { return alive_[d]; }
    Dart edge(Dart d) const { return edge_[d]; }
    Dart rot(Dart d) const { return rot_[d]; }
    Dart rot_inv(Dart d) const { return rinv_[d]; }
    Label label(Dart d) const { return label_[d]; }
    void set_label(Dart d, Label l);
    int capacity() const { return static_cast<int>(edge_.size()); }
    int alive_count() const { return alive_count_; }
    int surface_euler() const { return chi_surface_; }

    int k() const { return static_cast<int>(curves_.size()); }
    std::vector<std::vector<Dart>>& curves() { return curves_; }
    const std::vector<std::vector<Dart>>& curves() const { return curves_; }
    std::map<int, Overlay>& overlays() { return overlays_; }
    int take_overlay_id() { return next_overlay_id_++; }
    int peek_overlay_id() const { return next_overlay_id_; }

    // -- faces and pieces ---------------------------------------------------
    int face_of(Dart d) const { return face_id_[d]; }
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }
    /// -1 when the face is an honest disk.
    int piece_of_face(int face) const { return piece_of_face_[face]; }
    bool all_disks() const;

    /// Next dart in the face walk (rot∘edge).
    Dart next_face_dart(Dart d) const { return rot_[edge_[d]]; }

    // -- additions (hosts must currently be disk faces unless noted) --------
    /// Splits the edge of d with a fresh degree-2 vertex. Returns (r, s):
    /// r is the new partner of d, s the new partner of the old edge(d);
    /// rotation at the new vertex is (r, s). Curve/overlay walks are updated.
    std::pair<Dart, Dart> subdivide(Dart d);

    /// Inserts an edge between two corners. A corner is named by the dart it
    /// precedes in rotation order; its host face is face(corner). Returns the
    /// new darts (at corner_a, at corner_b). Corners may live on faces of the
    /// same tracked piece, in which case the piece Euler count is bumped.
    std::pair<Dart, Dart> add_chord(Dart corner_a, Dart corner_b, Label lab);

    /// New loop edge on a fresh vertex inside the corner's face, tethered to
    /// the corner by a scaffold edge. Returns the loop darts (l1, l2);
    /// the face enclosed by the loop is the monogon walk of l1.
    std::pair<Dart, Dart> add_floating_loop(Dart corner, Label lab);

    // -- retirement and deletion --------------------------------------------
    /// Drops the darts from curve/overlay walk registries and marks them as
    /// junk overlay (-1). Does not touch the map.
    void retire(const std::vector<Dart>& darts);

    /// Deletes one edge (both darts). The darts must not belong to any
    /// registered curve or overlay walk. Face/piece bookkeeping is updated
    /// via the surface Euler residual; endpoints left redundant are smoothed
    /// when `autosmooth` is set.
    void delete_edge(Dart d, bool autosmooth = true);

    /// Fuses out a degree-2 vertex whose two incident edges carry the same
    /// label (never the carrier vertex of an isolated circle). Returns false
    /// when not applicable.
    bool smooth_vertex(Dart at, bool force = false);

    /// Deletes the crossing vertex at `at` (degree 4, two transverse strands)
    /// by fusing both strands straight through. Both strands must survive as
    /// registered walks; their walk vectors are fixed up.
    void smooth_crossing(Dart at);

    /// Declares an intentional change of the underlying surface (gadget
    /// splice -2, excision +2, ...).
    void declare_surface_euler_delta(int delta) { chi_surface_ += delta; }

    /// Adds `delta` to the Euler characteristic of the piece owning `face`
    /// (used with excision, where a handle is surgered away).
    void adjust_piece_euler(int face, int delta);

    // -- curve registry helpers ---------------------------------------------
    void set_curve_cycle(int i, std::vector<Dart> cycle) { curves_[i] = std::move(cycle); }
    void insert_curve(int position, std::vector<Dart> cycle);
    void erase_curve(int i);

    /// Strips scaffold, rebuilds canonical scaffold from the piece table,
    /// smooths redundancies, compacts dart ids and re-validates Euler,
    /// connectivity and walk consistency. Consumes the workspace.
    SurfaceDiagram normalize();

    /// Compacts and verifies without touching the existing scaffold. Only
    /// legal when every face is already an honest disk (scaffold_add/remove).
    SurfaceDiagram finish();

    /// True when every alive dart is reachable from every other via edge/rot.
    bool connected_alive() const;

    // -- raw splice API -------------------------------------------------------
    // Genus-changing insertions (the torus gadget) cannot be phrased as chord
    // moves; they write dart structure directly between raw_begin and
    // raw_commit, which re-derives faces and checks the declared Euler change.
    void raw_begin();
    Dart raw_new_dart(Label lab) { return new_dart(lab); }
    void raw_set_edge(Dart a, Dart b) {
        edge_[a] = b;
        edge_[b] = a;
    }
    void raw_set_rotation_cycle(const std::vector<Dart>& cycle);
    void raw_detach_from_vertex(Dart d) { rot_remove(d); }
    void raw_kill(Dart d);
    void raw_commit(int declared_surface_euler_delta);

    /// Excision tail: deletes retired junk edges, requires the single scar
    /// piece they leave to carry at least one handle, surgers that handle
    /// away and normalizes. Throws CertificateMismatch-style logic errors.
    SurfaceDiagram excise_handle_and_normalize();

    /// Recomputes faces and matches them against pieces after caller-driven
    /// rotation surgery (splice-style constructions). Every changed face must
    /// trace back to at most one prior piece.
    void refresh_after_addition() { reconcile_addition(); }

private:
    Dart new_dart(Label lab);
    void rot_insert_before(Dart target, Dart inserted);
    void rot_remove(Dart d);
    void recompute_faces(std::vector<std::vector<Dart>>& faces, std::vector<int>& face_id) const;
    void reconcile_addition();
    void reconcile_deletion();
    void reconcile(bool deletion);
    int vertex_count() const;
    void remove_from_walks(Dart d);
    void check_resolved_pieces();

    std::vector<Dart> edge_, rot_, rinv_;
    std::vector<Label> label_;
    std::vector<char> alive_;
    int alive_count_ = 0;

    std::vector<std::vector<Dart>> curves_;
    std::map<int, Overlay> overlays_;
    int next_overlay_id_ = 0;

    int chi_surface_ = 2;

    // face/piece bookkeeping
    std::vector<std::vector<Dart>> faces_;
    std::vector<int> face_id_;        // per dart
    std::vector<int> piece_of_face_;  // per face id, -1 = disk
    std::vector<int> piece_chi_;      // per piece id; dead pieces removed lazily
    std::vector<char> piece_alive_;
};

}  // namespace surfdiag
