#include "surfdiag/workspace.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace surfdiag {

namespace {

struct WorkspaceFailure : std::logic_error {
    using std::logic_error::logic_error;
};

[[noreturn]] void fail(const std::string& msg) { throw WorkspaceFailure("workspace: " + msg); }

void require(bool cond, const char* msg) {
    if (!cond) fail(msg);
}

}  // namespace

Workspace::Workspace(const SurfaceDiagram& d)
    : edge_(d.map.edge_involution()),
      rot_(d.map.rotation()),
      label_(d.labels),
      curves_(d.curves),
      overlays_(d.overlays),
      next_overlay_id_(d.next_overlay_id) {
    const int n = d.map.dart_count();
    rinv_.assign(n, 0);
    for (Dart x = 0; x < n; ++x) rinv_[rot_[x]] = x;
    alive_.assign(n, 1);
    alive_count_ = n;
    chi_surface_ = d.map.euler_characteristic();
    recompute_faces(faces_, face_id_);
    piece_of_face_.assign(faces_.size(), -1);
}

void Workspace::set_label(Dart d, Label l) { label_[d] = l; }

Dart Workspace::new_dart(Label lab) {
    Dart d = static_cast<Dart>(edge_.size());
    edge_.push_back(kNoDart);
    rot_.push_back(d);
    rinv_.push_back(d);
    label_.push_back(lab);
    alive_.push_back(1);
    face_id_.push_back(-1);
    ++alive_count_;
    return d;
}

void Workspace::rot_insert_before(Dart target, Dart inserted) {
    Dart prev = rinv_[target];
    rot_[prev] = inserted;
    rinv_[inserted] = prev;
    rot_[inserted] = target;
    rinv_[target] = inserted;
}

void Workspace::rot_remove(Dart d) {
    Dart prev = rinv_[d];
    Dart next = rot_[d];
    if (prev != d) {
        rot_[prev] = next;
        rinv_[next] = prev;
    }
    rot_[d] = d;
    rinv_[d] = d;
}

void Workspace::recompute_faces(std::vector<std::vector<Dart>>& faces, std::vector<int>& face_id) const {
    const int n = capacity();
    faces.clear();
    face_id.assign(n, -1);
    for (Dart d = 0; d < n; ++d) {
        if (!alive_[d] || face_id[d] >= 0) continue;
        std::vector<Dart> walk;
        Dart x = d;
        do {
            face_id[x] = static_cast<int>(faces.size());
            walk.push_back(x);
            x = rot_[edge_[x]];
        } while (x != d);
        faces.push_back(std::move(walk));
    }
}

int Workspace::vertex_count() const {
    const int n = capacity();
    std::vector<char> seen(n, 0);
    int count = 0;
    for (Dart d = 0; d < n; ++d) {
        if (!alive_[d] || seen[d]) continue;
        for (Dart x = d; !seen[x]; x = rot_[x]) seen[x] = 1;
        ++count;
    }
    return count;
}

bool Workspace::all_disks() const {
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (piece_of_face_[f] >= 0) return false;
    for (std::size_t p = 0; p < piece_chi_.size(); ++p)
        if (piece_alive_[p]) return false;
    return true;
}

// Recomputes faces and reassigns piece membership. Old and new faces sharing
// darts form bipartite components: a component with one old face inherits its
// piece; anything that merges old faces across distinct pieces, or kills old
// faces outright, collapses into a single scar piece (surgeries are connected,
// so one scar per step suffices). A face that splits without gaining fresh
// darts lost an edge, so its walks no longer bound disks and it scars too.
// The Euler characteristic of the adjusted piece is then solved from the
// invariant
//     chi_surface = V - E + #disk_faces + sum over pieces of chi(piece)
// which holds at every workspace state.
void Workspace::reconcile_addition() { reconcile(false); }

void Workspace::reconcile_deletion() { reconcile(true); }

void Workspace::reconcile(bool deletion) {
    std::vector<std::vector<Dart>> old_faces = std::move(faces_);
    std::vector<int> old_face_id = std::move(face_id_);
    std::vector<int> old_piece = std::move(piece_of_face_);

    recompute_faces(faces_, face_id_);
    const int nf = static_cast<int>(faces_.size());
    const int nof = static_cast<int>(old_faces.size());

    // Bipartite overlap between old and new faces.
    std::vector<std::set<int>> olds_of_new(nf);
    std::vector<int> news_of_old(nof, 0);
    std::vector<char> old_seen(nof, 0);
    for (int f = 0; f < nf; ++f) {
        for (Dart d : faces_[f]) {
            if (d < static_cast<Dart>(old_face_id.size()) && old_face_id[d] >= 0) {
                if (olds_of_new[f].insert(old_face_id[d]).second) ++news_of_old[old_face_id[d]];
                old_seen[old_face_id[d]] = 1;
            }
        }
    }

    piece_of_face_.assign(nf, -1);
    std::set<int> scar_pieces;    // old piece ids merging into the scar
    std::vector<int> scar_faces;  // new face ids joining the scar
    bool scar = false;

    // Old faces that vanished entirely drag their piece into the scar.
    for (int of = 0; of < nof; ++of) {
        if (!old_seen[of]) {
            scar = true;
            if (old_piece[of] >= 0) scar_pieces.insert(old_piece[of]);
        }
    }

    for (int f = 0; f < nf; ++f) {
        if (olds_of_new[f].empty()) continue;  // fresh face: an honest disk
        std::set<int> pieces_here;
        bool split = false;
        for (int of : olds_of_new[f]) {
            if (old_piece[of] >= 0) pieces_here.insert(old_piece[of]);
            if (deletion && news_of_old[of] > 1) split = true;
        }
        if (split) {
            // a walk torn apart by an edge removal no longer bounds a disk
            scar = true;
            scar_faces.push_back(f);
            for (int p : pieces_here) scar_pieces.insert(p);
        } else if (olds_of_new[f].size() == 1) {
            piece_of_face_[f] = old_piece[*olds_of_new[f].begin()];
        } else if (pieces_here.empty()) {
            piece_of_face_[f] = -1;  // distinct disks merged along a removed edge
        } else if (pieces_here.size() == 1) {
            piece_of_face_[f] = *pieces_here.begin();
        } else {
            scar = true;
            scar_faces.push_back(f);
            for (int p : pieces_here) scar_pieces.insert(p);
        }
    }

    if (scar) {
        int scar_id = static_cast<int>(piece_chi_.size());
        piece_chi_.push_back(0);
        piece_alive_.push_back(1);
        for (int f : scar_faces) piece_of_face_[f] = scar_id;
        for (int f = 0; f < nf; ++f)
            if (piece_of_face_[f] >= 0 && scar_pieces.count(piece_of_face_[f]))
                piece_of_face_[f] = scar_id;
        for (int p : scar_pieces) piece_alive_[p] = 0;
    }

    // Pieces whose face sets changed; the residual may only land on one.
    std::set<int> touched;
    {
        std::set<std::pair<int, std::vector<Dart>>> old_keyed;
        for (int of = 0; of < nof; ++of) {
            if (old_piece[of] < 0) continue;
            auto v = old_faces[of];
            std::sort(v.begin(), v.end());
            old_keyed.insert({old_piece[of], std::move(v)});
        }
        for (int f = 0; f < nf; ++f) {
            int p = piece_of_face_[f];
            if (p < 0) continue;
            auto v = faces_[f];
            std::sort(v.begin(), v.end());
            if (!old_keyed.count({p, v})) touched.insert(p);
        }
        if (scar) touched.insert(static_cast<int>(piece_chi_.size()) - 1);
    }

    // Solve the Euler invariant for the adjusted piece.
    const int V = vertex_count();
    const int E = alive_count_ / 2;
    int disks = 0;
    for (int f = 0; f < nf; ++f)
        if (piece_of_face_[f] < 0) ++disks;
    int sum = V - E + disks;
    for (std::size_t p = 0; p < piece_chi_.size(); ++p)
        if (piece_alive_[p]) sum += piece_chi_[p];
    int residual = chi_surface_ - sum;
    if (residual != 0) {
        int target;
        if (scar) {
            target = static_cast<int>(piece_chi_.size()) - 1;
        } else {
            require(touched.size() == 1, "euler residual ambiguous between pieces");
            target = *touched.begin();
        }
        piece_chi_[target] += residual;
    }

    check_resolved_pieces();
}

void Workspace::check_resolved_pieces() {
    std::map<int, int> faces_per_piece;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (piece_of_face_[f] >= 0) faces_per_piece[piece_of_face_[f]]++;
    for (std::size_t p = 0; p < piece_chi_.size(); ++p) {
        if (!piece_alive_[p]) continue;
        int nf = faces_per_piece.count(static_cast<int>(p)) ? faces_per_piece[static_cast<int>(p)] : 0;
        if (nf >= 1 && piece_chi_[p] == nf) {
            // Every walk of the piece bounds an honest disk: dissolve it.
            for (std::size_t f = 0; f < faces_.size(); ++f)
                if (piece_of_face_[f] == static_cast<int>(p)) piece_of_face_[f] = -1;
            piece_alive_[p] = 0;
        } else if (nf == 0 && piece_chi_[p] == 0) {
            // vacuous scar: the deleted complex dissolved into its neighbors
            piece_alive_[p] = 0;
        }
    }
}

std::pair<Dart, Dart> Workspace::subdivide(Dart d) {
    require(alive_[d], "subdivide on dead dart");
    Dart e = edge_[d];
    Label lab = label_[d];
    Dart r = new_dart(lab);
    Dart s = new_dart(lab);
    edge_[d] = r;
    edge_[r] = d;
    edge_[s] = e;
    edge_[e] = s;
    rot_[r] = s;
    rot_[s] = r;
    rinv_[r] = s;
    rinv_[s] = r;
    // Walk updates: a walk traversing d continues with s, one traversing e
    // continues with r.
    auto patch = [&](std::vector<Dart>& walk) {
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (walk[i] == d) {
                walk.insert(walk.begin() + i + 1, s);
                ++i;
            } else if (walk[i] == e) {
                walk.insert(walk.begin() + i + 1, r);
                ++i;
            }
        }
    };
    for (auto& c : curves_) patch(c);
    for (auto& [id, ov] : overlays_) patch(ov.walk);
    reconcile_addition();
    return {r, s};
}

std::pair<Dart, Dart> Workspace::add_chord(Dart corner_a, Dart corner_b, Label lab) {
    require(alive_[corner_a] && alive_[corner_b], "chord corner on dead dart");
    int fa = face_id_[corner_a], fb = face_id_[corner_b];
    int pa = piece_of_face_[fa], pb = piece_of_face_[fb];
    require(fa == fb || pa >= 0 || pb >= 0, "chord corners in unrelated disk faces");
    require(pa < 0 || pb < 0 || pa == pb, "chord corners in different pieces");
    Dart c1 = new_dart(lab);
    Dart c2 = new_dart(lab);
    edge_[c1] = c2;
    edge_[c2] = c1;
    rot_insert_before(corner_a, c1);
    rot_insert_before(corner_b, c2);
    reconcile_addition();
    return {c1, c2};
}

std::pair<Dart, Dart> Workspace::add_floating_loop(Dart corner, Label lab) {
    require(alive_[corner], "floating loop corner on dead dart");
    Dart l1 = new_dart(lab);
    Dart l2 = new_dart(lab);
    Dart t1 = new_dart(scaffold_label());
    Dart t2 = new_dart(scaffold_label());
    edge_[l1] = l2;
    edge_[l2] = l1;
    edge_[t1] = t2;
    edge_[t2] = t1;
    // New vertex (l1, t1, l2): the monogon walk of l1 is the enclosed disk.
    rot_[l1] = t1;
    rot_[t1] = l2;
    rot_[l2] = l1;
    rinv_[t1] = l1;
    rinv_[l2] = t1;
    rinv_[l1] = l2;
    rot_insert_before(corner, t2);
    reconcile_addition();
    return {l1, l2};
}

void Workspace::remove_from_walks(Dart d) {
    for (auto& c : curves_) std::erase(c, d);
    for (auto& [id, ov] : overlays_) std::erase(ov.walk, d);
}

void Workspace::retire(const std::vector<Dart>& darts) {
    for (Dart d : darts) {
        remove_from_walks(d);
        label_[d] = overlay_label(-1);
    }
}

void Workspace::delete_edge(Dart d, bool autosmooth) {
    require(alive_[d], "deleting dead edge");
    Dart e = edge_[d];
    for (const auto& c : curves_)
        for (Dart x : c) require(x != d && x != e, "deleting edge still on a curve");
    for (const auto& [id, ov] : overlays_)
        for (Dart x : ov.walk) require(x != d && x != e, "deleting edge still on an overlay");

    Dart va = rot_[d] == d ? kNoDart : rot_[d];   // a surviving dart at each endpoint
    Dart vb = rot_[e] == e ? kNoDart : rot_[e];
    rot_remove(d);
    rot_remove(e);
    alive_[d] = alive_[e] = 0;
    alive_count_ -= 2;
    reconcile_deletion();
    if (autosmooth) {
        if (va != kNoDart && alive_[va]) smooth_vertex(va);
        if (vb != kNoDart && alive_[vb]) smooth_vertex(vb);
    }
}

bool Workspace::smooth_vertex(Dart at, bool force) {
    if (!alive_[at]) return false;
    Dart other = rot_[at];
    if (other == at || rot_[other] != at) return false;  // not degree 2
    if (edge_[at] == other) return false;                // isolated circle carrier
    if (!force && !(label_[at] == label_[other])) return false;
    Dart a = edge_[at], b = edge_[other];
    edge_[a] = b;
    edge_[b] = a;
    rot_[at] = at;
    rot_[other] = other;
    rinv_[at] = at;
    rinv_[other] = other;
    alive_[at] = alive_[other] = 0;
    alive_count_ -= 2;
    remove_from_walks(at);
    remove_from_walks(other);
    reconcile_deletion();
    return true;
}

void Workspace::smooth_crossing(Dart at) {
    require(alive_[at], "smoothing dead vertex");
    Dart d0 = at, d1 = rot_[at], d2 = rot_[d1], d3 = rot_[d2];
    require(rot_[d3] == d0, "smoothing requires a degree-4 vertex");
    require(label_[d0] == label_[d2] && label_[d1] == label_[d3], "crossing strands mismatched");
    auto fuse = [&](Dart x, Dart y) {
        Dart a = edge_[x], b = edge_[y];
        edge_[a] = b;
        edge_[b] = a;
    };
    fuse(d0, d2);
    fuse(d1, d3);
    for (Dart x : {d0, d1, d2, d3}) {
        rot_[x] = x;
        rinv_[x] = x;
        alive_[x] = 0;
        remove_from_walks(x);
    }
    alive_count_ -= 4;
    reconcile_deletion();
}

void Workspace::adjust_piece_euler(int face, int delta) {
    int p = piece_of_face_[face];
    require(p >= 0, "adjusting euler of a plain disk face");
    piece_chi_[p] += delta;
    check_resolved_pieces();
}

void Workspace::insert_curve(int position, std::vector<Dart> cycle) {
    for (auto& lbl : label_)
        if (lbl.kind == DartKind::Curve && lbl.index >= position) ++lbl.index;
    for (Dart d : cycle) {
        label_[d] = curve_label(position);
        label_[edge_[d]] = curve_label(position);
    }
    curves_.insert(curves_.begin() + position, std::move(cycle));
}

void Workspace::erase_curve(int i) {
    curves_.erase(curves_.begin() + i);
    for (auto& lbl : label_)
        if (lbl.kind == DartKind::Curve && lbl.index > i) --lbl.index;
}

SurfaceDiagram Workspace::normalize() {
    // 1. junk overlay edges (retired route segments)
    for (Dart d = 0; d < capacity(); ++d) {
        if (!alive_[d]) continue;
        if (label_[d].is_overlay() && label_[d].index < 0) delete_edge(d);
    }
    // 2. strip all scaffold
    for (Dart d = 0; d < capacity(); ++d) {
        if (!alive_[d]) continue;
        if (label_[d].is_scaffold()) delete_edge(d);
    }
    // 3. smoothing sweep (delete_edge already smooths most)
    for (Dart d = 0; d < capacity(); ++d)
        if (alive_[d]) smooth_vertex(d);

    // 4. rescaffold every piece
    auto piece_min_dart = [&](int p) {
        Dart best = kNoDart;
        for (std::size_t f = 0; f < faces_.size(); ++f)
            if (piece_of_face_[f] == static_cast<int>(p))
                for (Dart d : faces_[f])
                    if (best == kNoDart || d < best) best = d;
        return best;
    };
    auto ensure_anchor = [&](int face) -> Dart {
        Dart d = kNoDart;
        for (Dart x : faces_[face])
            if (d == kNoDart || x < d) d = x;
        require(d != kNoDart, "anchoring an empty walk");
        auto [r, s] = subdivide(d);
        (void)r;
        return s;  // corner token: insert before s lands on face(d)'s side
    };
    for (;;) {
        // pick the alive piece with the smallest dart (deterministic order)
        int chosen = -1;
        Dart chosen_min = kNoDart;
        for (std::size_t p = 0; p < piece_chi_.size(); ++p) {
            if (!piece_alive_[p]) continue;
            Dart md = piece_min_dart(static_cast<int>(p));
            if (chosen < 0 || (md != kNoDart && (chosen_min == kNoDart || md < chosen_min))) {
                chosen = static_cast<int>(p);
                chosen_min = md;
            }
        }
        if (chosen < 0) break;

        std::vector<int> pfaces;
        for (std::size_t f = 0; f < faces_.size(); ++f)
            if (piece_of_face_[f] == chosen) pfaces.push_back(static_cast<int>(f));

        if (pfaces.empty()) {
            // Blank surface: the whole component is this piece. Emit the
            // standard polygon map (or the single-edge sphere).
            require(alive_count_ == 0, "boundaryless piece inside a nonempty map");
            int g = (2 - piece_chi_[chosen]) / 2;
            piece_alive_[chosen] = 0;
            if (g == 0) {
                Dart a = new_dart(scaffold_label());
                Dart b = new_dart(scaffold_label());
                edge_[a] = b;
                edge_[b] = a;
            } else {
                std::vector<Dart> ring;
                for (int h = 0; h < g; ++h) {
                    Dart x = new_dart(scaffold_label());
                    Dart y = new_dart(scaffold_label());
                    Dart X = new_dart(scaffold_label());
                    Dart Y = new_dart(scaffold_label());
                    edge_[x] = X;
                    edge_[X] = x;
                    edge_[y] = Y;
                    edge_[Y] = y;
                    ring.insert(ring.end(), {x, y, X, Y});
                }
                for (std::size_t i = 0; i < ring.size(); ++i) {
                    rot_[ring[i]] = ring[(i + 1) % ring.size()];
                    rinv_[ring[(i + 1) % ring.size()]] = ring[i];
                }
            }
            recompute_faces(faces_, face_id_);
            piece_of_face_.assign(faces_.size(), -1);
            continue;
        }

        if (pfaces.size() > 1) {
            // connect the two walks with the smallest darts
            auto min_dart_of = [&](int f) {
                Dart d = kNoDart;
                for (Dart x : faces_[f])
                    if (d == kNoDart || x < d) d = x;
                return d;
            };
            std::sort(pfaces.begin(), pfaces.end(), [&](int a, int b) { return min_dart_of(a) < min_dart_of(b); });
            Dart ca = ensure_anchor(pfaces[0]);
            // face ids may have shifted: find the piece face not containing ca
            int other = -1;
            for (std::size_t f = 0; f < faces_.size(); ++f) {
                if (piece_of_face_[f] != chosen) continue;
                if (face_id_[ca] == static_cast<int>(f)) continue;
                if (other < 0 || min_dart_of(static_cast<int>(f)) < min_dart_of(other)) other = static_cast<int>(f);
            }
            require(other >= 0, "piece lost its second walk");
            Dart cb = ensure_anchor(other);
            add_chord(ca, cb, scaffold_label());
            continue;
        }

        if (piece_chi_[chosen] < 1) {
            Dart s = ensure_anchor(pfaces[0]);
            auto [x, X] = add_chord(s, s, scaffold_label());
            (void)x;
            add_chord(X, s, scaffold_label());
            continue;
        }
        fail("piece in unexpected state during rescaffold");
    }

    // drop carrier vertices that rescaffold made redundant
    for (Dart d = 0; d < capacity(); ++d)
        if (alive_[d]) smooth_vertex(d);

    return finish();
}

SurfaceDiagram Workspace::finish() {
    require(all_disks(), "pieces remain at finish");
    const int V = vertex_count();
    const int E = alive_count_ / 2;
    const int F = static_cast<int>(faces_.size());
    require(V - E + F == chi_surface_, "euler mismatch at finish");
    for (Dart d = 0; d < capacity(); ++d) {
        if (!alive_[d]) continue;
        require(alive_[edge_[d]], "dangling edge pairing");
        require(label_[d] == label_[edge_[d]], "edge label mismatch");
    }

    // 6. canonical re-basing of walks
    for (auto& c : curves_) {
        require(!c.empty(), "empty curve cycle after normalize");
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
    }
    for (auto& [id, ov] : overlays_) {
        if (ov.closed && !ov.walk.empty()) {
            auto it = std::min_element(ov.walk.begin(), ov.walk.end());
            std::rotate(ov.walk.begin(), it, ov.walk.end());
        }
    }

    // 7. compact
    std::vector<Dart> remap(capacity(), kNoDart);
    int n = 0;
    for (Dart d = 0; d < capacity(); ++d)
        if (alive_[d]) remap[d] = n++;
    std::vector<Dart> edge2(n), rot2(n);
    std::vector<Label> lab2(n);
    for (Dart d = 0; d < capacity(); ++d) {
        if (!alive_[d]) continue;
        edge2[remap[d]] = remap[edge_[d]];
        rot2[remap[d]] = remap[rot_[d]];
        lab2[remap[d]] = label_[d];
    }
    SurfaceDiagram out;
    out.map = CombinatorialMap(std::move(edge2), std::move(rot2));
    out.labels = std::move(lab2);
    out.k = static_cast<int>(curves_.size());
    out.curves.resize(curves_.size());
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        out.curves[i].reserve(curves_[i].size());
        for (Dart d : curves_[i]) out.curves[i].push_back(remap[d]);
    }
    for (auto& [id, ov] : overlays_) {
        Overlay o;
        o.closed = ov.closed;
        for (Dart d : ov.walk) o.walk.push_back(remap[d]);
        out.overlays.emplace(id, std::move(o));
    }
    out.next_overlay_id = next_overlay_id_;
    require(out.map.dart_count() == 0 || out.map.connected(), "normalize produced a disconnected map");
    return out;
}

void Workspace::raw_begin() {
    require(all_disks(), "raw splice on a state with tracked pieces");
}

void Workspace::raw_set_rotation_cycle(const std::vector<Dart>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Dart a = cycle[i];
        Dart b = cycle[(i + 1) % cycle.size()];
        rot_[a] = b;
        rinv_[b] = a;
    }
}

void Workspace::raw_kill(Dart d) {
    require(alive_[d], "raw_kill on dead dart");
    rot_remove(d);
    alive_[d] = 0;
    --alive_count_;
    remove_from_walks(d);
}

void Workspace::raw_commit(int declared_surface_euler_delta) {
    chi_surface_ += declared_surface_euler_delta;
    recompute_faces(faces_, face_id_);
    piece_of_face_.assign(faces_.size(), -1);
    const int V = vertex_count();
    const int E = alive_count_ / 2;
    const int F = static_cast<int>(faces_.size());
    require(V - E + F == chi_surface_, "raw splice broke the Euler count");
    for (Dart d = 0; d < capacity(); ++d) {
        if (!alive_[d]) continue;
        require(alive_[edge_[d]] && edge_[edge_[d]] == d, "raw splice broke the edge involution");
    }
}

SurfaceDiagram Workspace::excise_handle_and_normalize() {
    for (Dart d = 0; d < capacity(); ++d) {
        if (!alive_[d]) continue;
        if (label_[d].is_overlay() && label_[d].index < 0) delete_edge(d);
    }
    int piece = -1;
    for (std::size_t p = 0; p < piece_chi_.size(); ++p) {
        if (!piece_alive_[p]) continue;
        require(piece == -1, "excision freed more than one surface piece");
        piece = static_cast<int>(p);
    }
    require(piece >= 0, "excision freed no surface piece");
    int walks = 0;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (piece_of_face_[f] == piece) ++walks;
    // The freed zone carries exactly one handle when capping its walks with
    // disks raises the Euler characteristic by two: either a (g=1, b=1)
    // piece, or the annulus left by a strand that rode over the handle.
    require(walks - piece_chi_[piece] == 2, "excision site does not carry exactly one handle");
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (piece_of_face_[f] == piece) piece_of_face_[f] = -1;
    piece_alive_[piece] = 0;
    chi_surface_ += 2;
    return normalize();
}

bool Workspace::connected_alive() const {
    if (alive_count_ == 0) return true;
    Dart start = kNoDart;
    for (Dart d = 0; d < capacity(); ++d)
        if (alive_[d]) { start = d; break; }
    std::vector<char> vis(capacity(), 0);
    std::vector<Dart> stack{start};
    vis[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (Dart x : {edge_[d], rot_[d]}) {
            if (alive_[x] && !vis[x]) {
                vis[x] = 1;
                ++reached;
                stack.push_back(x);
            }
        }
    }
    return reached == alive_count_;
}

}  // namespace surfdiag
