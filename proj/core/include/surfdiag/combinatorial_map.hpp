#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfdiag {

using Dart = std::int32_t;
constexpr Dart kNoDart = -1;

enum class MapErrorKind {
    DuplicateDart,
    UnpairedDart,
    Disconnected,
    BadRotation,
};

struct MapError : std::runtime_error {
    MapErrorKind kind;
    std::vector<Dart> darts;  // offending darts, when known
    MapError(MapErrorKind k, std::vector<Dart> ds, const std::string& msg)
        : std::runtime_error(msg), kind(k), darts(std::move(ds)) {}
};

/// Closed orientable surface with an embedded graph, encoded as a rotation
/// system: `edge` is a fixed-point-free involution pairing darts into edges
/// and `rot` is a permutation whose cycles list the darts around each vertex
/// in counterclockwise order.
///
/// Faces are the orbits of rot∘edge; the convention next_face_dart(d) =
/// rot(edge(d)) is fixed here and used by every module.
class CombinatorialMap {
public:
    CombinatorialMap() = default;
    CombinatorialMap(std::vector<Dart> edge, std::vector<Dart> rot);

    int dart_count() const { return static_cast<int>(edge_.size()); }
    Dart edge(Dart d) const { return edge_[d]; }
    Dart rot(Dart d) const { return rot_[d]; }
    Dart rot_inv(Dart d) const { return rinv_[d]; }
    Dart next_face_dart(Dart d) const { return rot_[edge_[d]]; }

    const std::vector<Dart>& edge_involution() const { return edge_; }
    const std::vector<Dart>& rotation() const { return rot_; }

    /// Orbit id arrays, each dense in [0, count).
    const std::vector<int>& vertex_of() const { return vertex_of_; }
    const std::vector<int>& face_of() const { return face_of_; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return face_count_; }

    int vertex_at(Dart d) const { return vertex_of_[d]; }
    int face_at(Dart d) const { return face_of_[d]; }

    /// Darts around the vertex of d, starting at d, in rotation order.
    std::vector<Dart> vertex_darts(Dart d) const;
    /// One full face walk starting at d, following rot∘edge.
    std::vector<Dart> face_walk(Dart d) const;
    int vertex_degree(Dart d) const;

    bool connected() const { return connected_; }

    int euler_characteristic() const {
        return vertex_count_ - edge_count() + face_count_;
    }
    int genus() const { return (2 - euler_characteristic()) / 2; }

    /// Applies the dart bijection pi: dart d becomes pi[d].
    CombinatorialMap relabeled(const std::vector<Dart>& pi) const;

    bool operator==(const CombinatorialMap& o) const {
        return edge_ == o.edge_ && rot_ == o.rot_;
    }

private:
    void index_orbits();

    std::vector<Dart> edge_;
    std::vector<Dart> rot_;
    std::vector<Dart> rinv_;
    std::vector<int> vertex_of_;
    std::vector<int> face_of_;
    int vertex_count_ = 0;
    int face_count_ = 0;
    bool connected_ = true;
};

/// Validating constructor used by parsers and tests. `edge_pairs` lists each
/// edge once; `rotations` lists every vertex as a dart cycle. Every dart must
/// appear in exactly one pair and one cycle, and the result must be connected.
CombinatorialMap build_map(const std::vector<std::pair<Dart, Dart>>& edge_pairs,
                           const std::vector<std::vector<Dart>>& rotations);

int euler_characteristic(const CombinatorialMap& m);
int genus(const CombinatorialMap& m);

}  // namespace surfdiag
