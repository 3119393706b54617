#pragma once
#include <cstdint>
#include <vector>

#include "surfdiag/combinatorial_map.hpp"

namespace surfdiag {

/// Dart decorations fed to the canonical code. `dart_color` is any finite
/// color data. Optionally each dart may point into a group (`group_of`,
/// -1 for none) carrying a payload; groups are emitted as first-visit
/// indices so the code stays invariant under dart relabeling while still
/// distinguishing the grouping itself.
struct CodeColors {
    std::vector<std::int64_t> dart_color;
    std::vector<int> group_of;                 // may be empty (no groups)
    std::vector<std::int64_t> group_payload;   // indexed by group id
};

/// Code invariant under dart relabeling: two decorated maps have equal codes
/// iff some bijection of darts preserves edge, rot, colors and grouping.
/// Implemented as the lexicographic minimum over all root darts of a
/// deterministic breadth-first numbering; disconnected graphs are handled by
/// greedily appending the smallest continuation component.
std::vector<std::int64_t> canonical_code(const CombinatorialMap& m, const CodeColors& colors);

/// Uncolored convenience overload.
std::vector<std::int64_t> canonical_code(const CombinatorialMap& m);

}  // namespace surfdiag
