#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace usf {

/// A finite box {0..side-1}^dim of the d-dimensional lattice, wired: one
/// extra vertex absorbs every face the box is missing, so a boundary-face
/// vertex sees the wired vertex once per missing face (the contraction of
/// the lattice complement keeps parallel edges).
///
/// In-box vertices are indexed 0..volume-1 in row-major coordinate order;
/// the wired vertex is index volume. Graph distance between in-box vertices
/// is the L1 distance (geodesics stay inside the box).
struct LatticeBox {
    int dim = 0;
    int64_t side = 0;
    int64_t volume = 0;
    std::vector<int64_t> stride;

    LatticeBox(int dim, int64_t side);

    int64_t wired() const { return volume; }
    int directions() const { return 2 * dim; }

    /// Neighbor of an in-box vertex along direction dir (2*axis for +1,
    /// 2*axis+1 for -1); the wired vertex when the step leaves the box.
    int64_t step(int64_t v, int dir) const {
        const int axis = dir >> 1;
        const int64_t coord = (v / stride[axis]) % side;
        if (dir & 1) return coord == 0 ? wired() : v - stride[axis];
        return coord == side - 1 ? wired() : v + stride[axis];
    }

    std::vector<int64_t> coords_of(int64_t v) const;
    int64_t index_of(const std::vector<int64_t>& coords) const; // throws if outside

    int64_t l1(int64_t u, int64_t v) const;
};

/// A walk as a vertex sequence; consecutive entries must be box neighbors
/// (the wired vertex may appear only as the final entry).
using WalkPath = std::vector<int64_t>;

void validate_walk(const LatticeBox& box, const WalkPath& path);

/// Chronological loop erasure: jump from each kept vertex past its last
/// occurrence. The output is simple and idempotent under re-erasure.
template <class T>
std::vector<T> loop_erase(const std::vector<T>& path) {
    std::vector<T> out;
    if (path.empty()) return out;
    std::unordered_map<T, size_t> last;
    for (size_t i = 0; i < path.size(); ++i) last[path[i]] = i;
    size_t t = 0;
    while (true) {
        out.push_back(path[t]);
        if (t == path.size() - 1) break;
        t = last[path[t]] + 1;
    }
    return out;
}

} // namespace usf
