#include "usf/lattice.hpp"

#include "usf/errors.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace usf {

LatticeBox::LatticeBox(int dim_, int64_t side_) : dim(dim_), side(side_) {
    if (dim < 1) throw std::invalid_argument("lattice dimension must be >= 1");
    if (side < 2) throw std::invalid_argument("lattice side must be >= 2");
    stride.resize(dim);
    int64_t v = 1;
    for (int i = 0; i < dim; ++i) {
        stride[i] = v;
        if (v > std::numeric_limits<int64_t>::max() / side - 1)
            throw usf_error(errc::size_guard, "box volume overflows 64 bits");
        v *= side;
    }
    volume = v;
}

std::vector<int64_t> LatticeBox::coords_of(int64_t v) const {
    std::vector<int64_t> c(dim);
    for (int i = 0; i < dim; ++i) {
        c[i] = v % side;
        v /= side;
    }
    return c;
}

int64_t LatticeBox::index_of(const std::vector<int64_t>& coords) const {
    if (static_cast<int>(coords.size()) != dim)
        throw std::invalid_argument("coordinate arity does not match the box dimension");
    int64_t v = 0;
    for (int i = 0; i < dim; ++i) {
        if (coords[i] < 0 || coords[i] >= side)
            throw std::invalid_argument("coordinate outside the box");
        v += coords[i] * stride[i];
    }
    return v;
}

int64_t LatticeBox::l1(int64_t u, int64_t v) const {
    int64_t d = 0;
    for (int i = 0; i < dim; ++i) {
        const int64_t cu = (u / stride[i]) % side;
        const int64_t cv = (v / stride[i]) % side;
        d += std::llabs(cu - cv);
    }
    return d;
}

void validate_walk(const LatticeBox& box, const WalkPath& path) {
    for (size_t i = 0; i < path.size(); ++i) {
        const int64_t v = path[i];
        if (v == box.wired()) {
            if (i + 1 != path.size() || i == 0)
                throw std::invalid_argument("wired vertex may only terminate a walk");
        } else if (v < 0 || v >= box.volume) {
            throw std::invalid_argument("walk leaves the box");
        }
        if (i == 0) continue;
        const int64_t u = path[i - 1];
        if (u == box.wired())
            throw std::invalid_argument("walk cannot continue from the wired vertex");
        bool adjacent = false;
        for (int dir = 0; dir < box.directions() && !adjacent; ++dir)
            adjacent = box.step(u, dir) == v;
        if (!adjacent) throw std::invalid_argument("walk steps between non-neighbors");
    }
}

} // namespace usf
