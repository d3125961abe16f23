#pragma once

#include <vector>

#include "pachner/builtin.hpp"
#include "pachner/walk.hpp"

namespace testing {

/// Closed 2- and 3-manifolds: builtins plus a few seeded walks off them.
inline std::vector<pachner::SimplicialComplex> manifold_corpus(int dim)
{
    using pachner::builtin_complex;
    std::vector<pachner::SimplicialComplex> out;
    if (dim == 2) {
        out = {
            builtin_complex("boundary_simplex", 3),
            builtin_complex("cross_polytope_boundary", 3),
            builtin_complex("barycentric_boundary_simplex", 3),
            builtin_complex("torus7"),
            builtin_complex("rp2_6"),
        };
    } else if (dim == 3) {
        out = {
            builtin_complex("boundary_simplex", 4),
            builtin_complex("cross_polytope_boundary", 4),
        };
    }
    const std::size_t base = out.size();
    for (std::size_t j = 0; j < base; ++j) {
        out.push_back(pachner::random_walk(out[j], {25, 11 + j, {}}).complex);
    }
    return out;
}

} // namespace testing
