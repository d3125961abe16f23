#pragma once

#include <string>
#include <vector>

#include "pachner/complex.hpp"

namespace pachner {

/**
 * Named test complexes, labelled from 1:
 *
 *   boundary_simplex n            ∂Δ^n, an (n-1)-sphere
 *   cross_polytope_boundary n     boundary of the n-dim cross-polytope; i and n+i antipodal
 *   barycentric_boundary_simplex n  barycentric subdivision of ∂Δ^n
 *   torus7                        Möbius' 7-vertex torus
 *   rp2_6                         6-vertex real projective plane
 *   pinched_spheres               two copies of ∂Δ^3 glued at vertex 1 (not a manifold)
 *
 * Throws UnknownName, or IndexOutOfRange for an unusable n.
 */
SimplicialComplex builtin_complex(const std::string& name, int n = 0);

std::vector<std::string> builtin_names();

/// Whether the name takes the dimension argument.
bool builtin_takes_dimension(const std::string& name);

} // namespace pachner
