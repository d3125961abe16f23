#pragma once

#include <string>
#include <vector>

#include "pachner/moves.hpp"
#include "pachner/recognition.hpp"

namespace pachner {

/**
 * A PL n-ball whose boundary is ∂Δ^n, with a base vertex on the boundary and,
 * for each index 0 <= i < n, a designated interior i-move whose sigma
 * contains the base and which touches no other boundary vertex.
 */
struct GadgetCell
{
    int n = 0;
    SimplicialComplex cell;
    VertexId base = 0;
    std::vector<VertexId> boundary_vertices;
    std::vector<BistellarMove> designated_moves;
};

/**
 * Explicit 2-cell: outer triangle {1,2,3} with base 1. The base link is the
 * path 2-4-5-6-7-8-3; {1,4,5} carries the 0-move and the edge {1,7}, with
 * link {6,8}, the 1-move. Vertex 9 fills the rest.
 */
GadgetCell gadget_2();

/// First moves (canonical order) meeting the designated-move conditions; may be short.
std::vector<BistellarMove> find_designated_moves(const SimplicialComplex& cell, VertexId base);

/// Wraps a cell, deriving the boundary vertices and searching for designated moves.
GadgetCell make_gadget(const SimplicialComplex& cell, VertexId base);

struct GadgetReport
{
    bool pass = true;
    std::vector<std::string> failures;
};

GadgetReport verify_gadget(const GadgetCell& k, const RecognitionBudget& budget = {});

/**
 * a_i = f_i(lk_K(base)) - f_i(lk_∂K(base)) - [i = n-1]: the change in a
 * vertex link's f-vector when a facet at that vertex is replaced by K.
 */
std::vector<std::int64_t> a_vector(const GadgetCell& k);

struct Implant
{
    SimplicialComplex complex;
    /// Cell labels to labels in `complex`.
    VertexMap vertex_map;
};

/**
 * Replaces `facet` of m by a copy of k glued along its boundary, base onto v
 * and the remaining boundary vertices onto the rest of the facet in sorted
 * order. Interior vertices take fresh labels. Throws NotAFacet,
 * BaseNotInFacet, DimensionMismatch.
 */
Implant implant_gadget(const SimplicialComplex& m, const Simplex& facet, VertexId v, const GadgetCell& k);

/// A designated move carried into the implanted complex.
BistellarMove transport_move(const BistellarMove& mv, const Implant& implant);

} // namespace pachner
