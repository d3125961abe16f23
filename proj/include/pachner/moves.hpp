#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pachner/complex.hpp"

namespace pachner {

/**
 * A bistellar i-move on an n-dimensional complex: the (n-i)-simplex sigma,
 * whose link is the boundary of the i-simplex tau, is replaced by tau, i.e.
 * sigma * ∂tau becomes ∂sigma * tau.
 *
 * For i = 0, tau is the single fresh vertex being inserted into the facet
 * sigma. For i = n, sigma is the vertex being removed and tau its link's
 * vertex set.
 */
struct BistellarMove
{
    int n = 0;
    int i = 0;
    Simplex sigma;
    Simplex tau;

    std::optional<VertexId> new_vertex() const;
    std::optional<VertexId> removed_vertex() const;

    std::string str() const;

    auto operator<=>(const BistellarMove&) const = default;
    bool operator==(const BistellarMove&) const = default;
};

/// Canonical order: ascending sigma. Engine complexes must have dim >= 1.
std::vector<BistellarMove> enumerate_moves(const SimplicialComplex& m, int i);

/// All indices 0..dim, concatenated in ascending index.
std::vector<BistellarMove> enumerate_all_moves(const SimplicialComplex& m);

/// Reason the move cannot be applied to m, or nullopt when it is valid.
std::optional<std::string> move_problem(const SimplicialComplex& m, const BistellarMove& mv);
inline bool is_valid_move(const SimplicialComplex& m, const BistellarMove& mv)
{
    return !move_problem(m, mv).has_value();
}

/// Throws InvalidMove.
SimplicialComplex apply_move(const SimplicialComplex& m, const BistellarMove& mv);

BistellarMove inverse_move(const BistellarMove& mv);

/**
 * Moves induced on vertex links. Every vertex of sigma (except a removed one)
 * sees an (n-1)-dim i-move, every vertex of tau (except an inserted one) an
 * (n-1)-dim (i-1)-move. The inserted vertex of a 0-move gets link ∂sigma; the
 * removed vertex of an n-move disappears.
 */
struct InducedMoves
{
    std::map<VertexId, BistellarMove> moves;
    std::optional<VertexId> created;
    std::optional<VertexId> removed;
};

InducedMoves induced_link_moves(const SimplicialComplex& m, const BistellarMove& mv);

/// Change in f_k for k = 0..n.
std::vector<std::int64_t> f_delta_of(const SimplicialComplex& before, const SimplicialComplex& after);

} // namespace pachner
