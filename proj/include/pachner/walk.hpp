#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pachner/moves.hpp"

namespace pachner {

struct MoveLog
{
    std::uint64_t seed = 0;
    std::vector<BistellarMove> moves;
    /// snapshots[0] is the start f-vector; snapshots[k] follows moves[k-1].
    std::vector<FVector> snapshots;
};

struct WalkConfig
{
    std::size_t steps = 100;
    std::uint64_t seed = 0;
    /// Relative weight per move index; empty means uniform over 0..dim.
    std::vector<double> weights;

    void validate(int dim) const;
};

struct WalkResult
{
    SimplicialComplex complex;
    MoveLog log;
};

/**
 * Seeded random walk: each step draws a move index by weight among indices
 * that currently admit a move, then a move of that index uniformly.
 */
WalkResult random_walk(const SimplicialComplex& start, const WalkConfig& cfg);

/// Throws InvalidMove when a logged move does not apply.
SimplicialComplex replay(const SimplicialComplex& start, const std::vector<BistellarMove>& moves);

} // namespace pachner
