#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pachner/walk.hpp"

namespace pachner {

struct RecognitionBudget
{
    /// Attempted (proposed) moves, accepted or not.
    std::size_t attempts = 10000;
    std::uint64_t seed = 1;
};

/**
 * Outcome of the flip search. When certified, replaying `certificate.moves`
 * from the input yields `final`, which is the boundary of a simplex.
 */
struct SphereRecognition
{
    bool certified = false;
    MoveLog certificate;
    SimplicialComplex final;
    std::size_t attempts_used = 0;
};

/// True iff c has dim+2 vertices and dim+2 facets, i.e. is ∂Δ^{dim+1}.
bool is_boundary_simplex(const SimplicialComplex& c);

/**
 * Simulated-annealing bistellar flip search that lowers f_0, then f_1, until
 * the complex is the boundary of a simplex. Complexes whose Euler
 * characteristic rules out a sphere are returned uncertified at once.
 */
SphereRecognition sphere_recognize(const SimplicialComplex& l, const RecognitionBudget& budget = {});

enum class Verdict { Yes, No, Unknown };

struct SphereCheck
{
    Verdict verdict = Verdict::Unknown;
    std::string reason;
};

/// Exact up to dimension 2; flip search above that.
SphereCheck check_sphere(const SimplicialComplex& l, const RecognitionBudget& budget = {});

/// l is a ball iff its boundary is nonempty and l ∪ cone(∂l) is a sphere.
SphereCheck check_ball(const SimplicialComplex& l, const RecognitionBudget& budget = {});

struct ManifoldCheck
{
    Verdict verdict = Verdict::Unknown;
    /// First vertex (as a 0-simplex) whose link failed or could not be certified.
    std::optional<Simplex> witness;
    std::string reason;
};

ManifoldCheck verify_closed_manifold(const SimplicialComplex& c, const RecognitionBudget& budget = {});

const char* to_string(Verdict v);

} // namespace pachner
