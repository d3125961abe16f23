#pragma once

#include <functional>
#include <optional>

#include "pachner/calculus.hpp"
#include "pachner/walk.hpp"

namespace pachner {

using PsiFunction = std::function<Rational(const FVector&)>;

/// Sum over vertices of psi(f(lk v)). Throws DimensionMismatch.
Rational evaluate_invariant(const SimplicialComplex& m, const LocalFormula& psi);
Rational evaluate_invariant(const SimplicialComplex& m, const PsiFunction& psi);

/**
 * Left-hand side of the balance equation of a move, from the actual links
 * before and after: the sum of psi changes over the vertices of sigma and
 * tau, counting an inserted vertex's new link and a removed vertex's old one.
 * Equals the change of the global invariant. Throws InvalidMove.
 */
Rational balance_check(const SimplicialComplex& m, const BistellarMove& mv, const PsiFunction& psi);
Rational balance_check(const SimplicialComplex& m, const BistellarMove& mv, const LocalFormula& psi);

/// Same quantity from the old links and the beta shifts alone.
Rational balance_from_beta(const SimplicialComplex& m, const BistellarMove& mv, const PsiFunction& psi);

struct Witness
{
    BistellarMove move;
    std::size_t step = 0;
    Rational before;
    Rational after;
};

struct InvarianceReport
{
    Rational start_value;
    std::optional<Witness> witness;
    std::uint64_t seed = 0;
    std::size_t steps = 0;

    bool invariant() const { return !witness.has_value(); }
};

InvarianceReport invariance_report(
    const SimplicialComplex& m, const LocalFormula& psi, const WalkConfig& cfg);

/// First enumerated move (index 0 first, then ascending) that changes the invariant.
std::optional<Witness> find_witness(
    const SimplicialComplex& m, const LocalFormula& psi, std::size_t max_moves = 200);

} // namespace pachner
