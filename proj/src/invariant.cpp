#include "pachner/invariant.hpp"

#include "pachner/error.hpp"

namespace pachner {

namespace {

PsiFunction as_function(const LocalFormula& psi)
{
    return [psi](const FVector& f) { return psi.evaluate(f); };
}

void check_dimension(const SimplicialComplex& m, const LocalFormula& psi)
{
    if (psi.n != m.dim()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "formula for n=" + std::to_string(psi.n) + " on a complex of dimension " +
                std::to_string(m.dim()));
    }
}

} // namespace

Rational evaluate_invariant(const SimplicialComplex& m, const PsiFunction& psi)
{
    Rational total = 0;
    for (VertexId v : m.vertices()) total += psi(f_vector(link(m, v)));
    return total;
}

Rational evaluate_invariant(const SimplicialComplex& m, const LocalFormula& psi)
{
    check_dimension(m, psi);
    return evaluate_invariant(m, as_function(psi));
}

Rational balance_check(const SimplicialComplex& m, const BistellarMove& mv, const PsiFunction& psi)
{
    const SimplicialComplex after = apply_move(m, mv);
    Rational total = 0;
    for (VertexId v : mv.sigma.unite(mv.tau)) {
        if (after.has_vertex(v)) total += psi(f_vector(link(after, v)));
        if (m.has_vertex(v)) total -= psi(f_vector(link(m, v)));
    }
    return total;
}

Rational balance_check(const SimplicialComplex& m, const BistellarMove& mv, const LocalFormula& psi)
{
    check_dimension(m, psi);
    return balance_check(m, mv, as_function(psi));
}

Rational balance_from_beta(const SimplicialComplex& m, const BistellarMove& mv, const PsiFunction& psi)
{
    if (auto problem = move_problem(m, mv)) {
        throw Error(ErrorKind::InvalidMove, mv.str() + ": " + *problem);
    }
    const int n = m.dim();
    Rational total = 0;
    if (mv.new_vertex()) total += psi(f_delta(n));
    if (mv.removed_vertex()) total -= psi(f_delta(n));
    for (VertexId v : mv.sigma) {
        if (mv.removed_vertex()) break;
        const FVector f = f_vector(link(m, v));
        total += psi(beta(n, f, mv.i)) - psi(f);
    }
    for (VertexId u : mv.tau) {
        if (mv.new_vertex()) break;
        const FVector f = f_vector(link(m, u));
        total += psi(beta(n, f, mv.i - 1)) - psi(f);
    }
    return total;
}

InvarianceReport invariance_report(const SimplicialComplex& m, const LocalFormula& psi, const WalkConfig& cfg)
{
    check_dimension(m, psi);
    InvarianceReport report;
    report.seed = cfg.seed;
    report.steps = cfg.steps;
    report.start_value = evaluate_invariant(m, psi);
    const WalkResult walk = random_walk(m, cfg);
    SimplicialComplex current = m;
    Rational value = report.start_value;
    for (std::size_t step = 0; step < walk.log.moves.size(); ++step) {
        const BistellarMove& mv = walk.log.moves[step];
        current = apply_move(current, mv);
        const Rational next = evaluate_invariant(current, psi);
        if (next != value) {
            report.witness = Witness{mv, step, value, next};
            break;
        }
    }
    return report;
}

std::optional<Witness> find_witness(const SimplicialComplex& m, const LocalFormula& psi, std::size_t max_moves)
{
    check_dimension(m, psi);
    const Rational before = evaluate_invariant(m, psi);
    std::size_t tried = 0;
    for (int i = 0; i <= m.dim() && tried < max_moves; ++i) {
        for (const BistellarMove& mv : enumerate_moves(m, i)) {
            if (tried++ >= max_moves) break;
            const Rational delta = balance_check(m, mv, psi);
            if (delta != 0) return Witness{mv, tried - 1, before, before + delta};
        }
    }
    return std::nullopt;
}

} // namespace pachner
