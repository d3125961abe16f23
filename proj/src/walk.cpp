#include "pachner/walk.hpp"

#include <random>

#include "pachner/error.hpp"

namespace pachner {

void WalkConfig::validate(int dim) const
{
    if (weights.empty()) return;
    if (weights.size() != static_cast<std::size_t>(dim + 1)) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "expected " + std::to_string(dim + 1) + " move weights, got " +
                std::to_string(weights.size()));
    }
    bool positive = false;
    for (double w : weights) {
        if (w < 0.0) throw Error(ErrorKind::IndexOutOfRange, "negative move weight");
        positive = positive || w > 0.0;
    }
    if (!positive) throw Error(ErrorKind::IndexOutOfRange, "all move weights are zero");
}

WalkResult random_walk(const SimplicialComplex& start, const WalkConfig& cfg)
{
    cfg.validate(start.dim());
    std::mt19937_64 rng(cfg.seed);
    WalkResult out{start, {cfg.seed, {}, {f_vector(start)}}};
    const int n = start.dim();
    std::vector<double> weights = cfg.weights;
    if (weights.empty()) weights.assign(static_cast<std::size_t>(n + 1), 1.0);

    for (std::size_t step = 0; step < cfg.steps; ++step) {
        std::vector<std::vector<BistellarMove>> by_index(static_cast<std::size_t>(n + 1));
        std::vector<double> live(weights.size(), 0.0);
        bool any = false;
        for (int i = 0; i <= n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (weights[ui] <= 0.0) continue;
            by_index[ui] = enumerate_moves(out.complex, i);
            if (!by_index[ui].empty()) {
                live[ui] = weights[ui];
                any = true;
            }
        }
        if (!any) throw Error(ErrorKind::NoValidMoves, "no weighted index admits a move");
        std::discrete_distribution<std::size_t> pick_index(live.begin(), live.end());
        const auto& candidates = by_index[pick_index(rng)];
        std::uniform_int_distribution<std::size_t> pick_move(0, candidates.size() - 1);
        const BistellarMove mv = candidates[pick_move(rng)];
        out.complex = apply_move(out.complex, mv);
        out.log.moves.push_back(mv);
        out.log.snapshots.push_back(f_vector(out.complex));
    }
    return out;
}

SimplicialComplex replay(const SimplicialComplex& start, const std::vector<BistellarMove>& moves)
{
    SimplicialComplex c = start;
    for (const BistellarMove& mv : moves) c = apply_move(c, mv);
    return c;
}

} // namespace pachner
