#include "pachner/moves.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "pachner/error.hpp"

namespace pachner {

std::optional<VertexId> BistellarMove::new_vertex() const
{
    if (i == 0 && tau.size() == 1) return tau[0];
    return std::nullopt;
}

std::optional<VertexId> BistellarMove::removed_vertex() const
{
    if (i == n && sigma.size() == 1) return sigma[0];
    return std::nullopt;
}

std::string BistellarMove::str() const
{
    std::ostringstream os;
    os << "T(n=" << n << ", i=" << i << ", sigma=" << sigma << ", tau=" << tau << ')';
    return os.str();
}

namespace {

using Incidence = std::unordered_map<VertexId, std::vector<const Simplex*>>;

Incidence build_incidence(const SimplicialComplex& m)
{
    Incidence inc;
    for (const Simplex& f : m.facets()) {
        for (VertexId v : f) inc[v].push_back(&f);
    }
    return inc;
}

std::vector<const Simplex*> containing(const Incidence& inc, const Simplex& s)
{
    const std::vector<const Simplex*>* shortest = nullptr;
    for (VertexId v : s) {
        auto it = inc.find(v);
        if (it == inc.end()) return {};
        if (!shortest || it->second.size() < shortest->size()) shortest = &it->second;
    }
    std::vector<const Simplex*> out;
    if (!shortest) return out;
    for (const Simplex* f : *shortest) {
        if (f->contains(s)) out.push_back(f);
    }
    return out;
}

void check_dimension(const SimplicialComplex& m, int i)
{
    if (m.dim() < 1) {
        throw Error(ErrorKind::InvalidMove, "bistellar moves need a complex of dimension >= 1");
    }
    if (i < 0 || i > m.dim()) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            "move index " + std::to_string(i) + " outside 0.." + std::to_string(m.dim()));
    }
}

} // namespace

std::vector<BistellarMove> enumerate_moves(const SimplicialComplex& m, int i)
{
    check_dimension(m, i);
    const int n = m.dim();
    std::vector<BistellarMove> moves;
    if (i == 0) {
        const VertexId fresh = m.next_label();
        for (const Simplex& f : m.facets()) moves.push_back({n, 0, f, Simplex{fresh}});
        return moves;
    }
    const Incidence inc = build_incidence(m);
    const auto sigma_size = static_cast<std::size_t>(n - i + 1);
    for (const Simplex& sigma : m.faces_of_size(sigma_size)) {
        const auto star = containing(inc, sigma);
        if (star.size() != static_cast<std::size_t>(i + 1)) continue;
        Simplex tau;
        for (const Simplex* f : star) tau = tau.unite(f->minus(sigma));
        if (tau.size() != static_cast<std::size_t>(i + 1)) continue;
        if (!containing(inc, tau).empty()) continue;
        moves.push_back({n, i, sigma, std::move(tau)});
    }
    return moves;
}

std::vector<BistellarMove> enumerate_all_moves(const SimplicialComplex& m)
{
    std::vector<BistellarMove> all;
    for (int i = 0; i <= m.dim(); ++i) {
        auto moves = enumerate_moves(m, i);
        all.insert(all.end(), moves.begin(), moves.end());
    }
    return all;
}

std::optional<std::string> move_problem(const SimplicialComplex& m, const BistellarMove& mv)
{
    if (m.dim() < 1) return "complex dimension below 1";
    if (mv.n != m.dim()) return "move dimension does not match complex";
    if (mv.i < 0 || mv.i > mv.n) return "move index out of range";
    if (mv.sigma.size() != static_cast<std::size_t>(mv.n - mv.i + 1)) return "sigma has wrong size";
    if (mv.tau.size() != static_cast<std::size_t>(mv.i + 1)) return "tau has wrong size";
    if (!mv.sigma.disjoint(mv.tau)) return "sigma and tau intersect";
    if (mv.i == 0) {
        if (!m.is_facet(mv.sigma)) return "sigma is not a facet";
        const VertexId w = mv.tau[0];
        if (m.has_vertex(w)) return "new vertex label is already in use";
        return std::nullopt;
    }
    const auto star = m.facets_containing(mv.sigma);
    if (star.size() != mv.tau.size()) return "link of sigma is not the boundary of tau";
    for (VertexId u : mv.tau) {
        if (!m.is_facet(mv.sigma.unite(mv.tau.without(u)))) {
            return "link of sigma is not the boundary of tau";
        }
    }
    if (m.has_face(mv.tau)) return "tau is already a face";
    return std::nullopt;
}

SimplicialComplex apply_move(const SimplicialComplex& m, const BistellarMove& mv)
{
    if (auto problem = move_problem(m, mv)) {
        throw Error(ErrorKind::InvalidMove, mv.str() + ": " + *problem);
    }
    std::set<Simplex> facets = m.facets();
    for (VertexId u : mv.tau) facets.erase(mv.sigma.unite(mv.tau.without(u)));
    for (VertexId v : mv.sigma) facets.insert(mv.sigma.without(v).unite(mv.tau));
    VertexId next = m.next_label();
    if (auto w = mv.new_vertex()) next = std::max(next, *w + 1);
    return SimplicialComplex::from_facets(std::move(facets), next);
}

BistellarMove inverse_move(const BistellarMove& mv)
{
    return {mv.n, mv.n - mv.i, mv.tau, mv.sigma};
}

InducedMoves induced_link_moves(const SimplicialComplex& m, const BistellarMove& mv)
{
    if (auto problem = move_problem(m, mv)) {
        throw Error(ErrorKind::InvalidMove, mv.str() + ": " + *problem);
    }
    InducedMoves out;
    out.created = mv.new_vertex();
    out.removed = mv.removed_vertex();
    for (VertexId v : mv.sigma) {
        if (mv.sigma.size() == 1) break;
        out.moves.emplace(v, BistellarMove{mv.n - 1, mv.i, mv.sigma.without(v), mv.tau});
    }
    for (VertexId u : mv.tau) {
        if (mv.tau.size() == 1) break;
        out.moves.emplace(u, BistellarMove{mv.n - 1, mv.i - 1, mv.sigma, mv.tau.without(u)});
    }
    return out;
}

std::vector<std::int64_t> f_delta_of(const SimplicialComplex& before, const SimplicialComplex& after)
{
    const FVector a = f_vector(before);
    const FVector b = f_vector(after);
    std::vector<std::int64_t> delta(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < delta.size(); ++k) {
        delta[k] = (k < b.size() ? b[k] : 0) - (k < a.size() ? a[k] : 0);
    }
    return delta;
}

} // namespace pachner
