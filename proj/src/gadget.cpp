#include "pachner/gadget.hpp"

#include <algorithm>

#include "pachner/builtin.hpp"
#include "pachner/error.hpp"

namespace pachner {

GadgetCell gadget_2()
{
    const SimplicialComplex cell = SimplicialComplex::from_facets(std::vector<std::vector<VertexId>>{
        // around the base
        {1, 2, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7}, {1, 7, 8}, {1, 8, 3},
        // filling
        {2, 4, 9}, {4, 5, 9}, {5, 6, 9}, {6, 7, 9}, {7, 8, 9}, {3, 8, 9}, {2, 3, 9},
    });
    GadgetCell k;
    k.n = 2;
    k.cell = cell;
    k.base = 1;
    k.boundary_vertices = {1, 2, 3};
    k.designated_moves = {
        {2, 0, Simplex{1, 4, 5}, Simplex{cell.next_label()}},
        {2, 1, Simplex{1, 7}, Simplex{6, 8}},
    };
    return k;
}

namespace {

bool touches_only_base(const BistellarMove& mv, VertexId base, const std::vector<VertexId>& boundary)
{
    if (!mv.sigma.contains(base)) return false;
    for (VertexId v : mv.sigma.unite(mv.tau)) {
        if (v == base) continue;
        if (std::find(boundary.begin(), boundary.end(), v) != boundary.end()) return false;
    }
    return true;
}

} // namespace

std::vector<BistellarMove> find_designated_moves(const SimplicialComplex& cell, VertexId base)
{
    const std::vector<VertexId> boundary = cell.boundary().vertices();
    std::vector<BistellarMove> found;
    for (int i = 0; i < cell.dim(); ++i) {
        for (const BistellarMove& mv : enumerate_moves(cell, i)) {
            if (touches_only_base(mv, base, boundary)) {
                found.push_back(mv);
                break;
            }
        }
    }
    return found;
}

GadgetCell make_gadget(const SimplicialComplex& cell, VertexId base)
{
    GadgetCell k;
    k.n = cell.dim();
    k.cell = cell;
    k.base = base;
    k.boundary_vertices = cell.boundary().vertices();
    k.designated_moves = find_designated_moves(cell, base);
    return k;
}

GadgetReport verify_gadget(const GadgetCell& k, const RecognitionBudget& budget)
{
    GadgetReport report;
    auto fail = [&report](std::string reason) {
        report.pass = false;
        report.failures.push_back(std::move(reason));
    };
    if (k.cell.dim() != k.n || k.n < 1) {
        fail("cell is not pure of dimension " + std::to_string(k.n));
        return report;
    }

    const SimplicialComplex bd = k.cell.boundary();
    if (!is_isomorphic(bd, builtin_complex("boundary_simplex", k.n))) {
        fail("boundary is not the boundary of an " + std::to_string(k.n) + "-simplex");
    }
    if (bd.vertices() != k.boundary_vertices) fail("recorded boundary vertices do not match the boundary");
    if (!bd.has_vertex(k.base)) fail("base " + std::to_string(k.base) + " is not on the boundary");

    for (VertexId v : k.cell.vertices()) {
        const SimplicialComplex lk = link(k.cell, v);
        const bool on_boundary = bd.has_vertex(v);
        const SphereCheck check = on_boundary ? check_ball(lk, budget) : check_sphere(lk, budget);
        if (check.verdict != Verdict::Yes) {
            fail(
                "link of " + std::string(on_boundary ? "boundary" : "interior") + " vertex " +
                std::to_string(v) + " is not a " + (on_boundary ? "ball" : "sphere") + ": " + check.reason);
        }
    }

    for (int i = 0; i < k.n; ++i) {
        auto it = std::find_if(k.designated_moves.begin(), k.designated_moves.end(), [i](const BistellarMove& mv) {
            return mv.i == i;
        });
        if (it == k.designated_moves.end()) {
            fail("no designated " + std::to_string(i) + "-move");
            continue;
        }
        const BistellarMove& mv = *it;
        if (auto problem = move_problem(k.cell, mv)) {
            fail("designated " + std::to_string(i) + "-move invalid: " + *problem);
            continue;
        }
        if (!mv.sigma.contains(k.base)) {
            fail("designated " + std::to_string(i) + "-move does not contain the base in sigma");
            continue;
        }
        const SimplicialComplex after = apply_move(k.cell, mv);
        for (VertexId u : k.boundary_vertices) {
            if (u == k.base) continue;
            if (!(star(k.cell, Simplex{u}) == star(after, Simplex{u}))) {
                fail(
                    "designated " + std::to_string(i) + "-move changes the star of boundary vertex " +
                    std::to_string(u));
            }
        }
    }
    return report;
}

std::vector<std::int64_t> a_vector(const GadgetCell& k)
{
    const FVector inside = f_vector(link(k.cell, k.base));
    const SimplicialComplex bd_link = link(k.cell.boundary(), k.base);
    const std::size_t n = static_cast<std::size_t>(k.n);
    std::vector<std::int64_t> a(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t on_boundary =
            static_cast<int>(i) <= bd_link.dim() ? f_vector(bd_link)[i] : 0;
        a[i] = inside[i] - on_boundary - (i == n - 1 ? 1 : 0);
    }
    return a;
}

Implant implant_gadget(const SimplicialComplex& m, const Simplex& facet, VertexId v, const GadgetCell& k)
{
    if (k.n != m.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "gadget dimension differs from complex dimension");
    }
    if (!m.is_facet(facet)) throw Error(ErrorKind::NotAFacet, facet.str() + " is not a facet");
    if (!facet.contains(v)) throw Error(ErrorKind::BaseNotInFacet, std::to_string(v) + " not in " + facet.str());

    Implant out;
    const Simplex rest = facet.without(v);
    std::size_t slot = 0;
    for (VertexId u : k.boundary_vertices) {
        out.vertex_map[u] = u == k.base ? v : rest[slot++];
    }
    VertexId fresh = m.next_label();
    for (VertexId u : k.cell.vertices()) {
        if (!out.vertex_map.count(u)) out.vertex_map[u] = fresh++;
    }
    std::set<Simplex> facets = m.facets();
    facets.erase(facet);
    for (const Simplex& f : k.cell.facets()) {
        std::vector<VertexId> mapped;
        for (VertexId u : f) mapped.push_back(out.vertex_map.at(u));
        facets.insert(Simplex(std::move(mapped)));
    }
    out.complex = SimplicialComplex::from_facets(std::move(facets), fresh);
    return out;
}

BistellarMove transport_move(const BistellarMove& mv, const Implant& implant)
{
    auto map_simplex = [&implant](const Simplex& s) {
        std::vector<VertexId> out;
        for (VertexId u : s) out.push_back(implant.vertex_map.at(u));
        return Simplex(std::move(out));
    };
    BistellarMove out{mv.n, mv.i, map_simplex(mv.sigma), {}};
    out.tau = mv.new_vertex() ? Simplex{implant.complex.next_label()} : map_simplex(mv.tau);
    return out;
}

} // namespace pachner
