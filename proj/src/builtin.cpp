#include "pachner/builtin.hpp"

#include "pachner/error.hpp"

namespace pachner {

namespace {

SimplicialComplex boundary_simplex(int n)
{
    std::vector<VertexId> verts;
    for (int v = 1; v <= n + 1; ++v) verts.push_back(static_cast<VertexId>(v));
    return simplex_boundary(Simplex(verts));
}

SimplicialComplex cross_polytope_boundary(int n)
{
    std::vector<std::vector<VertexId>> facets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> f;
        for (int axis = 0; axis < n; ++axis) {
            const bool negative = (mask >> axis) & 1u;
            f.push_back(static_cast<VertexId>(axis + 1 + (negative ? n : 0)));
        }
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex torus7()
{
    std::vector<std::vector<VertexId>> facets;
    for (VertexId i = 0; i < 7; ++i) {
        facets.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        facets.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_6()
{
    return SimplicialComplex::from_facets(std::vector<std::vector<VertexId>>{
        {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
        {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4},
    });
}

SimplicialComplex pinched_spheres()
{
    return SimplicialComplex::from_facets(std::vector<std::vector<VertexId>>{
        {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
        {1, 5, 6}, {1, 5, 7}, {1, 6, 7}, {5, 6, 7},
    });
}

void require_dimension(const std::string& name, int n, int min)
{
    if (n < min) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            name + " needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
    }
}

} // namespace

SimplicialComplex builtin_complex(const std::string& name, int n)
{
    if (name == "boundary_simplex") {
        require_dimension(name, n, 1);
        return boundary_simplex(n);
    }
    if (name == "cross_polytope_boundary") {
        require_dimension(name, n, 1);
        return cross_polytope_boundary(n);
    }
    if (name == "barycentric_boundary_simplex") {
        require_dimension(name, n, 1);
        return barycentric_subdivision(boundary_simplex(n));
    }
    if (name == "torus7") return torus7();
    if (name == "rp2_6") return rp2_6();
    if (name == "pinched_spheres") return pinched_spheres();
    throw Error(ErrorKind::UnknownName, "no builtin complex named '" + name + "'");
}

std::vector<std::string> builtin_names()
{
    return {
        "boundary_simplex", "cross_polytope_boundary", "barycentric_boundary_simplex",
        "torus7", "rp2_6", "pinched_spheres",
    };
}

bool builtin_takes_dimension(const std::string& name)
{
    return name == "boundary_simplex" || name == "cross_polytope_boundary" ||
           name == "barycentric_boundary_simplex";
}

} // namespace pachner
