#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pachner/fvector.hpp"
#include "pachner/simplex.hpp"

namespace pachner {

/**
 * A pure simplicial complex stored as its facet set.
 *
 * Lower faces are enumerated on demand. Each complex carries a label counter:
 * fresh vertices are always numbered from it, so a label is never handed out
 * twice along a chain of derived complexes.
 *
 * The complex {∅} (a single empty facet, dim -1) is the unit for join and is
 * what the link of a facet evaluates to.
 */
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Validating constructor. Duplicate facets collapse.
    static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets);
    static SimplicialComplex from_facets(std::set<Simplex> facets, VertexId next_label = 0);

    /// The complex {∅}.
    static SimplicialComplex unit();

    int dim() const { return m_dim; }
    const std::set<Simplex>& facets() const { return m_facets; }
    std::size_t num_facets() const { return m_facets.size(); }
    bool is_unit() const { return m_dim == -1 && m_facets.size() == 1; }
    bool is_void() const { return m_facets.empty(); }

    std::vector<VertexId> vertices() const;
    std::size_t num_vertices() const { return vertices().size(); }
    bool has_vertex(VertexId v) const;

    /// Smallest label guaranteed fresh for this complex and all its ancestors.
    VertexId next_label() const { return m_next_label; }
    void reserve_label(VertexId v);

    bool is_facet(const Simplex& s) const { return m_facets.count(s) > 0; }
    bool has_face(const Simplex& s) const;

    /// All faces with exactly k vertices (dimension k-1).
    std::set<Simplex> faces_of_size(std::size_t k) const;

    /// Facets containing s.
    std::vector<Simplex> facets_containing(const Simplex& s) const;

    /// Faces of dimension dim-1 lying in exactly one facet.
    SimplicialComplex boundary() const;

    bool operator==(const SimplicialComplex& other) const
    {
        return m_dim == other.m_dim && m_facets == other.m_facets;
    }

private:
    int m_dim = -1;
    std::set<Simplex> m_facets;
    VertexId m_next_label = 0;
};

SimplicialComplex star(const SimplicialComplex& c, const Simplex& s);
SimplicialComplex link(const SimplicialComplex& c, const Simplex& s);
SimplicialComplex link(const SimplicialComplex& c, VertexId v);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Cone with the given apex over c (join with a point).
SimplicialComplex cone(const SimplicialComplex& c, VertexId apex);

/// Facets as a complex: the full simplex on s.
SimplicialComplex simplex_complex(const Simplex& s);

/// Boundary of the simplex s (all codim-one faces); {∅} for a vertex.
SimplicialComplex simplex_boundary(const Simplex& s);

/// Vertices of the subdivision are labelled 1.. in the order the faces are
/// enumerated (by dimension, then lexicographic).
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

FVector f_vector(const SimplicialComplex& c);
std::int64_t euler_characteristic(const SimplicialComplex& c);
std::int64_t euler_characteristic(const FVector& f);

/// Vertex graph connectivity; the empty complex and {∅} count as connected.
bool is_connected(const SimplicialComplex& c);

using VertexMap = std::map<VertexId, VertexId>;

/// A vertex bijection a -> b carrying facets onto facets, if one exists.
std::optional<VertexMap> is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex relabel(const SimplicialComplex& c, const VertexMap& map);

} // namespace pachner
