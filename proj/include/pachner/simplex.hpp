#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pachner {

using VertexId = std::uint32_t;

/**
 * A simplex stored as its strictly increasing vertex labels.
 * The empty simplex (no vertices) has dimension -1.
 */
class Simplex
{
public:
    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::vector<VertexId> vertices);

    /// Throws DuplicateVertexInFacet when a label repeats.
    static Simplex checked(std::vector<VertexId> vertices);

    int dim() const { return static_cast<int>(m_vertices.size()) - 1; }
    std::size_t size() const { return m_vertices.size(); }
    bool empty() const { return m_vertices.empty(); }

    std::span<const VertexId> vertices() const { return m_vertices; }
    auto begin() const { return m_vertices.begin(); }
    auto end() const { return m_vertices.end(); }
    VertexId operator[](std::size_t i) const { return m_vertices[i]; }

    bool contains(VertexId v) const;
    bool contains(const Simplex& face) const;
    bool disjoint(const Simplex& other) const;

    Simplex without(VertexId v) const;
    Simplex with(VertexId v) const;
    Simplex unite(const Simplex& other) const;
    Simplex minus(const Simplex& other) const;

    /// Codimension-one faces, each missing one vertex, in vertex order.
    std::vector<Simplex> boundary_faces() const;

    std::string str() const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<VertexId> m_vertices;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// All k-vertex subsets of s, lexicographically ordered.
std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t k);

} // namespace pachner
