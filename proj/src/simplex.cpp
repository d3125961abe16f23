#include "pachner/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pachner/error.hpp"
#include "pachner/fvector.hpp"

namespace pachner {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices))
{}

Simplex::Simplex(std::vector<VertexId> vertices)
    : m_vertices(std::move(vertices))
{
    std::sort(m_vertices.begin(), m_vertices.end());
    m_vertices.erase(std::unique(m_vertices.begin(), m_vertices.end()), m_vertices.end());
}

Simplex Simplex::checked(std::vector<VertexId> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw Error(ErrorKind::DuplicateVertexInFacet, "repeated vertex in facet");
    }
    return Simplex(std::move(vertices));
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(m_vertices.begin(), m_vertices.end(), v);
}

bool Simplex::contains(const Simplex& face) const
{
    return std::includes(m_vertices.begin(), m_vertices.end(), face.begin(), face.end());
}

bool Simplex::disjoint(const Simplex& other) const
{
    auto a = m_vertices.begin();
    auto b = other.m_vertices.begin();
    while (a != m_vertices.end() && b != other.m_vertices.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a;
        else ++b;
    }
    return true;
}

Simplex Simplex::without(VertexId v) const
{
    Simplex out;
    out.m_vertices.reserve(m_vertices.size());
    for (VertexId u : m_vertices) {
        if (u != v) out.m_vertices.push_back(u);
    }
    return out;
}

Simplex Simplex::with(VertexId v) const
{
    Simplex out = *this;
    auto it = std::lower_bound(out.m_vertices.begin(), out.m_vertices.end(), v);
    if (it == out.m_vertices.end() || *it != v) out.m_vertices.insert(it, v);
    return out;
}

Simplex Simplex::unite(const Simplex& other) const
{
    Simplex out;
    std::set_union(
        m_vertices.begin(), m_vertices.end(), other.begin(), other.end(),
        std::back_inserter(out.m_vertices));
    return out;
}

Simplex Simplex::minus(const Simplex& other) const
{
    Simplex out;
    std::set_difference(
        m_vertices.begin(), m_vertices.end(), other.begin(), other.end(),
        std::back_inserter(out.m_vertices));
    return out;
}

std::vector<Simplex> Simplex::boundary_faces() const
{
    std::vector<Simplex> faces;
    faces.reserve(m_vertices.size());
    for (VertexId v : m_vertices) faces.push_back(without(v));
    return faces;
}

std::string Simplex::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s)
{
    os << '{';
    bool first = true;
    for (VertexId v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

std::vector<Simplex> subsets_of_size(const Simplex& s, std::size_t k)
{
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<VertexId> verts;
        verts.reserve(k);
        for (std::size_t i : idx) verts.push_back(s[i]);
        out.emplace_back(std::move(verts));
        // advance to the next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::int64_t FVector::at(int k) const
{
    if (k == -1) return 1;
    if (k < 0 || static_cast<std::size_t>(k) >= m_entries.size()) {
        throw Error(ErrorKind::IndexOutOfRange, "f-vector index " + std::to_string(k));
    }
    return m_entries[static_cast<std::size_t>(k)];
}

std::string FVector::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FVector& f)
{
    os << '(';
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) os << ',';
        os << f[k];
    }
    return os << ')';
}

} // namespace pachner
