#include "pachner/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pachner/error.hpp"

namespace pachner {

namespace {

VertexId max_label(const std::set<Simplex>& facets)
{
    VertexId m = 0;
    for (const Simplex& f : facets) {
        if (!f.empty()) m = std::max(m, f[f.size() - 1]);
    }
    return m;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<VertexId>>& facets)
{
    if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets given");
    std::set<Simplex> set;
    for (const auto& f : facets) {
        if (f.empty()) throw Error(ErrorKind::EmptyInput, "empty facet");
        set.insert(Simplex::checked(f));
    }
    return from_facets(std::move(set));
}

SimplicialComplex SimplicialComplex::from_facets(std::set<Simplex> facets, VertexId next_label)
{
    SimplicialComplex c;
    if (facets.empty()) {
        c.m_next_label = next_label;
        return c;
    }
    const std::size_t size = facets.begin()->size();
    for (const Simplex& f : facets) {
        if (f.size() != size) {
            throw Error(
                ErrorKind::MixedDimension,
                "facet " + f.str() + " has " + std::to_string(f.size()) + " vertices, expected " +
                    std::to_string(size));
        }
    }
    c.m_dim = static_cast<int>(size) - 1;
    c.m_facets = std::move(facets);
    c.m_next_label = std::max(next_label, max_label(c.m_facets) + 1);
    return c;
}

SimplicialComplex SimplicialComplex::unit()
{
    SimplicialComplex c;
    c.m_facets.insert(Simplex{});
    return c;
}

std::vector<VertexId> SimplicialComplex::vertices() const
{
    std::set<VertexId> verts;
    for (const Simplex& f : m_facets) verts.insert(f.begin(), f.end());
    return {verts.begin(), verts.end()};
}

bool SimplicialComplex::has_vertex(VertexId v) const
{
    return std::any_of(m_facets.begin(), m_facets.end(), [v](const Simplex& f) {
        return f.contains(v);
    });
}

void SimplicialComplex::reserve_label(VertexId v)
{
    m_next_label = std::max(m_next_label, v + 1);
}

bool SimplicialComplex::has_face(const Simplex& s) const
{
    if (s.size() > static_cast<std::size_t>(m_dim + 1)) return false;
    if (s.size() == static_cast<std::size_t>(m_dim + 1)) return is_facet(s);
    return std::any_of(m_facets.begin(), m_facets.end(), [&s](const Simplex& f) {
        return f.contains(s);
    });
}

std::set<Simplex> SimplicialComplex::faces_of_size(std::size_t k) const
{
    std::set<Simplex> faces;
    for (const Simplex& f : m_facets) {
        for (Simplex& s : subsets_of_size(f, k)) faces.insert(std::move(s));
    }
    return faces;
}

std::vector<Simplex> SimplicialComplex::facets_containing(const Simplex& s) const
{
    std::vector<Simplex> out;
    for (const Simplex& f : m_facets) {
        if (f.contains(s)) out.push_back(f);
    }
    return out;
}

SimplicialComplex SimplicialComplex::boundary() const
{
    std::map<Simplex, int> count;
    for (const Simplex& f : m_facets) {
        for (Simplex& face : f.boundary_faces()) ++count[std::move(face)];
    }
    std::set<Simplex> faces;
    for (auto& [face, n] : count) {
        if (n == 1) faces.insert(face);
    }
    return from_facets(std::move(faces), m_next_label);
}

SimplicialComplex star(const SimplicialComplex& c, const Simplex& s)
{
    std::set<Simplex> facets;
    for (const Simplex& f : c.facets()) {
        if (f.contains(s)) facets.insert(f);
    }
    if (facets.empty()) throw Error(ErrorKind::NotAFace, s.str() + " is not a face");
    return SimplicialComplex::from_facets(std::move(facets), c.next_label());
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& s)
{
    std::set<Simplex> facets;
    for (const Simplex& f : c.facets()) {
        if (f.contains(s)) facets.insert(f.minus(s));
    }
    if (facets.empty()) throw Error(ErrorKind::NotAFace, s.str() + " is not a face");
    return SimplicialComplex::from_facets(std::move(facets), c.next_label());
}

SimplicialComplex link(const SimplicialComplex& c, VertexId v)
{
    return link(c, Simplex{v});
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const auto va = a.vertices();
    const auto vb = b.vertices();
    std::vector<VertexId> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty()) {
        throw Error(ErrorKind::VertexClash, "join operands share vertex " + std::to_string(common[0]));
    }
    std::set<Simplex> facets;
    for (const Simplex& fa : a.facets()) {
        for (const Simplex& fb : b.facets()) facets.insert(fa.unite(fb));
    }
    return SimplicialComplex::from_facets(
        std::move(facets), std::max(a.next_label(), b.next_label()));
}

SimplicialComplex cone(const SimplicialComplex& c, VertexId apex)
{
    return join(simplex_complex(Simplex{apex}), c);
}

SimplicialComplex simplex_complex(const Simplex& s)
{
    return SimplicialComplex::from_facets(std::set<Simplex>{s});
}

SimplicialComplex simplex_boundary(const Simplex& s)
{
    auto faces = s.boundary_faces();
    return SimplicialComplex::from_facets(std::set<Simplex>(faces.begin(), faces.end()));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c)
{
    std::map<Simplex, VertexId> label;
    VertexId next = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(c.dim() + 1); ++k) {
        for (const Simplex& face : c.faces_of_size(k)) label.emplace(face, next++);
    }
    std::set<Simplex> facets;
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> order(f.begin(), f.end());
        do {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (VertexId v : order) {
                prefix.push_back(v);
                chain.push_back(label.at(Simplex(prefix)));
            }
            facets.insert(Simplex(std::move(chain)));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

FVector f_vector(const SimplicialComplex& c)
{
    std::vector<std::int64_t> f;
    for (int k = 0; k <= c.dim(); ++k) {
        f.push_back(static_cast<std::int64_t>(c.faces_of_size(static_cast<std::size_t>(k) + 1).size()));
    }
    return FVector(std::move(f));
}

std::int64_t euler_characteristic(const FVector& f)
{
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * f[k];
    return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& c)
{
    return euler_characteristic(f_vector(c));
}

bool is_connected(const SimplicialComplex& c)
{
    const auto verts = c.vertices();
    if (verts.empty()) return true;
    std::unordered_map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Simplex& f : c.facets()) {
        for (std::size_t i = 1; i < f.size(); ++i) {
            parent[find(index[f[i]])] = find(index[f[0]]);
        }
    }
    const std::size_t root = find(0);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        if (find(i) != root) return false;
    }
    return true;
}

SimplicialComplex relabel(const SimplicialComplex& c, const VertexMap& map)
{
    std::set<Simplex> facets;
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> verts;
        for (VertexId v : f) {
            auto it = map.find(v);
            verts.push_back(it == map.end() ? v : it->second);
        }
        facets.insert(Simplex::checked(std::move(verts)));
    }
    return SimplicialComplex::from_facets(std::move(facets), c.next_label());
}

namespace {

struct Indexed
{
    std::vector<VertexId> labels;
    std::unordered_map<VertexId, std::size_t> index;
    std::vector<std::vector<bool>> adjacent;
    std::vector<std::vector<std::size_t>> incident_facets;
    std::vector<std::vector<std::size_t>> facets;
    std::vector<std::pair<std::size_t, std::size_t>> profile;

    explicit Indexed(const SimplicialComplex& c)
        : labels(c.vertices())
    {
        const std::size_t n = labels.size();
        for (std::size_t i = 0; i < n; ++i) index[labels[i]] = i;
        adjacent.assign(n, std::vector<bool>(n, false));
        incident_facets.resize(n);
        for (const Simplex& f : c.facets()) {
            std::vector<std::size_t> idx;
            for (VertexId v : f) idx.push_back(index[v]);
            for (std::size_t a : idx) {
                incident_facets[a].push_back(facets.size());
                for (std::size_t b : idx) {
                    if (a != b) adjacent[a][b] = true;
                }
            }
            facets.push_back(std::move(idx));
        }
        profile.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto degree = static_cast<std::size_t>(
                std::count(adjacent[i].begin(), adjacent[i].end(), true));
            profile[i] = {incident_facets[i].size(), degree};
        }
    }
};

class IsoSearch
{
public:
    IsoSearch(const Indexed& a, const SimplicialComplex& cb, const Indexed& b)
        : m_a(a)
        , m_cb(cb)
        , m_b(b)
        , m_map(a.labels.size(), kUnset)
        , m_used(b.labels.size(), false)
    {
        plan_order();
    }

    bool run() { return extend(0); }

    VertexMap result() const
    {
        VertexMap out;
        for (std::size_t i = 0; i < m_map.size(); ++i) out[m_a.labels[i]] = m_b.labels[m_map[i]];
        return out;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // Rarest degree profile first, then greedily the vertex with the most
    // already-ordered neighbours so adjacency constraints bite early.
    void plan_order()
    {
        const std::size_t n = m_a.labels.size();
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> freq;
        for (const auto& p : m_a.profile) ++freq[p];
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> placed_neighbours(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = kUnset;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best == kUnset) {
                    best = v;
                    continue;
                }
                if (placed_neighbours[v] != placed_neighbours[best]) {
                    if (placed_neighbours[v] > placed_neighbours[best]) best = v;
                } else if (freq[m_a.profile[v]] < freq[m_a.profile[best]]) {
                    best = v;
                }
            }
            placed[best] = true;
            m_order.push_back(best);
            for (std::size_t u = 0; u < n; ++u) {
                if (m_a.adjacent[best][u]) ++placed_neighbours[u];
            }
        }
    }

    bool consistent(std::size_t a, std::size_t b) const
    {
        for (std::size_t other = 0; other < m_map.size(); ++other) {
            if (m_map[other] == kUnset || other == a) continue;
            if (m_a.adjacent[a][other] != m_b.adjacent[b][m_map[other]]) return false;
        }
        for (std::size_t fi : m_a.incident_facets[a]) {
            std::vector<VertexId> image;
            bool complete = true;
            for (std::size_t v : m_a.facets[fi]) {
                const std::size_t target = v == a ? b : m_map[v];
                if (target == kUnset) {
                    complete = false;
                    break;
                }
                image.push_back(m_b.labels[target]);
            }
            if (complete && !m_cb.is_facet(Simplex(std::move(image)))) return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == m_order.size()) return true;
        const std::size_t a = m_order[depth];
        for (std::size_t b = 0; b < m_b.labels.size(); ++b) {
            if (m_used[b] || m_b.profile[b] != m_a.profile[a]) continue;
            if (!consistent(a, b)) continue;
            m_map[a] = b;
            m_used[b] = true;
            if (extend(depth + 1)) return true;
            m_map[a] = kUnset;
            m_used[b] = false;
        }
        return false;
    }

    const Indexed& m_a;
    const SimplicialComplex& m_cb;
    const Indexed& m_b;
    std::vector<std::size_t> m_map;
    std::vector<bool> m_used;
    std::vector<std::size_t> m_order;
};

} // namespace

std::optional<VertexMap> is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.dim() != b.dim() || a.num_facets() != b.num_facets()) return std::nullopt;
    Indexed ia(a);
    Indexed ib(b);
    if (ia.labels.size() != ib.labels.size()) return std::nullopt;
    auto pa = ia.profile;
    auto pb = ib.profile;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
    IsoSearch search(ia, b, ib);
    if (!search.run()) return std::nullopt;
    return search.result();
}

} // namespace pachner
