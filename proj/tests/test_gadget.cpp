#include <doctest.h>

#include "corpus.hpp"
#include "helpers.hpp"
#include "pachner/builtin.hpp"
#include "pachner/error.hpp"
#include "pachner/gadget.hpp"

using namespace pachner;
using testing::fv;

namespace {

std::vector<std::int64_t> plus(const FVector& f, const std::vector<std::int64_t>& a)
{
    std::vector<std::int64_t> out = f.entries();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[k];
    return out;
}

} // namespace

TEST_CASE("gadget 2-cell verifies")
{
    const auto k = gadget_2();
    const auto report = verify_gadget(k);
    for (const auto& f : report.failures) MESSAGE(f);
    CHECK(report.pass);
    CHECK(k.designated_moves.size() == 2);
    CHECK(is_isomorphic(k.cell.boundary(), builtin_complex("boundary_simplex", 2)));
    CHECK(k.cell.boundary().num_vertices() == 3);
    CHECK(euler_characteristic(k.cell) == 1);
}

TEST_CASE("designated moves leave the other boundary stars alone")
{
    const auto k = gadget_2();
    for (const auto& mv : k.designated_moves) {
        const auto after = apply_move(k.cell, mv);
        for (VertexId u : {VertexId{2}, VertexId{3}}) {
            CHECK(star(k.cell, Simplex{u}).facets() == star(after, Simplex{u}).facets());
        }
        CHECK_FALSE(star(k.cell, Simplex{k.base}) == star(after, Simplex{k.base}));
    }
}

TEST_CASE("search finds designated moves of the same kind")
{
    const auto k = gadget_2();
    const auto found = make_gadget(k.cell, k.base);
    CHECK(found.boundary_vertices == k.boundary_vertices);
    CHECK(found.designated_moves.size() == 2);
    CHECK(verify_gadget(found).pass);
}

TEST_CASE("cells that are not gadgets fail")
{
    const auto single = make_gadget(simplex_complex(Simplex{1, 2, 3}), 1);
    const auto r1 = verify_gadget(single);
    CHECK_FALSE(r1.pass);
    CHECK_FALSE(r1.failures.empty());

    auto moved = gadget_2();
    moved.base = 2;
    const auto r2 = verify_gadget(moved);
    CHECK_FALSE(r2.pass);

    auto sphere = make_gadget(builtin_complex("boundary_simplex", 3), 1);
    CHECK_FALSE(verify_gadget(sphere).pass);
}

TEST_CASE("a-vector")
{
    // base link is a path with 5 interior vertices
    const auto k = gadget_2();
    CHECK(f_vector(link(k.cell, k.base)) == fv({7, 6}));
    const auto a = a_vector(k);
    CHECK(a == std::vector<std::int64_t>{5, 5});
    CHECK(a[0] >= 1);
}

TEST_CASE("implanting into a cone adds the a-vector to the apex link")
{
    const auto k = gadget_2();
    const auto a = a_vector(k);
    std::vector<SimplicialComplex> links = {
        builtin_complex("boundary_simplex", 2),
        link(builtin_complex("torus7"), VertexId{1}),
        link(builtin_complex("cross_polytope_boundary", 3), VertexId{1}),
    };
    for (const auto& l : links) {
        const VertexId apex = l.next_label();
        const auto u = cone(l, apex);
        const auto st = star(u, Simplex{apex});
        const Simplex facet = *st.facets().begin();
        const auto implanted = implant_gadget(u, facet, apex, k);
        CHECK(f_vector(link(implanted.complex, apex)).entries() == plus(f_vector(l), a));
    }
}

TEST_CASE("implanting into the tetrahedron boundary")
{
    const auto k = gadget_2();
    const auto s2 = builtin_complex("boundary_simplex", 3);
    const auto before = f_vector(link(s2, VertexId{1}));
    const auto implanted = implant_gadget(s2, Simplex{1, 2, 3}, 1, k);
    const auto& m = implanted.complex;
    CHECK(euler_characteristic(m) == 2);
    CHECK(verify_closed_manifold(m).verdict == Verdict::Yes);
    CHECK(f_vector(link(m, VertexId{1})).entries() == plus(before, a_vector(k)));
    CHECK(f_vector(link(m, VertexId{4})) == f_vector(link(s2, VertexId{4})));
    CHECK(star(m, Simplex{4}) == star(s2, Simplex{4}));

    // designated moves carried into the sphere only touch the base among old vertices
    for (const auto& mv : k.designated_moves) {
        const auto moved = transport_move(mv, implanted);
        REQUIRE(is_valid_move(m, moved));
        const auto after = apply_move(m, moved);
        for (VertexId u : {VertexId{2}, VertexId{3}, VertexId{4}}) {
            CHECK(star(m, Simplex{u}) == star(after, Simplex{u}));
        }
        CHECK(verify_closed_manifold(after).verdict == Verdict::Yes);
    }
}

TEST_CASE("implants at vertices sharing no facet act independently")
{
    const auto k = gadget_2();
    const auto a = a_vector(k);
    const auto torus = builtin_complex("torus7");
    // vertex 1 in {1,2,4}; vertex 6 in a facet avoiding 1, 2 and 4
    const Simplex f1{1, 2, 4};
    Simplex f6;
    const auto st6 = star(torus, Simplex{6});
    for (const auto& f : st6.facets()) {
        if (f.disjoint(f1)) {
            f6 = f;
            break;
        }
    }
    REQUIRE_FALSE(f6.empty());
    const auto first = implant_gadget(torus, f1, 1, k);
    const auto second = implant_gadget(first.complex, f6, 6, k);
    CHECK(f_vector(link(second.complex, VertexId{1})).entries() == plus(f_vector(link(torus, VertexId{1})), a));
    CHECK(f_vector(link(second.complex, VertexId{6})).entries() == plus(f_vector(link(torus, VertexId{6})), a));
    CHECK(verify_closed_manifold(second.complex).verdict == Verdict::Yes);
    CHECK(euler_characteristic(second.complex) == 0);
}

TEST_CASE("implant errors")
{
    const auto k = gadget_2();
    const auto s2 = builtin_complex("boundary_simplex", 3);
    auto kind = [&](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    CHECK(kind([&] { implant_gadget(s2, Simplex{1, 2, 5}, 1, k); }) == ErrorKind::NotAFacet);
    CHECK(kind([&] { implant_gadget(s2, Simplex{1, 2, 3}, 4, k); }) == ErrorKind::BaseNotInFacet);
    CHECK(kind([&] { implant_gadget(builtin_complex("boundary_simplex", 4), Simplex{1, 2, 3, 4}, 1, k); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("implanting keeps every corpus surface a closed manifold")
{
    const auto k = gadget_2();
    const auto a = a_vector(k);
    for (const auto& m : testing::manifold_corpus(2)) {
        const Simplex facet = *m.facets().begin();
        const VertexId v = facet[0];
        const auto implanted = implant_gadget(m, facet, v, k);
        CHECK(verify_closed_manifold(implanted.complex).verdict == Verdict::Yes);
        CHECK(euler_characteristic(implanted.complex) == euler_characteristic(m));
        CHECK(f_vector(link(implanted.complex, v)).entries() == plus(f_vector(link(m, v)), a));
        for (VertexId u : m.vertices()) {
            if (!facet.contains(u)) CHECK(star(m, Simplex{u}) == star(implanted.complex, Simplex{u}));
        }
    }
}
