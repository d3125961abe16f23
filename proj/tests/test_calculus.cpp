#include <doctest.h>

#include "helpers.hpp"
#include "pachner/builtin.hpp"
#include "pachner/calculus.hpp"
#include "pachner/error.hpp"
#include "pachner/walk.hpp"

using namespace pachner;
using testing::fv;
using testing::raw;

namespace {

LocalFormula formula(int n, std::initializer_list<Rational> b)
{
    LocalFormula psi = LocalFormula::zero(n);
    std::size_t j = 0;
    for (const Rational& c : b) psi.coeffs[j++] = c;
    return psi;
}

std::vector<std::int64_t> oracle_delta(const SimplicialComplex& before, const SimplicialComplex& after)
{
    auto a = oracle::f_vector(raw(before));
    auto b = oracle::f_vector(raw(after));
    std::vector<std::int64_t> d;
    for (std::size_t k = 0; k < b.size(); ++k) d.push_back(b[k] - a[k]);
    return d;
}

} // namespace

TEST_CASE("r coefficients")
{
    // 0-move on ∂Δ^3 inserting vertex 5 into {1,2,3}
    const auto s2 = builtin_complex("boundary_simplex", 3);
    const auto after = apply_move(s2, {2, 0, Simplex{1, 2, 3}, Simplex{5}});
    CHECK(oracle_delta(s2, after) == std::vector<std::int64_t>{1, 3, 2});
    CHECK(r_coeff(3, 1, 0) == 3);
    CHECK(r_column(3, 0) == std::vector<std::int64_t>{1, 3, 2});
    for (int k = 0; k < 3; ++k) CHECK(r_coeff(3, k, 1) == 0);

    // 2->3 move on a stellar subdivision of ∂Δ^4 adds one tetrahedron
    const auto s3 = builtin_complex("boundary_simplex", 4);
    const auto sub = apply_move(s3, enumerate_moves(s3, 0).front());
    const auto one_moves = enumerate_moves(sub, 1);
    REQUIRE_FALSE(one_moves.empty());
    const auto d = oracle_delta(sub, apply_move(sub, one_moves.front()));
    CHECK(d[3] == 1);
    CHECK(r_coeff(4, 3, 1) == 1);
    CHECK(r_column(4, 1) == d);

    CHECK_THROWS_AS(r_coeff(3, 3, 0), Error);
    CHECK_THROWS_AS(r_coeff(3, 0, -1), Error);
}

TEST_CASE("antisymmetry and middle vanishing for n up to 8")
{
    for (int n = 2; n <= 8; ++n) {
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                CHECK(r_coeff(n, k, n - 1 - i) == -r_coeff(n, k, i));
                if (2 * i == n - 1) CHECK(r_coeff(n, k, i) == 0);
            }
        }
    }
}

TEST_CASE("beta")
{
    CHECK(beta(3, fv({4, 6, 4}), 0) == fv({5, 9, 6}));
    CHECK(beta(3, fv({11, 27, 18}), 1) == fv({11, 27, 18}));
    for (int n = 2; n <= 8; ++n) {
        const FVector f = f_delta(n);
        for (int i = 0; i < n; ++i) CHECK(beta(n, beta(n, f, i), n - 1 - i) == f);
    }
    CHECK_THROWS_AS(beta(3, fv({4, 6}), 0), Error);
    CHECK_THROWS_AS(beta(3, fv({4, 6, 4}), 3), Error);
}

TEST_CASE("f_delta matches the boundary simplex")
{
    CHECK(f_delta(2) == fv({3, 3}));
    CHECK(f_delta(4) == fv({5, 10, 10, 5}));
    for (int n = 2; n <= 6; ++n) CHECK(f_delta(n).entries() == oracle::f_vector(raw(builtin_complex("boundary_simplex", n))));
}

TEST_CASE("Dehn-Sommerville completion")
{
    CHECK(ds_complete(4, {5, 10}) == fv({5, 10, 10, 5}));
    CHECK(ds_complete(4, {8, 24}).entries() == oracle::f_vector(raw(builtin_complex("cross_polytope_boundary", 4))));
    CHECK(ds_complete(2, {6}) == fv({6, 6}));
    CHECK_THROWS_AS(ds_complete(4, {5}), Error);

    // n = 4 relations as linear forms: f_2 = 2 f_3 and f_3 = f_1 - f_0
    const auto rel = ds_relations(4);
    CHECK(rel[3] == AffineForm{0, {-1, 1}});
    CHECK(rel[2] == AffineForm{0, {-2, 2}});

    // n = 3: f_1 = 3 f_0 - 6, f_2 = 2 f_0 - 4
    const auto rel3 = ds_relations(3);
    CHECK(rel3[1] == AffineForm{-6, {3}});
    CHECK(rel3[2] == AffineForm{-4, {2}});
}

TEST_CASE("completion of a prefix is the identity on sphere f-vectors")
{
    std::vector<SimplicialComplex> spheres = {
        builtin_complex("barycentric_boundary_simplex", 3),
        builtin_complex("barycentric_boundary_simplex", 4),
    };
    for (int n = 2; n <= 7; ++n) {
        spheres.push_back(builtin_complex("boundary_simplex", n));
        spheres.push_back(builtin_complex("cross_polytope_boundary", n));
    }
    spheres.push_back(random_walk(builtin_complex("boundary_simplex", 4), {60, 3, {}}).complex);
    spheres.push_back(random_walk(builtin_complex("boundary_simplex", 5), {40, 4, {}}).complex);
    for (const auto& s : spheres) {
        const FVector f = f_vector(s);
        const int n = static_cast<int>(f.size());
        std::vector<std::int64_t> prefix(f.entries().begin(), f.entries().begin() + prefix_length(n));
        CHECK(satisfies_ds(f));
        CHECK(ds_complete(n, prefix) == f);
    }
    CHECK_FALSE(satisfies_ds(fv({7, 21, 14})));
}

TEST_CASE("H spectrum")
{
    const auto h4 = h_values(4);
    CHECK_FALSE(h4.degenerate);
    CHECK(h4.at(-1) == 1);
    CHECK(h4.at(0) == Rational(-1, 5));
    CHECK(h4.at(1) == Rational(1, 10));
    CHECK(h4.at(2) == Rational(-1, 10));
    CHECK(h4.at(3) == Rational(1, 5));
    CHECK(h4.at(4) == -1);

    const auto h2 = h_values(2);
    CHECK_FALSE(h2.degenerate);
    CHECK(h2.values == std::vector<Rational>{1, Rational(-1, 3), Rational(1, 3), -1});

    const auto h3 = h_values(3);
    CHECK(h3.degenerate);
    for (const auto& v : h3.values) CHECK(v == 0);

    for (int n = 2; n <= 8; ++n) {
        const auto h = h_values(n);
        CHECK(h.degenerate == (n % 2 == 1));
        for (int i = 0; i <= n; ++i) CHECK((n - i + 1) * h.at(i) + (i + 1) * h.at(i - 1) == 0);
        for (int i = 0; i < n; ++i) {
            CHECK(h.at(i) == -h.at(n - 1 - i));
            if (2 * i == n - 1) CHECK(h.at(i) == 0);
        }
    }
}

TEST_CASE("unitriangular move-count system")
{
    for (int n = 2; n <= 8; ++n) {
        const auto r = r_submatrix(n);
        const auto c = c_matrix(n);
        const std::size_t m = r.size();
        CHECK(m == static_cast<std::size_t>(n / 2));
        for (std::size_t k = 0; k < m; ++k) {
            CHECK(r[k][k] == 1);
            for (std::size_t i = k + 1; i < m; ++i) CHECK(r[k][i] == 0);
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                std::int64_t sum = 0;
                for (std::size_t k = 0; k < m; ++k) sum += c[i][k] * r[k][j];
                CHECK(sum == (i == j ? 1 : 0));
            }
        }
    }

    CHECK(move_counts(4, fv({5, 10, 10, 5})).x == std::vector<std::int64_t>{0, 0});
    CHECK(move_counts(4, fv({8, 24, 32, 16})).x == std::vector<std::int64_t>{3, 2});
    CHECK(move_counts(2, fv({6, 6})).x == std::vector<std::int64_t>{3});

    const auto forms = move_count_forms(4);
    CHECK(forms[0] == AffineForm{-5, {1, 0}});
    CHECK(forms[1] == AffineForm{10, {-4, 1}});
    CHECK(forms[0].str() == "f0 - 5");
    CHECK(forms[1].str() == "-4*f0 + f1 + 10");

    CHECK_THROWS_AS(move_counts(2, fv({6, 7})), Error);
    try {
        move_counts(3, fv({7, 21, 14}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASphereFVector);
    }
}

TEST_CASE("derived local formula")
{
    CHECK(derive_psi(4) == formula(4, {3, Rational(-3, 5), Rational(1, 10), 0, 0}));
    CHECK(derive_psi(2) == formula(2, {2, Rational(-1, 3), 0}));
    CHECK(derive_psi(3).is_zero());
    for (int n = 2; n <= 8; ++n) {
        const auto psi = derive_psi(n);
        CHECK(psi.is_reduced());
        CHECK(psi.evaluate(f_delta(n)) == (n % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("derived formula changes by H_i under every i-move")
{
    for (int n = 2; n <= 8; ++n) {
        const auto psi = derive_psi(n);
        const auto h = h_values(n);
        for (int i = 0; i < n; ++i) {
            Rational slope = 0;
            for (int k = 0; k < n; ++k) slope += psi.b(k) * r_coeff(n, k, i);
            CHECK(slope == h.at(i));
        }
    }
}

TEST_CASE("derived formula agrees with move counting along walks")
{
    // Independent route: psi(L) = 1 + sum_i m_i H_i with H_i = (-1)^{i+1} / C(n+1, i+1),
    // counting the moves of a walk that starts at ∂Δ^n.
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const auto walk = random_walk(builtin_complex("boundary_simplex", n), {40, seed, {}});
            Rational expected = n % 2 == 0 ? 1 : 0;
            if (n % 2 == 0) {
                for (const auto& mv : walk.log.moves) {
                    expected += Rational(mv.i % 2 == 0 ? -1 : 1, oracle::binomial(n + 1, mv.i + 1));
                }
            }
            CHECK(derive_psi(n).evaluate(f_vector(walk.complex)) == expected);
        }
    }
}

TEST_CASE("Euler local formula")
{
    CHECK(euler_psi(4) == formula(4, {1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4), Rational(1, 5)}));
    CHECK(euler_psi(4, true) == formula(4, {1, Rational(-1, 5), Rational(1, 30), 0, 0}));
    CHECK(euler_psi(3, true).is_zero());
    // reduction does not change values on sphere f-vectors
    for (int n = 2; n <= 8; ++n) {
        const FVector f = f_vector(builtin_complex("cross_polytope_boundary", n));
        CHECK(euler_psi(n).evaluate(f) == euler_psi(n, true).evaluate(f));
    }
}

TEST_CASE("proportionality to the Euler formula")
{
    const auto p4 = proportionality(4);
    CHECK(p4.kind == Proportionality::Kind::Lambda);
    CHECK(p4.lambda == 3);
    const auto p2 = proportionality(2);
    CHECK(p2.kind == Proportionality::Kind::Lambda);
    CHECK(p2.lambda == 2);
    CHECK(proportionality(5).kind == Proportionality::Kind::BothZero);

    for (int n = 2; n <= 8; ++n) {
        const auto p = proportionality(n);
        if (n % 2 == 0) {
            REQUIRE(p.kind == Proportionality::Kind::Lambda);
            // normalization psi(f_delta) = 1 forces lambda * psi_chi(f_delta) = 1
            CHECK(p.lambda * euler_psi(n).evaluate(f_delta(n)) == 1);
        } else {
            CHECK(p.kind == Proportionality::Kind::BothZero);
        }
    }

    CHECK(proportionality(formula(4, {0, 1, 0, 0, 0}), euler_psi(4)).kind == Proportionality::Kind::NotProportional);
}

TEST_CASE("globalized invariant")
{
    const auto g4 = globalize(derive_psi(4));
    CHECK(g4 == std::vector<Rational>{3, Rational(-6, 5), Rational(3, 10), 0, 0});
    CHECK(evaluate_global(g4, f_vector(builtin_complex("boundary_simplex", 5))) == 6);

    const auto g2 = globalize(derive_psi(2));
    CHECK(g2 == std::vector<Rational>{2, Rational(-2, 3), 0});
    CHECK(evaluate_global(g2, f_vector(builtin_complex("torus7"))) == 0);
    CHECK(evaluate_global(g2, f_vector(builtin_complex("boundary_simplex", 3))) == 4);
}

TEST_CASE("formula rendering and parsing")
{
    CHECK(derive_psi(4).str() == "-3/5*f0 + 1/10*f1 + 3");
    CHECK(LocalFormula::zero(3).str() == "0");
    CHECK(parse_rational("-3/9") == Rational(-1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}
