#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pachner/fvector.hpp"
#include "pachner/rational.hpp"

// Exact f-vector calculus of bistellar moves on (n-1)-spheres, i.e. on vertex
// links of n-manifolds. Throughout, `n` is the length of the link f-vector.

namespace pachner {

/// C(a, b), zero whenever b < 0, b > a or a < 0.
std::int64_t binomial(int a, int b);

/// Change of f_k under an (n-1)-dimensional bistellar i-move.
std::int64_t r_coeff(int n, int k, int i);
std::vector<std::int64_t> r_column(int n, int i);

/// f-vector after an i-move; beta(n, ., n-1-i) undoes beta(n, ., i).
FVector beta(int n, const FVector& f, int i);

/// f-vector of ∂Δ^n: (C(n+1,1), ..., C(n+1,n)).
FVector f_delta(int n);

/// floor(n/2): how many leading entries determine a sphere f-vector.
int prefix_length(int n);

/// constant + sum_j coeffs[j] * x_j
struct AffineForm
{
    Rational constant;
    std::vector<Rational> coeffs;

    Rational evaluate(const std::vector<Rational>& x) const;
    bool is_zero() const;
    bool operator==(const AffineForm&) const = default;

    /// Human-readable, variables named `<var>0`, `<var>1`, ...
    std::string str(const std::string& var = "f") const;
};

/**
 * Dehn–Sommerville relations of simplicial (n-1)-spheres: entry k expresses
 * f_k as an affine form in the prefix f_0..f_{floor(n/2)-1}. Derived from
 * h-vector symmetry h_k = h_{n-k}.
 */
std::vector<AffineForm> ds_relations(int n);

/// Throws InconsistentPrefix if the completion is not integral.
FVector ds_complete(int n, const std::vector<std::int64_t>& prefix);

/// h_0..h_n of an (n-1)-dimensional complex with f-vector f.
std::vector<std::int64_t> h_vector(const FVector& f);

bool satisfies_ds(const FVector& f);

/**
 * The jumps H_{-1}..H_n of an f-vector local formula, scaled so that
 * H_{-1} = psi(f_delta) = 1. When the recurrence and the symmetry
 * constraints can only hold with zero scale (odd n) the spectrum is
 * degenerate and all values are zero.
 */
struct HSpectrum
{
    int n = 0;
    std::vector<Rational> values;
    bool degenerate = false;

    /// i in -1..n
    const Rational& at(int i) const;
};

HSpectrum h_values(int n);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// (r_{k,i}) for 0 <= k, i < floor(n/2); lower unitriangular.
IntMatrix r_submatrix(int n);

/// Exact integer inverse of r_submatrix(n), indexed [i][k].
IntMatrix c_matrix(int n);

/// x_i = m_i - m_{n-1-i} for 0 <= i < floor(n/2).
struct MoveCountDifference
{
    int n = 0;
    std::vector<std::int64_t> x;
};

/// Throws NotASphereFVector if f breaks the Dehn–Sommerville relations.
MoveCountDifference move_counts(int n, const FVector& f);

/// x_i as affine forms in f_0..f_{floor(n/2)-1}.
std::vector<AffineForm> move_count_forms(int n);

/**
 * psi(f) = b_{-1} + sum_k b_k f_k with exact coefficients.
 * coeffs[0] is b_{-1}; coeffs[k+1] is b_k.
 */
struct LocalFormula
{
    int n = 0;
    std::vector<Rational> coeffs;

    static LocalFormula zero(int n);

    /// k in -1..n-1
    const Rational& b(int k) const;
    Rational evaluate(const FVector& f) const;
    bool is_zero() const;
    bool is_reduced() const;
    bool operator==(const LocalFormula&) const = default;

    std::string str() const;
};

LocalFormula derive_psi(int n);
LocalFormula euler_psi(int n, bool reduced = false);

/// Rewrites psi in prefix coordinates modulo the Dehn–Sommerville relations.
LocalFormula reduce(const LocalFormula& psi);

struct Proportionality
{
    enum class Kind { Lambda, BothZero, NotProportional };
    Kind kind = Kind::NotProportional;
    Rational lambda;
};

const char* to_string(Proportionality::Kind kind);

/// Compares two formulas modulo Dehn–Sommerville: a = lambda * b.
Proportionality proportionality(const LocalFormula& a, const LocalFormula& b);
Proportionality proportionality(int n);

/**
 * Coefficients g_0..g_n with sum_v psi(f(lk v)) = sum_j g_j f_j(M) on closed
 * n-manifolds: g_{k+1} = (k+2) b_k.
 */
std::vector<Rational> globalize(const LocalFormula& psi);
Rational evaluate_global(const std::vector<Rational>& global, const FVector& f);

} // namespace pachner
