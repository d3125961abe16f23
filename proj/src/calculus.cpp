#include "pachner/calculus.hpp"

#include <sstream>

#include "pachner/error.hpp"

namespace pachner {

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        const long long num = std::stoll(text.substr(0, slash), &used);
        if (used != text.substr(0, slash).size()) throw std::invalid_argument(text);
        long long den = 1;
        if (slash != std::string::npos) {
            const std::string tail = text.substr(slash + 1);
            den = std::stoll(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(text);
        }
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    }
}

namespace {

void require_theory_dim(int n)
{
    if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "n must be at least 2, got " + std::to_string(n));
}

void require_index(int n, int idx, const char* what)
{
    if (idx < 0 || idx > n - 1) {
        throw Error(
            ErrorKind::IndexOutOfRange,
            std::string(what) + " " + std::to_string(idx) + " outside 0.." + std::to_string(n - 1));
    }
}

} // namespace

std::int64_t binomial(int a, int b)
{
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    std::int64_t result = 1;
    for (int j = 1; j <= b; ++j) result = result * (a - b + j) / j;
    return result;
}

std::int64_t r_coeff(int n, int k, int i)
{
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be positive");
    require_index(n, k, "k");
    require_index(n, i, "move index");
    return binomial(n - i, k - i) - binomial(i + 1, n - k);
}

std::vector<std::int64_t> r_column(int n, int i)
{
    std::vector<std::int64_t> col;
    for (int k = 0; k < n; ++k) col.push_back(r_coeff(n, k, i));
    return col;
}

FVector beta(int n, const FVector& f, int i)
{
    if (f.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::DimensionMismatch, "f-vector length differs from n");
    }
    const auto col = r_column(n, i);
    FVector out = f;
    for (std::size_t k = 0; k < col.size(); ++k) out[k] += col[k];
    return out;
}

FVector f_delta(int n)
{
    std::vector<std::int64_t> f;
    for (int k = 0; k < n; ++k) f.push_back(binomial(n + 1, k + 1));
    return FVector(std::move(f));
}

int prefix_length(int n)
{
    return n / 2;
}

Rational AffineForm::evaluate(const std::vector<Rational>& x) const
{
    Rational value = constant;
    for (std::size_t j = 0; j < coeffs.size(); ++j) value += coeffs[j] * x.at(j);
    return value;
}

bool AffineForm::is_zero() const
{
    if (constant != 0) return false;
    for (const Rational& c : coeffs) {
        if (c != 0) return false;
    }
    return true;
}

namespace {

// "3", "-1/5*f0 + f1 + 10" style rendering shared by formulas.
std::string render(const Rational& constant, const std::vector<Rational>& coeffs, const std::string& var)
{
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, const std::string& name) {
        if (c == 0) return;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (name.empty()) {
            os << mag.str();
        } else if (mag == 1) {
            os << name;
        } else {
            os << mag.str() << '*' << name;
        }
        first = false;
    };
    for (std::size_t j = 0; j < coeffs.size(); ++j) term(coeffs[j], var + std::to_string(j));
    term(constant, "");
    if (first) os << '0';
    return os.str();
}

AffineForm variable(std::size_t count, std::size_t j)
{
    AffineForm form{0, std::vector<Rational>(count, 0)};
    form.coeffs[j] = 1;
    return form;
}

void add_scaled(AffineForm& into, const AffineForm& from, const Rational& scale)
{
    into.constant += scale * from.constant;
    for (std::size_t j = 0; j < into.coeffs.size(); ++j) into.coeffs[j] += scale * from.coeffs[j];
}

} // namespace

std::string AffineForm::str(const std::string& var) const
{
    return render(constant, coeffs, var);
}

std::vector<AffineForm> ds_relations(int n)
{
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be positive");
    const auto m = static_cast<std::size_t>(prefix_length(n));
    // fm[j] is f_{j-1} as a form in the prefix.
    std::vector<AffineForm> fm(m + 1, AffineForm{0, std::vector<Rational>(m, 0)});
    fm[0].constant = 1;
    for (std::size_t j = 1; j <= m; ++j) fm[j] = variable(m, j - 1);

    std::vector<AffineForm> h(static_cast<std::size_t>(n) + 1, AffineForm{0, std::vector<Rational>(m, 0)});
    for (int k = 0; k <= static_cast<int>(m); ++k) {
        for (int j = 0; j <= k; ++j) {
            const int sign = (k - j) % 2 == 0 ? 1 : -1;
            add_scaled(h[static_cast<std::size_t>(k)], fm[static_cast<std::size_t>(j)], sign * binomial(n - j, k - j));
        }
    }
    for (int k = 0; k <= static_cast<int>(m); ++k) h[static_cast<std::size_t>(n - k)] = h[static_cast<std::size_t>(k)];

    std::vector<AffineForm> out;
    for (int j = 1; j <= n; ++j) {
        AffineForm fk{0, std::vector<Rational>(m, 0)};
        for (int k = 0; k <= j; ++k) add_scaled(fk, h[static_cast<std::size_t>(k)], binomial(n - k, j - k));
        out.push_back(std::move(fk));
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (!(out[k] == variable(m, k))) {
            throw Error(ErrorKind::InconsistentPrefix, "h-vector round trip failed");
        }
    }
    return out;
}

FVector ds_complete(int n, const std::vector<std::int64_t>& prefix)
{
    const auto m = static_cast<std::size_t>(prefix_length(n));
    if (prefix.size() != m) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "prefix needs " + std::to_string(m) + " entries, got " + std::to_string(prefix.size()));
    }
    std::vector<Rational> x(prefix.begin(), prefix.end());
    std::vector<std::int64_t> f;
    for (const AffineForm& form : ds_relations(n)) {
        const Rational value = form.evaluate(x);
        if (denominator(value) != 1) {
            throw Error(ErrorKind::InconsistentPrefix, "non-integral completion " + value.str());
        }
        f.push_back(static_cast<std::int64_t>(numerator(value)));
    }
    FVector out(std::move(f));
    if (!satisfies_ds(out)) throw Error(ErrorKind::InconsistentPrefix, "completion breaks h-symmetry");
    return out;
}

std::vector<std::int64_t> h_vector(const FVector& f)
{
    const int n = static_cast<int>(f.size());
    std::vector<std::int64_t> h;
    for (int k = 0; k <= n; ++k) {
        std::int64_t hk = 0;
        for (int j = 0; j <= k; ++j) {
            const int sign = (k - j) % 2 == 0 ? 1 : -1;
            hk += sign * binomial(n - j, k - j) * f.at(j - 1);
        }
        h.push_back(hk);
    }
    return h;
}

bool satisfies_ds(const FVector& f)
{
    const auto h = h_vector(f);
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k] != h[h.size() - 1 - k]) return false;
    }
    return true;
}

const Rational& HSpectrum::at(int i) const
{
    if (i < -1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "H index " + std::to_string(i));
    return values[static_cast<std::size_t>(i + 1)];
}

HSpectrum h_values(int n)
{
    require_theory_dim(n);
    HSpectrum s;
    s.n = n;
    s.values.assign(static_cast<std::size_t>(n) + 2, 0);
    auto H = [&](int i) -> Rational& { return s.values[static_cast<std::size_t>(i + 1)]; };
    H(-1) = 1;
    for (int i = 0; i < n; ++i) H(i) = -Rational(i + 1) * H(i - 1) / Rational(n - i + 1);
    H(n) = -1;

    // Every constraint is homogeneous in the scale H_{-1}; one violated
    // constraint forces the scale, and with it the whole spectrum, to zero.
    bool consistent = (1 * H(n) + (n + 1) * H(n - 1)) == 0;
    for (int i = 0; i < n; ++i) {
        consistent = consistent && H(i) + H(n - 1 - i) == 0;
        if (2 * i == n - 1) consistent = consistent && H(i) == 0;
    }
    if (!consistent) {
        s.degenerate = true;
        for (Rational& v : s.values) v = 0;
    }
    return s;
}

IntMatrix r_submatrix(int n)
{
    const int m = prefix_length(n);
    IntMatrix r(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m)));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) r[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = r_coeff(n, k, i);
    }
    return r;
}

IntMatrix c_matrix(int n)
{
    const IntMatrix r = r_submatrix(n);
    const std::size_t m = r.size();
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = k; i < m; ++i) {
            if (r[k][i] != (i == k ? 1 : 0)) {
                throw Error(ErrorKind::InconsistentPrefix, "r-submatrix is not lower unitriangular");
            }
        }
    }
    // Column by column forward substitution of r * c = I.
    IntMatrix c(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t col = 0; col < m; ++col) {
        for (std::size_t row = 0; row < m; ++row) {
            std::int64_t value = row == col ? 1 : 0;
            for (std::size_t j = 0; j < row; ++j) value -= r[row][j] * c[j][col];
            c[row][col] = value;
        }
    }
    return c;
}

MoveCountDifference move_counts(int n, const FVector& f)
{
    require_theory_dim(n);
    if (f.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::DimensionMismatch, "f-vector length differs from n");
    }
    if (!satisfies_ds(f)) {
        throw Error(ErrorKind::NotASphereFVector, f.str() + " breaks Dehn-Sommerville");
    }
    const IntMatrix r = r_submatrix(n);
    const FVector base = f_delta(n);
    MoveCountDifference out{n, {}};
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t value = f[i] - base[i];
        for (std::size_t j = 0; j < i; ++j) value -= r[i][j] * out.x[j];
        out.x.push_back(value);
    }
    for (int k = 0; k < n; ++k) {
        std::int64_t lhs = 0;
        for (std::size_t i = 0; i < out.x.size(); ++i) lhs += out.x[i] * r_coeff(n, k, static_cast<int>(i));
        const auto uk = static_cast<std::size_t>(k);
        if (lhs != f[uk] - base[uk]) {
            throw Error(ErrorKind::NotASphereFVector, "full move-count system has no solution");
        }
    }
    return out;
}

std::vector<AffineForm> move_count_forms(int n)
{
    require_theory_dim(n);
    const IntMatrix c = c_matrix(n);
    const FVector base = f_delta(n);
    std::vector<AffineForm> forms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        AffineForm x{0, std::vector<Rational>(c.size(), 0)};
        for (std::size_t k = 0; k < c.size(); ++k) {
            x.coeffs[k] = c[i][k];
            x.constant -= c[i][k] * base[k];
        }
        forms.push_back(std::move(x));
    }
    return forms;
}

LocalFormula LocalFormula::zero(int n)
{
    return {n, std::vector<Rational>(static_cast<std::size_t>(n) + 1, 0)};
}

const Rational& LocalFormula::b(int k) const
{
    if (k < -1 || k >= n) throw Error(ErrorKind::IndexOutOfRange, "b index " + std::to_string(k));
    return coeffs[static_cast<std::size_t>(k + 1)];
}

Rational LocalFormula::evaluate(const FVector& f) const
{
    if (f.size() != static_cast<std::size_t>(n)) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "formula for n=" + std::to_string(n) + " applied to f-vector of length " +
                std::to_string(f.size()));
    }
    Rational value = coeffs[0];
    for (std::size_t k = 0; k < f.size(); ++k) value += coeffs[k + 1] * f[k];
    return value;
}

bool LocalFormula::is_zero() const
{
    for (const Rational& c : coeffs) {
        if (c != 0) return false;
    }
    return true;
}

bool LocalFormula::is_reduced() const
{
    for (int k = prefix_length(n); k < n; ++k) {
        if (b(k) != 0) return false;
    }
    return true;
}

std::string LocalFormula::str() const
{
    return render(coeffs[0], std::vector<Rational>(coeffs.begin() + 1, coeffs.end()), "f");
}

LocalFormula derive_psi(int n)
{
    const HSpectrum spectrum = h_values(n);
    LocalFormula psi = LocalFormula::zero(n);
    if (spectrum.degenerate) return psi;
    // psi = psi(f_delta) + sum_i H_i x_i, x_i the move-count difference forms.
    psi.coeffs[0] = 1;
    const auto forms = move_count_forms(n);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const Rational& h = spectrum.at(static_cast<int>(i));
        psi.coeffs[0] += h * forms[i].constant;
        for (std::size_t k = 0; k < forms[i].coeffs.size(); ++k) psi.coeffs[k + 1] += h * forms[i].coeffs[k];
    }
    return psi;
}

LocalFormula euler_psi(int n, bool reduced)
{
    require_theory_dim(n);
    LocalFormula psi = LocalFormula::zero(n);
    psi.coeffs[0] = 1;
    for (int k = 0; k < n; ++k) psi.coeffs[static_cast<std::size_t>(k + 1)] = Rational(k % 2 == 0 ? -1 : 1, k + 2);
    return reduced ? reduce(psi) : psi;
}

LocalFormula reduce(const LocalFormula& psi)
{
    const auto relations = ds_relations(psi.n);
    LocalFormula out = LocalFormula::zero(psi.n);
    out.coeffs[0] = psi.coeffs[0];
    for (int k = 0; k < psi.n; ++k) {
        const Rational& bk = psi.b(k);
        const AffineForm& fk = relations[static_cast<std::size_t>(k)];
        out.coeffs[0] += bk * fk.constant;
        for (std::size_t j = 0; j < fk.coeffs.size(); ++j) out.coeffs[j + 1] += bk * fk.coeffs[j];
    }
    return out;
}

const char* to_string(Proportionality::Kind kind)
{
    switch (kind) {
    case Proportionality::Kind::Lambda: return "lambda";
    case Proportionality::Kind::BothZero: return "both_zero";
    case Proportionality::Kind::NotProportional: return "not_proportional";
    }
    return "not_proportional";
}

Proportionality proportionality(const LocalFormula& a, const LocalFormula& b)
{
    if (a.n != b.n) throw Error(ErrorKind::DimensionMismatch, "formulas for different n");
    const LocalFormula ra = reduce(a);
    const LocalFormula rb = reduce(b);
    if (ra.is_zero() && rb.is_zero()) return {Proportionality::Kind::BothZero, 0};
    if (ra.is_zero() || rb.is_zero()) return {Proportionality::Kind::NotProportional, 0};
    Rational lambda;
    for (std::size_t j = 0; j < rb.coeffs.size(); ++j) {
        if (rb.coeffs[j] != 0) {
            lambda = ra.coeffs[j] / rb.coeffs[j];
            break;
        }
    }
    for (std::size_t j = 0; j < rb.coeffs.size(); ++j) {
        if (ra.coeffs[j] != lambda * rb.coeffs[j]) return {Proportionality::Kind::NotProportional, 0};
    }
    return {Proportionality::Kind::Lambda, lambda};
}

Proportionality proportionality(int n)
{
    return proportionality(derive_psi(n), euler_psi(n));
}

std::vector<Rational> globalize(const LocalFormula& psi)
{
    std::vector<Rational> global(static_cast<std::size_t>(psi.n) + 1, 0);
    for (int k = -1; k < psi.n; ++k) global[static_cast<std::size_t>(k + 1)] = psi.b(k) * (k + 2);
    return global;
}

Rational evaluate_global(const std::vector<Rational>& global, const FVector& f)
{
    if (f.size() != global.size()) {
        throw Error(ErrorKind::DimensionMismatch, "global form and f-vector lengths differ");
    }
    Rational value = 0;
    for (std::size_t j = 0; j < f.size(); ++j) value += global[j] * f[j];
    return value;
}

} // namespace pachner
