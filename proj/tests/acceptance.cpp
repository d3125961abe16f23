// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "pachner/builtin.hpp"
#include "pachner/calculus.hpp"
#include "pachner/gadget.hpp"
#include "pachner/invariant.hpp"
#include "pachner/recognition.hpp"

using namespace pachner;

namespace {

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

struct Criterion
{
    int id;
    std::string title;
    double limit_seconds;  // 0 means untimed
    std::function<void(Outcome&)> run;
};

AffineForm form(Rational constant, std::vector<Rational> coeffs)
{
    return AffineForm{std::move(constant), std::move(coeffs)};
}

LocalFormula formula(int n, std::vector<Rational> coeffs)
{
    auto psi = LocalFormula::zero(n);
    psi.coeffs = std::move(coeffs);
    return psi;
}

void derive_four(Outcome& o)
{
    const auto h = h_values(4);
    o.require(!h.degenerate, "H spectrum degenerate");
    o.require(h.at(-1) == 1, "H_-1 = 1");
    o.require(h.at(0) == Rational(-1, 5), "H_0 = -1/5");
    o.require(h.at(1) == Rational(1, 10), "H_1 = 1/10");

    const auto counts = move_count_forms(4);
    o.require(counts.size() == 2, "two move-count differences");
    if (counts.size() == 2) {
        o.require(counts[0] == form(-5, {1, 0}), "m0-m3 = f0-5, got " + counts[0].str());
        o.require(counts[1] == form(10, {-4, 1}), "m1-m2 = f1-4f0+10, got " + counts[1].str());
    }

    const auto psi = derive_psi(4);
    const auto expected = formula(4, {3, Rational(-3, 5), Rational(1, 10), 0, 0});
    o.require(reduce(psi) == expected, "psi = 3(1 - f0/5 + f1/30), got " + reduce(psi).str());

    const auto p = proportionality(4);
    o.require(p.kind == Proportionality::Kind::Lambda && p.lambda == 3, "lambda = 3");
    o.detail << "psi = " << reduce(psi).str() << ", lambda = " << to_string(p.lambda);
}

void ds_anchors(Outcome& o)
{
    const auto f = ds_complete(4, {5, 10});
    o.require(f.entries() == std::vector<std::int64_t>{5, 10, 10, 5}, "completion of (5,10) is " + f.str());

    const auto rel = ds_relations(4);
    o.require(rel.size() == 4, "four relations");
    if (rel.size() == 4) {
        o.require(rel[3] == form(0, {-1, 1}), "f3 = f1 - f0, got " + rel[3].str());
        auto twice = rel[3];
        for (auto& c : twice.coeffs) c *= 2;
        twice.constant *= 2;
        o.require(rel[2] == twice, "f2 = 2 f3, got " + rel[2].str());
    }
    o.detail << "f = " << f.str();
}

void move_delta(Outcome& o)
{
    std::size_t cases = 0;
    for (int dim : {2, 3}) {
        for (const auto& c : testing::manifold_corpus(dim)) {
            for (const auto& mv : enumerate_all_moves(c)) {
                const auto delta = f_delta_of(c, apply_move(c, mv));
                if (delta != r_column(dim + 1, mv.i)) {
                    o.require(false, "delta mismatch for " + mv.str());
                    return;
                }
                ++cases;
            }
        }
    }
    std::size_t table = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                o.require(r_coeff(n, k, n - 1 - i) == -r_coeff(n, k, i), "antisymmetry");
                if (2 * i == n - 1) o.require(r_coeff(n, k, i) == 0, "middle column vanishes");
                ++table;
            }
        }
    }
    o.require(cases >= 200, "at least 200 move cases");
    o.detail << cases << " moves, " << table << " coefficient checks";
}

void induced_links(Outcome& o)
{
    std::size_t links = 0, zero_moves = 0;
    for (int dim : {2, 3}) {
        for (const auto& c : testing::manifold_corpus(dim)) {
            for (const auto& mv : enumerate_all_moves(c)) {
                const auto after = apply_move(c, mv);
                const auto induced = induced_link_moves(c, mv);
                if (mv.i == 0) ++zero_moves;
                for (const auto& [v, lm] : induced.moves) {
                    const auto old_link = link(c, v);
                    if (!is_valid_move(old_link, lm) || apply_move(old_link, lm).facets() != link(after, v).facets()) {
                        o.require(false, "link of " + std::to_string(v) + " under " + mv.str());
                        return;
                    }
                    ++links;
                }
                if (induced.created) {
                    o.require(
                        link(after, *induced.created).facets() == simplex_boundary(mv.sigma).facets(),
                        "new vertex link under " + mv.str());
                }
                for (VertexId v : c.vertices()) {
                    if (mv.sigma.contains(v) || mv.tau.contains(v)) continue;
                    if (!(link(c, v) == link(after, v))) {
                        o.require(false, "untouched link changed under " + mv.str());
                        return;
                    }
                }
            }
        }
    }
    o.require(zero_moves > 0, "0-moves covered");
    o.detail << links << " link checks, " << zero_moves << " 0-moves";
}

void invariance(Outcome& o)
{
    struct Case
    {
        std::string name;
        int n;
        Rational expected;
    };
    const std::vector<Case> cases = {
        {"boundary_simplex", 3, 4},
        {"torus7", 0, 0},
        {"rp2_6", 0, 2},
        {"boundary_simplex", 4, 0},
    };
    for (const auto& c : cases) {
        const auto m = builtin_complex(c.name, c.n);
        const auto report = invariance_report(m, derive_psi(m.dim()), WalkConfig{500, 2024, {}});
        const std::string label = c.n ? c.name + ":" + std::to_string(c.n) : c.name;
        o.require(report.invariant(), label + " has a witness");
        o.require(report.start_value == c.expected, label + " value " + to_string(report.start_value));
        const auto p = proportionality(m.dim());
        const Rational lambda_chi =
            p.kind == Proportionality::Kind::Lambda ? p.lambda * euler_characteristic(m) : Rational(0);
        o.require(report.start_value == lambda_chi, label + " value is lambda*chi");
        o.detail << label << "=" << to_string(report.start_value) << " ";
    }
    const auto s2 = builtin_complex("boundary_simplex", 3);
    const auto w = find_witness(s2, formula(2, {0, 1, 0}));
    o.require(w.has_value(), "psi = f0 has a witness");
    if (w) {
        const auto first = enumerate_moves(s2, 0).front();
        o.require(w->move == first, "witness is the first enumerated 0-move");
        o.require(w->after - w->before == 6, "witness changes the value by 6");
        o.detail << "witness " << w->move.str() << " " << to_string(w->before) << "->" << to_string(w->after);
    }
}

void sweep(Outcome& o)
{
    for (int n = 2; n <= 8; ++n) {
        const auto p = proportionality(n);
        o.require(p.kind != Proportionality::Kind::NotProportional, "n = " + std::to_string(n) + " not proportional");
        if (n % 2 == 0) {
            o.require(p.kind == Proportionality::Kind::Lambda && p.lambda != 0, "even n gives nonzero lambda");
            o.detail << "n=" << n << ":" << to_string(p.lambda) << " ";
        } else {
            o.require(p.kind == Proportionality::Kind::BothZero, "odd n gives both zero");
            o.detail << "n=" << n << ":0 ";
        }
    }
    o.require(proportionality(2).lambda == 2, "lambda(2) = 2");
    o.require(proportionality(4).lambda == 3, "lambda(4) = 3");
}

void gadget_suite(Outcome& o)
{
    const auto k = gadget_2();
    const auto report = verify_gadget(k);
    o.require(report.pass, "verify_gadget");
    for (const auto& f : report.failures) o.require(false, f);

    const auto a = a_vector(k);
    const auto s2 = builtin_complex("boundary_simplex", 3);
    const auto implanted = implant_gadget(s2, Simplex{1, 2, 3}, 1, k);
    const auto before = f_vector(link(s2, VertexId{1})).entries();
    const auto after = f_vector(link(implanted.complex, VertexId{1})).entries();
    bool shifted = before.size() == a.size() && after.size() == a.size();
    for (std::size_t i = 0; shifted && i < a.size(); ++i) shifted = after[i] - before[i] == a[i];
    o.require(shifted, "link f-vector shifts by the a-vector");
    o.require(check_sphere(implanted.complex).verdict == Verdict::Yes, "implanted complex is a 2-sphere");
    o.require(verify_closed_manifold(implanted.complex).verdict == Verdict::Yes, "implanted complex is a manifold");

    for (const auto& mv : k.designated_moves) {
        const auto moved = apply_move(k.cell, mv);
        for (VertexId u : k.boundary_vertices) {
            if (u == k.base) continue;
            o.require(
                star(k.cell, Simplex{u}).facets() == star(moved, Simplex{u}).facets(),
                "star of " + std::to_string(u) + " changed under " + mv.str());
        }
    }
    o.detail << "a = (" << a[0] << "," << a[1] << "), " << k.designated_moves.size() << " designated moves";
}

void recognition(Outcome& o)
{
    const auto bary = builtin_complex("barycentric_boundary_simplex", 3);
    o.require(f_vector(bary).entries() == std::vector<std::int64_t>{14, 36, 24}, "f = (14,36,24)");
    const auto rec = sphere_recognize(bary, RecognitionBudget{10000, 1});
    o.require(rec.certified, "certified within 10^4 attempts");
    o.require(rec.attempts_used <= 10000, "budget respected");
    const auto replayed = replay(bary, rec.certificate.moves);
    o.require(replayed == rec.final, "certificate replays to the final complex");
    o.require(is_boundary_simplex(replayed), "final complex is the tetrahedron boundary");

    const auto torus = sphere_recognize(builtin_complex("torus7"), RecognitionBudget{10000, 1});
    o.require(!torus.certified, "torus7 stays unknown");
    o.detail << "certificate of " << rec.certificate.moves.size() << " moves after " << rec.attempts_used
             << " attempts; torus7 unknown";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "dimension-4 derivation is exact", 1.0, derive_four},
        {2, "Dehn-Sommerville anchors", 0, ds_anchors},
        {3, "move f-vector deltas match the r-columns", 0, move_delta},
        {4, "recomputed links equal induced link moves", 0, induced_links},
        {5, "derived formula is constant along walks", 30.0, invariance},
        {6, "proportionality sweep n = 2..8", 5.0, sweep},
        {7, "gadget cell suite", 0, gadget_suite},
        {8, "sphere recognition", 0, recognition},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << o.detail.str()
                  << ") " << static_cast<long>(secs * 1000) << " ms\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
