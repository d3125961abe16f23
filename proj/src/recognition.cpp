#include "pachner/recognition.hpp"

#include <cmath>
#include <map>
#include <random>

#include "pachner/calculus.hpp"

namespace pachner {

bool is_boundary_simplex(const SimplicialComplex& c)
{
    if (c.dim() < 0 || c.is_void()) return false;
    const auto expected = static_cast<std::size_t>(c.dim() + 2);
    return c.num_facets() == expected && c.num_vertices() == expected;
}

namespace {

// Annealing schedule. Energy weights f_0 far above f_1 so vertex-adding moves
// are effectively never accepted once cold.
constexpr double kVertexWeight = 16.0;
constexpr double kStartTemperature = 1.0;
constexpr double kCooling = 0.995;
constexpr double kMinTemperature = 0.05;
constexpr std::size_t kStagnationWindow = 400;

bool closed_pseudomanifold(const SimplicialComplex& c)
{
    std::map<Simplex, int> ridges;
    for (const Simplex& f : c.facets()) {
        for (Simplex& r : f.boundary_faces()) ++ridges[std::move(r)];
    }
    for (const auto& [r, count] : ridges) {
        if (count != 2) return false;
    }
    return true;
}

} // namespace

SphereRecognition sphere_recognize(const SimplicialComplex& l, const RecognitionBudget& budget)
{
    SphereRecognition out;
    out.final = l;
    out.certificate.seed = budget.seed;
    out.certificate.snapshots.push_back(f_vector(l));
    if (is_boundary_simplex(l)) {
        out.certified = true;
        return out;
    }
    const int d = l.dim();
    if (d < 1) return out;
    const FVector f = f_vector(l);
    if (euler_characteristic(f) != 1 + (d % 2 == 0 ? 1 : -1)) return out;

    const int n = d + 1;
    std::vector<double> delta_energy;
    for (int i = 0; i <= d; ++i) {
        delta_energy.push_back(
            kVertexWeight * static_cast<double>(r_coeff(n, 0, i)) +
            (d >= 1 ? static_cast<double>(r_coeff(n, 1, i)) : 0.0));
    }

    std::mt19937_64 rng(budget.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double temperature = kStartTemperature;
    double energy = kVertexWeight * static_cast<double>(f[0]) + static_cast<double>(f[1]);
    double best = energy;
    std::size_t since_best = 0;

    SimplicialComplex current = l;
    std::vector<std::vector<BistellarMove>> moves(static_cast<std::size_t>(d + 1));
    bool stale = true;

    while (out.attempts_used < budget.attempts) {
        if (stale) {
            for (int i = 0; i <= d; ++i) moves[static_cast<std::size_t>(i)] = enumerate_moves(current, i);
            stale = false;
        }
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            if (!moves[i].empty()) live.push_back(i);
        }
        ++out.attempts_used;
        const std::size_t i = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
        const auto& candidates = moves[i];
        const BistellarMove& mv =
            candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        const double de = delta_energy[i];
        const bool accept = de <= 0.0 || unit(rng) < std::exp(-de / temperature);
        temperature = std::max(kMinTemperature, temperature * kCooling);
        if (!accept) {
            ++since_best;
        } else {
            current = apply_move(current, mv);
            out.certificate.moves.push_back(mv);
            out.certificate.snapshots.push_back(f_vector(current));
            energy += de;
            stale = true;
            if (is_boundary_simplex(current)) {
                out.certified = true;
                break;
            }
            if (energy < best) {
                best = energy;
                since_best = 0;
            } else {
                ++since_best;
            }
        }
        if (since_best >= kStagnationWindow) {
            temperature = kStartTemperature;
            since_best = 0;
        }
    }
    out.final = current;
    return out;
}

SphereCheck check_sphere(const SimplicialComplex& l, const RecognitionBudget& budget)
{
    if (l.is_void()) return {Verdict::No, "empty complex"};
    const int d = l.dim();
    if (d == -1) return {Verdict::Yes, ""};
    if (d == 0) {
        if (l.num_facets() == 2) return {Verdict::Yes, ""};
        return {Verdict::No, "0-sphere needs exactly two points, got " + std::to_string(l.num_facets())};
    }
    if (!closed_pseudomanifold(l)) return {Verdict::No, "some ridge is not in exactly two facets"};
    if (!is_connected(l)) return {Verdict::No, "not connected"};
    if (d == 1) return {Verdict::Yes, ""};

    bool unknown = false;
    for (VertexId v : l.vertices()) {
        const SphereCheck sub = check_sphere(link(l, v), budget);
        if (sub.verdict == Verdict::No) {
            return {Verdict::No, "link of vertex " + std::to_string(v) + ": " + sub.reason};
        }
        unknown = unknown || sub.verdict == Verdict::Unknown;
    }
    const std::int64_t chi = euler_characteristic(l);
    const std::int64_t sphere_chi = 1 + (d % 2 == 0 ? 1 : -1);
    if (chi != sphere_chi) {
        return {Verdict::No, "Euler characteristic " + std::to_string(chi)};
    }
    if (unknown) return {Verdict::Unknown, "a vertex link could not be certified"};
    if (d == 2) return {Verdict::Yes, ""};
    if (sphere_recognize(l, budget).certified) return {Verdict::Yes, ""};
    return {Verdict::Unknown, "flip search budget exhausted"};
}

SphereCheck check_ball(const SimplicialComplex& l, const RecognitionBudget& budget)
{
    if (l.is_void() || l.dim() < 0) return {Verdict::No, "empty complex"};
    if (l.dim() == 0) {
        if (l.num_facets() == 1) return {Verdict::Yes, ""};
        return {Verdict::No, "0-ball is a single point"};
    }
    const SimplicialComplex bd = l.boundary();
    if (bd.is_void()) return {Verdict::No, "no boundary"};
    std::set<Simplex> facets = l.facets();
    const VertexId apex = l.next_label();
    for (const Simplex& r : bd.facets()) facets.insert(r.with(apex));
    SphereCheck capped = check_sphere(SimplicialComplex::from_facets(std::move(facets)), budget);
    if (capped.verdict == Verdict::No) capped.reason = "capped complex is not a sphere: " + capped.reason;
    return capped;
}

ManifoldCheck verify_closed_manifold(const SimplicialComplex& c, const RecognitionBudget& budget)
{
    ManifoldCheck out{Verdict::Yes, std::nullopt, ""};
    for (VertexId v : c.vertices()) {
        const SphereCheck s = check_sphere(link(c, v), budget);
        if (s.verdict == Verdict::No) {
            return {Verdict::No, Simplex{v}, "link of " + std::to_string(v) + " is not a sphere: " + s.reason};
        }
        if (s.verdict == Verdict::Unknown && out.verdict == Verdict::Yes) {
            out = {Verdict::Unknown, Simplex{v}, "link of " + std::to_string(v) + ": " + s.reason};
        }
    }
    return out;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace pachner
