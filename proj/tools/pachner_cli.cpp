// pachner: command-line front end for the bistellar move library.
//
// Exit codes: 0 success, 1 verification failure or rejected input, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pachner/builtin.hpp"
#include "pachner/calculus.hpp"
#include "pachner/error.hpp"
#include "pachner/gadget.hpp"
#include "pachner/invariant.hpp"
#include "pachner/io.hpp"
#include "pachner/recognition.hpp"
#include "pachner/walk.hpp"

using namespace pachner;
using Report = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Report new_report(const std::string& command)
{
    Report r;
    r["schema"] = 1;
    r["command"] = command;
    return r;
}

std::string rat(const Rational& q)
{
    return to_string(q);
}

nlohmann::json rats(const std::vector<Rational>& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& q : v) out.push_back(rat(q));
    return out;
}

std::string plain(const nlohmann::ordered_json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit(const Report& r, const std::string& format)
{
    if (format == "json") {
        std::cout << r.dump(2) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, _] : r.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : r.items()) {
        if (value.is_array() && !value.empty() && value.front().is_structured()) {
            std::cout << key << '\n';
            for (const auto& row : value) {
                std::cout << "  ";
                if (row.is_object()) {
                    bool first = true;
                    for (const auto& [k, v] : row.items()) {
                        std::cout << (first ? "" : "  ") << k << '=' << plain(v);
                        first = false;
                    }
                } else {
                    std::cout << row.dump();
                }
                std::cout << '\n';
            }
            continue;
        }
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << key << plain(value) << '\n';
    }
}

// A builtin name with an optional ":n", or a path to a facet list / JSON file.
SimplicialComplex resolve_complex(const std::string& arg)
{
    if (std::filesystem::exists(arg)) return load_complex(arg);
    std::string name = arg;
    int n = 0;
    if (auto colon = arg.find(':'); colon != std::string::npos) {
        name = arg.substr(0, colon);
        try {
            n = std::stoi(arg.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw UsageError("bad dimension in '" + arg + "'");
        }
    }
    const auto names = builtin_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for (const auto& s : names) known += " " + s;
        throw UsageError("'" + arg + "' is neither a file nor a builtin (builtins:" + known + ")");
    }
    if (builtin_takes_dimension(name) && n == 0) {
        throw UsageError("builtin '" + name + "' needs a dimension, e.g. " + name + ":3");
    }
    return builtin_complex(name, n);
}

LocalFormula resolve_psi(const std::string& text, int n)
{
    if (text == "euler") return euler_psi(n);
    if (text == "derived") return derive_psi(n);
    const std::string prefix = "affine:";
    if (text.rfind(prefix, 0) == 0) {
        LocalFormula psi = LocalFormula::zero(n);
        std::vector<Rational> coeffs;
        std::istringstream in(text.substr(prefix.size()));
        std::string item;
        while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
        if (coeffs.size() != psi.coeffs.size()) {
            throw UsageError(
                "affine psi for n = " + std::to_string(n) + " takes " + std::to_string(psi.coeffs.size()) +
                " coefficients b_-1,b_0,...,b_" + std::to_string(n - 1) + "; got " + std::to_string(coeffs.size()));
        }
        psi.coeffs = std::move(coeffs);
        return psi;
    }
    throw UsageError("--psi must be euler, derived or affine:b_-1,b_0,...");
}

BistellarMove resolve_move(const std::string& text, const SimplicialComplex& m)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw UsageError("--move expects JSON like {\"i\":1,\"sigma\":[1,2],\"tau\":[3,4]}");
    }
    BistellarMove mv = move_from_json(j);
    if (mv.n != m.dim()) throw UsageError("move dimension does not match the complex");
    return mv;
}

std::vector<BistellarMove> read_log_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open move log " + path);
    return read_move_log(in);
}

void write_output(const std::string& path, const SimplicialComplex& c, const std::string& name)
{
    if (path.empty() || path == "-") {
        write_facet_list(std::cout, c);
    } else {
        save_complex(path, c, name);
    }
}

std::pair<int, int> parse_range(const std::string& s)
{
    try {
        if (auto dots = s.find(".."); dots != std::string::npos) {
            return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
        }
        const int n = std::stoi(s);
        return {n, n};
    } catch (const std::logic_error&) {
        throw UsageError("--n expects N or A..B, got '" + s + "'");
    }
}

Report ordered(const nlohmann::json& j)
{
    return Report::parse(j.dump());
}

Report fvector_json(const FVector& f)
{
    return ordered(fvector_to_json(f));
}

Report move_json(const BistellarMove& mv)
{
    return ordered(move_to_json(mv));
}

Report derive_report(int n)
{
    Report r = new_report("derive");
    r["n"] = n;
    const auto h = h_values(n);
    Report hv = Report::object();
    for (int i = -1; i <= n; ++i) hv[std::to_string(i)] = rat(h.at(i));
    r["H"] = hv;
    r["H_degenerate"] = h.degenerate;
    r["c_matrix"] = c_matrix(n);
    Report counts = Report::array();
    const auto forms = move_count_forms(n);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        counts.push_back(
            {{"difference", "m" + std::to_string(i) + "-m" + std::to_string(n - 1 - static_cast<int>(i))},
             {"form", forms[i].str()}});
    }
    r["move_counts"] = counts;
    const auto psi = derive_psi(n);
    const auto reduced = reduce(psi);
    r["psi"] = {{"coeffs", rats(psi.coeffs)}, {"form", psi.str()}};
    r["psi_reduced"] = {{"coeffs", rats(reduced.coeffs)}, {"form", reduced.str()}};
    r["euler_reduced"] = reduce(euler_psi(n)).str();
    const auto p = proportionality(n);
    r["proportionality"] = to_string(p.kind);
    if (p.kind == Proportionality::Kind::Lambda) {
        r["lambda"] = rat(p.lambda);
    } else {
        r["lambda"] = nullptr;
    }
    r["global"] = rats(globalize(psi));
    return r;
}

struct Options
{
    std::string format = "json";
    std::string complex;
    std::string out;
    std::string move;
    std::string log;
    std::string psi = "euler";
    std::string range = "2..8";
    std::string emit_path;
    std::string certificate;
    std::vector<double> weights;
    std::size_t steps = 100;
    std::size_t attempts = 10000;
    std::uint64_t seed = 0;
    int index = -1;
    int n = 0;
};

int cmd_info(const Options& o)
{
    const auto c = resolve_complex(o.complex);
    Report r = new_report("info");
    r["complex"] = o.complex;
    r["dim"] = c.dim();
    r["vertices"] = c.num_vertices();
    r["facets"] = c.num_facets();
    const auto f = f_vector(c);
    r["f_vector"] = fvector_json(f);
    r["euler_characteristic"] = euler_characteristic(c);
    r["connected"] = is_connected(c);
    r["boundary_facets"] = c.dim() >= 1 ? c.boundary().num_facets() : 0;
    r["next_label"] = c.next_label();
    emit(r, o.format);
    return kOk;
}

int cmd_moves(const Options& o)
{
    const auto c = resolve_complex(o.complex);
    if (o.index > c.dim()) throw UsageError("--index must lie in 0.." + std::to_string(c.dim()));
    const auto moves = o.index >= 0 ? enumerate_moves(c, o.index) : enumerate_all_moves(c);
    Report r = new_report("moves");
    r["complex"] = o.complex;
    Report counts = Report::object();
    for (int i = 0; i <= c.dim(); ++i) {
        if (o.index < 0 || o.index == i) counts[std::to_string(i)] = 0;
    }
    Report list = Report::array();
    for (const auto& mv : moves) {
        counts[std::to_string(mv.i)] = counts[std::to_string(mv.i)].get<int>() + 1;
        list.push_back(move_json(mv));
    }
    r["counts"] = counts;
    r["moves"] = list;
    emit(r, o.format);
    return kOk;
}

int cmd_apply(const Options& o)
{
    auto c = resolve_complex(o.complex);
    if (o.move.empty() == o.log.empty()) throw UsageError("give exactly one of --move or --log");
    const auto moves = o.log.empty() ? std::vector<BistellarMove>{resolve_move(o.move, c)} : read_log_file(o.log);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        if (auto why = move_problem(c, moves[k])) {
            std::cerr << "move " << k << " (" << moves[k].str() << ") rejected: " << *why << '\n';
            return kFailed;
        }
        c = apply_move(c, moves[k]);
    }
    write_output(o.out, c, o.complex);
    return kOk;
}

int cmd_walk(const Options& o)
{
    const auto start = resolve_complex(o.complex);
    WalkConfig cfg{o.steps, o.seed, o.weights};
    const auto result = random_walk(start, cfg);
    if (!o.log.empty()) {
        std::ofstream out(o.log);
        if (!out) throw UsageError("cannot write " + o.log);
        write_move_log(out, result.log.moves);
    }
    if (!o.out.empty()) save_complex(o.out, result.complex, o.complex);
    Report r = new_report("walk");
    r["complex"] = o.complex;
    r["seed"] = o.seed;
    r["steps"] = o.steps;
    r["start_f_vector"] = fvector_json(result.log.snapshots.front());
    r["final_f_vector"] = fvector_json(result.log.snapshots.back());
    Report by_index = Report::object();
    for (int i = 0; i <= start.dim(); ++i) by_index[std::to_string(i)] = 0;
    for (const auto& mv : result.log.moves) {
        by_index[std::to_string(mv.i)] = by_index[std::to_string(mv.i)].get<int>() + 1;
    }
    r["moves_by_index"] = by_index;
    emit(r, o.format);
    return kOk;
}

int cmd_replay(const Options& o)
{
    const auto start = resolve_complex(o.complex);
    const auto c = replay(start, read_log_file(o.log));
    write_output(o.out, c, o.complex);
    return kOk;
}

int cmd_recognize(const Options& o)
{
    const auto c = resolve_complex(o.complex);
    const RecognitionBudget budget{o.attempts, o.seed};
    const auto check = check_sphere(c, budget);
    Report r = new_report("recognize-sphere");
    r["complex"] = o.complex;
    r["seed"] = o.seed;
    r["budget"] = o.attempts;
    r["verdict"] = to_string(check.verdict);
    r["reason"] = check.reason;
    if (c.dim() >= 1 && check.verdict != Verdict::No) {
        const auto rec = sphere_recognize(c, budget);
        r["certified"] = rec.certified;
        r["attempts_used"] = rec.attempts_used;
        r["certificate_length"] = rec.certificate.moves.size();
        r["final_f_vector"] = fvector_json(f_vector(rec.final));
        if (rec.certified && !o.certificate.empty()) {
            std::ofstream out(o.certificate);
            if (!out) throw UsageError("cannot write " + o.certificate);
            write_move_log(out, rec.certificate.moves);
        }
    }
    emit(r, o.format);
    return check.verdict == Verdict::Yes ? kOk : kFailed;
}

int cmd_derive(const Options& o)
{
    if (o.n < 2) throw UsageError("--n must be at least 2");
    emit(derive_report(o.n), o.format);
    return kOk;
}

int cmd_verify_theorem(const Options& o)
{
    const auto [lo, hi] = parse_range(o.range);
    if (lo < 2 || hi < lo) throw UsageError("--n range must satisfy 2 <= A <= B");
    Report r = new_report("verify-theorem");
    r["range"] = o.range;
    Report rows = Report::array();
    bool pass = true;
    for (int n = lo; n <= hi; ++n) {
        const auto p = proportionality(n);
        const auto psi = derive_psi(n);
        const bool consistent = p.kind != Proportionality::Kind::NotProportional;
        // even n: nonzero multiple of the Euler form; odd n: both vanish
        const bool expected_kind =
            (n % 2 == 0) ? p.kind == Proportionality::Kind::Lambda && p.lambda != 0
                         : p.kind == Proportionality::Kind::BothZero;
        pass = pass && consistent && expected_kind;
        Report row;
        row["n"] = n;
        row["kind"] = to_string(p.kind);
        row["lambda"] = p.kind == Proportionality::Kind::Lambda ? rat(p.lambda) : "-";
        row["psi_at_delta"] = rat(psi.evaluate(f_delta(n)));
        rows.push_back(row);
    }
    r["results"] = rows;
    r["pass"] = pass;
    emit(r, o.format);
    return pass ? kOk : kFailed;
}

int cmd_gadget(const Options& o)
{
    if (o.n != 2) throw UsageError("only the n = 2 gadget cell is built in");
    const auto k = gadget_2();
    const auto report = verify_gadget(k);
    Report r = new_report("gadget");
    r["n"] = k.n;
    r["base"] = k.base;
    r["boundary_vertices"] = k.boundary_vertices;
    r["f_vector"] = fvector_json(f_vector(k.cell));
    r["a_vector"] = a_vector(k);
    Report moves = Report::array();
    for (const auto& mv : k.designated_moves) moves.push_back(move_json(mv));
    r["designated_moves"] = moves;
    r["pass"] = report.pass;
    r["failures"] = report.failures;
    if (!o.emit_path.empty()) {
        auto j = complex_to_json(k.cell, "gadget_2");
        j["base"] = k.base;
        j["boundary_vertices"] = k.boundary_vertices;
        j["designated_moves"] = nlohmann::json::array();
        for (const auto& mv : k.designated_moves) j["designated_moves"].push_back(move_to_json(mv));
        std::ofstream out(o.emit_path);
        if (!out) throw UsageError("cannot write " + o.emit_path);
        out << j.dump(2) << '\n';
    }
    emit(r, o.format);
    return report.pass ? kOk : kFailed;
}

int cmd_invariance(const Options& o)
{
    const auto m = resolve_complex(o.complex);
    const auto psi = resolve_psi(o.psi, m.dim());
    const auto rep = invariance_report(m, psi, WalkConfig{o.steps, o.seed, o.weights});
    Report r = new_report("invariance");
    r["complex"] = o.complex;
    r["psi"] = psi.str();
    r["seed"] = rep.seed;
    r["steps"] = rep.steps;
    r["start_value"] = rat(rep.start_value);
    if (rep.invariant()) {
        r["verdict"] = "invariant";
        r["value"] = rat(rep.start_value);
    } else {
        r["verdict"] = "witness";
        r["witness"] = {
            {"step", rep.witness->step},
            {"move", move_json(rep.witness->move)},
            {"before", rat(rep.witness->before)},
            {"after", rat(rep.witness->after)},
        };
    }
    emit(r, o.format);
    return rep.invariant() ? kOk : kFailed;
}

int cmd_balance(const Options& o)
{
    const auto m = resolve_complex(o.complex);
    const auto psi = resolve_psi(o.psi, m.dim());
    Report r = new_report("balance");
    r["complex"] = o.complex;
    r["psi"] = psi.str();
    std::vector<BistellarMove> moves;
    if (!o.move.empty()) {
        moves.push_back(resolve_move(o.move, m));
    } else {
        moves = o.index >= 0 ? enumerate_moves(m, o.index) : enumerate_all_moves(m);
    }
    Report rows = Report::array();
    bool consistent = true;
    for (const auto& mv : moves) {
        if (auto why = move_problem(m, mv)) {
            std::cerr << "move " << mv.str() << " rejected: " << *why << '\n';
            return kFailed;
        }
        const Rational lhs = balance_check(m, mv, psi);
        const Rational diff = evaluate_invariant(apply_move(m, mv), psi) - evaluate_invariant(m, psi);
        consistent = consistent && lhs == diff;
        rows.push_back({{"move", mv.str()}, {"balance", rat(lhs)}, {"invariant_change", rat(diff)}});
    }
    r["moves"] = rows;
    r["consistent"] = consistent;
    emit(r, o.format);
    return consistent ? kOk : kFailed;
}

bool is_usage_kind(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::EmptyInput:
        return true;
    default:
        return false;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bistellar moves, f-vector calculus and local formulas for the Euler characteristic"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_complex = [&](CLI::App* sub) {
        sub->add_option("complex", o.complex, "Builtin name (name or name:n) or facet-list / .json file")->required();
    };
    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "RNG seed")->required(); };

    auto* info = app.add_subcommand("info", "Dimension, f-vector, Euler characteristic");
    add_complex(info);
    add_format(info);

    auto* moves = app.add_subcommand("moves", "List valid bistellar moves");
    add_complex(moves);
    moves->add_option("--index", o.index, "Only i-moves")->check(CLI::NonNegativeNumber);
    add_format(moves);

    auto* apply = app.add_subcommand("apply", "Apply one move or a move log; writes the facet list");
    add_complex(apply);
    apply->add_option("--move", o.move, "Move as JSON {i, sigma, tau}");
    apply->add_option("--log", o.log, "Move log file (JSON lines)");
    apply->add_option("--out", o.out, "Output file (.json for JSON), default stdout");

    auto* walk = app.add_subcommand("walk", "Seeded random walk of bistellar moves");
    add_complex(walk);
    add_seed(walk);
    walk->add_option("--steps", o.steps, "Number of moves");
    walk->add_option("--weights", o.weights, "Relative weight per move index")->delimiter(',');
    walk->add_option("--log", o.log, "Write the move log here");
    walk->add_option("--out", o.out, "Write the final complex here");
    add_format(walk);

    auto* rep = app.add_subcommand("replay", "Replay a move log; writes the facet list");
    add_complex(rep);
    rep->add_option("log", o.log, "Move log file")->required();
    rep->add_option("--out", o.out, "Output file, default stdout");

    auto* rec = app.add_subcommand("recognize-sphere", "Sphere check with a flip-search certificate");
    add_complex(rec);
    add_seed(rec);
    rec->add_option("--attempts", o.attempts, "Attempt budget");
    rec->add_option("--certificate", o.certificate, "Write the certificate move log here");
    add_format(rec);

    auto* derive = app.add_subcommand("derive", "Derive the local formula for link dimension n-1");
    derive->add_option("--n", o.n, "Link f-vector length")->required();
    add_format(derive);

    auto* verify = app.add_subcommand("verify-theorem", "Proportionality sweep over a range of n");
    verify->add_option("--n", o.range, "N or A..B");
    add_format(verify);

    auto* gadget = app.add_subcommand("gadget", "Verify a gadget cell");
    gadget->add_option("--n", o.n, "Cell dimension")->required();
    gadget->add_option("--emit", o.emit_path, "Write the cell with metadata as JSON");
    add_format(gadget);

    auto* inv = app.add_subcommand("invariance", "Track a local formula along a seeded walk");
    add_complex(inv);
    add_seed(inv);
    inv->add_option("--psi", o.psi, "euler, derived or affine:b_-1,b_0,...");
    inv->add_option("--steps", o.steps, "Number of moves");
    inv->add_option("--weights", o.weights, "Relative weight per move index")->delimiter(',');
    add_format(inv);

    auto* bal = app.add_subcommand("balance", "Balance-equation value of moves");
    add_complex(bal);
    bal->add_option("--psi", o.psi, "euler, derived or affine:b_-1,b_0,...");
    bal->add_option("--move", o.move, "Single move as JSON; default all moves");
    bal->add_option("--index", o.index, "Only i-moves")->check(CLI::NonNegativeNumber);
    add_format(bal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*info) return cmd_info(o);
        if (*moves) return cmd_moves(o);
        if (*apply) return cmd_apply(o);
        if (*walk) return cmd_walk(o);
        if (*rep) return cmd_replay(o);
        if (*rec) return cmd_recognize(o);
        if (*derive) return cmd_derive(o);
        if (*verify) return cmd_verify_theorem(o);
        if (*gadget) return cmd_gadget(o);
        if (*inv) return cmd_invariance(o);
        if (*bal) return cmd_balance(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_usage_kind(e.kind()) ? kUsage : kFailed;
    }
    return kUsage;
}
