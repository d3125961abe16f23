#include "pachner/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pachner/error.hpp"

namespace pachner {

SimplicialComplex read_facet_list(std::istream& in)
{
    std::vector<std::vector<VertexId>> facets;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<VertexId> facet;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                const unsigned long value = std::stoul(token, &used);
                if (used != token.size() || token[0] == '-') throw std::invalid_argument(token);
                facet.push_back(static_cast<VertexId>(value));
            } catch (const std::logic_error&) {
                throw Error(
                    ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": bad vertex label '" + token + "'");
            }
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

void write_facet_list(std::ostream& out, const SimplicialComplex& c)
{
    for (const Simplex& f : c.facets()) {
        bool first = true;
        for (VertexId v : f) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

nlohmann::json complex_to_json(const SimplicialComplex& c, const std::string& name)
{
    nlohmann::json facets = nlohmann::json::array();
    for (const Simplex& f : c.facets()) facets.push_back(std::vector<VertexId>(f.begin(), f.end()));
    return {{"dim", c.dim()}, {"facets", std::move(facets)}, {"name", name}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j)
{
    try {
        const auto facets = j.at("facets").get<std::vector<std::vector<VertexId>>>();
        SimplicialComplex c = SimplicialComplex::from_facets(facets);
        if (j.contains("dim") && j.at("dim").get<int>() != c.dim()) {
            throw Error(ErrorKind::MixedDimension, "declared dim disagrees with facets");
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

SimplicialComplex load_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        try {
            return complex_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, path + ": " + e.what());
        }
    }
    return read_facet_list(in);
}

void save_complex(const std::string& path, const SimplicialComplex& c, const std::string& name)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        out << complex_to_json(c, name).dump(2) << '\n';
    } else {
        write_facet_list(out, c);
    }
}

nlohmann::json move_to_json(const BistellarMove& mv)
{
    nlohmann::json j = {
        {"i", mv.i},
        {"sigma", std::vector<VertexId>(mv.sigma.begin(), mv.sigma.end())},
        {"tau", std::vector<VertexId>(mv.tau.begin(), mv.tau.end())},
    };
    if (auto w = mv.new_vertex()) j["new_vertex"] = *w;
    return j;
}

BistellarMove move_from_json(const nlohmann::json& j)
{
    try {
        BistellarMove mv;
        mv.i = j.at("i").get<int>();
        mv.sigma = Simplex::checked(j.at("sigma").get<std::vector<VertexId>>());
        mv.tau = Simplex::checked(j.at("tau").get<std::vector<VertexId>>());
        mv.n = static_cast<int>(mv.sigma.size() + mv.tau.size()) - 2;
        if (mv.i < 0 || mv.tau.size() != static_cast<std::size_t>(mv.i) + 1) {
            throw Error(ErrorKind::ParseError, "tau must have i+1 vertices");
        }
        if (j.contains("new_vertex")) {
            const auto w = j.at("new_vertex").get<VertexId>();
            if (mv.i != 0 || mv.tau != Simplex{w}) {
                throw Error(ErrorKind::ParseError, "new_vertex must equal tau of a 0-move");
            }
        }
        return mv;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

void write_move_log(std::ostream& out, const std::vector<BistellarMove>& moves)
{
    for (const BistellarMove& mv : moves) out << move_to_json(mv).dump() << '\n';
}

std::vector<BistellarMove> read_move_log(std::istream& in)
{
    std::vector<BistellarMove> moves;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            moves.push_back(move_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
    }
    return moves;
}

nlohmann::json fvector_to_json(const FVector& f)
{
    return f.entries();
}

} // namespace pachner
