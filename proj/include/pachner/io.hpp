#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pachner/complex.hpp"
#include "pachner/moves.hpp"

namespace pachner {

// Facet-list text: one facet per line, whitespace-separated labels, '#'
// starts a comment, blank lines are skipped. Output lists facets in
// lexicographic order, labels separated by one space.
SimplicialComplex read_facet_list(std::istream& in);
void write_facet_list(std::ostream& out, const SimplicialComplex& c);

// JSON variant: {"dim": d, "facets": [[...], ...], "name": "..."}.
nlohmann::json complex_to_json(const SimplicialComplex& c, const std::string& name = "");
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// Picks the JSON variant for a ".json" extension, facet list otherwise.
SimplicialComplex load_complex(const std::string& path);
void save_complex(const std::string& path, const SimplicialComplex& c, const std::string& name = "");

// Move logs: JSON lines, one {"i", "sigma", "tau", "new_vertex"?} per move.
nlohmann::json move_to_json(const BistellarMove& mv);
BistellarMove move_from_json(const nlohmann::json& j);
void write_move_log(std::ostream& out, const std::vector<BistellarMove>& moves);
std::vector<BistellarMove> read_move_log(std::istream& in);

nlohmann::json fvector_to_json(const FVector& f);

} // namespace pachner
