#pragma once

#include "thetalab/complex.hpp"
#include "thetalab/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace thetalab {

/// Parses the ".cplx" text format: one facet per line (whitespace-separated
/// labels), "ghost: v1 v2 ..." lines extending the ground, "#" comments, and
/// the literal lines VOID or EMPTY. Throws ParseError.
SimplicialComplex parse_complex(std::string_view text);
std::string write_complex(const SimplicialComplex& x);

/// Parses the ".graph" text format: "u v" edge lines, "vertex u" isolated
/// vertices, "#" comments. Labels are kept; vertices are numbered by ascending label.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

using LoadedObject = std::variant<SimplicialComplex, Graph>;

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Loads by extension: ".graph" as a graph, anything else as a complex.
LoadedObject load_object(const std::filesystem::path& path);

} // namespace thetalab
