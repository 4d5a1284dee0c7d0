#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "netdense/graph.hpp"
#include "netdense/transforms.hpp"

namespace netdense::io {

// Edge-list text format: one "u v" pair of decimal ids per line, '#' starts a
// comment line. A comment of the form "# n=<count>" fixes the vertex count;
// without it the count is max id + 1. Writers emit pairs as u < v in
// canonical edge order and add the n= header only when trailing isolated
// vertices would otherwise be lost.
BuildResult read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
BuildResult read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

// Provenance tables, whitespace-separated with a '#' header naming columns.
void write_subdivision_provenance(std::ostream& out, const SubdivisionResult& r);
void write_line_provenance(std::ostream& out, const LineGraphResult& r);
void write_densify_provenance(std::ostream& out, const DensifyResult& r, const Graph& seed);

}  // namespace netdense::io
