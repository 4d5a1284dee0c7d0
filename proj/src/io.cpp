#include "netdense/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "netdense/errors.hpp"

namespace netdense::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_id(std::string_view token, std::uint64_t& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

BuildResult read_edge_list(std::istream& in, const std::string& source_name) {
  std::vector<Edge> edges;
  std::optional<VertexId> declared;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const auto pos = text.find("n=");
      if (pos != std::string_view::npos && (pos == 0 || text[pos - 1] == ' ' || text[pos - 1] == '#')) {
        auto rest = text.substr(pos + 2);
        rest = rest.substr(0, rest.find_first_of(" \t"));
        std::uint64_t n = 0;
        if (!parse_id(rest, n) || n > std::numeric_limits<VertexId>::max())
          throw InputError(source_name + ":" + std::to_string(line_no) + ": bad vertex count header");
        declared = static_cast<VertexId>(n);
      }
      continue;
    }
    const auto split = text.find_first_of(" \t");
    if (split == std::string_view::npos)
      throw InputError(source_name + ":" + std::to_string(line_no) + ": expected two vertex ids");
    const auto first = text.substr(0, split);
    const auto second = trim(text.substr(split));
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_id(first, u) || !parse_id(second, v))
      throw InputError(source_name + ":" + std::to_string(line_no) + ": expected two decimal vertex ids");
    if (u >= std::numeric_limits<VertexId>::max() || v >= std::numeric_limits<VertexId>::max())
      throw InputError(source_name + ":" + std::to_string(line_no) + ": vertex id too large");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (in.bad()) throw std::runtime_error(source_name + ": read error");
  return build_from_edges(edges, declared);
}

BuildResult read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  VertexId implied = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (g.degree(u) > 0) implied = u + 1;
  if (implied != g.vertex_count()) out << "# n=" << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_subdivision_provenance(std::ostream& out, const SubdivisionResult& r) {
  out << "# subdivision_vertex seed_u seed_v\n";
  for (std::size_t e = 0; e < r.edge_of_subvertex.size(); ++e)
    out << r.subdivision_vertex(e) << ' ' << r.edge_of_subvertex[e].first << ' '
        << r.edge_of_subvertex[e].second << '\n';
}

void write_line_provenance(std::ostream& out, const LineGraphResult& r) {
  out << "# line_vertex base_u base_v\n";
  for (std::size_t e = 0; e < r.base_edges.size(); ++e)
    out << e << ' ' << r.base_edges[e].first << ' ' << r.base_edges[e].second << '\n';
}

void write_densify_provenance(std::ostream& out, const DensifyResult& r, const Graph& seed) {
  const auto edges = seed.edge_list();
  out << "# line_vertex clique_vertex seed_u seed_v\n";
  for (std::size_t i = 0; i < r.seed_vertex_of.size(); ++i) {
    const auto& [u, v] = edges[r.seed_edge_of[i]];
    out << i << ' ' << r.seed_vertex_of[i] << ' ' << u << ' ' << v << '\n';
  }
}

}  // namespace netdense::io
