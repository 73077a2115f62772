#pragma once

// JSON files for graphs, codes and analysis results, the compact
// `family:dims` descriptors used on the command line, and ASCII / SVG
// pictures. Pictures put the first coordinate left to right and the second
// top to bottom.
//
// CodeSet JSON:
//   {"graph": {"family": "torus", "dims": [4, 4]},
//    "kind": "ptpc", "d": 1,            // "d" only for d-perfect
//    "members": [[0, 0], [1, 0], ...]}  // sorted lexicographically

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "latcodes/lattice.hpp"
#include "latcodes/predicates.hpp"
#include "latcodes/sequence_codes.hpp"
#include "latcodes/structure.hpp"

namespace latcodes {

using Json = nlohmann::json;

Json graph_to_json(const GraphSpec& spec);
GraphSpec graph_from_json(const Json& j);
Json code_to_json(const CodeSet& code);
/// Validates the schema and that every member is a vertex of the graph.
CodeSet code_from_json(const Json& j);

void write_code(const CodeSet& code, const std::filesystem::path& path);
CodeSet read_code(const std::filesystem::path& path);

/// torus:4,6 | grid:3,5 | prism:6 | window:x0,y0:x1,y1
GraphSpec parse_graph_descriptor(std::string_view text);
/// pds | one-perfect | tpc | ptpc | d-perfect
KindSpec parse_kind(std::string_view text, int d = 1);

Json pds_array_to_json(const PdsArray& arr);
/// One line per row, entries as two-digit pairs ("32 12 ..."); sides
/// above 9 are written as (w,h).
std::string format_pds_array(const PdsArray& arr);

Json quotient_to_json(const QuotientGraph& q);

enum class RenderStyle { DotsAndEdges, LabelDigits };

struct RenderSpec {
  double cell_size = 24.0;
  bool show_labels = false;
  std::optional<Region> window;  // lattice pictures only; defaults to the bounding box
  RenderStyle style = RenderStyle::DotsAndEdges;
};

/// '*' for code vertices and '.' elsewhere, one line per row.
std::string render_ascii(const Graph& g, const VertexSet& s);
std::string render_ascii(const Region& window, const LatticeSet& s);
/// One digit per vertex (hex digits past 9).
std::string render_labels_ascii(const Graph& g, const std::vector<int>& labels);
std::string render_ascii(const LabelArray& arr);

/// Filled circles at code vertices and segments for edges between non-code
/// vertices. Torus wrap-around edges are not drawn. With show_labels and a
/// label vector, each vertex also gets its label as text.
std::string render_svg(const Graph& g, const VertexSet& s, const RenderSpec& spec,
                       const std::vector<int>* labels = nullptr);
std::string render_svg(const LatticeSet& s, const RenderSpec& spec);

}  // namespace latcodes
