#pragma once

// Finite lattice-derived graphs: cycle products (tori), prisms, rectangular
// grids and rectangular windows of the integer lattice.
//
// Coordinate convention for 2-D objects: the first coordinate is the column
// (increasing to the right), the second is the row (increasing downward).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latcodes {

using Point = std::vector<int>;
using Index = int;
/// Sorted, duplicate-free list of vertex indices of one graph.
using VertexSet = std::vector<Index>;

enum class Family { Torus, RectGrid, Prism, Window };

/// Value description of a graph; the Graph itself is built from it.
struct GraphSpec {
  Family family = Family::Torus;
  std::vector<int> dims;  // Torus: cycle lengths; RectGrid: {m, n}; Prism: {n}
  Point lo, hi;           // Window only, inclusive bounds per axis

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

constexpr int kMaxRank = 4;

class Graph {
 public:
  explicit Graph(GraphSpec spec);

  const GraphSpec& spec() const noexcept { return spec_; }
  Family family() const noexcept { return spec_.family; }
  std::size_t size() const noexcept { return points_.size(); }
  int rank() const noexcept { return static_cast<int>(extent_.size()); }

  const Point& point(Index v) const { return points_[static_cast<std::size_t>(v)]; }
  std::optional<Index> find(const Point& p) const;
  /// Throws NotInGraph when p is not a vertex.
  Index index(const Point& p) const;

  std::span<const Index> neighbors(Index v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  bool adjacent(Index u, Index v) const;
  int degree(Index v) const { return static_cast<int>(neighbors(v).size()); }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Axis along which the edge {u,v} runs (the coordinate that differs).
  int edge_axis(Index u, Index v) const;

  /// Prism rungs stand for the doubled edges of C_2 x C_n: they count once
  /// for domination, but a rung pair is not a 1-cube.
  bool is_doubled_edge(Index u, Index v) const;

  bool is_two_dimensional() const noexcept { return rank() == 2; }
  bool is_vertex_transitive() const noexcept {
    return spec_.family == Family::Torus || spec_.family == Family::Prism;
  }

  /// Translation of vertex v by `shift` (torus and prism only, wrapping).
  Index translate(Index v, const Point& shift) const;

  std::string describe() const;

 private:
  Index linear(const Point& p) const;

  GraphSpec spec_;
  std::vector<int> extent_;  // per-axis number of coordinate values
  Point base_;               // per-axis smallest coordinate
  std::vector<Point> points_;
  std::vector<std::vector<Index>> adjacency_;
  std::size_t edges_ = 0;
};

Graph make_torus(const std::vector<int>& dims);
Graph make_prism(int n);
Graph make_rect_grid(int m, int n);
Graph make_window(const Point& lo, const Point& hi);

/// All vertices within graph distance d of v, by breadth-first layering.
VertexSet ball(const Graph& g, Index v, int d);
VertexSet ball(const Graph& g, const Point& v, int d);

/// Coordinatewise non-negative residue of a lattice point.
Point project_point(const Point& point, const std::vector<int>& dims);

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Index> members);
VertexSet to_vertex_set(const Graph& g, std::span<const Point> points);
std::vector<Point> to_points(const Graph& g, const VertexSet& s);

}  // namespace latcodes
