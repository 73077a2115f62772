#pragma once

// Reference implementations used only by the tests: definitions evaluated
// directly from coordinates, and exhaustive subset enumeration.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "latcodes/graph.hpp"
#include "latcodes/predicates.hpp"

namespace oracle {

using latcodes::Graph;
using latcodes::Index;
using latcodes::VertexSet;

inline std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.size(), 0);
  for (Index v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

// Lattice distance on a torus or box, computed from coordinates.
inline int distance(const Graph& g, Index a, Index b) {
  const auto& p = g.point(a);
  const auto& q = g.point(b);
  int total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int diff = std::abs(p[i] - q[i]);
    if (g.family() == latcodes::Family::Torus) diff = std::min(diff, g.spec().dims[i] - diff);
    if (g.family() == latcodes::Family::Prism && i == 1) diff = std::min(diff, g.spec().dims[0] - diff);
    total += diff;
  }
  return total;
}

inline int code_neighbors(const Graph& g, const std::vector<char>& in, Index v) {
  int c = 0;
  for (Index u = 0; u < static_cast<Index>(g.size()); ++u)
    if (u != v && in[static_cast<std::size_t>(u)] && g.adjacent(u, v)) ++c;
  return c;
}

inline bool pds(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
    if (!in[static_cast<std::size_t>(v)] && code_neighbors(g, in, v) != 1) return false;
  return true;
}

// Every vertex at distance <= d from exactly one code vertex (torus/grid).
inline bool d_perfect(const Graph& g, const VertexSet& s, int d) {
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    int c = 0;
    for (Index u : s) c += distance(g, u, v) <= d;
    if (c != 1) return false;
  }
  return true;
}

// Every vertex has exactly one code neighbor; on prisms the code neighbor
// of a code vertex must not be its rung partner.
inline bool tpc(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    if (code_neighbors(g, in, v) != 1) return false;
    if (g.family() == latcodes::Family::Prism && in[static_cast<std::size_t>(v)]) {
      const auto& p = g.point(v);
      Index partner = g.index({1 - p[0], p[1]});
      if (in[static_cast<std::size_t>(partner)]) return false;
    }
  }
  return true;
}

inline bool parallel_tpc(const Graph& g, const VertexSet& s) {
  if (!tpc(g, s)) return false;
  auto in = membership(g, s);
  int axis = -1;
  for (Index u : s) {
    for (Index v : g.neighbors(u)) {
      if (!in[static_cast<std::size_t>(v)]) continue;
      int a = g.point(u)[0] != g.point(v)[0] ? 0 : 1;
      if (axis >= 0 && axis != a) return false;
      axis = a;
    }
  }
  return true;
}

inline bool holds(const Graph& g, const VertexSet& s, latcodes::KindSpec k) {
  using latcodes::CodeKind;
  switch (k.kind) {
    case CodeKind::Pds: return pds(g, s);
    case CodeKind::OnePerfect:
      if (g.family() == latcodes::Family::Prism) {
        // Closed neighborhoods partition the vertices.
        std::vector<int> hits(g.size(), 0);
        for (Index u : s) {
          ++hits[static_cast<std::size_t>(u)];
          for (Index v : g.neighbors(u)) ++hits[static_cast<std::size_t>(v)];
        }
        return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      }
      return d_perfect(g, s, 1);
    case CodeKind::Tpc: return tpc(g, s);
    case CodeKind::Ptpc: return parallel_tpc(g, s);
    case CodeKind::DPerfect: return d_perfect(g, s, k.d);
  }
  return false;
}

// All codes of the kind, in lexicographic order of index lists.
inline std::vector<VertexSet> all_codes(const Graph& g, latcodes::KindSpec k) {
  const auto n = g.size();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(static_cast<Index>(v));
    if (holds(g, s, k)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
