#include "latcodes/predicates.hpp"

#include <algorithm>

#include "latcodes/error.hpp"

namespace latcodes {

namespace {

void require_members(const Graph& g, const VertexSet& s) {
  for (Index v : s)
    if (v < 0 || static_cast<std::size_t>(v) >= g.size())
      throw Error(ErrorKind::NotInGraph, "code member outside " + g.describe());
}

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  require_members(g, s);
  std::vector<char> in(g.size(), 0);
  for (Index v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

int code_neighbors(const Graph& g, const std::vector<char>& in, Index v) {
  int count = 0;
  for (Index w : g.neighbors(v)) count += in[static_cast<std::size_t>(w)];
  return count;
}

Verdict fail(const Graph& g, Index v, int observed, std::string expected) {
  return Verdict{false, Violation{g.point(v), observed, std::move(expected)}};
}

}  // namespace

CodeSet make_code_set(const Graph& g, KindSpec kind, const VertexSet& members) {
  require_members(g, members);
  return CodeSet{g.spec(), kind, to_points(g, make_vertex_set(members))};
}

Verdict is_pds(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    int c = code_neighbors(g, in, v);
    if (c != 1) return fail(g, v, c, "exactly one code neighbor");
  }
  return {};
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  std::vector<char> seen(g.size(), 0);
  std::vector<VertexSet> out;
  for (Index root : s) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    VertexSet comp;
    std::vector<Index> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      Index u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Index w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (in[wi] && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Closed neighborhoods of the code must partition the vertex set.
Verdict is_one_perfect(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    int c = in[static_cast<std::size_t>(v)] + code_neighbors(g, in, v);
    if (c != 1) return fail(g, v, c, "exactly one code vertex in closed neighborhood");
  }
  return {};
}

// Every vertex, in the code or not, has exactly one code neighbor. On prisms
// the partner must not sit across a rung: a rung pair induces the doubled
// edge of C_2, which is not a 1-cube.
Verdict is_tpc(const Graph& g, const VertexSet& s) {
  auto in = membership(g, s);
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    int c = code_neighbors(g, in, v);
    if (c != 1) return fail(g, v, c, "exactly one code neighbor");
    if (!in[static_cast<std::size_t>(v)]) continue;
    for (Index w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)] && g.is_doubled_edge(v, w))
        return fail(g, v, 2, "induced component is a 1-cube, not a doubled rung");
  }
  return {};
}

Verdict is_parallel_tpc(const Graph& g, const VertexSet& s) {
  if (!g.is_two_dimensional())
    throw Error(ErrorKind::InvalidArgument, "parallel TPC needs a 2-D graph");
  Verdict v = is_tpc(g, s);
  if (!v) return v;
  int axis = -1;
  for (const VertexSet& comp : induced_components(g, s)) {
    int a = g.edge_axis(comp[0], comp[1]);
    if (axis < 0) axis = a;
    if (a != axis) return fail(g, comp[0], a, "induced edge along axis " + std::to_string(axis));
  }
  return {};
}

// Radius-d balls around the code must partition the vertex set.
Verdict is_d_perfect(const Graph& g, const VertexSet& s, int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
  require_members(g, s);
  std::vector<int> cover(g.size(), 0);
  for (Index c : s)
    for (Index v : ball(g, c, d)) ++cover[static_cast<std::size_t>(v)];
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    int c = cover[static_cast<std::size_t>(v)];
    if (c != 1) return fail(g, v, c, "within distance " + std::to_string(d) + " of exactly one code vertex");
  }
  return {};
}

Verdict check_code(const Graph& g, const VertexSet& s, KindSpec kind) {
  switch (kind.kind) {
    case CodeKind::Pds: return is_pds(g, s);
    case CodeKind::OnePerfect: return is_one_perfect(g, s);
    case CodeKind::Tpc: return is_tpc(g, s);
    case CodeKind::Ptpc: return is_parallel_tpc(g, s);
    case CodeKind::DPerfect: return is_d_perfect(g, s, kind.d);
  }
  return {};
}

Verdict check_code(const CodeSet& code) {
  Graph g(code.graph);
  return check_code(g, to_vertex_set(g, code.members), code.kind);
}

bool is_code_partition(const Graph& g, std::span<const VertexSet> classes, KindSpec kind) {
  std::vector<int> hits(g.size(), 0);
  for (const VertexSet& cls : classes) {
    require_members(g, cls);
    for (Index v : cls) ++hits[static_cast<std::size_t>(v)];
  }
  if (!std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return false;
  return std::all_of(classes.begin(), classes.end(),
                     [&](const VertexSet& cls) { return check_code(g, cls, kind).holds; });
}

std::string kind_name(KindSpec kind) {
  switch (kind.kind) {
    case CodeKind::Pds: return "pds";
    case CodeKind::OnePerfect: return "one-perfect";
    case CodeKind::Tpc: return "tpc";
    case CodeKind::Ptpc: return "ptpc";
    case CodeKind::DPerfect: return "d-perfect";
  }
  return "?";
}

}  // namespace latcodes
