#include "latcodes/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "latcodes/error.hpp"

namespace latcodes {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::NotInGraph: return "not-in-graph";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::WindowTooSmall: return "window-too-small";
    case ErrorKind::Characterization: return "characterization-violation";
    case ErrorKind::NotPartition: return "not-a-partition";
    case ErrorKind::NotPds: return "not-a-pds";
    case ErrorKind::Applicability: return "applicability-violation";
    case ErrorKind::GuardExceeded: return "guard-exceeded";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Schema: return "schema-violation";
    case ErrorKind::ConstructionBug: return "construction-bug";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

void validate(const GraphSpec& spec) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidDimension, msg); };
  switch (spec.family) {
    case Family::Torus:
      if (spec.dims.empty() || spec.dims.size() > kMaxRank)
        fail("torus needs between 1 and 4 cycle lengths");
      for (int d : spec.dims)
        if (d < 3) fail("torus cycle length " + std::to_string(d) + " is below 3");
      break;
    case Family::RectGrid:
      if (spec.dims.size() != 2) fail("grid needs exactly two dimensions");
      for (int d : spec.dims)
        if (d < 1) fail("grid dimension " + std::to_string(d) + " is not positive");
      break;
    case Family::Prism:
      if (spec.dims.size() != 1) fail("prism needs exactly one cycle length");
      if (spec.dims[0] < 3) fail("prism cycle length " + std::to_string(spec.dims[0]) + " is below 3");
      break;
    case Family::Window:
      if (spec.lo.empty() || spec.lo.size() > kMaxRank || spec.lo.size() != spec.hi.size())
        fail("window bounds must have equal arity between 1 and 4");
      for (std::size_t i = 0; i < spec.lo.size(); ++i)
        if (spec.lo[i] > spec.hi[i]) fail("window bound lo > hi on axis " + std::to_string(i));
      break;
  }
}

}  // namespace

Graph::Graph(GraphSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  switch (spec_.family) {
    case Family::Torus:
    case Family::RectGrid:
      extent_ = spec_.dims;
      base_.assign(extent_.size(), 0);
      break;
    case Family::Prism:
      extent_ = {2, spec_.dims[0]};
      base_ = {0, 0};
      break;
    case Family::Window:
      base_ = spec_.lo;
      for (std::size_t i = 0; i < spec_.lo.size(); ++i)
        extent_.push_back(spec_.hi[i] - spec_.lo[i] + 1);
      break;
  }

  std::size_t total = 1;
  for (int e : extent_) total *= static_cast<std::size_t>(e);
  points_.reserve(total);
  Point p = base_;
  for (std::size_t n = 0; n < total; ++n) {
    points_.push_back(p);
    for (int axis = rank() - 1; axis >= 0; --axis) {
      auto a = static_cast<std::size_t>(axis);
      if (++p[a] < base_[a] + extent_[a]) break;
      p[a] = base_[a];
    }
  }

  adjacency_.resize(total);
  for (std::size_t v = 0; v < total; ++v) {
    std::vector<Index>& out = adjacency_[v];
    const Point& here = points_[v];
    for (int axis = 0; axis < rank(); ++axis) {
      auto a = static_cast<std::size_t>(axis);
      for (int step : {-1, 1}) {
        Point q = here;
        q[a] += step;
        bool wraps = spec_.family == Family::Torus ||
                     (spec_.family == Family::Prism && axis == 1);
        if (wraps) {
          q[a] = mod(q[a], extent_[a]);
        } else if (spec_.family == Family::Prism) {
          // rung: (i,j) ~ (1-i,j)
          if (step == 1) continue;
          q[a] = 1 - here[a];
        } else if (q[a] < base_[a] || q[a] >= base_[a] + extent_[a]) {
          continue;
        }
        out.push_back(linear(q));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    edges_ += out.size();
  }
  edges_ /= 2;
}

Index Graph::linear(const Point& p) const {
  Index idx = 0;
  for (std::size_t a = 0; a < extent_.size(); ++a) idx = idx * extent_[a] + (p[a] - base_[a]);
  return idx;
}

std::optional<Index> Graph::find(const Point& p) const {
  if (p.size() != extent_.size()) return std::nullopt;
  for (std::size_t a = 0; a < extent_.size(); ++a)
    if (p[a] < base_[a] || p[a] >= base_[a] + extent_[a]) return std::nullopt;
  return linear(p);
}

Index Graph::index(const Point& p) const {
  if (auto v = find(p)) return *v;
  std::ostringstream os;
  os << "point (";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ") is not a vertex of " << describe();
  throw Error(ErrorKind::NotInGraph, os.str());
}

bool Graph::adjacent(Index u, Index v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_axis(Index u, Index v) const {
  const Point& a = point(u);
  const Point& b = point(v);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return static_cast<int>(i);
  return -1;
}

bool Graph::is_doubled_edge(Index u, Index v) const {
  return spec_.family == Family::Prism && adjacent(u, v) && edge_axis(u, v) == 0;
}

Index Graph::translate(Index v, const Point& shift) const {
  if (spec_.family != Family::Torus && spec_.family != Family::Prism)
    throw Error(ErrorKind::InvalidArgument, "translation is defined on tori and prisms only");
  if (shift.size() != extent_.size())
    throw Error(ErrorKind::ArityMismatch, "translation vector has wrong arity");
  Point q = point(v);
  for (std::size_t a = 0; a < q.size(); ++a) q[a] = mod(q[a] + shift[a], extent_[a]);
  return linear(q);
}

std::string Graph::describe() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  };
  switch (spec_.family) {
    case Family::Torus: os << "Torus["; list(spec_.dims); os << "]"; break;
    case Family::RectGrid: os << "Grid["; list(spec_.dims); os << "]"; break;
    case Family::Prism: os << "Prism(" << spec_.dims[0] << ")"; break;
    case Family::Window:
      os << "Window[";
      list(spec_.lo);
      os << ";";
      list(spec_.hi);
      os << "]";
      break;
  }
  return os.str();
}

Graph make_torus(const std::vector<int>& dims) {
  return Graph(GraphSpec{Family::Torus, dims, {}, {}});
}

Graph make_prism(int n) { return Graph(GraphSpec{Family::Prism, {n}, {}, {}}); }

Graph make_rect_grid(int m, int n) { return Graph(GraphSpec{Family::RectGrid, {m, n}, {}, {}}); }

Graph make_window(const Point& lo, const Point& hi) {
  return Graph(GraphSpec{Family::Window, {}, lo, hi});
}

VertexSet ball(const Graph& g, Index v, int d) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.size())
    throw Error(ErrorKind::NotInGraph, "ball center is not a vertex");
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "ball radius must be non-negative");
  std::vector<int> dist(g.size(), -1);
  std::deque<Index> frontier{v};
  dist[static_cast<std::size_t>(v)] = 0;
  VertexSet out{v};
  while (!frontier.empty()) {
    Index u = frontier.front();
    frontier.pop_front();
    int du = dist[static_cast<std::size_t>(u)];
    if (du == d) continue;
    for (Index w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw >= 0) continue;
      dw = du + 1;
      out.push_back(w);
      frontier.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet ball(const Graph& g, const Point& v, int d) { return ball(g, g.index(v), d); }

Point project_point(const Point& point, const std::vector<int>& dims) {
  if (point.size() != dims.size())
    throw Error(ErrorKind::ArityMismatch, "point and dims differ in length");
  Point out(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (dims[i] <= 0) throw Error(ErrorKind::InvalidDimension, "projection modulus must be positive");
    out[i] = mod(point[i], dims[i]);
  }
  return out;
}

VertexSet make_vertex_set(std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

VertexSet to_vertex_set(const Graph& g, std::span<const Point> points) {
  std::vector<Index> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(g.index(p));
  return make_vertex_set(std::move(out));
}

std::vector<Point> to_points(const Graph& g, const VertexSet& s) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (Index v : s) out.push_back(g.point(v));
  return out;
}

}  // namespace latcodes
