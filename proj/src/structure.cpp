#include "latcodes/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "latcodes/error.hpp"
#include "latcodes/sequence_codes.hpp"

namespace latcodes {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      auto ai = static_cast<std::size_t>(a);
      parent[ai] = parent[static_cast<std::size_t>(parent[ai])];
      a = parent[ai];
    }
    return a;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::string describe(const LatticePoint& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

int overlap(const PdsEntry& a, const PdsEntry& b) {
  return std::min(a.y + a.height, b.y + b.height) - std::max(a.y, b.y);
}

// Best face in `pool` for which `fits` holds. Preference order: a face of
// the other kind (rooms and ladders alternate along a row), then larger
// vertical overlap with `e`, then the lower face (larger y) when `lower` is
// set and the upper one otherwise. Rows only ever descend to the right, so
// successors break ties downward and predecessors upward.
template <class Fits>
std::optional<std::size_t> best_match(const std::vector<PdsEntry>& pool, const PdsEntry& e, bool lower, Fits fits) {
  auto rank = [&](const PdsEntry& f) {
    return std::tuple(f.tag != e.tag, overlap(e, f), lower ? f.y : -f.y);
  };
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const PdsEntry& f = pool[i];
    if (!fits(f) || overlap(e, f) <= 0) continue;
    if (!best || rank(f) > rank(pool[*best])) best = i;
  }
  return best;
}

PdsArray chain_rows(std::vector<PdsEntry> faces) {
  std::sort(faces.begin(), faces.end());
  const std::size_t n = faces.size();
  std::vector<std::optional<std::size_t>> next(n), prev(n);
  for (std::size_t i = 0; i < n; ++i)
    next[i] = best_match(faces, faces[i], true, [&](const PdsEntry& f) { return f.x == faces[i].x + faces[i].width; });
  for (std::size_t j = 0; j < n; ++j)
    prev[j] = best_match(faces, faces[j], false, [&](const PdsEntry& e) { return e.x + e.width == faces[j].x; });
  std::vector<char> linked(n, 0);
  std::vector<std::optional<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (next[i] && prev[*next[i]] == i) {
      succ[i] = next[i];
      linked[*next[i]] = 1;
    }
  }
  PdsArray arr;
  for (std::size_t i = 0; i < n; ++i) {
    if (linked[i]) continue;
    std::vector<PdsEntry> row;
    for (std::optional<std::size_t> k = i; k; k = succ[*k]) row.push_back(faces[*k]);
    arr.rows.push_back(std::move(row));
  }
  std::sort(arr.rows.begin(), arr.rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.front().y, a.front().x) < std::pair(b.front().y, b.front().x);
  });
  return arr;
}

}  // namespace

std::vector<PdsEntry> PdsArray::entries() const {
  std::vector<PdsEntry> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

PdsArray pds_array(const Region& window, const LatticeSet& s) {
  if (window.width() < 3 || window.height() < 3)
    throw Error(ErrorKind::WindowTooSmall, "PDS-array needs a window of at least 3 x 3 vertices");
  if (auto bad = interior_pds_violation(restrict_to(s, window), window.grown(-1)))
    throw Error(ErrorKind::NotPds, "vertex " + describe(*bad) + " does not have exactly one code neighbor");

  // Unit squares have top-left corners in [x0, x1) x [y0, y1).
  const int cw = window.width() - 1, ch = window.height() - 1;
  auto cell_id = [&](int cx, int cy) { return (cx - window.x0) * ch + (cy - window.y0); };
  auto in_code = [&](int x, int y) { return s.count({x, y}) > 0; };
  auto intact = [&](int cx, int cy) {
    return !in_code(cx, cy) && !in_code(cx + 1, cy) && !in_code(cx, cy + 1) && !in_code(cx + 1, cy + 1);
  };

  DisjointSets faces(cw * ch);
  for (int cx = window.x0; cx < window.x1; ++cx) {
    for (int cy = window.y0; cy < window.y1; ++cy) {
      bool here = intact(cx, cy);
      // Right neighbor shares the edge (cx+1,cy)-(cx+1,cy+1); lower neighbor
      // shares (cx,cy+1)-(cx+1,cy+1).
      if (cx + 1 < window.x1) {
        bool deleted = in_code(cx + 1, cy) || in_code(cx + 1, cy + 1);
        if (deleted || (here && intact(cx + 1, cy))) faces.join(cell_id(cx, cy), cell_id(cx + 1, cy));
      }
      if (cy + 1 < window.y1) {
        bool deleted = in_code(cx, cy + 1) || in_code(cx + 1, cy + 1);
        if (deleted || (here && intact(cx, cy + 1))) faces.join(cell_id(cx, cy), cell_id(cx, cy + 1));
      }
    }
  }

  struct Box {
    int x0, y0, x1, y1, cells = 0;
    bool border = false, ladder = false;
  };
  std::map<int, Box> boxes;
  for (int cx = window.x0; cx < window.x1; ++cx) {
    for (int cy = window.y0; cy < window.y1; ++cy) {
      int root = faces.find(cell_id(cx, cy));
      auto [it, fresh] = boxes.try_emplace(root, Box{cx, cy, cx, cy});
      Box& b = it->second;
      b.x0 = std::min(b.x0, cx);
      b.y0 = std::min(b.y0, cy);
      b.x1 = std::max(b.x1, cx);
      b.y1 = std::max(b.y1, cy);
      ++b.cells;
      b.ladder = intact(cx, cy);
      if (cx == window.x0 || cy == window.y0 || cx == window.x1 - 1 || cy == window.y1 - 1) b.border = true;
    }
  }

  std::vector<PdsEntry> entries;
  for (const auto& [root, b] : boxes) {
    if (b.border) continue;
    PdsEntry e{b.x0, b.y0, b.x1 - b.x0 + 1, b.y1 - b.y0 + 1, b.ladder ? FaceKind::Ladder : FaceKind::Room};
    if (e.width * e.height != b.cells)
      throw Error(ErrorKind::InvalidArgument,
                  "face at " + describe({b.x0, b.y0}) + " is not a rectangle; PDS-array undefined");
    entries.push_back(e);
  }
  return chain_rows(std::move(entries));
}

PdsArray pds_array(const Graph& window, const VertexSet& s) {
  if (window.family() != Family::Window || window.rank() != 2)
    throw Error(ErrorKind::InvalidArgument, "PDS-arrays are computed on 2-D lattice windows");
  const GraphSpec& spec = window.spec();
  Region region{spec.lo[0], spec.lo[1], spec.hi[0], spec.hi[1]};
  LatticeSet pts;
  for (Index v : s) pts.insert({window.point(v)[0], window.point(v)[1]});
  return pds_array(region, pts);
}

PdsArray duality_transform(const PdsArray& arr) {
  PdsArray out;
  for (const auto& row : arr.rows) {
    std::vector<PdsEntry> moved;
    for (PdsEntry e : row) {
      if (e.tag == FaceKind::Room) {
        if (std::min(e.width, e.height) != 2)
          throw Error(ErrorKind::Applicability, "room " + std::to_string(e.width) + "x" +
                                                    std::to_string(e.height) + " has no side of length 2");
        e.width -= 1;
        e.height -= 1;
      } else {
        e.x -= 1;
        e.y -= 1;
        e.width += 1;
        e.height += 1;
      }
      e.tag = std::min(e.width, e.height) == 1 ? FaceKind::Ladder : FaceKind::Room;
      moved.push_back(e);
    }
    out.rows.push_back(std::move(moved));
  }
  return out;
}

std::vector<int> f_labeling(const Graph& g, const VertexSet& s) {
  if (!g.is_two_dimensional() || g.family() == Family::Prism)
    throw Error(ErrorKind::InvalidArgument, "f-labeling needs a torus, grid or window in two dimensions");
  std::vector<char> member(g.size(), 0);
  for (Index v : s) member[static_cast<std::size_t>(v)] = 1;
  auto step = [&](Index v, int dx, int dy) -> std::optional<Index> {
    if (g.family() == Family::Torus) return g.translate(v, {dx, dy});
    Point p = g.point(v);
    p[0] += dx;
    p[1] += dy;
    return g.find(p);
  };
  const int dirs[4][3] = {{0, -1, 0}, {-1, 0, 1}, {1, 0, 3}, {0, 1, 4}};
  std::vector<int> labels(g.size(), -1);
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    auto vi = static_cast<std::size_t>(v);
    if (member[vi]) {
      labels[vi] = 2;
      continue;
    }
    int hits = 0;
    for (const auto& d : dirs) {
      auto u = step(v, d[0], d[1]);
      if (u && member[static_cast<std::size_t>(*u)]) {
        ++hits;
        labels[vi] = d[2];
      }
    }
    if (hits != 1) {
      const Point& p = g.point(v);
      throw Error(ErrorKind::NotPds, "vertex (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ") has " +
                                         std::to_string(hits) + " code neighbors");
    }
  }
  return labels;
}

std::vector<int> QuotientGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(q), 0);
  for (const auto& [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

bool QuotientGraph::is_regular(int k) const {
  auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; });
}

QuotientGraph quotient_graph(const Graph& g, std::span<const VertexSet> classes) {
  std::vector<int> owner(g.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Index v : classes[c]) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.size())
        throw Error(ErrorKind::NotPartition, "class " + std::to_string(c) + " names a vertex outside the graph");
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o != -1) throw Error(ErrorKind::NotPartition, "vertex lies in classes " + std::to_string(o) + " and " + std::to_string(c));
      o = static_cast<int>(c);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw Error(ErrorKind::NotPartition, "some vertex lies in no class");
  QuotientGraph out;
  out.q = static_cast<int>(classes.size());
  for (Index u = 0; u < static_cast<Index>(g.size()); ++u) {
    for (Index v : g.neighbors(u)) {
      int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
      if (a != b) out.edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return out;
}

QuotientGraph circulant(int q, const std::set<int>& gens) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "circulant needs q >= 2");
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "circulant needs at least one generator");
  QuotientGraph out;
  out.q = q;
  for (int s : gens) {
    if (floor_mod(s, q) == 0) throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(s) + " is 0 mod q");
    for (int i = 0; i < q; ++i) {
      int j = floor_mod(i + s, q);
      out.edges.insert({std::min(i, j), std::max(i, j)});
    }
  }
  return out;
}

}  // namespace latcodes
