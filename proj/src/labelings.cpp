#include "latcodes/labelings.hpp"

#include <numeric>

#include "latcodes/error.hpp"
#include "latcodes/lattice.hpp"

namespace latcodes {

namespace {

void require_multiple(int value, int modulus, const std::string& what) {
  if (value % modulus != 0)
    throw Error(ErrorKind::Characterization,
                what + " = " + std::to_string(value) + " is not a multiple of " + std::to_string(modulus));
}

std::vector<CodeSet> classes_by_label(const Graph& g, int q, KindSpec kind, auto&& label) {
  std::vector<std::vector<Index>> buckets(static_cast<std::size_t>(q));
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
    buckets[static_cast<std::size_t>(label(g.point(v)))].push_back(v);
  std::vector<CodeSet> out;
  for (auto& b : buckets) out.push_back(make_code_set(g, kind, make_vertex_set(std::move(b))));
  return out;
}

}  // namespace

int d_label(int x, int y, const DLabeling& lab) {
  const long long q = lab.q();
  long long h = lab.orientation == Orientation::Standard ? x : -static_cast<long long>(x);
  long long v = 2LL * lab.d * lab.d * y;
  return static_cast<int>(((lab.offset + h + v) % q + q) % q);
}

std::vector<CodeSet> d_partition_torus(int m, int n, int d, Orientation orientation) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
  DLabeling lab{d, 0, orientation};
  require_multiple(m, lab.q(), "m");
  require_multiple(n, lab.q(), "n");
  Graph g = make_torus({m, n});
  return classes_by_label(g, lab.q(), KindSpec{CodeKind::DPerfect, d},
                          [&](const Point& p) { return d_label(p[0], p[1], lab); });
}

std::vector<CodeSet> s2_partition(int m, int n) {
  require_multiple(m, 4, "m");
  require_multiple(n, 4, "n");
  Graph g = make_torus({m, n});
  // Null-sequence code: even rows y, columns x = y or y + 1 mod 4.
  auto in_base = [](int x, int y) {
    return floor_mod(y, 2) == 0 && (floor_mod(x - y, 4) == 0 || floor_mod(x - y, 4) == 1);
  };
  const int shifts[4][2] = {{0, 0}, {0, 1}, {2, 0}, {2, 1}};
  std::vector<CodeSet> out;
  for (const auto& s : shifts) {
    std::vector<Index> members;
    for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
      const Point& p = g.point(v);
      if (in_base(p[0] - s[0], p[1] - s[1])) members.push_back(v);
    }
    out.push_back(make_code_set(g, KindSpec{CodeKind::Ptpc, 1}, make_vertex_set(std::move(members))));
  }
  return out;
}

CodeSet prism_ptpc(int n) {
  require_multiple(n, 6, "n");
  Graph g = make_prism(n);
  std::vector<Index> members;
  for (int i = 0; i < n / 6; ++i)
    for (const Point& p : {Point{0, 1 + 6 * i}, Point{0, 2 + 6 * i}, Point{1, 4 + 6 * i}, Point{1, 5 + 6 * i}})
      members.push_back(g.index(p));
  return make_code_set(g, KindSpec{CodeKind::Ptpc, 1}, make_vertex_set(std::move(members)));
}

std::vector<CodeSet> prism_one_perfect_partition(int n) {
  require_multiple(n, 4, "n");
  Graph g = make_prism(n);
  std::vector<Index> base;
  for (int i = 0; i < n / 4; ++i) {
    base.push_back(g.index({1, 4 * i}));
    base.push_back(g.index({0, 2 + 4 * i}));
  }
  std::vector<CodeSet> out;
  for (const Point& shift : {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}) {
    std::vector<Index> moved;
    for (Index v : base) moved.push_back(g.translate(v, shift));
    out.push_back(make_code_set(g, KindSpec{CodeKind::OnePerfect, 1}, make_vertex_set(std::move(moved))));
  }
  return out;
}

int r_label(const Point& v, const RLabeling& lab) {
  if (static_cast<int>(v.size()) != lab.r)
    throw Error(ErrorKind::ArityMismatch, "point arity differs from r = " + std::to_string(lab.r));
  const long long q = lab.q();
  long long sum = lab.r + 1;
  for (std::size_t i = 0; i < v.size(); ++i) sum += static_cast<long long>(i + 1) * v[i];
  long long res = (sum % q + q) % q;
  return res == 0 ? static_cast<int>(q) : static_cast<int>(res);
}

std::vector<CodeSet> r_partition_torus(const std::vector<int>& dims, int r) {
  if (r < 1 || r > kMaxRank) throw Error(ErrorKind::InvalidArgument, "r must lie in 1..4");
  if (static_cast<int>(dims.size()) != r)
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(r) + " dimensions");
  RLabeling lab{r};
  const int q = lab.q();
  for (int i = 1; i <= r; ++i) {
    int modulus = q / std::gcd(q, i);
    require_multiple(dims[static_cast<std::size_t>(i - 1)], modulus, "axis " + std::to_string(i) + " length");
  }
  Graph g = make_torus(dims);
  return classes_by_label(g, q, KindSpec{CodeKind::OnePerfect, 1},
                          [&](const Point& p) { return r_label(p, lab) % q; });
}

std::vector<VertexSet> class_indices(const Graph& g, const std::vector<CodeSet>& classes) {
  std::vector<VertexSet> out;
  out.reserve(classes.size());
  for (const CodeSet& c : classes) out.push_back(to_vertex_set(g, c.members));
  return out;
}

}  // namespace latcodes
