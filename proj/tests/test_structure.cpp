#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "latcodes/io.hpp"
#include "latcodes/labelings.hpp"
#include "latcodes/sequence_codes.hpp"
#include "latcodes/structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace latcodes;

namespace {

SequenceWindow sequence_for(const Region& region, const std::vector<std::pair<int, int>>& ones) {
  auto need = required_indices(region);
  std::vector<int> bits(static_cast<std::size_t>(need->hi - need->lo + 1), 0);
  for (auto [i, b] : ones)
    if (i >= need->lo && i <= need->hi) bits[static_cast<std::size_t>(i - need->lo)] = b;
  return SequenceWindow(need->lo, bits);
}

const std::vector<std::pair<int, int>> kSampleOnes = {{0, 1}, {3, 1}, {4, 1}};

// Graph window plus vertex set for a lattice set restricted to `r`.
std::pair<Graph, VertexSet> as_window(const Region& r, const LatticeSet& s) {
  Graph w = make_window({r.x0, r.y0}, {r.x1, r.y1});
  std::vector<Point> pts;
  for (const auto& p : restrict_to(s, r)) pts.push_back({p[0], p[1]});
  return {w, to_vertex_set(w, pts)};
}

bool mentions(const std::string& text, const std::string& fragment) {
  return text.find(fragment) != std::string::npos;
}

}  // namespace

TEST(Duality, EntryRules) {
  PdsArray arr{{{{0, 0, 3, 2, FaceKind::Room}, {3, 0, 1, 2, FaceKind::Ladder}}}};
  PdsArray dual = duality_transform(arr);
  ASSERT_EQ(dual.rows.size(), 1u);
  ASSERT_EQ(dual.rows[0].size(), 2u);
  EXPECT_EQ(dual.rows[0][0], (PdsEntry{0, 0, 2, 1, FaceKind::Ladder}));
  EXPECT_EQ(dual.rows[0][1], (PdsEntry{2, -1, 2, 3, FaceKind::Room}));
}

TEST(Duality, RequiresRoomsOfSideTwo) {
  PdsArray arr{{{{0, 0, 3, 3, FaceKind::Room}}}};
  expect_error(ErrorKind::Applicability, [&] { duality_transform(arr); });
}

TEST(PdsArrayTest, NullSequenceHasTwoShapes) {
  Region window = Region::square(0, 19);
  LatticeSet s = psi_window(sequence_for(window, {}), window);
  PdsArray arr = pds_array(window, s);
  ASSERT_FALSE(arr.entries().empty());
  for (const PdsEntry& e : arr.entries()) {
    if (e.tag == FaceKind::Room) {
      EXPECT_EQ(std::pair(e.width, e.height), std::pair(3, 2));
    } else {
      EXPECT_EQ(std::pair(e.width, e.height), std::pair(1, 2));
    }
  }
  // Graph-window overload agrees.
  auto [g, vs] = as_window(window, s);
  EXPECT_EQ(pds_array(g, vs), arr);
}

TEST(PdsArrayTest, SampleSequenceFragments) {
  Region window{-4, -10, 15, 9};
  Region outer = window.grown(2);
  SequenceWindow seq = sequence_for(outer.grown(1), kSampleOnes);
  PdsArray primal = pds_array(window, psi_window(seq, window));
  PdsArray dual = pds_array(window, restrict_to(psi_dual(seq, outer), window));
  EXPECT_TRUE(mentions(format_pds_array(primal), "12 32 12 32 21 32")) << format_pds_array(primal);
  EXPECT_TRUE(mentions(format_pds_array(dual), "23 21 23 21 32 21")) << format_pds_array(dual);
  for (const PdsEntry& e : dual.entries())
    if (e.tag == FaceKind::Ladder) EXPECT_EQ(std::pair(e.width, e.height), std::pair(2, 1));
}

TEST(PdsArrayTest, DualityOnRandomSequences) {
  std::mt19937 rng(31);
  Region window = Region::square(0, 19);
  Region outer = window.grown(2);
  Region inner = window.grown(-4);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::pair<int, int>> ones;
    for (int i = -12; i <= 12; ++i) ones.emplace_back(i, static_cast<int>(rng() % 2));
    SequenceWindow seq = sequence_for(outer.grown(1), ones);
    PdsArray mapped = duality_transform(pds_array(window, psi_window(seq, window)));
    PdsArray dual = pds_array(window, restrict_to(psi_dual(seq, outer), window));
    auto inside = [&](const PdsArray& a) {
      std::vector<PdsEntry> out;
      for (const PdsEntry& e : a.entries())
        if (inner.contains({e.x, e.y}) && inner.contains({e.x + e.width - 1, e.y + e.height - 1})) out.push_back(e);
      return out;
    };
    EXPECT_EQ(inside(mapped), inside(dual)) << "trial " << t;
  }
}

TEST(PdsArrayTest, Errors) {
  expect_error(ErrorKind::WindowTooSmall, [] { pds_array(Region::square(0, 1), LatticeSet{}); });
  expect_error(ErrorKind::NotPds, [] { pds_array(Region::square(0, 5), LatticeSet{}); });
}

TEST(FLabeling, NullSequence) {
  // Projection of the null-sequence code onto Torus[4,4].
  Graph t = make_torus({4, 4});
  VertexSet s2 = to_vertex_set(t, std::vector<Point>{{0, 0}, {1, 0}, {2, 2}, {3, 2}});
  std::vector<int> labels = f_labeling(t, s2);
  EXPECT_EQ(labels[static_cast<std::size_t>(t.index({2, 1}))], 4);
  EXPECT_EQ(labels[static_cast<std::size_t>(t.index({0, 0}))], 2);
  EXPECT_EQ(labels[static_cast<std::size_t>(t.index({2, 0}))], 1);
  EXPECT_EQ(labels[static_cast<std::size_t>(t.index({3, 0}))], 3);  // wraps to (0,0)
  EXPECT_EQ(labels[static_cast<std::size_t>(t.index({2, 3}))], 0);
  EXPECT_EQ(render_labels_ascii(t, labels), "2213\n0044\n1322\n4400\n");
}

TEST(FLabeling, TotalExactlyOnPds) {
  std::mt19937 rng(41);
  for (const Graph& g : {make_torus({4, 4}), make_torus({5, 5}), make_rect_grid(3, 4)}) {
    for (int t = 0; t < 300; ++t) {
      VertexSet s;
      for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
        if (rng() % 3 == 0) s.push_back(v);
      bool pds = oracle::pds(g, s);
      try {
        std::vector<int> labels = f_labeling(g, s);
        EXPECT_TRUE(pds);
        auto in = oracle::membership(g, s);
        for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
          EXPECT_EQ(labels[static_cast<std::size_t>(v)] == 2, in[static_cast<std::size_t>(v)] != 0);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPds);
        EXPECT_FALSE(pds);
      }
    }
  }
  expect_error(ErrorKind::InvalidArgument, [] { f_labeling(make_prism(4), {}); });
}

TEST(FLabeling, LabelPointsAtCodeNeighbor) {
  Graph g = make_torus({5, 5});
  auto classes = class_indices(g, d_partition_torus(5, 5, 1));
  for (const VertexSet& s : classes) {
    std::vector<int> labels = f_labeling(g, s);
    auto in = oracle::membership(g, s);
    const Point steps[] = {{0, -1}, {-1, 0}, {0, 0}, {1, 0}, {0, 1}};
    for (Index v = 0; v < 25; ++v) {
      int l = labels[static_cast<std::size_t>(v)];
      ASSERT_GE(l, 0);
      ASSERT_LE(l, 4);
      EXPECT_TRUE(in[static_cast<std::size_t>(g.translate(v, steps[l]))]);
    }
  }
}

TEST(Circulant, Examples) {
  QuotientGraph k5 = circulant(5, {1, 2});
  EXPECT_EQ(k5.edges.size(), 10u);
  QuotientGraph c13 = circulant(13, {1, 8});
  EXPECT_EQ(c13.edges.size(), 26u);
  EXPECT_TRUE(c13.is_regular(4));
  QuotientGraph k7 = circulant(7, {1, 2, 3});
  EXPECT_EQ(k7.edges.size(), 21u);
  EXPECT_TRUE(k7.is_regular(6));
  expect_error(ErrorKind::InvalidArgument, [] { circulant(5, {5}); });
  expect_error(ErrorKind::InvalidArgument, [] { circulant(5, {}); });
}

TEST(Quotient, LabelPartitionsGiveCirculants) {
  for (int d = 1; d <= 3; ++d) {
    const int q = 2 * d * d + 2 * d + 1;
    Graph g = make_torus({q, q});
    auto classes = class_indices(g, d_partition_torus(q, q, d));
    QuotientGraph quotient = quotient_graph(g, classes);
    EXPECT_EQ(quotient, circulant(q, {1, 2 * d * d}));
    EXPECT_TRUE(quotient.is_regular(4));
  }
  for (int r = 2; r <= 4; ++r) {
    const int q = 2 * r + 1;
    std::vector<int> dims;
    for (int i = 1; i <= r; ++i) dims.push_back(q / std::gcd(q, i));
    Graph g = make_torus(dims);
    std::set<int> gens;
    for (int i = 1; i <= r; ++i) gens.insert(i);
    EXPECT_EQ(quotient_graph(g, class_indices(g, r_partition_torus(dims, r))), circulant(q, gens));
  }
}

TEST(Quotient, RejectsNonPartitions) {
  Graph g = make_torus({5, 5});
  auto classes = class_indices(g, d_partition_torus(5, 5, 1));
  auto missing = classes;
  missing.pop_back();
  expect_error(ErrorKind::NotPartition, [&] { quotient_graph(g, missing); });
  auto doubled = classes;
  doubled[0].push_back(doubled[1][0]);
  expect_error(ErrorKind::NotPartition, [&] { quotient_graph(g, doubled); });
}
