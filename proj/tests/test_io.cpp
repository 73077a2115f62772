#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>

#include "latcodes/io.hpp"
#include "latcodes/labelings.hpp"
#include "support.hpp"

using namespace latcodes;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "latcodes_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Balanced tags and finite numeric attributes.
void expect_well_formed_svg(const std::string& svg) {
  ASSERT_NE(svg.find("<svg"), std::string::npos);
  std::vector<std::string> stack;
  std::regex tag(R"(<(/?)([a-zA-Z]+)([^>]*?)(/?)>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1] == "/") {
      ASSERT_FALSE(stack.empty());
      EXPECT_EQ(stack.back(), m[2].str());
      stack.pop_back();
    } else if (m[4] != "/") {
      stack.push_back(m[2]);
    }
  }
  EXPECT_TRUE(stack.empty());
  std::regex attr(R"(\b(x|y|x1|y1|x2|y2|cx|cy|r|width|height)=\"([^\"]*)\")");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
    double v = std::stod((*it)[2].str());
    EXPECT_TRUE(std::isfinite(v));
  }
}

CodeSet random_code(std::mt19937& rng) {
  GraphSpec spec;
  switch (rng() % 4) {
    case 0: spec = {Family::Torus, {3 + static_cast<int>(rng() % 5), 3 + static_cast<int>(rng() % 5)}, {}, {}}; break;
    case 1: spec = {Family::Torus, {3, 4, 3 + static_cast<int>(rng() % 3)}, {}, {}}; break;
    case 2: spec = {Family::Prism, {3 + static_cast<int>(rng() % 9)}, {}, {}}; break;
    default: {
      int x0 = static_cast<int>(rng() % 7) - 3, y0 = static_cast<int>(rng() % 7) - 3;
      spec = {Family::Window, {}, {x0, y0}, {x0 + 1 + static_cast<int>(rng() % 4), y0 + 2}};
    }
  }
  Graph g(spec);
  VertexSet s;
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
    if (rng() % 3 == 0) s.push_back(v);
  const KindSpec kinds[] = {{CodeKind::Pds, 1}, {CodeKind::Tpc, 1}, {CodeKind::DPerfect, 2}, {CodeKind::OnePerfect, 1}};
  return make_code_set(g, kinds[rng() % 4], s);
}

}  // namespace

TEST(Json, RoundTripS2) {
  CodeSet s2 = s2_partition(4, 4)[0];
  fs::path path = temp_file("s2.json");
  write_code(s2, path);
  EXPECT_EQ(read_code(path), s2);
  Json j = code_to_json(s2);
  EXPECT_EQ(j["graph"]["family"], "torus");
  EXPECT_EQ(j["kind"], "ptpc");
  EXPECT_EQ(j["members"][0], Json::array({0, 0}));
}

TEST(Json, RandomRoundTrips) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 100; ++i) {
    CodeSet c = random_code(rng);
    fs::path path = temp_file("random.json");
    write_code(c, path);
    EXPECT_EQ(read_code(path), c);
    EXPECT_EQ(code_from_json(code_to_json(c)), c);
  }
}

TEST(Json, Rejections) {
  Json bad = {{"graph", {{"family", "torus"}, {"dims", {4, 4}}}}, {"kind", "tpc"}, {"members", {{9, 9}}}};
  expect_error(ErrorKind::NotInGraph, [&] { code_from_json(bad); });
  bad["members"] = {{1, 1, 1}};
  expect_error(ErrorKind::ArityMismatch, [&] { code_from_json(bad); });
  bad["members"] = Json::array();
  bad["kind"] = "perfect-ish";
  expect_error(ErrorKind::Parse, [&] { code_from_json(bad); });
  expect_error(ErrorKind::Schema, [] { code_from_json(Json::array()); });
  expect_error(ErrorKind::Schema, [] { code_from_json(Json{{"kind", "tpc"}}); });

  fs::path path = temp_file("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(read_code(path), Error);
  EXPECT_THROW(read_code(temp_file("missing-file.json")), Error);
}

TEST(Json, MembersAreSortedOnWrite) {
  Graph g = make_torus({4, 4});
  CodeSet c{g.spec(), {CodeKind::Pds, 1}, {{3, 3}, {0, 1}, {2, 0}}};
  Json j = code_to_json(c);
  EXPECT_EQ(j["members"], Json::parse("[[0,1],[2,0],[3,3]]"));
}

TEST(Descriptors, Parse) {
  EXPECT_EQ(parse_graph_descriptor("torus:4,6"), (GraphSpec{Family::Torus, {4, 6}, {}, {}}));
  EXPECT_EQ(parse_graph_descriptor("prism:6"), (GraphSpec{Family::Prism, {6}, {}, {}}));
  EXPECT_EQ(parse_graph_descriptor("grid:3,5"), (GraphSpec{Family::RectGrid, {3, 5}, {}, {}}));
  EXPECT_EQ(parse_graph_descriptor("window:-1,-2:3,4"), (GraphSpec{Family::Window, {}, {-1, -2}, {3, 4}}));
  EXPECT_THROW(parse_graph_descriptor("torus:4,x"), Error);
  EXPECT_THROW(parse_graph_descriptor("cube:3"), Error);
  EXPECT_THROW(parse_graph_descriptor("torus:2,4"), Error);
  EXPECT_EQ(parse_kind("tpc"), (KindSpec{CodeKind::Tpc, 1}));
  EXPECT_EQ(parse_kind("d-perfect", 3), (KindSpec{CodeKind::DPerfect, 3}));
  expect_error(ErrorKind::Parse, [] { parse_kind("TPC"); });
}

TEST(Ascii, CodesAndLabels) {
  EXPECT_EQ(render_ascii(make_torus({3, 3}), {}), "...\n...\n...\n");
  Graph g = make_torus({4, 4});
  EXPECT_EQ(render_ascii(g, class_indices(g, s2_partition(4, 4))[0]), "**..\n....\n..**\n....\n");
  EXPECT_EQ(render_ascii(Region::square(0, 2), LatticeSet{{1, 1}}), "...\n.*.\n...\n");

  Graph t = make_torus({5, 5});
  std::vector<int> labels(25);
  for (Index v = 0; v < 25; ++v) labels[static_cast<std::size_t>(v)] = d_label(t.point(v)[0], t.point(v)[1], {1});
  std::string text = render_labels_ascii(t, labels);
  std::vector<std::string> rows;
  for (std::size_t a = 0, b; (b = text.find('\n', a)) != std::string::npos; a = b + 1) rows.push_back(text.substr(a, b - a));
  ASSERT_EQ(rows.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    std::set<char> row(rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end()), col;
    for (const auto& r : rows) col.insert(r[static_cast<std::size_t>(i)]);
    EXPECT_EQ(row.size(), 5u);
    EXPECT_EQ(col.size(), 5u);
  }
}

TEST(Ascii, LabelArrayIsDeterministic) {
  PeriodWord w = PeriodWord::parse("00011101");
  std::string a = render_ascii(m_array(w));
  EXPECT_EQ(a, render_ascii(m_array(w)));
  EXPECT_EQ(a.substr(0, 33), "64206420642064275310642753175310\n");
}

TEST(Svg, S2Picture) {
  Graph g = make_torus({4, 4});
  VertexSet s = class_indices(g, s2_partition(4, 4))[0];
  std::string svg = render_svg(g, s, {});
  expect_well_formed_svg(svg);
  EXPECT_EQ(count_of(svg, "<circle"), 4);
  // No segment may end at a code vertex.
  std::regex line(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
  std::regex circle(R"re(<circle cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  std::set<std::pair<double, double>> dots;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it)
    dots.insert({std::stod((*it)[1]), std::stod((*it)[2])});
  int lines = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    ++lines;
    EXPECT_FALSE(dots.count({std::stod((*it)[1]), std::stod((*it)[2])}));
    EXPECT_FALSE(dots.count({std::stod((*it)[3]), std::stod((*it)[4])}));
  }
  EXPECT_GT(lines, 0);
  EXPECT_EQ(svg, render_svg(g, s, {}));
}

TEST(Svg, LabelsLatticeAndErrors) {
  Graph g = make_torus({5, 5});
  VertexSet s = class_indices(g, d_partition_torus(5, 5, 1))[0];
  std::vector<int> labels(25, 3);
  RenderSpec spec;
  spec.show_labels = true;
  std::string svg = render_svg(g, s, spec, &labels);
  expect_well_formed_svg(svg);
  EXPECT_EQ(count_of(svg, "<text"), 25);

  LatticeSet lat = {{0, 0}, {1, 0}, {4, 0}, {5, 0}, {2, 2}, {3, 2}};
  RenderSpec win;
  win.window = Region::square(-1, 6);
  std::string pic = render_svg(lat, win);
  expect_well_formed_svg(pic);
  EXPECT_EQ(count_of(pic, "<circle"), 6);

  RenderSpec zero;
  zero.cell_size = 0;
  EXPECT_THROW(render_svg(g, s, zero), Error);
  zero.cell_size = std::nan("");
  EXPECT_THROW(render_svg(lat, zero), Error);
  EXPECT_THROW(render_svg(make_torus({3, 3, 3}), {}, {}), Error);
}

TEST(PdsArrayText, Format) {
  PdsArray arr{{{{0, 0, 3, 2, FaceKind::Room}, {3, 0, 1, 2, FaceKind::Ladder}},
                {{1, 4, 12, 2, FaceKind::Room}}}};
  EXPECT_EQ(format_pds_array(arr), "32 12\n(12,2)\n");
  Json j = pds_array_to_json(arr);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0].size(), 2u);
  EXPECT_EQ(j["rows"][0][1]["tag"], "ladder");
  EXPECT_EQ(j["rows"][1][0]["width"], 12);
}
