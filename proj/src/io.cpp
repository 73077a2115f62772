#include "latcodes/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "latcodes/error.hpp"

namespace latcodes {

namespace {

const char* family_token(Family f) {
  switch (f) {
    case Family::Torus: return "torus";
    case Family::RectGrid: return "grid";
    case Family::Prism: return "prism";
    case Family::Window: return "window";
  }
  return "?";
}

Family family_from_token(std::string_view t) {
  if (t == "torus") return Family::Torus;
  if (t == "grid") return Family::RectGrid;
  if (t == "prism") return Family::Prism;
  if (t == "window") return Family::Window;
  throw Error(ErrorKind::Parse, "unknown graph family '" + std::string(t) + "'");
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a comma-separated integer list");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class T>
T json_get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Schema, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Schema, std::string("field '") + key + "' has the wrong type");
  }
}

struct Box {
  int x0, y0, x1, y1;
};

Box bounding_box(const Graph& g) {
  if (!g.is_two_dimensional()) throw Error(ErrorKind::InvalidArgument, "pictures need a 2-D graph");
  Box b{g.point(0)[0], g.point(0)[1], g.point(0)[0], g.point(0)[1]};
  for (Index v = 0; v < static_cast<Index>(g.size()); ++v) {
    const Point& p = g.point(v);
    b.x0 = std::min(b.x0, p[0]);
    b.y0 = std::min(b.y0, p[1]);
    b.x1 = std::max(b.x1, p[0]);
    b.y1 = std::max(b.y1, p[1]);
  }
  return b;
}

char digit(int label) {
  if (label < 0 || label > 35) return '?';
  return static_cast<char>(label < 10 ? '0' + label : 'a' + (label - 10));
}

void check_render_spec(const RenderSpec& spec) {
  if (!(spec.cell_size > 0) || !std::isfinite(spec.cell_size))
    throw Error(ErrorKind::InvalidArgument, "cell size must be a positive number");
  if (spec.window && spec.window->empty()) throw Error(ErrorKind::InvalidArgument, "render window is empty");
}

class SvgWriter {
 public:
  SvgWriter(const Box& box, double cell) : box_(box), cell_(cell) {}

  double sx(int x) const { return (x - box_.x0 + 1) * cell_; }
  double sy(int y) const { return (y - box_.y0 + 1) * cell_; }

  void line(int xa, int ya, int xb, int yb) {
    body_ << "  <line x1=\"" << sx(xa) << "\" y1=\"" << sy(ya) << "\" x2=\"" << sx(xb) << "\" y2=\"" << sy(yb)
          << "\"/>\n";
  }
  void dot(int x, int y) {
    dots_ << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << cell_ * 0.22 << "\"/>\n";
  }
  void text(int x, int y, int label) {
    text_ << "  <text x=\"" << sx(x) + cell_ * 0.12 << "\" y=\"" << sy(y) - cell_ * 0.12 << "\">" << label
          << "</text>\n";
  }

  std::string finish() const {
    double w = (box_.x1 - box_.x0 + 2) * cell_, h = (box_.y1 - box_.y0 + 2) * cell_;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << " <g stroke=\"black\" stroke-width=\"1\">\n"
       << body_.str() << " </g>\n"
       << " <g fill=\"black\">\n"
       << dots_.str() << " </g>\n"
       << " <g font-family=\"monospace\" font-size=\"" << cell_ * 0.4 << "\" fill=\"gray\">\n"
       << text_.str() << " </g>\n"
       << "</svg>\n";
    return os.str();
  }

 private:
  Box box_;
  double cell_;
  std::ostringstream body_, dots_, text_;
};

}  // namespace

Json graph_to_json(const GraphSpec& spec) {
  Json j;
  j["family"] = family_token(spec.family);
  switch (spec.family) {
    case Family::Torus: j["dims"] = spec.dims; break;
    case Family::RectGrid:
      j["m"] = spec.dims.at(0);
      j["n"] = spec.dims.at(1);
      break;
    case Family::Prism: j["n"] = spec.dims.at(0); break;
    case Family::Window:
      j["lo"] = spec.lo;
      j["hi"] = spec.hi;
      break;
  }
  return j;
}

GraphSpec graph_from_json(const Json& j) {
  GraphSpec spec;
  spec.family = family_from_token(json_get<std::string>(j, "family"));
  switch (spec.family) {
    case Family::Torus: spec.dims = json_get<std::vector<int>>(j, "dims"); break;
    case Family::RectGrid: spec.dims = {json_get<int>(j, "m"), json_get<int>(j, "n")}; break;
    case Family::Prism: spec.dims = {json_get<int>(j, "n")}; break;
    case Family::Window:
      spec.lo = json_get<std::vector<int>>(j, "lo");
      spec.hi = json_get<std::vector<int>>(j, "hi");
      break;
  }
  return spec;
}

Json code_to_json(const CodeSet& code) {
  Json j;
  j["graph"] = graph_to_json(code.graph);
  j["kind"] = kind_name(code.kind);
  if (code.kind.kind == CodeKind::DPerfect) j["d"] = code.kind.d;
  std::vector<Point> members = code.members;
  std::sort(members.begin(), members.end());
  j["members"] = members;
  return j;
}

CodeSet code_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Schema, "code file must hold a JSON object");
  if (!j.contains("graph")) throw Error(ErrorKind::Schema, "missing field 'graph'");
  CodeSet code;
  code.graph = graph_from_json(j.at("graph"));
  int d = j.contains("d") ? json_get<int>(j, "d") : 1;
  code.kind = parse_kind(json_get<std::string>(j, "kind"), d);
  Graph g(code.graph);
  std::vector<Index> members;
  for (const Point& p : json_get<std::vector<Point>>(j, "members")) {
    if (static_cast<int>(p.size()) != g.rank())
      throw Error(ErrorKind::ArityMismatch, "member arity differs from the graph's rank");
    members.push_back(g.index(p));
  }
  return make_code_set(g, code.kind, make_vertex_set(std::move(members)));
}

void write_code(const CodeSet& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << code_to_json(code).dump(2) << "\n";
  if (!out) throw Error(ErrorKind::InvalidArgument, "failed writing " + path.string());
}

CodeSet read_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return code_from_json(j);
}

GraphSpec parse_graph_descriptor(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::Parse, "graph descriptor '" + std::string(text) + "' lacks family:dims");
  GraphSpec spec;
  spec.family = family_from_token(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  if (spec.family == Family::Window) {
    auto mid = rest.find(':');
    if (mid == std::string_view::npos) throw Error(ErrorKind::Parse, "window descriptor needs lo:hi");
    spec.lo = parse_int_list(rest.substr(0, mid));
    spec.hi = parse_int_list(rest.substr(mid + 1));
  } else {
    spec.dims = parse_int_list(rest);
  }
  Graph check(spec);  // validates dimensions
  return spec;
}

KindSpec parse_kind(std::string_view text, int d) {
  if (text == "pds") return {CodeKind::Pds, 1};
  if (text == "one-perfect") return {CodeKind::OnePerfect, 1};
  if (text == "tpc") return {CodeKind::Tpc, 1};
  if (text == "ptpc") return {CodeKind::Ptpc, 1};
  if (text == "d-perfect") {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
    return {CodeKind::DPerfect, d};
  }
  throw Error(ErrorKind::Parse, "unknown code kind '" + std::string(text) + "'");
}

Json pds_array_to_json(const PdsArray& arr) {
  Json rows = Json::array();
  for (const auto& row : arr.rows) {
    Json r = Json::array();
    for (const PdsEntry& e : row)
      r.push_back({{"x", e.x}, {"y", e.y}, {"width", e.width}, {"height", e.height},
                   {"tag", e.tag == FaceKind::Room ? "room" : "ladder"}});
    rows.push_back(std::move(r));
  }
  return Json{{"rows", rows}};
}

std::string format_pds_array(const PdsArray& arr) {
  std::string out;
  for (const auto& row : arr.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const PdsEntry& e = row[i];
      if (i) out += ' ';
      if (e.width < 10 && e.height < 10)
        out += std::to_string(e.width) + std::to_string(e.height);
      else
        out += "(" + std::to_string(e.width) + "," + std::to_string(e.height) + ")";
    }
    out += '\n';
  }
  return out;
}

Json quotient_to_json(const QuotientGraph& q) {
  Json edges = Json::array();
  for (const auto& [a, b] : q.edges) edges.push_back({a, b});
  return Json{{"q", q.q}, {"edges", edges}};
}

std::string render_ascii(const Graph& g, const VertexSet& s) {
  std::vector<int> labels(g.size(), 0);
  for (Index v : s) labels[static_cast<std::size_t>(v)] = 1;
  std::string out = render_labels_ascii(g, labels);
  std::replace(out.begin(), out.end(), '0', '.');
  std::replace(out.begin(), out.end(), '1', '*');
  return out;
}

std::string render_ascii(const Region& window, const LatticeSet& s) {
  if (window.empty()) throw Error(ErrorKind::InvalidArgument, "render window is empty");
  std::string out;
  for (int y = window.y0; y <= window.y1; ++y) {
    for (int x = window.x0; x <= window.x1; ++x) out += s.count({x, y}) ? '*' : '.';
    out += '\n';
  }
  return out;
}

std::string render_labels_ascii(const Graph& g, const std::vector<int>& labels) {
  Box b = bounding_box(g);
  if (labels.size() != g.size()) throw Error(ErrorKind::InvalidArgument, "one label per vertex expected");
  std::string out;
  for (int y = b.y0; y <= b.y1; ++y) {
    for (int x = b.x0; x <= b.x1; ++x) {
      auto v = g.find({x, y});
      out += v ? digit(labels[static_cast<std::size_t>(*v)]) : ' ';
    }
    out += '\n';
  }
  return out;
}

std::string render_ascii(const LabelArray& arr) {
  std::string out;
  for (const auto& row : arr.rows) {
    for (int label : row) out += digit(label);
    out += '\n';
  }
  return out;
}

std::string render_svg(const Graph& g, const VertexSet& s, const RenderSpec& spec, const std::vector<int>* labels) {
  check_render_spec(spec);
  Box box = bounding_box(g);
  if (labels && labels->size() != g.size()) throw Error(ErrorKind::InvalidArgument, "one label per vertex expected");
  std::vector<char> member(g.size(), 0);
  for (Index v : s) member[static_cast<std::size_t>(v)] = 1;
  SvgWriter svg(box, spec.cell_size);
  for (Index u = 0; u < static_cast<Index>(g.size()); ++u) {
    if (member[static_cast<std::size_t>(u)]) continue;
    const Point& a = g.point(u);
    for (Index v : g.neighbors(u)) {
      if (v < u || member[static_cast<std::size_t>(v)]) continue;
      const Point& b = g.point(v);
      if (std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]) != 1) continue;  // wrap-around
      svg.line(a[0], a[1], b[0], b[1]);
    }
  }
  for (Index v : s) svg.dot(g.point(v)[0], g.point(v)[1]);
  if (spec.show_labels && labels)
    for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
      svg.text(g.point(v)[0], g.point(v)[1], (*labels)[static_cast<std::size_t>(v)]);
  return svg.finish();
}

std::string render_svg(const LatticeSet& s, const RenderSpec& spec) {
  check_render_spec(spec);
  Region w;
  if (spec.window) {
    w = *spec.window;
  } else if (!s.empty()) {
    w = {s.begin()->at(0), s.begin()->at(1), s.begin()->at(0), s.begin()->at(1)};
    for (const auto& p : s) {
      w.x0 = std::min(w.x0, p[0]);
      w.y0 = std::min(w.y0, p[1]);
      w.x1 = std::max(w.x1, p[0]);
      w.y1 = std::max(w.y1, p[1]);
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "empty set needs an explicit render window");
  }
  SvgWriter svg({w.x0, w.y0, w.x1, w.y1}, spec.cell_size);
  for (int x = w.x0; x <= w.x1; ++x) {
    for (int y = w.y0; y <= w.y1; ++y) {
      if (s.count({x, y})) continue;
      if (x < w.x1 && !s.count({x + 1, y})) svg.line(x, y, x + 1, y);
      if (y < w.y1 && !s.count({x, y + 1})) svg.line(x, y, x, y + 1);
    }
  }
  for (const auto& p : s)
    if (w.contains(p)) svg.dot(p[0], p[1]);
  return svg.finish();
}

}  // namespace latcodes
