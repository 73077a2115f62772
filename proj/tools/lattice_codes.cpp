// lattice-codes: construct, verify, enumerate, analyze and render codes.
// Exit status: 0 true/success, 1 false/absent, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "latcodes/enumeration.hpp"
#include "latcodes/error.hpp"
#include "latcodes/io.hpp"
#include "latcodes/labelings.hpp"
#include "latcodes/sequence_codes.hpp"
#include "latcodes/structure.hpp"
#include "latcodes/theorems.hpp"

using namespace latcodes;

namespace {

constexpr int kTrue = 0, kFalse = 1, kUsage = 2;

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::vector<int> pair_dims(const std::vector<int>& dims) {
  if (dims.size() != 2) throw Error(ErrorKind::InvalidArgument, "--dims takes exactly two lengths here");
  return dims;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
  f << text;
}

const CodeSet& pick_class(const std::vector<CodeSet>& classes, int k) {
  if (k < 0 || k >= static_cast<int>(classes.size()))
    throw Error(ErrorKind::InvalidArgument, "--class must lie in 0.." + std::to_string(classes.size() - 1));
  return classes[static_cast<std::size_t>(k)];
}

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect codes in lattice graphs, tori and prisms"};
  app.require_subcommand(1);
  std::function<int()> action;

  // construct
  auto* construct = app.add_subcommand("construct", "build a code and print it as JSON");
  construct->require_subcommand(1);
  construct->fallthrough();
  std::string out;
  int cls = 0;
  construct->add_option("--out", out, "write JSON here instead of stdout");
  construct->add_option("--class", cls, "class index for partition constructions");
  auto emit_code = [&](const CodeSet& c) {
    emit(code_to_json(c).dump(2) + "\n", out);
    return kTrue;
  };

  std::string period;
  auto* c_phi = construct->add_subcommand("phi", "projection of the periodic sequence code onto C_p x C_p");
  c_phi->add_option("--period", period, "binary period word")->required();
  c_phi->callback([&] { action = [&] { return emit_code(phi(PeriodWord::parse(period))); }; });

  int d = 1;
  bool mirror = false;
  std::vector<int> dims;
  auto* c_d = construct->add_subcommand("d-perfect", "label class of the d-perfect labeling");
  c_d->add_option("--d", d)->required();
  c_d->add_option("--dims", dims)->required()->delimiter(',');
  c_d->add_flag("--mirror", mirror, "mirror-image labeling");
  c_d->callback([&] {
    action = [&] {
      auto dm = pair_dims(dims);
      return emit_code(pick_class(d_partition_torus(dm[0], dm[1], d, mirror ? Orientation::Mirror : Orientation::Standard), cls));
    };
  });

  int r = 2;
  auto* c_r = construct->add_subcommand("r-perfect", "label class of the r-dimensional 1-perfect labeling");
  c_r->add_option("--r", r)->required();
  c_r->add_option("--dims", dims)->required()->delimiter(',');
  c_r->callback([&] { action = [&] { return emit_code(pick_class(r_partition_torus(dims, r), cls)); }; });

  auto* c_s2 = construct->add_subcommand("s2", "class of the four-class PTPC partition of C_m x C_n");
  c_s2->add_option("--dims", dims)->required()->delimiter(',');
  c_s2->callback([&] {
    action = [&] {
      auto dm = pair_dims(dims);
      return emit_code(pick_class(s2_partition(dm[0], dm[1]), cls));
    };
  });

  int n = 0;
  auto* c_ptpc = construct->add_subcommand("prism-tpc", "TPC of the prism over C_n, 6 | n");
  c_ptpc->add_option("--n", n)->required();
  c_ptpc->callback([&] { action = [&] { return emit_code(prism_ptpc(n)); }; });

  auto* c_p1 = construct->add_subcommand("prism-one-perfect", "class of the 1-perfect 4-partition of the prism, 4 | n");
  c_p1->add_option("--n", n)->required();
  c_p1->callback([&] { action = [&] { return emit_code(pick_class(prism_one_perfect_partition(n), cls)); }; });

  // verify
  std::string file;
  auto* verify = app.add_subcommand("verify", "check the claim stored in a code file");
  verify->add_option("--file", file)->required();
  verify->callback([&] {
    action = [&] {
      CodeSet code = read_code(file);
      Verdict v = check_code(code);
      std::cout << kind_name(code.kind) << ": " << (v.holds ? "true" : "false") << "\n";
      if (v.violation)
        std::cout << "witness: vertex " << point_str(v.violation->vertex) << " observed " << v.violation->observed
                  << ", expected " << v.violation->expected << "\n";
      return v.holds ? kTrue : kFalse;
    };
  });

  // enumerate
  std::string graph_desc, kind_text;
  bool count_only = false, orbits = false;
  std::uint64_t limit = 0;
  int threads = 1;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive search for codes");
  enumerate->add_option("--graph", graph_desc, "torus:4,6 | grid:m,n | prism:n | window:x0,y0:x1,y1")->required();
  enumerate->add_option("--kind", kind_text, "pds | one-perfect | tpc | ptpc | d-perfect")->required();
  enumerate->add_option("--d", d, "radius for d-perfect");
  enumerate->add_option("--limit", limit, "stop after this many codes")->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--orbits", orbits, "report translation orbit representatives");
  enumerate->add_option("--parallel", threads, "worker threads")->check(CLI::PositiveNumber);
  enumerate->callback([&] {
    action = [&] {
      Graph g(parse_graph_descriptor(graph_desc));
      SearchConfig cfg;
      cfg.kind = parse_kind(kind_text, d);
      cfg.count_only = count_only;
      if (limit > 0) cfg.limit = limit;
      cfg.parallel = threads;
      if (orbits) cfg.symmetry = Symmetry::TranslationOrbits;
      SearchResult res = enumerate_codes(g, cfg);
      if (count_only) {
        std::cout << res.count << "\n";
      } else {
        std::cout << "count: " << res.count << "\n";
        if (orbits) std::cout << "orbits: " << res.orbit_count << "\n";
        std::cout << "nodes: " << res.nodes_explored << "\n";
        for (const VertexSet& s : res.solutions) {
          std::string line;
          for (Index v : s) line += point_str(g.point(v)) + " ";
          if (!line.empty()) line.pop_back();
          std::cout << line << "\n";
        }
      }
      return res.count > 0 ? kTrue : kFalse;
    };
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "structural views of codes");
  analyze->require_subcommand(1);

  bool dual = false;
  std::vector<int> window{0, 0, 19, 19};
  auto* a_pds = analyze->add_subcommand("pds-array", "rooms and ladders of the periodic sequence code");
  a_pds->add_option("--period", period)->required();
  a_pds->add_flag("--dual", dual, "use the room-ladder dual code");
  a_pds->add_option("--window", window, "x0,y0,x1,y1")->delimiter(',')->expected(4);
  bool json_out = false;
  a_pds->add_flag("--json", json_out);
  a_pds->callback([&] {
    action = [&] {
      Region w{window[0], window[1], window[2], window[3]};
      PeriodWord word = PeriodWord::parse(period);
      auto need = required_indices(w.grown(2));
      SequenceWindow seq = SequenceWindow::periodic(word, need->lo, need->hi);
      LatticeSet s = dual ? psi_dual(seq, w) : psi_window(seq, w);
      PdsArray arr = pds_array(w, s);
      std::cout << (json_out ? pds_array_to_json(arr).dump(2) + "\n" : format_pds_array(arr));
      return kTrue;
    };
  });

  auto* a_q = analyze->add_subcommand("quotient", "quotient graph of a labeling partition");
  int qd = 0, qr = 0;
  a_q->add_option("--d", qd, "d-perfect labeling radius");
  a_q->add_option("--r", qr, "rank of the 1-perfect labeling");
  a_q->add_option("--dims", dims)->required()->delimiter(',');
  a_q->add_flag("--mirror", mirror);
  a_q->callback([&] {
    action = [&] {
      if ((qd > 0) == (qr > 0)) throw Error(ErrorKind::InvalidArgument, "give exactly one of --d and --r");
      Graph g = make_torus(dims);
      std::vector<CodeSet> classes;
      std::set<int> gens;
      int q = 0;
      if (qd > 0) {
        auto dm = pair_dims(dims);
        classes = d_partition_torus(dm[0], dm[1], qd, mirror ? Orientation::Mirror : Orientation::Standard);
        q = 2 * qd * qd + 2 * qd + 1;
        gens = {1, 2 * qd * qd};
      } else {
        classes = r_partition_torus(dims, qr);
        q = 2 * qr + 1;
        for (int i = 1; i <= qr; ++i) gens.insert(i);
      }
      QuotientGraph qg = quotient_graph(g, class_indices(g, classes));
      bool match = qg == circulant(q, gens);
      Json j = quotient_to_json(qg);
      j["circulant_generators"] = gens;
      j["equals_circulant"] = match;
      std::cout << j.dump(2) << "\n";
      return match ? kTrue : kFalse;
    };
  });

  auto* a_f = analyze->add_subcommand("f-labeling", "direction labels of a PDS (2 = code vertex)");
  a_f->add_option("--file", file)->required();
  a_f->callback([&] {
    action = [&] {
      CodeSet code = read_code(file);
      Graph g(code.graph);
      std::cout << render_labels_ascii(g, f_labeling(g, to_vertex_set(g, code.members)));
      return kTrue;
    };
  });

  int km = 0, kn = 0;
  bool search_too = false;
  auto* a_kg = analyze->add_subcommand("kg", "arithmetic TPC condition for the m x n grid");
  a_kg->add_option("--m", km)->required();
  a_kg->add_option("--n", kn)->required();
  a_kg->add_flag("--search", search_too, "also run the exhaustive search");
  a_kg->callback([&] {
    action = [&] {
      bool cond = kg_tpc_condition(km, kn);
      std::cout << "condition: " << (cond ? "true" : "false") << "\n";
      if (search_too) {
        bool found = exists_code(make_rect_grid(km, kn), {CodeKind::Tpc, 1});
        std::cout << "search: " << (found ? "true" : "false") << "\n";
      }
      return cond ? kTrue : kFalse;
    };
  });

  // render
  bool svg = false, ascii = false;
  double cell = 24.0;
  auto* render = app.add_subcommand("render", "draw a code file or a label array");
  render->add_option("--file", file);
  render->add_flag("--svg", svg);
  render->add_flag("--ascii", ascii);
  render->add_option("--cell", cell, "SVG cell size in pixels");
  render->add_option("--out", out);
  render->fallthrough();
  auto* r_m = render->add_subcommand("m-array", "label array of a period");
  r_m->add_option("--period", period)->required();
  r_m->callback([&] {
    action = [&] {
      emit(render_ascii(m_array(PeriodWord::parse(period))), out);
      return kTrue;
    };
  });
  render->callback([&] {
    if (action) return;  // m-array already chosen
    action = [&] {
      if (file.empty()) throw Error(ErrorKind::InvalidArgument, "render needs --file or the m-array subcommand");
      if (svg == ascii) throw Error(ErrorKind::InvalidArgument, "choose exactly one of --svg and --ascii");
      CodeSet code = read_code(file);
      Graph g(code.graph);
      VertexSet s = to_vertex_set(g, code.members);
      RenderSpec spec;
      spec.cell_size = cell;
      emit(svg ? render_svg(g, s, spec) : render_ascii(g, s), out);
      return kTrue;
    };
  });

  // check-theorems
  int criterion = 0;
  int battery_threads = default_threads();
  auto* check = app.add_subcommand("check-theorems", "run the acceptance battery");
  check->add_option("--criterion", criterion, "run only this criterion");
  check->add_option("--parallel", battery_threads)->check(CLI::PositiveNumber);
  check->callback([&] {
    action = [&] {
      std::vector<CriterionResult> results;
      if (criterion > 0)
        results.push_back(run_criterion(criterion, battery_threads));
      else
        results = run_acceptance(battery_threads);
      bool all = true;
      for (const auto& res : results) {
        std::cout << format_result(res) << "\n";
        all = all && res.passed();
      }
      return all ? kTrue : kFalse;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kTrue : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
