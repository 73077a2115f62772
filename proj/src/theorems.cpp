#include "latcodes/theorems.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "latcodes/enumeration.hpp"
#include "latcodes/error.hpp"
#include "latcodes/io.hpp"
#include "latcodes/labelings.hpp"
#include "latcodes/sequence_codes.hpp"
#include "latcodes/structure.hpp"

namespace latcodes {

namespace {

using std::chrono::milliseconds;

// Collects failures; a criterion holds when none were recorded.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string out = std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed:";
    for (const auto& f : failures_) out += " [" + f + "]";
    return out;
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  const char* title;
  milliseconds budget;
  std::function<std::string(Checks&, int)> body;
};

SearchResult search(const Graph& g, KindSpec kind, int threads, bool count_only = false,
                    std::optional<std::uint64_t> limit = std::nullopt) {
  SearchConfig cfg;
  cfg.kind = kind;
  cfg.count_only = count_only;
  cfg.limit = limit;
  cfg.parallel = threads;
  return enumerate_codes(g, cfg);
}

bool exists(const Graph& g, KindSpec kind, int threads) {
  return search(g, kind, threads, true, 1).count > 0;
}

std::string dims_str(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

// Subset oracle, independent of the search engine.
std::vector<VertexSet> brute_force(const Graph& g, KindSpec kind) {
  const auto n = g.size();
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(static_cast<Index>(v));
    if (check_code(g, s, kind)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<VertexSet>& list, const VertexSet& s) {
  return std::binary_search(list.begin(), list.end(), s);
}

SequenceWindow sample_window(int lo, int hi) {
  // a_-2 .. a_4 = 0,0,1,0,0,1,1; zeros elsewhere.
  const int fig[7] = {0, 0, 1, 0, 0, 1, 1};
  std::vector<int> bits;
  for (int i = lo; i <= hi; ++i) bits.push_back(i >= -2 && i <= 4 ? fig[i + 2] : 0);
  return SequenceWindow(lo, std::move(bits));
}

std::string criterion_counterexample(Checks& c, int threads) {
  auto r = search(make_torus({4, 6}), {CodeKind::OnePerfect, 1}, threads, true);
  c.expect(r.count == 0, "Torus[4,6] one-perfect count " + std::to_string(r.count));
  return "Torus[4,6]: " + std::to_string(r.count) + " one-perfect codes, " + std::to_string(r.nodes_explored) +
         " nodes";
}

std::string criterion_ptpc_iff(Checks& c, int threads) {
  int present = 0, absent = 0;
  for (int m = 3; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      Graph g = make_torus({m, n});
      bool expected = (m == 4 || m == 8) && (n == 4 || n == 8);
      bool found = exists(g, {CodeKind::Ptpc, 1}, threads);
      c.expect(found == expected, "PTPC on " + dims_str(m, n) + " search says " + (found ? "yes" : "no"));
      if (expected) {
        ++present;
        for (const CodeSet& cls : s2_partition(m, n))
          c.expect(check_code(cls).holds, "s2 witness on " + dims_str(m, n));
        if (m == n) {
          CodeSet w = phi(PeriodWord::parse(m == 4 ? "0" : "1"));
          c.expect(check_code(w).holds && w.graph == g.spec(), "phi witness on " + dims_str(m, n));
        }
      } else {
        ++absent;
      }
    }
  }
  return std::to_string(present) + " sizes with a PTPC (witnessed), " + std::to_string(absent) +
         " certified absent";
}

std::string criterion_phi(Checks& c, int) {
  int words = 0;
  for (int len = 1; len <= 4; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::vector<int> bits;
      for (int i = 0; i < len; ++i) bits.push_back((mask >> (len - 1 - i)) & 1);
      PeriodWord w(bits);
      int expected_p = w.weight() % 2 == 0 ? 4 * len : 8 * len;
      c.expect(w.p() == expected_p, "p of " + w.str());
      try {
        CodeSet code = phi(w);
        Graph g(code.graph);
        VertexSet s = to_vertex_set(g, code.members);
        c.expect(code.graph.dims == std::vector<int>{expected_p, expected_p}, "torus of " + w.str());
        c.expect(static_cast<int>(s.size()) * 4 == expected_p * expected_p, "size of phi(" + w.str() + ")");
        c.expect(is_parallel_tpc(g, s).holds, "phi(" + w.str() + ") parallel TPC");
      } catch (const Error& e) {
        c.expect(false, std::string("phi(") + w.str() + "): " + e.what());
      }
      ++words;
    }
  }
  LabelArray m = m_array(PeriodWord::parse("00011101"));
  std::string ascii = render_ascii(m);
  std::istringstream lines(ascii);
  std::string row1, row2;
  std::getline(lines, row1);
  std::getline(lines, row2);
  c.expect(row1 == "64206420642064275310642753175310", "M(00011101) row 1 = " + row1);
  c.expect(row2 == "75317531753175310642753106420642", "M(00011101) row 2 = " + row2);
  return std::to_string(words) + " periods checked; label-array rows match";
}

std::string criterion_d_partition(Checks& c, int) {
  for (int d : {1, 2}) {
    const int q = 2 * d * d + 2 * d + 1;
    Graph g = make_torus({q, q});
    auto classes = d_partition_torus(q, q, d);
    c.expect(static_cast<int>(classes.size()) == q, "class count for d=" + std::to_string(d));
    auto idx = class_indices(g, classes);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      c.expect(static_cast<int>(idx[i].size()) == q, "class size d=" + std::to_string(d));
      c.expect(is_d_perfect(g, idx[i], d).holds, "class " + std::to_string(i) + " d-perfect, d=" + std::to_string(d));
    }
    c.expect(quotient_graph(g, idx) == circulant(q, {1, 2 * d * d}), "quotient for d=" + std::to_string(d));
  }
  return "q=5 quotient K_5, q=13 quotient circulant(13,{1,8})";
}

std::string criterion_enantiomorphs(Checks& c, int threads) {
  Graph g = make_torus({5, 5});
  auto r = search(g, {CodeKind::OnePerfect, 1}, threads);
  c.expect(r.count == 10, "Torus[5,5] one-perfect count " + std::to_string(r.count));
  std::vector<VertexSet> labeled;
  for (Orientation o : {Orientation::Standard, Orientation::Mirror})
    for (const VertexSet& s : class_indices(g, d_partition_torus(5, 5, 1, o))) labeled.push_back(s);
  std::sort(labeled.begin(), labeled.end());
  labeled.erase(std::unique(labeled.begin(), labeled.end()), labeled.end());
  c.expect(labeled == r.solutions, "enumerated codes differ from the two label families");
  return std::to_string(r.count) + " codes = 5 standard + 5 mirror classes";
}

std::string criterion_s2(Checks& c, int threads) {
  Graph g = make_torus({4, 4});
  auto classes = s2_partition(4, 4);
  auto idx = class_indices(g, classes);
  c.expect(idx.size() == 4, "four classes");
  for (const VertexSet& s : idx) c.expect(s.size() == 4 && is_parallel_tpc(g, s).holds, "class is a PTPC of size 4");
  c.expect(is_code_partition(g, idx, {CodeKind::Ptpc, 1}), "classes partition Torus[4,4]");
  auto all = search(g, {CodeKind::Tpc, 1}, threads);
  auto oracle = brute_force(g, {CodeKind::Tpc, 1});
  c.expect(all.solutions == oracle, "search and subset oracle disagree on TPCs of Torus[4,4]");
  for (const VertexSet& s : idx) c.expect(contains(all.solutions, s), "class missing from TPC list");
  return "4 classes of 4; Torus[4,4] has " + std::to_string(all.count) + " TPCs";
}

std::string criterion_kg(Checks& c, int threads) {
  int agree = 0;
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 8; ++n) {
      bool found = exists(make_rect_grid(m, n), {CodeKind::Tpc, 1}, threads);
      bool predicted = kg_tpc_condition(m, n);
      c.expect(found == predicted, "grid " + dims_str(m, n) + ": condition " + (predicted ? "true" : "false") +
                                       ", search " + (found ? "true" : "false"));
      agree += found == predicted;
    }
  }
  return std::to_string(agree) + "/21 grid sizes agree";
}

std::string criterion_prisms(Checks& c, int threads) {
  for (int n = 3; n <= 13; ++n) {
    Graph g = make_prism(n);
    bool tpc = exists(g, {CodeKind::Tpc, 1}, threads);
    c.expect(tpc == (n == 6 || n == 12), "Prism(" + std::to_string(n) + ") TPC search");
    if (n % 6 == 0) c.expect(check_code(prism_ptpc(n)).holds, "constructed prism TPC n=" + std::to_string(n));
  }
  for (int n = 3; n <= 12; ++n) {
    Graph g = make_prism(n);
    auto codes = search(g, {CodeKind::OnePerfect, 1}, threads).solutions;
    auto part = find_code_partition(g, codes);
    bool four = part && part->size() == 4;
    c.expect(four == (n % 4 == 0), "Prism(" + std::to_string(n) + ") 1-perfect 4-partition search");
    if (n % 4 == 0) {
      auto idx = class_indices(g, prism_one_perfect_partition(n));
      c.expect(idx.size() == 4 && is_code_partition(g, idx, {CodeKind::OnePerfect, 1}),
               "constructed prism partition n=" + std::to_string(n));
    }
  }
  return "TPC iff n in {6,12}; 1-perfect 4-partition iff 4 | n";
}

std::string criterion_r_partitions(Checks& c, int) {
  struct Case {
    std::vector<int> dims;
    int r;
    std::size_t size;
  };
  for (const Case& cs : {Case{{7, 7, 7}, 3, 49}, Case{{9, 9, 3, 9}, 4, 243}}) {
    Graph g = make_torus(cs.dims);
    auto idx = class_indices(g, r_partition_torus(cs.dims, cs.r));
    const int q = 2 * cs.r + 1;
    c.expect(static_cast<int>(idx.size()) == q, "class count r=" + std::to_string(cs.r));
    for (const VertexSet& s : idx)
      c.expect(s.size() == cs.size && is_one_perfect(g, s).holds, "class 1-perfect r=" + std::to_string(cs.r));
    std::set<int> gens;
    for (int i = 1; i <= cs.r; ++i) gens.insert(i);
    QuotientGraph qg = quotient_graph(g, idx);
    c.expect(qg == circulant(q, gens) && qg.edges.size() == static_cast<std::size_t>(q * (q - 1) / 2),
             "quotient K_" + std::to_string(q));
  }
  return "7 classes of 49 and 9 classes of 243, quotients K_7 and K_9";
}

std::string criterion_duality(Checks& c, int) {
  const Region window{-4, -10, 15, 9};
  auto need = required_indices(window.grown(2));
  SequenceWindow seq = sample_window(need->lo, need->hi);
  LatticeSet code = psi_window(seq, window);
  LatticeSet dual = psi_dual(seq, window);
  PdsArray primal = pds_array(window, code);
  PdsArray dual_arr = pds_array(window, dual);
  PdsArray mapped = duality_transform(primal);

  // Faces near the border are cut differently in the two pictures.
  auto inner = [&](const PdsEntry& e) {
    return e.x >= window.x0 + 2 && e.y >= window.y0 + 2 && e.x + e.width <= window.x1 - 2 &&
           e.y + e.height <= window.y1 - 2;
  };
  std::vector<PdsEntry> a, b;
  for (const PdsEntry& e : mapped.entries())
    if (inner(e)) a.push_back(e);
  for (const PdsEntry& e : dual_arr.entries())
    if (inner(e)) b.push_back(e);
  c.expect(!a.empty() && a == b, "transformed array differs from the dual's array");

  std::string p = format_pds_array(primal), d = format_pds_array(dual_arr);
  c.expect(p.find("12 32 12 32 21 32") != std::string::npos, "primal fragment missing");
  c.expect(d.find("23 21 23 21 32 21") != std::string::npos, "dual fragment missing");
  return std::to_string(a.size()) + " interior faces correspond; printed fragments found";
}

std::string criterion_properties(Checks& c, int threads) {
  std::vector<Graph> graphs;
  for (auto dims : std::vector<std::vector<int>>{{3, 3}, {4, 5}, {5, 5}, {3, 4, 5}, {3, 3, 3, 3}, {7}})
    graphs.push_back(make_torus(dims));
  graphs.push_back(make_rect_grid(3, 7));
  graphs.push_back(make_prism(7));
  graphs.push_back(make_window({-2, -3}, {4, 1}));
  for (const Graph& g : graphs) {
    bool sym = true;
    std::size_t degree_sum = 0;
    for (Index u = 0; u < static_cast<Index>(g.size()); ++u) {
      degree_sum += static_cast<std::size_t>(g.degree(u));
      for (Index v : g.neighbors(u)) sym = sym && g.adjacent(v, u) && u != v;
    }
    c.expect(sym && degree_sum == 2 * g.edge_count(), "adjacency symmetry on " + g.describe());
  }

  // Translation invariance of every predicate on every enumerated code.
  for (const Graph& g : {make_torus({4, 4}), make_torus({5, 5}), make_prism(6)}) {
    for (CodeKind k : {CodeKind::Pds, CodeKind::OnePerfect, CodeKind::Tpc, CodeKind::Ptpc}) {
      auto sols = search(g, {k, 1}, threads, false, 40).solutions;
      for (const VertexSet& s : sols) {
        for (Index shift = 0; shift < static_cast<Index>(g.size()); shift += 3) {
          VertexSet moved;
          for (Index v : s) moved.push_back(g.translate(v, g.point(shift)));
          moved = make_vertex_set(std::move(moved));
          c.expect(check_code(g, moved, {k, 1}).holds, "translate of a " + kind_name({k, 1}) + " on " + g.describe());
        }
      }
    }
  }

  // Psi is injective on windows: all sequences over up to six consumed indices.
  const Region region{-16, -4, 16, 4};
  auto need = required_indices(region);
  for (int len = 1; len <= 6; ++len) {
    std::set<LatticeSet> images;
    const int neg = len / 2, pos = len - neg;
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::vector<int> bits(static_cast<std::size_t>(need->hi - need->lo + 1), 0);
      int bit = 0;
      for (int i = -neg; i <= pos; ++i) {
        if (i == 0) continue;
        bits[static_cast<std::size_t>(i - need->lo)] = (mask >> bit++) & 1;
      }
      images.insert(psi_window(SequenceWindow(need->lo, bits), region));
    }
    c.expect(images.size() == (1u << len), "Psi not injective on windows of length " + std::to_string(len));
  }

  // Latin squares: each label once per row and column of a q x q torus.
  for (int d : {1, 2, 3}) {
    DLabeling lab{d, 0, Orientation::Standard};
    const int q = lab.q();
    bool latin = true;
    for (int k = 0; k < q; ++k) {
      std::set<int> row, col;
      for (int j = 0; j < q; ++j) {
        row.insert(d_label(j, k, lab));
        col.insert(d_label(k, j, lab));
      }
      latin = latin && static_cast<int>(row.size()) == q && static_cast<int>(col.size()) == q;
    }
    c.expect(latin, "Latin square for d=" + std::to_string(d));
  }

  // Constructors agree with the search on graphs up to 40 vertices.
  auto listed = [&](const CodeSet& code) {
    Graph g(code.graph);
    auto all = search(g, code.kind, threads).solutions;
    return contains(all, to_vertex_set(g, code.members));
  };
  std::vector<CodeSet> built;
  for (const auto& cls : d_partition_torus(5, 5, 1)) built.push_back(cls);
  for (const auto& cls : d_partition_torus(5, 5, 1, Orientation::Mirror)) built.push_back(cls);
  for (const auto& cls : s2_partition(4, 4)) built.push_back(cls);
  for (const auto& cls : s2_partition(4, 8)) built.push_back(cls);
  built.push_back(prism_ptpc(6));
  built.push_back(prism_ptpc(12));
  for (int n : {4, 8, 12, 16, 20})
    for (const auto& cls : prism_one_perfect_partition(n)) built.push_back(cls);
  built.push_back(phi(PeriodWord::parse("0")));
  for (const CodeSet& code : built) c.expect(listed(code), "constructed code missing on " + Graph(code.graph).describe());

  // Search agrees with the subset oracle on small graphs.
  for (const Graph& g : {make_torus({3, 3}), make_torus({3, 4}), make_torus({4, 4}), make_rect_grid(3, 4),
                         make_rect_grid(2, 6), make_prism(5), make_prism(6), make_torus({3, 5})}) {
    for (KindSpec k : {KindSpec{CodeKind::Pds, 1}, KindSpec{CodeKind::OnePerfect, 1}, KindSpec{CodeKind::Tpc, 1},
                       KindSpec{CodeKind::DPerfect, 2}}) {
      auto r = search(g, k, threads);
      c.expect(r.solutions == brute_force(g, k), kind_name(k) + " search vs oracle on " + g.describe());
    }
    if (g.is_two_dimensional()) {
      auto r = search(g, {CodeKind::Ptpc, 1}, threads);
      c.expect(r.solutions == brute_force(g, {CodeKind::Ptpc, 1}), "ptpc search vs oracle on " + g.describe());
    }
  }

  // JSON round trip of random codes.
  std::mt19937 rng(20240611);
  const std::vector<GraphSpec> specs = {make_torus({4, 6}).spec(), make_torus({3, 3, 5}).spec(),
                                        make_rect_grid(5, 2).spec(), make_prism(9).spec(),
                                        make_window({-3, 2}, {1, 5}).spec()};
  for (int i = 0; i < 100; ++i) {
    Graph g(specs[static_cast<std::size_t>(i) % specs.size()]);
    std::vector<Index> members;
    for (Index v = 0; v < static_cast<Index>(g.size()); ++v)
      if (rng() % 3 == 0) members.push_back(v);
    KindSpec kind{static_cast<CodeKind>(rng() % 5), 1};
    if (kind.kind == CodeKind::DPerfect) kind.d = 1 + static_cast<int>(rng() % 3);
    CodeSet code = make_code_set(g, kind, make_vertex_set(std::move(members)));
    c.expect(code_from_json(Json::parse(code_to_json(code).dump())) == code, "JSON round trip");
  }
  return "adjacency, translation, injectivity, Latin squares, constructors, oracle and JSON suites";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"no 1-perfect code in C4 x C6", milliseconds(5'000), criterion_counterexample},
      {"PTPC in Cm x Cn iff m, n in {4, 8} (3 <= m <= n <= 8)", milliseconds(600'000), criterion_ptpc_iff},
      {"phi(B) parallel TPCs for periods up to length 4; label-array rows", milliseconds(30'000), criterion_phi},
      {"d-perfect partitions and circulant quotients (d = 1, 2)", milliseconds(5'000), criterion_d_partition},
      {"ten 1-perfect codes in C5 x C5", milliseconds(10'000), criterion_enantiomorphs},
      {"four-class PTPC partition of C4 x C4", milliseconds(5'000), criterion_s2},
      {"grid TPC existence matches the arithmetic condition", milliseconds(60'000), criterion_kg},
      {"prism TPCs and 1-perfect 4-partitions", milliseconds(60'000), criterion_prisms},
      {"r-dimensional 1-perfect partitions (r = 3, 4)", milliseconds(30'000), criterion_r_partitions},
      {"room-ladder duality on the sample sequence", milliseconds(5'000), criterion_duality},
      {"property suites", milliseconds(120'000), criterion_properties},
  };
  return list;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int id, int threads) {
  if (id < 1 || id > criterion_count()) throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
  const Criterion& crit = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = crit.title;
  r.budget = crit.budget;
  Checks checks;
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = crit.body(checks, threads);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  r.elapsed = std::chrono::duration_cast<milliseconds>(std::chrono::steady_clock::now() - start);
  r.checks_hold = checks.ok();
  r.detail = checks.summary(detail);
  return r;
}

std::vector<CriterionResult> run_acceptance(int threads) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id, threads));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d  ", r.passed() ? "PASS" : "FAIL", r.id);
  std::string out = head + r.title + "  (" + std::to_string(r.elapsed.count()) + " ms / " +
                    std::to_string(r.budget.count()) + " ms)  " + r.detail;
  if (r.checks_hold && !r.passed()) out += "  [over budget]";
  return out;
}

}  // namespace latcodes
