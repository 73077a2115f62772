#include "latcodes/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <thread>

#include "latcodes/error.hpp"

namespace latcodes {

namespace {

enum Value : signed char { kUndecided = 0, kIn = 1, kOut = 2 };

struct Model {
  const Graph* graph = nullptr;
  bool conditional = false;  // PDS: requirement applies only while v is outside the code
  std::vector<std::vector<Index>> region;
  std::vector<std::vector<Index>> watchers;  // watchers[u] = { v : u in region[v] }
  int allowed_axis = -1;                     // >= 0: code-code edges only along this axis
};

Model build_model(const Graph& g, KindSpec kind, int allowed_axis) {
  Model m;
  m.graph = &g;
  m.conditional = kind.kind == CodeKind::Pds;
  m.allowed_axis = allowed_axis;
  const auto n = g.size();
  m.region.resize(n);
  m.watchers.resize(n);
  for (Index v = 0; v < static_cast<Index>(n); ++v) {
    auto& r = m.region[static_cast<std::size_t>(v)];
    switch (kind.kind) {
      case CodeKind::OnePerfect: r = ball(g, v, 1); break;
      case CodeKind::DPerfect: r = ball(g, v, kind.d); break;
      default: r.assign(g.neighbors(v).begin(), g.neighbors(v).end()); break;
    }
    for (Index u : r) m.watchers[static_cast<std::size_t>(u)].push_back(v);
  }
  return m;
}

struct Step {
  Index vertex;
  Value value;
};
using Branch = std::vector<Step>;

class Solver {
 public:
  Solver(const Model& model, std::optional<std::uint64_t> limit, bool keep)
      : model_(&model), limit_(limit), keep_(keep) {
    const auto n = model.graph->size();
    assign_.assign(n, kUndecided);
    in_.assign(n, 0);
    und_.resize(n);
    for (std::size_t v = 0; v < n; ++v) und_[v] = static_cast<int>(model.region[v].size());
  }

  bool initial_propagate() {
    for (Index v = static_cast<Index>(assign_.size()) - 1; v >= 0; --v) queue_.push_back(v);
    return propagate();
  }

  bool apply(const Branch& branch) {
    for (const Step& s : branch)
      if (!set(s.vertex, s.value)) return false;
    return propagate();
  }

  /// Branches at the current node; empty with `leaf` set when fully decided.
  std::vector<Branch> expand(bool& leaf) const {
    leaf = false;
    const Index n = static_cast<Index>(assign_.size());
    Index best = -1;
    int best_candidates = 0;
    for (Index v = 0; v < n; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (in_[vi] != 0) continue;
      int candidates = und_[vi];
      if (model_->conditional) {
        if (assign_[vi] == kIn) continue;
        if (assign_[vi] == kUndecided) ++candidates;
      }
      if (best < 0 || candidates < best_candidates) {
        best = v;
        best_candidates = candidates;
      }
    }
    std::vector<Branch> out;
    if (best >= 0) {
      if (best_candidates == 0) return out;
      std::vector<Index> cands;
      auto bi = static_cast<std::size_t>(best);
      if (model_->conditional && assign_[bi] == kUndecided) cands.push_back(best);
      for (Index c : model_->region[bi])
        if (assign_[static_cast<std::size_t>(c)] == kUndecided) cands.push_back(c);
      for (std::size_t i = 0; i < cands.size(); ++i) {
        Branch b;
        for (std::size_t j = 0; j < i; ++j) b.push_back({cands[j], kOut});
        b.push_back({cands[i], kIn});
        out.push_back(std::move(b));
      }
      return out;
    }
    for (Index u = 0; u < n; ++u) {
      if (assign_[static_cast<std::size_t>(u)] == kUndecided) {
        out.push_back({{u, kIn}});
        out.push_back({{u, kOut}});
        return out;
      }
    }
    leaf = true;
    return out;
  }

  void search() {
    ++nodes_;
    bool leaf = false;
    auto branches = expand(leaf);
    if (leaf) {
      record();
      return;
    }
    // Incremental form of the branch list: after exploring candidate i with
    // value In, it is fixed Out for the remaining siblings.
    for (const Branch& b : branches) {
      const Step& last = b.back();
      std::size_t mark = trail_.size();
      if (set(last.vertex, last.value) && propagate()) search();
      undo(mark);
      if (stopped()) return;
      if (last.value == kOut) break;
      if (!set(last.vertex, kOut) || !propagate()) break;
    }
  }

  bool stopped() const { return limit_ && count_ >= *limit_; }

  std::uint64_t count() const { return count_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<VertexSet>& solutions() { return solutions_; }
  const std::vector<std::uint64_t>& nodes_at_solution() const { return nodes_at_solution_; }
  void add_nodes(std::uint64_t k) { nodes_ += k; }

 private:
  bool set(Index u, Value value) {
    auto ui = static_cast<std::size_t>(u);
    if (assign_[ui] == value) return true;
    if (assign_[ui] != kUndecided) return false;
    assign_[ui] = value;
    trail_.push_back(u);
    for (Index v : model_->watchers[ui]) {
      auto vi = static_cast<std::size_t>(v);
      --und_[vi];
      if (value == kIn) ++in_[vi];
      queue_.push_back(v);
    }
    if (model_->conditional) queue_.push_back(u);
    if (value == kIn && model_->allowed_axis >= 0) {
      const Graph& g = *model_->graph;
      for (Index w : g.neighbors(u))
        if (g.edge_axis(u, w) != model_->allowed_axis && !set(w, kOut)) return false;
    }
    return true;
  }

  bool check(Index v) {
    auto vi = static_cast<std::size_t>(v);
    if (model_->conditional) {
      if (assign_[vi] == kIn) return true;
      if (assign_[vi] == kUndecided) {
        if (in_[vi] >= 2 || (in_[vi] == 0 && und_[vi] == 0)) return set(v, kIn);
        return true;
      }
    }
    if (in_[vi] > 1) return false;
    if (in_[vi] == 1) {
      if (und_[vi] > 0)
        for (Index c : model_->region[vi])
          if (assign_[static_cast<std::size_t>(c)] == kUndecided && !set(c, kOut)) return false;
      return true;
    }
    if (und_[vi] == 0) return false;
    if (und_[vi] == 1)
      for (Index c : model_->region[vi])
        if (assign_[static_cast<std::size_t>(c)] == kUndecided) return set(c, kIn);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Index v = queue_.back();
      queue_.pop_back();
      if (!check(v)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Index u = trail_.back();
      trail_.pop_back();
      auto ui = static_cast<std::size_t>(u);
      for (Index v : model_->watchers[ui]) {
        auto vi = static_cast<std::size_t>(v);
        ++und_[vi];
        if (assign_[ui] == kIn) --in_[vi];
      }
      assign_[ui] = kUndecided;
    }
  }

  void record() {
    ++count_;
    if (limit_) nodes_at_solution_.push_back(nodes_);
    if (!keep_) return;
    VertexSet s;
    for (std::size_t v = 0; v < assign_.size(); ++v)
      if (assign_[v] == kIn) s.push_back(static_cast<Index>(v));
    solutions_.push_back(std::move(s));
  }

  const Model* model_;
  std::optional<std::uint64_t> limit_;
  bool keep_;
  std::vector<Value> assign_;
  std::vector<int> in_, und_;
  std::vector<Index> trail_;
  std::vector<Index> queue_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<VertexSet> solutions_;
  std::vector<std::uint64_t> nodes_at_solution_;
};

struct RunResult {
  std::vector<VertexSet> solutions;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  bool limit_hit = false;
};

RunResult run_sequential(const Model& model, std::optional<std::uint64_t> limit, bool keep) {
  Solver solver(model, limit, keep);
  RunResult out;
  if (solver.initial_propagate()) solver.search();
  out.count = solver.count();
  out.nodes = solver.nodes();
  out.solutions = std::move(solver.solutions());
  out.limit_hit = solver.stopped();
  return out;
}

// Splits on the root's branches and merges in branch order, replaying the
// limit cut-off so that counts, node totals and solution order match the
// sequential run exactly.
RunResult run_parallel(const Model& model, std::optional<std::uint64_t> limit, bool keep, int threads) {
  Solver root(model, limit, keep);
  RunResult out;
  if (!root.initial_propagate()) return out;
  bool leaf = false;
  auto branches = root.expand(leaf);
  if (leaf || branches.empty()) return run_sequential(model, limit, keep);

  std::vector<std::optional<Solver>> workers(branches.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < branches.size(); i = next++) {
      Solver s = root;
      if (s.apply(branches[i])) s.search();
      workers[i].emplace(std::move(s));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  out.nodes = 1;
  for (auto& w : workers) {
    std::uint64_t before = out.count;
    if (limit && before + w->count() >= *limit) {
      std::uint64_t needed = *limit - before;
      if (needed > 0) {
        out.nodes += w->nodes_at_solution()[needed - 1];
        auto& sols = w->solutions();
        if (keep) out.solutions.insert(out.solutions.end(), sols.begin(), sols.begin() + static_cast<std::ptrdiff_t>(needed));
        out.count += needed;
      }
      out.limit_hit = true;
      break;
    }
    out.nodes += w->nodes();
    out.count += w->count();
    auto& sols = w->solutions();
    out.solutions.insert(out.solutions.end(), sols.begin(), sols.end());
  }
  return out;
}

std::vector<int> allowed_axes(const Graph& g, KindSpec kind) {
  bool prism = g.family() == Family::Prism;
  if (kind.kind == CodeKind::Ptpc) {
    if (!g.is_two_dimensional()) throw Error(ErrorKind::InvalidArgument, "parallel TPC needs a 2-D graph");
    return prism ? std::vector<int>{1} : std::vector<int>{0, 1};
  }
  if (kind.kind == CodeKind::Tpc && prism) return {1};
  return {-1};
}

}  // namespace

std::size_t vertex_guard() {
  const char* env = std::getenv("LATTICE_CODES_GUARD");
  if (env != nullptr) {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return kDefaultVertexGuard;
}

SearchResult enumerate_codes(const Graph& g, const SearchConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  if (!cfg.override_guard && g.size() > vertex_guard())
    throw Error(ErrorKind::GuardExceeded, g.describe() + " has " + std::to_string(g.size()) +
                                              " vertices, above the enumeration guard of " +
                                              std::to_string(vertex_guard()));
  if (cfg.limit && *cfg.limit < 1) throw Error(ErrorKind::InvalidArgument, "limit must be at least 1");
  if (cfg.kind.kind == CodeKind::DPerfect && cfg.kind.d < 1)
    throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
  if (cfg.symmetry == Symmetry::TranslationOrbits && !g.is_vertex_transitive())
    throw Error(ErrorKind::InvalidArgument, "translation orbits need a torus or prism");

  bool keep = !cfg.count_only || cfg.symmetry == Symmetry::TranslationOrbits;
  SearchResult result;
  std::optional<std::uint64_t> remaining = cfg.limit;
  for (int axis : allowed_axes(g, cfg.kind)) {
    Model model = build_model(g, cfg.kind, axis);
    RunResult run = cfg.parallel > 1 ? run_parallel(model, remaining, keep, cfg.parallel)
                                     : run_sequential(model, remaining, keep);
    result.count += run.count;
    result.nodes_explored += run.nodes;
    for (auto& s : run.solutions) result.solutions.push_back(std::move(s));
    if (remaining) {
      *remaining -= run.count;
      if (run.limit_hit || *remaining == 0) {
        result.limit_hit = true;
        break;
      }
    }
  }
  std::sort(result.solutions.begin(), result.solutions.end());

  if (cfg.symmetry == Symmetry::TranslationOrbits) {
    std::set<VertexSet> reps;
    for (const VertexSet& s : result.solutions) reps.insert(canonical_translate(g, s));
    result.orbit_count = reps.size();
    result.solutions.assign(reps.begin(), reps.end());
  }
  if (cfg.count_only) result.solutions.clear();
  result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

bool exists_code(const Graph& g, KindSpec kind) {
  SearchConfig cfg;
  cfg.kind = kind;
  cfg.limit = 1;
  cfg.count_only = true;
  return enumerate_codes(g, cfg).count > 0;
}

bool kg_tpc_condition(int m, int n) {
  if (std::min(m, n) <= 1) throw Error(ErrorKind::InvalidArgument, "grid sides must both exceed 1");
  auto holds = [](int rows, int cols) {
    if (rows % 2 != 0) return false;
    const int modulus = rows + 1;
    const int r = cols % modulus;
    return r == ((-3 % modulus) + modulus) % modulus || r == modulus - 1 || r == 1 % modulus;
  };
  return holds(m, n) || holds(n, m);
}

std::optional<std::vector<VertexSet>> find_code_partition(const Graph& g, std::span<const VertexSet> codes) {
  const auto n = g.size();
  std::vector<std::vector<std::size_t>> containing(n);
  for (std::size_t c = 0; c < codes.size(); ++c)
    for (Index v : codes[c]) containing[static_cast<std::size_t>(v)].push_back(c);
  std::vector<char> covered(n, 0);
  std::vector<std::size_t> chosen;

  auto fits = [&](std::size_t c) {
    return std::none_of(codes[c].begin(), codes[c].end(),
                        [&](Index v) { return covered[static_cast<std::size_t>(v)] != 0; });
  };
  auto mark = [&](std::size_t c, char value) {
    for (Index v : codes[c]) covered[static_cast<std::size_t>(v)] = value;
  };
  auto solve = [&](auto&& self) -> bool {
    auto first = std::find(covered.begin(), covered.end(), 0);
    if (first == covered.end()) return true;
    auto v = static_cast<std::size_t>(first - covered.begin());
    for (std::size_t c : containing[v]) {
      if (!fits(c)) continue;
      mark(c, 1);
      chosen.push_back(c);
      if (self(self)) return true;
      chosen.pop_back();
      mark(c, 0);
    }
    return false;
  };
  if (!solve(solve)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  std::vector<VertexSet> out;
  for (std::size_t c : chosen) out.push_back(codes[c]);
  return out;
}

VertexSet canonical_translate(const Graph& g, const VertexSet& s) {
  VertexSet best = s;
  for (Index shift = 0; shift < static_cast<Index>(g.size()); ++shift) {
    const Point& vec = g.point(shift);
    VertexSet moved;
    moved.reserve(s.size());
    for (Index v : s) moved.push_back(g.translate(v, vec));
    std::sort(moved.begin(), moved.end());
    if (moved < best) best = std::move(moved);
  }
  return best;
}

}  // namespace latcodes
