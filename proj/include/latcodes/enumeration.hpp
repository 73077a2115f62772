#pragma once

// Exhaustive enumeration of codes on small graphs.
//
// Every vertex v carries a requirement on the number of code vertices in
// its dominator region D(v): the radius-d ball for 1-perfect and d-perfect
// codes, the open neighborhood for total perfect codes, and the open
// neighborhood conditioned on v being outside the code for PDSs. The search
// keeps per-vertex counters of code and undecided members of D(v), forces
// decisions when a requirement is met or has a single candidate left, and
// branches on the unmet requirement with the fewest candidates: branch i
// puts candidate i in the code and candidates 1..i-1 out. Branches therefore
// partition the solution space, which is what makes the root split usable
// for parallel search with bit-identical results.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latcodes/graph.hpp"
#include "latcodes/predicates.hpp"

namespace latcodes {

enum class Symmetry { None, TranslationOrbits };

inline constexpr std::size_t kDefaultVertexGuard = 200;

struct SearchConfig {
  KindSpec kind;
  std::optional<std::uint64_t> limit;
  bool count_only = false;
  Symmetry symmetry = Symmetry::None;
  int parallel = 1;             // worker threads for the root split
  bool override_guard = false;  // ignore the vertex guard entirely
};

struct SearchResult {
  std::vector<VertexSet> solutions;  // lexicographic; empty when count_only
  std::uint64_t count = 0;
  std::uint64_t orbit_count = 0;  // TranslationOrbits only
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds wall_time{0};
  bool limit_hit = false;
};

/// Vertex guard: LATTICE_CODES_GUARD if set to a positive integer, else 200.
std::size_t vertex_guard();

SearchResult enumerate_codes(const Graph& g, const SearchConfig& cfg);

bool exists_code(const Graph& g, KindSpec kind);

/// Arithmetic condition for a TPC in the m x n grid graph,
/// checked in both orientations: m even and n = -3, -1 or 1 mod (m+1).
bool kg_tpc_condition(int m, int n);

/// Picks pairwise disjoint codes from `codes` covering all vertices, first
/// in lexicographic order of the chosen indices; nullopt when none exists.
std::optional<std::vector<VertexSet>> find_code_partition(const Graph& g, std::span<const VertexSet> codes);

/// Smallest translate of `s` in lexicographic order (torus and prism).
VertexSet canonical_translate(const Graph& g, const VertexSet& s);

}  // namespace latcodes
