#pragma once

// Membership tests for the code kinds: perfect dominating sets, 1-perfect
// codes, total perfect codes (optionally parallel), d-perfect codes, and
// partitions into such codes. Failing checks report the first offending
// vertex in lexicographic coordinate order.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latcodes/graph.hpp"

namespace latcodes {

enum class CodeKind { Pds, OnePerfect, Tpc, Ptpc, DPerfect };

struct KindSpec {
  CodeKind kind = CodeKind::Pds;
  int d = 1;  // radius; meaningful for DPerfect only

  friend bool operator==(const KindSpec&, const KindSpec&) = default;
};

/// A vertex set together with the claim it makes. The claim is checked by
/// check_code, never assumed.
struct CodeSet {
  GraphSpec graph;
  KindSpec kind;
  std::vector<Point> members;  // sorted lexicographically

  friend bool operator==(const CodeSet&, const CodeSet&) = default;
};

CodeSet make_code_set(const Graph& g, KindSpec kind, const VertexSet& members);

struct Violation {
  Point vertex;
  int observed = 0;
  std::string expected;
};

struct Verdict {
  bool holds = true;
  std::optional<Violation> violation;

  explicit operator bool() const noexcept { return holds; }
};

Verdict is_pds(const Graph& g, const VertexSet& s);
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s);
Verdict is_one_perfect(const Graph& g, const VertexSet& s);
Verdict is_tpc(const Graph& g, const VertexSet& s);
/// Requires a 2-D graph; every induced edge must run along the same axis.
Verdict is_parallel_tpc(const Graph& g, const VertexSet& s);
Verdict is_d_perfect(const Graph& g, const VertexSet& s, int d);

Verdict check_code(const Graph& g, const VertexSet& s, KindSpec kind);
Verdict check_code(const CodeSet& code);

bool is_code_partition(const Graph& g, std::span<const VertexSet> classes, KindSpec kind);

std::string kind_name(KindSpec kind);

}  // namespace latcodes
