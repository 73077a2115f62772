#pragma once

// Structural views of codes: PDS-arrays of rooms and ladders, the
// five-symbol direction labeling, and quotient graphs of code partitions.

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latcodes/graph.hpp"
#include "latcodes/lattice.hpp"

namespace latcodes {

enum class FaceKind { Room, Ladder };

/// A bounded face of the complement, measured in unit squares. (x, y) is
/// the top-left unit square.
struct PdsEntry {
  int x = 0, y = 0;
  int width = 1, height = 1;
  FaceKind tag = FaceKind::Room;

  friend bool operator==(const PdsEntry&, const PdsEntry&) = default;
  friend auto operator<=>(const PdsEntry&, const PdsEntry&) = default;
};

struct PdsArray {
  std::vector<std::vector<PdsEntry>> rows;

  /// All entries ordered by (x, y, width, height, tag).
  std::vector<PdsEntry> entries() const;

  friend bool operator==(const PdsArray&, const PdsArray&) = default;
};

/// Faces of the window minus the code, with code-incident edges deleted.
/// Faces touching the window border are dropped. Entries are chained into
/// rows left to right (each face followed by the face that starts in the
/// next column with the largest vertical overlap), rows ordered top down.
/// Throws NotPds when `s` fails the PDS condition inside the window.
PdsArray pds_array(const Region& window, const LatticeSet& s);
/// Same for a Window graph.
PdsArray pds_array(const Graph& window, const VertexSet& s);

/// Rooms shrink by one unit in each direction, ladders grow by one about
/// their top-left corner; tags follow the new shape. Requires every room to
/// have its smaller side equal to 2 (Applicability otherwise).
PdsArray duality_transform(const PdsArray& arr);

/// Label 2 for code vertices; otherwise 0, 1, 3, 4 when the unique code
/// neighbor is v-(0,1), v-(1,0), v+(1,0), v+(0,1). Torus, grid and window
/// graphs only. Throws NotPds when some vertex has no unique code neighbor.
std::vector<int> f_labeling(const Graph& g, const VertexSet& s);

/// Graph on residues 0..q-1; edges stored as (a, b) with a < b.
struct QuotientGraph {
  int q = 0;
  std::set<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  bool is_regular(int k) const;

  friend bool operator==(const QuotientGraph&, const QuotientGraph&) = default;
};

/// Class a and class b are adjacent when some edge of g joins them. Edges
/// inside a class are ignored. Throws NotPartition unless every vertex lies
/// in exactly one class.
QuotientGraph quotient_graph(const Graph& g, std::span<const VertexSet> classes);

/// Cayley graph of Z_q with generators +-gens. Generators must be nonzero mod q.
QuotientGraph circulant(int q, const std::set<int>& gens);

}  // namespace latcodes
