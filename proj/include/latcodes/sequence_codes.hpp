#pragma once

// Parallel total perfect codes of the planar lattice built from doubly
// infinite binary sequences, their room/ladder duals, and the periodic case:
// fundamental tiles, label arrays and the projection onto C_p x C_p.
//
// For a sequence (a_i), anchors are A_0 = (0,0), A_n = sum_{i=1..n} (4+a_i, a_i),
// A_{-n} = -sum_{i=-1..-n} (4+a_i, a_i), B_n = A_n + (1,0). The code is the
// union of all translates of the anchors by multiples of (2,2). The entry a_0
// never enters these sums.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcodes/lattice.hpp"
#include "latcodes/predicates.hpp"

namespace latcodes {

/// Binary period (b_1..b_n) of a periodic doubly infinite sequence.
class PeriodWord {
 public:
  explicit PeriodWord(std::vector<int> bits);
  /// Parses a string of '0'/'1' characters.
  static PeriodWord parse(std::string_view text);

  const std::vector<int>& bits() const noexcept { return bits_; }
  int length() const noexcept { return static_cast<int>(bits_.size()); }
  int weight() const noexcept { return weight_; }
  /// Torus side: 4n for even weight, 8n for odd weight.
  int p() const noexcept { return weight_ % 2 == 0 ? 4 * length() : 8 * length(); }
  std::string str() const;

 private:
  std::vector<int> bits_;
  int weight_ = 0;
};

/// Finite contiguous stretch a_lo..a_hi of a doubly infinite binary sequence.
class SequenceWindow {
 public:
  SequenceWindow(int lo, std::vector<int> bits);
  /// Repeats the period over the indices the anchors consume, skipping a_0:
  /// a_1..a_n = b_1..b_n and a_-n..a_-1 = b_1..b_n. a_0 is set to b_n.
  static SequenceWindow periodic(const PeriodWord& period, int lo, int hi);
  static SequenceWindow null(int lo, int hi);
  /// Digits of `text` are a_lo, a_lo+1, ...
  static SequenceWindow parse(std::string_view text, int lo);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(bits_.size()) - 1; }
  int at(int i) const;

 private:
  int lo_;
  std::vector<int> bits_;
};

struct IndexRange {
  int lo = 0, hi = 0;
};

/// Sequence indices whose anchors can reach `region`; nullopt for an empty region.
std::optional<IndexRange> required_indices(const Region& region);

/// Code vertices inside `region`. Throws WindowTooSmall naming the needed range.
LatticeSet psi_window(const SequenceWindow& window, const Region& region);

/// First vertex of `interior` (lexicographic) outside `s` without exactly one
/// neighbor in `s`. Neighbors must be present in `s` where they exist, so `s`
/// has to be computed on a region at least one wider than `interior`.
std::optional<LatticePoint> interior_pds_violation(const LatticeSet& s, const Region& interior);

/// Builds the code on interior grown by `pad` (pad >= 1) and checks the
/// PDS condition on the interior vertices.
bool psi_is_pds_on_window(const SequenceWindow& window, const Region& interior, int pad);

/// Lower-left corners (cx,cy) of the unit squares in `cells` whose four
/// corners all avoid `s`, i.e. the unit 4-cycles of the complement.
LatticeSet unit_cells(const LatticeSet& s, const Region& cells);

/// Room-ladder dual: one vertex per unit 4-cycle of the complement of the
/// code, placed at the square's corner with smallest coordinates.
LatticeSet psi_dual(const SequenceWindow& window, const Region& region);

/// Labeled block of unit squares (labels 0..7) generated from a period.
struct Tile {
  std::vector<std::vector<int>> rows;
  std::vector<int> row_start;  // column of each row's first square

  std::optional<int> label_at(int column, int row) const;
};

/// Rotation of `period` that ends with its last unit entry moved to the end
/// (trailing zeros are moved to the front). The all-zero word is unchanged.
PeriodWord canonical_rotation(const PeriodWord& period);

/// Splits a period ending in 1 into blocks B_1..B_k, each ending at a unit entry.
std::vector<std::vector<int>> unit_blocks(const PeriodWord& period);

/// Top-row labels of a block: 6420 per zero, 642 for the closing one.
std::vector<int> xi_labels(const std::vector<int>& block);
/// Second-row labels of a block: 7531 per zero, 75310 for the closing one.
std::vector<int> eta_labels(const std::vector<int>& block);

Tile fundamental_tile(const PeriodWord& period);

/// p x p array of unit-square labels on the torus cutout.
struct LabelArray {
  int p = 0;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const LabelArray&, const LabelArray&) = default;
};

LabelArray m_array(const PeriodWord& period);

/// Projection of the periodic code onto Torus[p,p]; always a parallel TPC
/// with p^2/4 vertices (ConstructionBug otherwise).
CodeSet phi(const PeriodWord& period);

}  // namespace latcodes
