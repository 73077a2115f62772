#pragma once

// Closed-form labelings whose label classes are perfect codes:
//  - d-perfect labelings of the plane by Z_q, q = 2d^2 + 2d + 1, with a
//    horizontal step adding +-1 and a vertical step adding 2d^2;
//  - the four-class parallel TPC partition of C_m x C_n (4 | m, n);
//  - prism constructions;
//  - r-dimensional 1-perfect labelings by Z_{2r+1}, axis i adding i.

#include <vector>

#include "latcodes/predicates.hpp"

namespace latcodes {

enum class Orientation { Standard, Mirror };

struct DLabeling {
  int d = 1;
  int offset = 0;
  Orientation orientation = Orientation::Standard;

  int q() const noexcept { return 2 * d * d + 2 * d + 1; }
};

/// Residue in [0, q).
int d_label(int x, int y, const DLabeling& lab);

/// Class c holds the vertices with d_label == c (offset 0). Requires q | m, q | n.
std::vector<CodeSet> d_partition_torus(int m, int n, int d,
                                       Orientation orientation = Orientation::Standard);

/// Projection of the null-sequence code and its translates by (0,1), (2,0), (2,1).
std::vector<CodeSet> s2_partition(int m, int n);

/// {(0,1+6i),(0,2+6i),(1,4+6i),(1,5+6i)}; requires 6 | n.
CodeSet prism_ptpc(int n);

/// {(1,4i),(0,2+4i)} and its translates by (1,0), (0,1), (1,1); requires 4 | n.
std::vector<CodeSet> prism_one_perfect_partition(int n);

struct RLabeling {
  int r = 2;

  int q() const noexcept { return 2 * r + 1; }
};

/// Label in 1..q; the origin gets r+1 and a unit step along axis i adds i.
int r_label(const Point& v, const RLabeling& lab);

/// Class c holds the vertices whose label is congruent to c mod q. Axis i
/// (1-based) must have length divisible by q / gcd(q, i).
std::vector<CodeSet> r_partition_torus(const std::vector<int>& dims, int r);

/// Class index lists of a partition, for quotient and partition checks.
std::vector<VertexSet> class_indices(const Graph& g, const std::vector<CodeSet>& classes);

}  // namespace latcodes
