#pragma once

#include <vector>

#include "core/citype.hpp"

namespace cipow {

// One fat point: n+1 homogeneous rational coordinates plus a multiplicity.
struct FatPoint {
  std::vector<BigRat> coords;
  int mult = 1;
  bool operator==(const FatPoint& other) const {
    return coords == other.coords && mult == other.mult;
  }
};

struct PointConfig {
  int ambient = 0;
  std::vector<FatPoint> points;
  bool operator==(const PointConfig& other) const {
    return ambient == other.ambient && points == other.points;
  }
};

// Coordinate lengths, nonzero coordinates, mult >= 1, and pairwise projective
// distinctness. Throws std::invalid_argument naming the failed condition.
void validate(const PointConfig& config);

// Number of degree-t monomials in ambient+1 variables whose exponent vector
// b satisfies sum_{j<r} floor(b_j / d_j) <= s-1, i.e. the Hilbert function of
// the monomial model x_0^{d_1}, ..., x_{r-1}^{d_r} raised to the s-th power.
// Requires r <= ambient+1 and s >= 1. Degrees below 0 count 0.
BigInt monomial_hf(const CIType& type, int ambient, int s, long degree);
std::vector<BigInt> monomial_hf_range(const CIType& type, int ambient, int s,
                                      int max_degree);

// Axis value lists 0, 1, ..., size-1 for a default integer grid.
std::vector<std::vector<BigRat>> integer_axes(const std::vector<int>& sizes);

// The product grid (1 : a_1 : ... : a_n) with a_k ranging over axis_values[k],
// points emitted in lexicographic index order. mults holds either one entry
// (uniform) or one entry per grid point in that order.
PointConfig grid_points(const std::vector<std::vector<BigRat>>& axis_values,
                        const std::vector<int>& mults);

// Config without the fat point at the given index. Throws std::out_of_range.
PointConfig remove_point(const PointConfig& config, int index);

// Interpolation matrix: one row per partial-derivative condition of order
// <= mult-1 per point, one column per degree-t monomial. Exposed so the
// verification suites can permute rows before ranking.
std::vector<std::vector<BigRat>> conditions_matrix(const PointConfig& config,
                                                   long degree);

// Exact rank by fraction-free integer elimination after clearing row
// denominators; pivot = first row with a nonzero entry in the column.
long exact_rank(std::vector<std::vector<BigRat>> rows);

// H_{R/I_Z}(degree) = rank of the conditions matrix. 0 below degree 0.
long points_hf(const PointConfig& config, long degree);
std::vector<long> points_hf_range(const PointConfig& config, int max_degree);

// Least degree with (I_Z)_t != 0 and least degree where H reaches deg(Z).
// The scan window extends until the value is found; a generous cap guards
// the loop (sum of multiplicities bounds alpha, zero-dimensionality bounds ri).
long points_alpha(const PointConfig& config);
long points_ri(const PointConfig& config);

// deg(Z) = sum_i C(ambient + mult_i - 1, ambient).
BigInt points_degree(const PointConfig& config);

}  // namespace cipow
