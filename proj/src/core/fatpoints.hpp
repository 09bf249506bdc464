#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/hilbert.hpp"

namespace cipow {

struct Interval {
  long lo = 0;
  long hi = 0;
  bool contains(long v) const { return lo <= v && v <= hi; }
  bool operator==(const Interval&) const = default;
};

// alpha / regularity-index / degree report. Intervals are degenerate when
// the value is exact; a bound is absent when no stated result covers it.
// Each note records which bound came from which hypothesis.
struct InvariantReport {
  std::optional<Interval> alpha;
  std::optional<Interval> reg_index;
  BigInt degree;
  std::vector<std::string> notes;
};

// Homogeneous fat points of multiplicity mult supported on a complete
// intersection of points (requires r == ambient). All three invariants
// are exact: alpha = m*d_1, ri = d_1+...+d_{n-1}+m*d_n-n,
// deg = (prod d_i) * C(m+n-1, n).
InvariantReport ci_invariants(const CIType& type, int ambient, int mult);

// Non-homogeneous support: the Hilbert function is sandwiched between the
// min- and max-multiplicity homogeneous cases, which also bound alpha and ri.
struct SandwichReport {
  InvariantReport report;
  HilbertData lower_hf;  // power = min multiplicity
  HilbertData upper_hf;  // power = max multiplicity
  int min_mult = 1;
  int max_mult = 1;
};

// mults holds one entry per support point (prod d_i of them) or a single
// uniform entry.
SandwichReport sandwich_bounds(const CIType& type, int ambient,
                               const std::vector<int>& mults);

// Hilbert function of a reduced complete intersection of points minus any
// single point: min{H_X(t), |X|-1} (the Cayley-Bacharach property).
BigInt cb_minus_point_hf(const CIType& type, long degree);

enum class SplitAxis { first, last };

// A complete intersection of points written as the disjoint union of a
// degree-(d_i - 1) and a degree-1 slice along one axis, with the removed
// point lying in the degree-1 (hyperplane) factor.
struct SplitSpec {
  CIType type;
  int ambient;
  int mult;
  SplitAxis axis;
  bool removed_in_hyperplane = true;
};

// alpha(Y) for Y = {X;m} minus one fat point, when X splits along the LAST
// (largest) degree: [m(d_1-1), m*d_1] when d_1 == d_n, exactly m*d_1 when
// d_1 < d_n. Rejects any other setup.
Interval split_alpha(const SplitSpec& spec);

// ri(Y) when X splits along the FIRST degree with d_1 >= 2: the width-one
// interval [d-(n+1), d-n] with d = d_1+...+d_{n-1}+m*d_n.
Interval split_ri_bounds(const SplitSpec& spec);

// Exact regularity index in the plane: d_1 + m*d_2 - 3, for a first-axis
// split with 2 <= d_1 <= d_2 and the removed point in the degree-1 factor.
long p2_exact_ri(int d1, int d2, int mult);

enum class PointSetKind { complete_intersection, ci_minus_point };

// Least degree whose ideal piece contains a length-two regular sequence;
// equals d_2 for a plane complete intersection and for the same set minus
// a point.
int b_value(PointSetKind kind, int d1, int d2);

// ri(support) + sum of the per-layer b-values (one per multiplicity layer
// beyond the first).
long trung_valla_bound(long ri_support, const std::vector<int>& b_values);

// Full report for the split subcommand: only the bounds licensed by the
// split axis are present.
InvariantReport split_report(const SplitSpec& spec);

}  // namespace cipow
