#pragma once

#include <utility>
#include <vector>

#include "core/hilbert.hpp"

namespace cipow {

// Multiplicity-vs-shifts report: prod(m_i)/r! <= e(R/I^s) <= prod(M_i)/r!.
// Shift extremes are computed twice, from the closed formulas and from the
// Betti table of I^s; a disagreement flags a resolution bug.
struct HHSReport {
  std::vector<long> min_shifts;  // m_i = s*d_1 + d_2 + ... + d_i
  std::vector<long> max_shifts;  // M_i = d_{r-i+1} + ... + d_{r-1} + s*d_r
  std::vector<long> table_min;   // read off power_betti, column i-1
  std::vector<long> table_max;
  bool shifts_match = false;
  BigInt mult;
  BigRat lower;
  BigRat upper;
  bool holds = false;
};

std::pair<std::vector<long>, std::vector<long>> shift_bounds(const CIType& type, int s);

HHSReport check_hhs(const CIType& type, int s);

}  // namespace cipow
