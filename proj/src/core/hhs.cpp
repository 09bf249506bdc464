#include "core/hhs.hpp"

#include <stdexcept>

namespace cipow {

std::pair<std::vector<long>, std::vector<long>> shift_bounds(const CIType& type, int s) {
  if (s < 1) throw std::invalid_argument("power must be >= 1");
  const int r = type.generators();
  std::vector<long> mins(static_cast<std::size_t>(r));
  std::vector<long> maxs(static_cast<std::size_t>(r));
  long min_acc = static_cast<long>(s) * type.degree(0);
  for (int i = 1; i <= r; ++i) {
    if (i >= 2) min_acc += type.degree(i - 1);
    mins[static_cast<std::size_t>(i - 1)] = min_acc;
  }
  long max_acc = static_cast<long>(s) * type.degree(r - 1);
  for (int i = 1; i <= r; ++i) {
    if (i >= 2) max_acc += type.degree(r - i);
    maxs[static_cast<std::size_t>(i - 1)] = max_acc;
  }
  return {std::move(mins), std::move(maxs)};
}

HHSReport check_hhs(const CIType& type, int s) {
  HHSReport report;
  auto [mins, maxs] = shift_bounds(type, s);
  report.min_shifts = std::move(mins);
  report.max_shifts = std::move(maxs);

  // The resolution of R/I^s prepends a rank-1 free module, so column i of
  // the ideal's table is homological step i+1 of the quotient.
  const auto extremes = extreme_shifts(power_betti(type, s));
  for (const auto& range : extremes) {
    report.table_min.push_back(range.min);
    report.table_max.push_back(range.max);
  }
  report.shifts_match = report.table_min == report.min_shifts &&
                        report.table_max == report.max_shifts;

  report.mult = multiplicity(type, s);
  BigInt min_product = 1, max_product = 1;
  for (std::size_t i = 0; i < report.min_shifts.size(); ++i) {
    min_product *= report.min_shifts[i];
    max_product *= report.max_shifts[i];
  }
  BigInt factorial = 1;
  for (int i = 2; i <= type.generators(); ++i) factorial *= i;

  report.lower = BigRat(min_product) / BigRat(factorial);
  report.upper = BigRat(max_product) / BigRat(factorial);
  // Exact comparison with integers: cross-multiplied by r!.
  const BigInt scaled = report.mult * factorial;
  report.holds = min_product <= scaled && scaled <= max_product;
  return report;
}

}  // namespace cipow
