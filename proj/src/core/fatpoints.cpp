#include "core/fatpoints.hpp"

#include <algorithm>
#include <stdexcept>

namespace cipow {

namespace {

void require_points_case(const CIType& type, int ambient) {
  if (type.generators() != ambient)
    throw std::invalid_argument(
        "support must be a complete intersection of points: r = n required (got r=" +
        std::to_string(type.generators()) + ", n=" + std::to_string(ambient) + ")");
}

long ri_formula(const CIType& type, int mult) {
  const int n = type.generators();
  long d = 0;
  for (int i = 0; i < n - 1; ++i) d += type.degree(i);
  return d + static_cast<long>(mult) * type.degree(n - 1) - n;
}

}  // namespace

InvariantReport ci_invariants(const CIType& type, int ambient, int mult) {
  require_points_case(type, ambient);
  if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
  const int n = ambient;
  InvariantReport report;
  const long alpha = static_cast<long>(mult) * type.degree(0);
  report.alpha = Interval{alpha, alpha};
  const long ri = ri_formula(type, mult);
  report.reg_index = Interval{ri, ri};
  report.degree = type.degree_product() * binomial(mult + n - 1, n);
  report.notes = {"alpha = m*d1, exact (homogeneous fat complete intersection)",
                  "ri = d1+...+d_{n-1}+m*dn-n, exact",
                  "deg = (d1*...*dn)*C(m+n-1,n)"};
  return report;
}

SandwichReport sandwich_bounds(const CIType& type, int ambient,
                               const std::vector<int>& mults) {
  require_points_case(type, ambient);
  if (mults.empty())
    throw std::invalid_argument("at least one multiplicity required");
  const BigInt support = type.degree_product();
  if (mults.size() != 1 && BigInt(static_cast<long>(mults.size())) != support)
    throw std::invalid_argument(
        "multiplicities: give one uniform value or one per support point (" +
        to_decimal(support) + ")");
  for (int m : mults)
    if (m < 1) throw std::invalid_argument("every multiplicity must be >= 1");

  const int low = *std::min_element(mults.begin(), mults.end());
  const int high = *std::max_element(mults.begin(), mults.end());
  const int n = ambient;

  SandwichReport out;
  out.min_mult = low;
  out.max_mult = high;
  const int window =
      std::max(default_window(type, high), static_cast<int>(ri_formula(type, high)) + 2);
  // I^M <= I_Z <= I^m, so the m-th power bounds H from below, the M-th from above.
  out.lower_hf = hf_power(type, ambient, low, window);
  out.upper_hf = hf_power(type, ambient, high, window);

  out.report.alpha = Interval{static_cast<long>(low) * type.degree(0),
                              static_cast<long>(high) * type.degree(0)};
  out.report.reg_index = Interval{ri_formula(type, low), ri_formula(type, high)};
  BigInt degree = 0;
  if (mults.size() == 1) {
    degree = support * binomial(low + n - 1, n);
  } else {
    for (int m : mults) degree += binomial(n + m - 1, n);
  }
  out.report.degree = degree;
  out.report.notes = {
      "alpha in [m*d1, M*d1] with m/M the extreme multiplicities",
      "ri in [d1+...+d_{n-1}+m*dn-n, d1+...+d_{n-1}+M*dn-n]",
      "deg = sum_i C(n+m_i-1, n)",
      "HF sandwiched between the m-th and M-th power Hilbert functions"};
  return out;
}

BigInt cb_minus_point_hf(const CIType& type, long degree) {
  const int n = type.generators();
  if (degree < 0) return 0;
  const HilbertData full = hf_ci(type, n, static_cast<int>(degree));
  const BigInt cap = type.degree_product() - 1;
  return std::min(full.value_at(degree), cap);
}

Interval split_alpha(const SplitSpec& spec) {
  require_points_case(spec.type, spec.ambient);
  if (spec.mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
  if (spec.axis != SplitAxis::last)
    throw std::invalid_argument(
        "alpha bounds require splitting the last (largest) degree");
  const int n = spec.type.generators();
  const int d1 = spec.type.degree(0);
  const int dn = spec.type.degree(n - 1);
  if (dn < 2)
    throw std::invalid_argument("split coordinate degree >= 2 required");
  if (!spec.removed_in_hyperplane)
    throw std::invalid_argument(
        "removed point must lie in the degree-1 (hyperplane) factor");
  const long exact = static_cast<long>(spec.mult) * d1;
  if (d1 == dn) return Interval{static_cast<long>(spec.mult) * (d1 - 1), exact};
  return Interval{exact, exact};
}

Interval split_ri_bounds(const SplitSpec& spec) {
  require_points_case(spec.type, spec.ambient);
  if (spec.mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
  if (spec.axis != SplitAxis::first)
    throw std::invalid_argument(
        "ri bounds require splitting the first (smallest) degree");
  const int n = spec.type.generators();
  if (spec.type.degree(0) < 2)
    throw std::invalid_argument("split coordinate degree >= 2 required");
  if (!spec.removed_in_hyperplane)
    throw std::invalid_argument(
        "removed point must lie in the degree-1 (hyperplane) factor");
  long d = 0;
  for (int i = 0; i < n - 1; ++i) d += spec.type.degree(i);
  d += static_cast<long>(spec.mult) * spec.type.degree(n - 1);
  return Interval{d - (n + 1), d - n};
}

long p2_exact_ri(int d1, int d2, int mult) {
  if (d1 < 2) throw std::invalid_argument("split coordinate degree >= 2 required");
  if (d1 > d2) throw std::invalid_argument("degrees must satisfy d1 <= d2");
  if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
  return static_cast<long>(d1) + static_cast<long>(mult) * d2 - 3;
}

int b_value(PointSetKind, int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be >= 1");
  if (d1 > d2) throw std::invalid_argument("degrees must satisfy d1 <= d2");
  // Removing one point changes nothing below d1+d2-2, so both kinds share d2.
  return d2;
}

long trung_valla_bound(long ri_support, const std::vector<int>& b_values) {
  long total = ri_support;
  for (int b : b_values) total += b;
  return total;
}

InvariantReport split_report(const SplitSpec& spec) {
  InvariantReport report;
  const int n = spec.type.generators();
  // deg(Y): the whole homogeneous scheme minus one fat point.
  report.degree = spec.type.degree_product() * binomial(spec.mult + n - 1, n) -
                  binomial(spec.mult + n - 1, n);
  report.notes.push_back("deg = (d1*...*dn - 1)*C(m+n-1,n)");
  if (spec.axis == SplitAxis::last) {
    report.alpha = split_alpha(spec);
    report.notes.push_back(
        spec.type.degree(0) == spec.type.degree(n - 1)
            ? "alpha in [m(d1-1), m*d1] (equal extreme degrees)"
            : "alpha = m*d1, exact (d1 below the split degree)");
    report.notes.push_back("no ri bound is stated for a last-axis split");
  } else {
    report.reg_index = split_ri_bounds(spec);
    if (n == 2) {
      const long exact =
          p2_exact_ri(spec.type.degree(0), spec.type.degree(1), spec.mult);
      report.reg_index = Interval{exact, exact};
      report.notes.push_back(
          "ri = d1+m*d2-3, exact in the plane (Trung-Valla layers each contribute b = d2)");
    } else {
      report.notes.push_back("ri in [d-(n+1), d-n] with d = d1+...+d_{n-1}+m*dn");
    }
    report.notes.push_back("no alpha bound is stated for a first-axis split");
  }
  return report;
}

}  // namespace cipow
