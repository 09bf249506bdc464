#include "core/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "core/fatpoints.hpp"
#include "core/hhs.hpp"
#include "core/hilbert.hpp"
#include "core/oracle.hpp"
#include "core/parallel.hpp"

namespace cipow::verify {

namespace {

std::string describe(const CIType& type) {
  std::string out = "(";
  for (std::size_t i = 0; i < type.degrees().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(type.degrees()[i]);
  }
  return out + ")";
}

// Runs body under a timer; body returns the first counterexample or "".
CheckResult timed(const std::string& name, const std::function<std::string()>& body) {
  CheckResult result;
  result.name = name;
  const auto start = std::chrono::steady_clock::now();
  result.detail = body();
  result.pass = result.detail.empty();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// Sweeps cases in parallel, keeping the first failure by case order.
std::string sweep(std::size_t count, const std::function<std::string(std::size_t)>& body) {
  std::vector<std::string> failures(count);
  parallel_for(count, [&](std::size_t i) { failures[i] = body(i); });
  for (const std::string& f : failures)
    if (!f.empty()) return f;
  return {};
}

void extend_lattice(std::vector<CIType>& out, std::vector<int>& current, int r,
                    int max_degree_value) {
  if (static_cast<int>(current.size()) == r) {
    out.emplace_back(current);
    return;
  }
  const int low = current.empty() ? 1 : current.back();
  for (int d = low; d <= max_degree_value; ++d) {
    current.push_back(d);
    extend_lattice(out, current, r, max_degree_value);
    current.pop_back();
  }
}

std::vector<std::pair<CIType, int>> type_power_lattice(const Lattice& lattice) {
  std::vector<std::pair<CIType, int>> out;
  for (const CIType& type : type_lattice(lattice.max_r, lattice.max_degree_value))
    for (int s = 1; s <= lattice.max_power; ++s) out.emplace_back(type, s);
  return out;
}

std::vector<BigRat> apply_matrix(const std::vector<std::vector<BigRat>>& m,
                                 const std::vector<BigRat>& v) {
  std::vector<BigRat> out(m.size(), BigRat(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

std::vector<CIType> type_lattice(int max_r, int max_degree_value) {
  std::vector<CIType> out;
  std::vector<int> current;
  for (int r = 1; r <= max_r; ++r) extend_lattice(out, current, r, max_degree_value);
  return out;
}

CheckResult check_chain_counts(int max_length, int max_endpoint) {
  return timed("chain counts: enumeration equals C(t-2, i-1) for i<=" +
                   std::to_string(max_length) + ", t<=" + std::to_string(max_endpoint),
               [=]() -> std::string {
    for (int length = 1; length <= max_length; ++length) {
      for (int endpoint = length + 1; endpoint <= max_endpoint; ++endpoint) {
        const BigInt brute = chain_count_enumerated(length, endpoint, max_endpoint);
        const BigInt closed = binomial(endpoint - 2, length - 1);
        const BigInt fast = chain_count(length, endpoint, max_endpoint);
        if (brute != closed || fast != closed)
          return "i=" + std::to_string(length) + " t=" + std::to_string(endpoint) +
                 ": enumerated " + to_decimal(brute) + ", closed form " +
                 to_decimal(closed);
      }
    }
    return {};
  });
}

CheckResult check_rank_identity(const Lattice& lattice) {
  const auto cases = type_power_lattice(lattice);
  return timed("rank identity: column totals equal C(r+s-1,s+i)*C(s-1+i,i) (r<=" +
                   std::to_string(lattice.max_r) + ", d<=" +
                   std::to_string(lattice.max_degree_value) + ", s<=" +
                   std::to_string(lattice.max_power) + ")",
               [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [type, s] = cases[k];
      const BettiTable table = power_betti(type, s);
      for (int i = 0; i < table.r; ++i) {
        const BigInt got = table.column_total(i);
        const BigInt want = rank_formula(table.r, s, i);
        if (got != want)
          return "type " + describe(type) + " s=" + std::to_string(s) + " column " +
                 std::to_string(i) + ": total " + to_decimal(got) + ", formula " +
                 to_decimal(want);
      }
      return {};
    });
  });
}

CheckResult check_alternating_rank_sum(const Lattice& lattice) {
  const auto cases = type_power_lattice(lattice);
  return timed("alternating rank sum vanishes on every computed table", [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [type, s] = cases[k];
      const BettiTable table = power_betti(type, s);
      BigInt acc = 1;
      for (int i = 0; i < table.r; ++i) {
        if (i % 2 == 0)
          acc -= table.column_total(i);
        else
          acc += table.column_total(i);
      }
      if (acc != 0)
        return "type " + describe(type) + " s=" + std::to_string(s) +
               ": alternating sum " + to_decimal(acc);
      return {};
    });
  });
}

CheckResult check_koszul_degeneration(int max_r, int max_degree_value) {
  const auto types = type_lattice(max_r, max_degree_value);
  return timed("power s=1 degenerates to the Koszul table (r<=" +
                   std::to_string(max_r) + ", d<=" + std::to_string(max_degree_value) + ")",
               [&]() {
    return sweep(types.size(), [&](std::size_t k) -> std::string {
      if (!(power_betti(types[k], 1) == koszul_betti(types[k])))
        return "type " + describe(types[k]) + ": s=1 table differs from Koszul";
      return {};
    });
  });
}

CheckResult check_triple_hilbert_agreement(const Lattice& lattice) {
  const auto cases = type_power_lattice(lattice);
  return timed("triple Hilbert agreement: corollary sum == betti series == monomial count",
               [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [type, s] = cases[k];
      const int n = type.generators();
      const int window = std::min(default_window(type, s), lattice.max_window);
      const auto direct = hf_power(type, n, s, window).values;
      const auto from_table = hf_from_betti(power_betti(type, s), n, window).values;
      const auto counted = monomial_hf_range(type, n, s, window);
      for (int t = 0; t <= window; ++t) {
        const std::size_t u = static_cast<std::size_t>(t);
        if (direct[u] != from_table[u] || direct[u] != counted[u])
          return "type " + describe(type) + " s=" + std::to_string(s) + " degree " +
                 std::to_string(t) + ": corollary " + to_decimal(direct[u]) +
                 ", betti " + to_decimal(from_table[u]) + ", monomial " +
                 to_decimal(counted[u]);
      }
      return {};
    });
  });
}

CheckResult check_points_case_stabilization(const Lattice& lattice) {
  const auto cases = type_power_lattice(lattice);
  return timed("points case: HF non-decreasing, stabilizes at the multiplicity at the stated degree",
               [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [type, s] = cases[k];
      const int n = type.generators();  // r = n: points in P^n
      long stable_at = -n;
      for (int i = 0; i < n - 1; ++i) stable_at += type.degree(i);
      stable_at += static_cast<long>(s) * type.degree(n - 1);
      const int window = default_window(type, s);
      const auto values = hf_power(type, n, s, window).values;
      const BigInt expected = multiplicity(type, s);
      const std::string tag = "type " + describe(type) + " s=" + std::to_string(s);
      for (std::size_t t = 0; t + 1 < values.size(); ++t)
        if (values[t] > values[t + 1]) return tag + ": HF decreases at degree " + std::to_string(t + 1);
      for (std::size_t t = 0; t < values.size(); ++t)
        if (values[t] > expected) return tag + ": HF exceeds deg at degree " + std::to_string(t);
      if (values[static_cast<std::size_t>(stable_at)] != expected)
        return tag + ": HF(" + std::to_string(stable_at) + ") != deg";
      if (stable_at > 0 && values[static_cast<std::size_t>(stable_at - 1)] == expected)
        return tag + ": HF reaches deg before degree " + std::to_string(stable_at);
      return {};
    });
  });
}

CheckResult check_hhs_lattice(const Lattice& lattice) {
  const auto cases = type_power_lattice(lattice);
  return timed("multiplicity bounds hold and formula shifts equal table extremes", [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [type, s] = cases[k];
      const HHSReport report = check_hhs(type, s);
      const std::string tag = "type " + describe(type) + " s=" + std::to_string(s);
      if (!report.holds) return tag + ": bound fails, e=" + to_decimal(report.mult);
      if (!report.shifts_match) return tag + ": formula shifts differ from table extremes";
      if (report.lower > report.upper) return tag + ": lower bound exceeds upper bound";
      const bool equal_degrees = type.degree(0) == type.degree(type.generators() - 1);
      if ((report.lower == report.upper) != equal_degrees)
        return tag + ": bound equality does not match d1 == dr";
      return {};
    });
  });
}

CheckResult check_grid_cbp(int max_degree_value) {
  std::vector<std::pair<int, int>> shapes;
  for (int d1 = 1; d1 <= max_degree_value; ++d1)
    for (int d2 = d1; d2 <= max_degree_value; ++d2) shapes.emplace_back(d1, d2);
  return timed("Cayley-Bacharach: every single-point removal gives min{H_X, |X|-1} (d<=" +
                   std::to_string(max_degree_value) + ")",
               [&]() {
    return sweep(shapes.size(), [&](std::size_t k) -> std::string {
      const auto [d1, d2] = shapes[k];
      const CIType type({d1, d2});
      const int window = d1 + d2;
      const PointConfig full = grid_points(integer_axes({d1, d2}), {1});
      std::vector<BigInt> expected;
      for (long t = 0; t <= window; ++t) expected.push_back(cb_minus_point_hf(type, t));
      for (int p = 0; p < static_cast<int>(full.points.size()); ++p) {
        const auto got = points_hf_range(remove_point(full, p), window);
        for (int t = 0; t <= window; ++t)
          if (expected[static_cast<std::size_t>(t)] != got[static_cast<std::size_t>(t)])
            return "grid " + std::to_string(d1) + "x" + std::to_string(d2) +
                   " minus point " + std::to_string(p) + " degree " + std::to_string(t) +
                   ": oracle " + std::to_string(got[static_cast<std::size_t>(t)]) +
                   ", formula " + to_decimal(expected[static_cast<std::size_t>(t)]);
      }
      return {};
    });
  });
}

CheckResult check_fat_grid_formulas(int max_degree_value, int max_mult) {
  struct Case {
    std::vector<int> sizes;
    int mult;
  };
  std::vector<Case> cases;
  for (int d1 = 1; d1 <= max_degree_value; ++d1)
    for (int d2 = d1; d2 <= max_degree_value; ++d2)
      for (int m = 1; m <= max_mult; ++m) cases.push_back({{d1, d2}, m});
  cases.push_back({{2, 2, 2}, 2});  // one P^3 smoke case
  return timed("homogeneous fat grids: oracle alpha/ri/deg equal the exact formulas",
               [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [sizes, mult] = cases[k];
      const CIType type(sizes);
      const int n = static_cast<int>(sizes.size());
      const PointConfig grid = grid_points(integer_axes(sizes), {mult});
      const InvariantReport report = ci_invariants(type, n, mult);
      std::string tag = "grid " + describe(type) + " m=" + std::to_string(mult);
      const long alpha = points_alpha(grid);
      if (alpha != report.alpha->lo)
        return tag + ": oracle alpha " + std::to_string(alpha) + ", formula " +
               std::to_string(report.alpha->lo);
      const long ri = points_ri(grid);
      if (ri != report.reg_index->lo)
        return tag + ": oracle ri " + std::to_string(ri) + ", formula " +
               std::to_string(report.reg_index->lo);
      if (points_degree(grid) != report.degree)
        return tag + ": oracle deg " + to_decimal(points_degree(grid)) + ", formula " +
               to_decimal(report.degree);
      return {};
    });
  });
}

CheckResult check_power_vs_interpolation(int max_degree_value, int max_power) {
  struct Case {
    std::vector<int> sizes;
    int power;
  };
  std::vector<Case> cases;
  for (int d1 = 1; d1 <= max_degree_value; ++d1)
    for (int d2 = d1; d2 <= max_degree_value; ++d2)
      for (int s = 1; s <= max_power; ++s) cases.push_back({{d1, d2}, s});
  cases.push_back({{2, 2, 2}, 2});
  return timed("interpolation oracle equals hf_power on grids through stabilization",
               [&]() {
    return sweep(cases.size(), [&](std::size_t k) -> std::string {
      const auto& [sizes, s] = cases[k];
      const CIType type(sizes);
      const int n = static_cast<int>(sizes.size());
      long stable_at = -n;
      for (int i = 0; i < n - 1; ++i) stable_at += type.degree(i);
      stable_at += static_cast<long>(s) * type.degree(n - 1);
      const int window = static_cast<int>(stable_at) + 1;
      const auto formula = hf_power(type, n, s, window).values;
      const auto oracle =
          points_hf_range(grid_points(integer_axes(sizes), {s}), window);
      for (int t = 0; t <= window; ++t)
        if (formula[static_cast<std::size_t>(t)] != oracle[static_cast<std::size_t>(t)])
          return "grid " + describe(type) + " s=" + std::to_string(s) + " degree " +
                 std::to_string(t) + ": formula " +
                 to_decimal(formula[static_cast<std::size_t>(t)]) + ", oracle " +
                 std::to_string(oracle[static_cast<std::size_t>(t)]);
      return {};
    });
  });
}

CheckResult check_sandwich_patterns() {
  return timed("sandwich: mixed-multiplicity CI(2,2) lies between the power HFs",
               [&]() {
    std::vector<std::vector<int>> patterns;
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<int> mults(4);
      for (int bit = 0; bit < 4; ++bit) mults[static_cast<std::size_t>(bit)] = ((mask >> bit) & 1) + 1;
      patterns.push_back(std::move(mults));
    }
    const CIType type({2, 2});
    return sweep(patterns.size(), [&](std::size_t k) -> std::string {
      const auto& mults = patterns[k];
      std::string tag = "mults (";
      for (std::size_t i = 0; i < mults.size(); ++i)
        tag += (i ? "," : "") + std::to_string(mults[i]);
      tag += ")";
      const SandwichReport sandwich = sandwich_bounds(type, 2, mults);
      const PointConfig grid = grid_points(integer_axes({2, 2}), mults);
      const int window = static_cast<int>(sandwich.report.reg_index->hi) + 2;
      const auto oracle = points_hf_range(grid, window);
      for (int t = 0; t <= window; ++t) {
        const std::size_t u = static_cast<std::size_t>(t);
        if (BigInt(oracle[u]) < sandwich.lower_hf.values[u] ||
            BigInt(oracle[u]) > sandwich.upper_hf.values[u])
          return tag + " degree " + std::to_string(t) + ": oracle HF " +
                 std::to_string(oracle[u]) + " outside the sandwich";
      }
      if (!sandwich.report.alpha->contains(points_alpha(grid)))
        return tag + ": oracle alpha " + std::to_string(points_alpha(grid)) +
               " outside [" + std::to_string(sandwich.report.alpha->lo) + "," +
               std::to_string(sandwich.report.alpha->hi) + "]";
      if (!sandwich.report.reg_index->contains(points_ri(grid)))
        return tag + ": oracle ri " + std::to_string(points_ri(grid)) + " outside [" +
               std::to_string(sandwich.report.reg_index->lo) + "," +
               std::to_string(sandwich.report.reg_index->hi) + "]";
      if (points_degree(grid) != sandwich.report.degree)
        return tag + ": deg mismatch";
      return {};
    });
  });
}

CheckResult check_example_grid_sequence() {
  return timed("3x4 grid, multiplicity 3, minus one triple point: frozen HF sequence",
               [&]() -> std::string {
    const std::vector<long> expected = {1,  3,  6,  10, 15, 21, 28, 36,
                                        45, 54, 62, 65, 66, 66, 66};
    const PointConfig full = grid_points(integer_axes({3, 4}), {3});
    const int removals = static_cast<int>(full.points.size());
    std::vector<std::vector<long>> sequences(static_cast<std::size_t>(removals));
    std::string failure = sweep(static_cast<std::size_t>(removals),
                                [&](std::size_t p) -> std::string {
      sequences[p] = points_hf_range(remove_point(full, static_cast<int>(p)),
                                     static_cast<int>(expected.size()) - 1);
      return {};
    });
    if (!failure.empty()) return failure;
    for (int p = 0; p < removals; ++p)
      if (sequences[static_cast<std::size_t>(p)] != expected)
        return "removal " + std::to_string(p) + " deviates from the frozen sequence";
    // First attainment of |deg| = 66 must match the exact plane formula.
    const long ri = points_ri(remove_point(full, 0));
    if (ri != p2_exact_ri(3, 4, 3))
      return "oracle ri " + std::to_string(ri) + " != d1 + m*d2 - 3 = " +
             std::to_string(p2_exact_ri(3, 4, 3));
    return {};
  });
}

CheckResult check_coordinate_change_invariance() {
  return timed("interpolation HF is invariant under projective coordinate changes",
               [&]() -> std::string {
    const PointConfig base = grid_points(integer_axes({2, 3}), {2});
    const int window = 7;
    const auto reference = points_hf_range(base, window);
    using Row = std::vector<BigRat>;
    const std::vector<std::vector<Row>> changes = {
        {Row{BigRat(1), BigRat(1), BigRat(0)}, Row{BigRat(0), BigRat(1), BigRat(0)},
         Row{BigRat(0), BigRat(0), BigRat(1)}},
        {Row{BigRat(1, 2), BigRat(0), BigRat(1)}, Row{BigRat(1), BigRat(1), BigRat(0)},
         Row{BigRat(0), BigRat(2), BigRat(1)}},
        {Row{BigRat(0), BigRat(2), BigRat(0)}, Row{BigRat(0), BigRat(0), BigRat(-1, 3)},
         Row{BigRat(1), BigRat(0), BigRat(1)}}};
    for (std::size_t c = 0; c < changes.size(); ++c) {
      PointConfig moved = base;
      for (FatPoint& point : moved.points)
        point.coords = apply_matrix(changes[c], point.coords);
      const auto got = points_hf_range(moved, window);
      if (got != reference)
        return "coordinate change " + std::to_string(c) + " altered the HF";
    }
    return {};
  });
}

CheckResult check_row_shuffle_rank() {
  return timed("conditions-matrix rank is independent of row order", [&]() -> std::string {
    const PointConfig config = grid_points(integer_axes({2, 2}), {2});
    for (long t = 2; t <= 5; ++t) {
      const auto rows = conditions_matrix(config, t);
      const long reference = exact_rank(rows);
      std::mt19937 rng(12345u + static_cast<unsigned>(t));
      for (int trial = 0; trial < 3; ++trial) {
        auto shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const long got = exact_rank(std::move(shuffled));
        if (got != reference)
          return "degree " + std::to_string(t) + " trial " + std::to_string(trial) +
                 ": rank " + std::to_string(got) + " != " + std::to_string(reference);
      }
    }
    return {};
  });
}

std::vector<CheckResult> run_suite(const std::string& suite, const Lattice& lattice) {
  const bool all = suite == "all";
  std::vector<CheckResult> results;
  if (all || suite == "ranks") {
    results.push_back(check_chain_counts(6, 8));
    results.push_back(check_rank_identity(lattice));
    results.push_back(check_alternating_rank_sum(lattice));
    results.push_back(
        check_koszul_degeneration(lattice.max_r + 1, lattice.max_degree_value + 1));
  }
  if (all || suite == "series") {
    results.push_back(check_triple_hilbert_agreement(lattice));
    results.push_back(check_points_case_stabilization(lattice));
    results.push_back(check_hhs_lattice(lattice));
  }
  if (all || suite == "oracle") {
    results.push_back(check_grid_cbp(std::min(lattice.max_degree_value, 4)));
    results.push_back(check_fat_grid_formulas(3, 3));
    results.push_back(check_power_vs_interpolation(3, 3));
    results.push_back(check_sandwich_patterns());
    results.push_back(check_example_grid_sequence());
    results.push_back(check_coordinate_change_invariance());
    results.push_back(check_row_shuffle_rank());
  }
  if (results.empty())
    throw std::invalid_argument("unknown suite \"" + suite +
                                "\" (expected ranks, series, oracle, or all)");
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckResult& result : results) {
    out << (result.pass ? "[PASS] " : "[FAIL] ") << result.name;
    if (!result.pass) out << ": " << result.detail;
    char timing[32];
    std::snprintf(timing, sizeof(timing), " (%.2fs)", result.seconds);
    out << timing << "\n";
    if (result.pass) ++passed;
  }
  out << passed << "/" << results.size() << " properties passed\n";
  return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& result : results)
    if (!result.pass) return false;
  return true;
}

}  // namespace cipow::verify
