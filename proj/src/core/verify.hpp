#pragma once

#include <string>
#include <vector>

#include "core/citype.hpp"

namespace cipow::verify {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample on failure
  double seconds = 0.0;
};

// Sweep sizes; desk-scale by default, flag-expandable from the CLI.
struct Lattice {
  int max_r = 4;
  int max_degree_value = 4;  // d_i <= this
  int max_power = 4;
  int max_window = 30;       // cap on Hilbert windows
};

// Every ascending degree tuple with 1 <= r <= max_r, 1 <= d_i <= max_degree_value.
std::vector<CIType> type_lattice(int max_r, int max_degree_value);

CheckResult check_chain_counts(int max_length, int max_endpoint);
CheckResult check_rank_identity(const Lattice& lattice);
CheckResult check_alternating_rank_sum(const Lattice& lattice);
CheckResult check_koszul_degeneration(int max_r, int max_degree_value);
CheckResult check_triple_hilbert_agreement(const Lattice& lattice);
CheckResult check_points_case_stabilization(const Lattice& lattice);
CheckResult check_hhs_lattice(const Lattice& lattice);
CheckResult check_grid_cbp(int max_degree_value);
CheckResult check_fat_grid_formulas(int max_degree_value, int max_mult);
CheckResult check_power_vs_interpolation(int max_degree_value, int max_power);
CheckResult check_sandwich_patterns();
CheckResult check_example_grid_sequence();
CheckResult check_coordinate_change_invariance();
CheckResult check_row_shuffle_rank();

// Suites: "ranks", "series", "oracle", "all". Throws std::invalid_argument
// on an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const Lattice& lattice);

std::string format_report(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cipow::verify
