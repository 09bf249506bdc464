#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/citype.hpp"

namespace cipow {

// Graded Betti numbers of I^s, one column per homological index 0..r-1.
// Each column maps a twist to its multiplicity; zero entries are omitted,
// so every stored multiplicity is >= 1 and twists iterate ascending.
struct BettiTable {
  int r = 0;
  int s = 1;
  std::vector<std::map<long, BigInt>> columns;

  BigInt column_total(int i) const;
  bool operator==(const BettiTable& other) const;
};

// Resolution of the ideal itself (s = 1): column j carries one twist
// d_{i_1}+...+d_{i_{j+1}} per (j+1)-subset of the degree tuple.
BettiTable koszul_betti(const CIType& type);

// Resolution of I^s. Column 0 ranges over the compositions of s; column
// i >= 1 collects, for every chain endpoint t in i+1..r with its chain
// multiplicity, the compositions of s+i with at least t nonzero entries.
// Throws when s < 1.
BettiTable power_betti(const CIType& type, int s);

// Closed-form rank of homological step i: C(r+s-1, s+i) * C(s-1+i, i).
// Throws when i is outside 0..r-1 or s < 1.
BigInt rank_formula(int r, int s, int i);

struct ShiftRange {
  long min = 0;
  long max = 0;
  bool operator==(const ShiftRange&) const = default;
};

// Per-column minimum and maximum twist. Throws on an empty table.
std::vector<ShiftRange> extreme_shifts(const BettiTable& table);

// Aligned text diagram: one row per twist, one column per homological index.
std::string render_betti(const BettiTable& table);

}  // namespace cipow
