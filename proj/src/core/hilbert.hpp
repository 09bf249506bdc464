#pragma once

#include <vector>

#include "core/betti.hpp"

namespace cipow {

// Exact Hilbert function values over a degree window together with the
// numerator polynomial of the series over (1-z)^(ambient+1).
struct HilbertData {
  int ambient = 0;                 // the ring has ambient+1 variables
  std::vector<BigInt> values;      // degrees 0..D
  std::vector<BigInt> numerator;   // coefficient i multiplies z^i

  // 0 below degree 0; throws past the computed window.
  const BigInt& value_at(long degree) const;
  bool operator==(const HilbertData& other) const;
};

// Default window s*(d_1+...+d_r)+5: wide enough that stabilization of the
// points case is always visible.
int default_window(const CIType& type, int s);

// Hilbert function of R/I for a complete intersection I, via the numerator
// prod_i (1 - z^{d_i}). Requires r <= ambient+1.
HilbertData hf_ci(const CIType& type, int ambient, int max_degree);

// Hilbert function of R/I^s as the sum of shifted copies of H_{R/I}, one
// per tuple with a_1+...+a_r <= s-1. Requires s >= 1 and r <= ambient+1.
HilbertData hf_power(const CIType& type, int ambient, int s, int max_degree);

// Hilbert function read off a resolution: numerator
// 1 + sum_i (-1)^{i+1} sum_{twist b in column i} mult * z^b.
HilbertData hf_from_betti(const BettiTable& table, int ambient, int max_degree);

// e(R/I^s) = C(s+r-1, r) * d_1*...*d_r. Requires s >= 1.
BigInt multiplicity(const CIType& type, int s);

}  // namespace cipow
