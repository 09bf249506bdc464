#pragma once

#include <vector>

#include "core/bigint.hpp"
#include "core/combinatorics.hpp"

namespace cipow {

// Degree tuple (d_1 <= ... <= d_r) of a complete intersection. The tuple is
// normalized ascending on construction; every formula downstream assumes it.
class CIType {
 public:
  explicit CIType(std::vector<int> degrees);

  int generators() const { return static_cast<int>(degrees_.size()); }  // r
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  long degree_sum() const;
  BigInt degree_product() const;

  // sum_j a_j * d_j
  long weighted_degree(const Composition& exponents) const;

  bool operator==(const CIType& other) const { return degrees_ == other.degrees_; }

 private:
  std::vector<int> degrees_;
};

}  // namespace cipow
