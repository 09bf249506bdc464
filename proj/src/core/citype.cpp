#include "core/citype.hpp"

#include <algorithm>
#include <stdexcept>

namespace cipow {

CIType::CIType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty())
    throw std::invalid_argument("type needs at least one generator degree");
  for (int d : degrees_)
    if (d < 1) throw std::invalid_argument("degrees must be >= 1");
  std::sort(degrees_.begin(), degrees_.end());
}

long CIType::degree_sum() const {
  long total = 0;
  for (int d : degrees_) total += d;
  return total;
}

BigInt CIType::degree_product() const {
  BigInt product = 1;
  for (int d : degrees_) product *= d;
  return product;
}

long CIType::weighted_degree(const Composition& exponents) const {
  long total = 0;
  for (std::size_t j = 0; j < degrees_.size(); ++j)
    total += static_cast<long>(exponents[j]) * degrees_[j];
  return total;
}

}  // namespace cipow
