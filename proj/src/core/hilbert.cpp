#include "core/hilbert.hpp"

#include <stdexcept>

namespace cipow {

namespace {

const BigInt kZero = 0;

void require_window(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
}

void require_ambient(int r, int ambient) {
  if (ambient < 0) throw std::invalid_argument("ambient dimension must be >= 0");
  if (r > ambient + 1)
    throw std::invalid_argument(
        "type longer than ambient allows: a regular sequence in " +
        std::to_string(ambient + 1) + " variables has length at most " +
        std::to_string(ambient + 1));
}

std::vector<BigInt> ci_numerator(const CIType& type) {
  std::vector<BigInt> num{1};
  for (int d : type.degrees()) {
    std::vector<BigInt> next(num.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + static_cast<std::size_t>(d)] -= num[i];
    }
    num = std::move(next);
  }
  return num;
}

// Coefficients of numerator / (1-z)^(ambient+1) through max_degree.
std::vector<BigInt> series_values(const std::vector<BigInt>& numerator,
                                  int ambient, int max_degree) {
  std::vector<BigInt> values(static_cast<std::size_t>(max_degree) + 1, 0);
  for (long t = 0; t <= max_degree; ++t) {
    BigInt acc = 0;
    const long j_max = std::min<long>(t, static_cast<long>(numerator.size()) - 1);
    for (long j = 0; j <= j_max; ++j) {
      if (numerator[static_cast<std::size_t>(j)] == 0) continue;
      acc += numerator[static_cast<std::size_t>(j)] * binomial(t - j + ambient, ambient);
    }
    values[static_cast<std::size_t>(t)] = acc;
  }
  return values;
}

}  // namespace

const BigInt& HilbertData::value_at(long degree) const {
  if (degree < 0) return kZero;
  if (degree >= static_cast<long>(values.size()))
    throw std::out_of_range("degree " + std::to_string(degree) +
                            " is past the computed window");
  return values[static_cast<std::size_t>(degree)];
}

bool HilbertData::operator==(const HilbertData& other) const {
  return ambient == other.ambient && values == other.values &&
         numerator == other.numerator;
}

int default_window(const CIType& type, int s) {
  return static_cast<int>(s * type.degree_sum()) + 5;
}

HilbertData hf_ci(const CIType& type, int ambient, int max_degree) {
  require_ambient(type.generators(), ambient);
  require_window(max_degree);
  HilbertData out;
  out.ambient = ambient;
  out.numerator = ci_numerator(type);
  out.values = series_values(out.numerator, ambient, max_degree);
  return out;
}

HilbertData hf_power(const CIType& type, int ambient, int s, int max_degree) {
  if (s < 1)
    throw std::invalid_argument("power must be >= 1 (the zeroth power is the whole ring)");
  require_ambient(type.generators(), ambient);
  require_window(max_degree);

  const HilbertData base = hf_ci(type, ambient, max_degree);
  const auto shifts = compositions_upto(type.generators(), s - 1);

  HilbertData out;
  out.ambient = ambient;
  out.values.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  std::vector<BigInt> shift_poly;  // sum over the tuples of z^{a.d}
  for (const auto& a : shifts) {
    const long offset = type.weighted_degree(a);
    for (long t = offset; t <= max_degree; ++t)
      out.values[static_cast<std::size_t>(t)] += base.value_at(t - offset);
    if (static_cast<long>(shift_poly.size()) <= offset)
      shift_poly.resize(static_cast<std::size_t>(offset) + 1, 0);
    shift_poly[static_cast<std::size_t>(offset)] += 1;
  }
  out.numerator.assign(shift_poly.size() + base.numerator.size() - 1, 0);
  for (std::size_t i = 0; i < shift_poly.size(); ++i) {
    if (shift_poly[i] == 0) continue;
    for (std::size_t j = 0; j < base.numerator.size(); ++j)
      out.numerator[i + j] += shift_poly[i] * base.numerator[j];
  }
  return out;
}

HilbertData hf_from_betti(const BettiTable& table, int ambient, int max_degree) {
  require_ambient(table.r, ambient);
  require_window(max_degree);

  long top = 0;
  for (const auto& column : table.columns)
    if (!column.empty()) top = std::max(top, column.rbegin()->first);
  std::vector<BigInt> numerator(static_cast<std::size_t>(top) + 1, 0);
  numerator[0] = 1;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    const int sign = (i % 2 == 0) ? -1 : 1;  // resolution of the quotient ring
    for (const auto& [twist, mult] : table.columns[i])
      numerator[static_cast<std::size_t>(twist)] += sign * mult;
  }
  HilbertData out;
  out.ambient = ambient;
  out.numerator = std::move(numerator);
  out.values = series_values(out.numerator, ambient, max_degree);
  return out;
}

BigInt multiplicity(const CIType& type, int s) {
  if (s < 1) throw std::invalid_argument("power must be >= 1");
  return binomial(s + type.generators() - 1, type.generators()) *
         type.degree_product();
}

}  // namespace cipow
