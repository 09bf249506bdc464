#include "core/oracle.hpp"

#include <stdexcept>
#include <string>

namespace cipow {

void validate(const PointConfig& config) {
  if (config.ambient < 1)
    throw std::invalid_argument("ambient dimension must be >= 1");
  for (std::size_t p = 0; p < config.points.size(); ++p) {
    const FatPoint& point = config.points[p];
    if (static_cast<int>(point.coords.size()) != config.ambient + 1)
      throw std::invalid_argument("point " + std::to_string(p) + " needs " +
                                  std::to_string(config.ambient + 1) +
                                  " homogeneous coordinates");
    bool nonzero = false;
    for (const BigRat& c : point.coords) nonzero = nonzero || c != 0;
    if (!nonzero)
      throw std::invalid_argument("point " + std::to_string(p) +
                                  " has all-zero coordinates");
    if (point.mult < 1)
      throw std::invalid_argument("point " + std::to_string(p) +
                                  " multiplicity must be >= 1");
  }
  // Projective coincidence: proportional coordinate vectors.
  const std::size_t n1 = static_cast<std::size_t>(config.ambient) + 1;
  for (std::size_t p = 0; p + 1 < config.points.size(); ++p) {
    for (std::size_t q = p + 1; q < config.points.size(); ++q) {
      const auto& a = config.points[p].coords;
      const auto& b = config.points[q].coords;
      bool proportional = true;
      for (std::size_t i = 0; i < n1 && proportional; ++i)
        for (std::size_t j = i + 1; j < n1 && proportional; ++j)
          proportional = a[i] * b[j] == a[j] * b[i];
      if (proportional)
        throw std::invalid_argument("points " + std::to_string(p) + " and " +
                                    std::to_string(q) +
                                    " coincide as projective points");
    }
  }
}

namespace {

// Direct enumeration of exponent vectors; prunes a branch once the floor
// budget is spent, and fixes the final exponent by the degree constraint.
BigInt count_survivors(const CIType& type, int var, int last_var,
                       long degree_left, int budget) {
  const int r = type.generators();
  if (var == last_var) {
    if (var < r && budget < degree_left / type.degree(var)) return 0;
    return 1;
  }
  BigInt total = 0;
  if (var < r) {
    const int d = type.degree(var);
    for (long b = 0; b <= degree_left; ++b) {
      const int spent = static_cast<int>(b / d);
      if (spent > budget) break;
      total += count_survivors(type, var + 1, last_var, degree_left - b,
                               budget - spent);
    }
  } else {
    for (long b = 0; b <= degree_left; ++b)
      total += count_survivors(type, var + 1, last_var, degree_left - b, budget);
  }
  return total;
}

void require_monomial_args(const CIType& type, int ambient, int s) {
  if (ambient < 0) throw std::invalid_argument("ambient dimension must be >= 0");
  if (type.generators() > ambient + 1)
    throw std::invalid_argument(
        "type longer than ambient allows: a regular sequence in " +
        std::to_string(ambient + 1) + " variables has length at most " +
        std::to_string(ambient + 1));
  if (s < 1) throw std::invalid_argument("power must be >= 1");
}

}  // namespace

BigInt monomial_hf(const CIType& type, int ambient, int s, long degree) {
  require_monomial_args(type, ambient, s);
  if (degree < 0) return 0;
  return count_survivors(type, 0, ambient, degree, s - 1);
}

std::vector<BigInt> monomial_hf_range(const CIType& type, int ambient, int s,
                                      int max_degree) {
  require_monomial_args(type, ambient, s);
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (long t = 0; t <= max_degree; ++t)
    out.push_back(count_survivors(type, 0, ambient, t, s - 1));
  return out;
}

std::vector<std::vector<BigRat>> integer_axes(const std::vector<int>& sizes) {
  std::vector<std::vector<BigRat>> axes;
  axes.reserve(sizes.size());
  for (int size : sizes) {
    if (size < 1) throw std::invalid_argument("axis size must be >= 1");
    std::vector<BigRat> axis;
    axis.reserve(static_cast<std::size_t>(size));
    for (int v = 0; v < size; ++v) axis.emplace_back(v);
    axes.push_back(std::move(axis));
  }
  return axes;
}

PointConfig grid_points(const std::vector<std::vector<BigRat>>& axis_values,
                        const std::vector<int>& mults) {
  const int n = static_cast<int>(axis_values.size());
  if (n < 1) throw std::invalid_argument("grid needs at least one axis");
  long total = 1;
  for (const auto& axis : axis_values) {
    if (axis.empty()) throw std::invalid_argument("grid axis has no values");
    for (std::size_t i = 0; i + 1 < axis.size(); ++i)
      for (std::size_t j = i + 1; j < axis.size(); ++j)
        if (axis[i] == axis[j])
          throw std::invalid_argument("duplicate values within a grid axis");
    total *= static_cast<long>(axis.size());
  }
  if (mults.empty() ||
      (mults.size() != 1 && static_cast<long>(mults.size()) != total))
    throw std::invalid_argument(
        "grid multiplicities: give one uniform value or one per point (" +
        std::to_string(total) + ")");

  PointConfig config;
  config.ambient = n;
  config.points.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
  for (long k = 0; k < total; ++k) {
    FatPoint point;
    point.coords.reserve(static_cast<std::size_t>(n) + 1);
    point.coords.emplace_back(1);
    for (int axis = 0; axis < n; ++axis)
      point.coords.push_back(
          axis_values[static_cast<std::size_t>(axis)][index[static_cast<std::size_t>(axis)]]);
    point.mult = mults.size() == 1 ? mults[0] : mults[static_cast<std::size_t>(k)];
    config.points.push_back(std::move(point));
    for (int axis = n - 1; axis >= 0; --axis) {
      auto& i = index[static_cast<std::size_t>(axis)];
      if (++i < axis_values[static_cast<std::size_t>(axis)].size()) break;
      i = 0;
    }
  }
  validate(config);
  return config;
}

PointConfig remove_point(const PointConfig& config, int index) {
  if (index < 0 || index >= static_cast<int>(config.points.size()))
    throw std::out_of_range("point index " + std::to_string(index) +
                            " out of range (config has " +
                            std::to_string(config.points.size()) + " points)");
  PointConfig out;
  out.ambient = config.ambient;
  out.points = config.points;
  out.points.erase(out.points.begin() + index);
  return out;
}

namespace {

BigInt falling_factorial(int e, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= e - i;
  return out;
}

BigRat rat_pow(const BigRat& base, int exponent) {
  BigRat out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

std::vector<std::vector<BigRat>> conditions_matrix(const PointConfig& config,
                                                   long degree) {
  validate(config);
  if (degree < 0) return {};
  const int vars = config.ambient + 1;
  const auto monomials = compositions_exact(vars, static_cast<int>(degree), 0);

  std::vector<std::vector<BigRat>> rows;
  for (const FatPoint& point : config.points) {
    for (int order = 0; order < point.mult; ++order) {
      for (const Composition& partial : compositions_exact(vars, order, 0)) {
        std::vector<BigRat> row;
        row.reserve(monomials.size());
        for (const Composition& exponent : monomials) {
          // d^partial(x^exponent) evaluated at the point
          BigRat entry(1);
          bool zero = false;
          for (int v = 0; v < vars && !zero; ++v) {
            const int e = exponent[static_cast<std::size_t>(v)];
            const int b = partial[static_cast<std::size_t>(v)];
            if (e < b) {
              zero = true;
              break;
            }
            entry *= BigRat(falling_factorial(e, b));
            entry *= rat_pow(point.coords[static_cast<std::size_t>(v)], e - b);
          }
          row.push_back(zero ? BigRat(0) : entry);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

long exact_rank(std::vector<std::vector<BigRat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  if (cols == 0) return 0;

  // Clear denominators row by row; scaling a row leaves the rank alone.
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt scale = 1;
    for (const BigRat& entry : row)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), entry.get_den().get_mpz_t());
    std::vector<BigInt> cleared;
    cleared.reserve(cols);
    for (const BigRat& entry : row)
      cleared.push_back(entry.get_num() * (scale / entry.get_den()));
    m.push_back(std::move(cleared));
  }

  // Bareiss one-step fraction-free elimination; every division is exact.
  const std::size_t n_rows = m.size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < n_rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_rows && m[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < n_rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<long>(rank);
}

long points_hf(const PointConfig& config, long degree) {
  if (degree < 0) return 0;
  return exact_rank(conditions_matrix(config, degree));
}

std::vector<long> points_hf_range(const PointConfig& config, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (long t = 0; t <= max_degree; ++t) out.push_back(points_hf(config, t));
  return out;
}

namespace {

long scan_cap(const PointConfig& config) {
  long cap = config.ambient + 2;
  for (const FatPoint& point : config.points) cap += point.mult;
  return cap;
}

}  // namespace

long points_alpha(const PointConfig& config) {
  validate(config);
  // A product of powered hyperplanes through the points lies in the ideal,
  // so alpha is at most the multiplicity sum.
  const long cap = scan_cap(config);
  for (long t = 0; t <= cap; ++t) {
    const BigInt ideal_dim =
        binomial(t + config.ambient, config.ambient) - points_hf(config, t);
    if (ideal_dim > 0) return t;
  }
  throw std::logic_error("alpha scan exceeded its cap; ideal appears empty");
}

long points_ri(const PointConfig& config) {
  validate(config);
  const BigInt degree = points_degree(config);
  const long cap = scan_cap(config);
  for (long t = 0; t <= cap; ++t)
    if (points_hf(config, t) == degree) return t;
  throw std::logic_error("ri scan exceeded its cap without reaching deg");
}

BigInt points_degree(const PointConfig& config) {
  BigInt total = 0;
  for (const FatPoint& point : config.points)
    total += binomial(config.ambient + point.mult - 1, config.ambient);
  return total;
}

}  // namespace cipow
