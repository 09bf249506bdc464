#include "core/betti.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cipow {

BigInt BettiTable::column_total(int i) const {
  BigInt total = 0;
  for (const auto& [twist, mult] : columns[static_cast<std::size_t>(i)])
    total += mult;
  return total;
}

bool BettiTable::operator==(const BettiTable& other) const {
  return r == other.r && s == other.s && columns == other.columns;
}

BettiTable koszul_betti(const CIType& type) {
  const int r = type.generators();
  // counts[c][b] = number of c-element subsets of the degree tuple summing to b
  std::vector<std::map<long, BigInt>> counts(static_cast<std::size_t>(r) + 1);
  counts[0][0] = 1;
  for (int g = 0; g < r; ++g) {
    for (int c = g; c >= 0; --c) {
      for (const auto& [twist, mult] : counts[static_cast<std::size_t>(c)])
        counts[static_cast<std::size_t>(c) + 1][twist + type.degree(g)] += mult;
    }
  }
  BettiTable table;
  table.r = r;
  table.s = 1;
  table.columns.assign(static_cast<std::size_t>(r), {});
  for (int j = 0; j < r; ++j)
    table.columns[static_cast<std::size_t>(j)] =
        std::move(counts[static_cast<std::size_t>(j) + 1]);
  return table;
}

BettiTable power_betti(const CIType& type, int s) {
  if (s < 1)
    throw std::invalid_argument("power must be >= 1 (the zeroth power is the whole ring)");
  const int r = type.generators();
  BettiTable table;
  table.r = r;
  table.s = s;
  table.columns.assign(static_cast<std::size_t>(r), {});
  for (const auto& a : compositions_exact(r, s, 1))
    table.columns[0][type.weighted_degree(a)] += 1;
  for (int i = 1; i < r; ++i) {
    for (int end = i + 1; end <= r; ++end) {
      const BigInt chains = chain_count(i, end, r);
      if (chains == 0) continue;
      for (const auto& a : compositions_exact(r, s + i, end))
        table.columns[static_cast<std::size_t>(i)][type.weighted_degree(a)] += chains;
    }
  }
  return table;
}

BigInt rank_formula(int r, int s, int i) {
  if (s < 1) throw std::invalid_argument("power must be >= 1");
  if (i < 0 || i >= r)
    throw std::invalid_argument("homological index must lie in 0..r-1");
  return binomial(r + s - 1, s + i) * binomial(s - 1 + i, i);
}

std::vector<ShiftRange> extreme_shifts(const BettiTable& table) {
  if (table.r < 1 || table.columns.empty())
    throw std::invalid_argument("betti table is empty");
  std::vector<ShiftRange> out;
  out.reserve(table.columns.size());
  for (const auto& column : table.columns) {
    if (column.empty())
      throw std::invalid_argument("betti table has an empty column");
    out.push_back({column.begin()->first, column.rbegin()->first});
  }
  return out;
}

std::string render_betti(const BettiTable& table) {
  std::set<long> twists;
  for (const auto& column : table.columns)
    for (const auto& [twist, mult] : column) twists.insert(twist);

  std::size_t label_width = 5;
  for (long twist : twists)
    label_width = std::max(label_width, std::to_string(twist).size());

  const std::size_t cols = table.columns.size();
  std::vector<std::size_t> widths(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    widths[i] = std::to_string(i).size();
    for (const auto& [twist, mult] : table.columns[i])
      widths[i] = std::max(widths[i], to_decimal(mult).size());
  }

  std::ostringstream out;
  out << std::string(label_width + 1, ' ');
  for (std::size_t i = 0; i < cols; ++i) {
    const std::string header = std::to_string(i);
    out << "  " << std::string(widths[i] - header.size(), ' ') << header;
  }
  out << '\n';
  for (long twist : twists) {
    const std::string label = std::to_string(twist);
    out << std::string(label_width - label.size(), ' ') << label << ':';
    for (std::size_t i = 0; i < cols; ++i) {
      auto it = table.columns[i].find(twist);
      const std::string cell = it == table.columns[i].end() ? "." : to_decimal(it->second);
      out << "  " << std::string(widths[i] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cipow
