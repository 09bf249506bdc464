#include "core/combinatorics.hpp"

#include <stdexcept>

namespace cipow {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

namespace {

void emit_compositions(int position, int r, int remaining, int nonzero,
                       int min_nonzero, Composition& current,
                       std::vector<Composition>& out) {
  if (position == r - 1) {
    current[position] = remaining;
    if (nonzero + (remaining > 0 ? 1 : 0) >= min_nonzero) out.push_back(current);
    return;
  }
  for (int value = 0; value <= remaining; ++value) {
    current[position] = value;
    emit_compositions(position + 1, r, remaining - value,
                      nonzero + (value > 0 ? 1 : 0), min_nonzero, current, out);
  }
}

}  // namespace

std::vector<Composition> compositions_exact(int r, int sum, int min_nonzero) {
  if (r < 1) throw std::invalid_argument("compositions need r >= 1");
  if (sum < 0 || min_nonzero > r || min_nonzero > sum) return {};
  Composition current(static_cast<std::size_t>(r), 0);
  std::vector<Composition> out;
  emit_compositions(0, r, sum, 0, min_nonzero, current, out);
  return out;
}

std::vector<Composition> compositions_upto(int r, int max_sum) {
  if (r < 1) throw std::invalid_argument("compositions need r >= 1");
  std::vector<Composition> out;
  // Ascending lex == ascending first entry, then recurse; iterating the
  // running sum innermost would break that, so enumerate positionally.
  Composition current(static_cast<std::size_t>(r), 0);
  struct Walker {
    int r, max_sum;
    Composition& current;
    std::vector<Composition>& out;
    void walk(int position, int used) {
      if (position == r) {
        out.push_back(current);
        return;
      }
      for (int value = 0; value + used <= max_sum; ++value) {
        current[position] = value;
        walk(position + 1, used + value);
      }
      current[position] = 0;
    }
  };
  if (max_sum >= 0) Walker{r, max_sum, current, out}.walk(0, 0);
  return out;
}

BigInt chain_count(int length, int endpoint, int limit) {
  if (length < 1) throw std::invalid_argument("chain length must be >= 1");
  if (endpoint < length + 1 || endpoint > limit) return 0;
  return binomial(endpoint - 2, length - 1);
}

namespace {

BigInt count_chains(int position, int length, int previous, int endpoint) {
  if (position == length) return previous <= endpoint ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  for (int value = previous; value <= endpoint; ++value)
    total += count_chains(position + 1, length, value, endpoint);
  return total;
}

}  // namespace

BigInt chain_count_enumerated(int length, int endpoint, int limit) {
  if (length < 1) throw std::invalid_argument("chain length must be >= 1");
  if (endpoint < length + 1 || endpoint > limit) return 0;
  // Chains l_1 <= ... <= l_length with l_1 >= length+1 and l_length fixed.
  if (length == 1) return 1;
  return count_chains(1, length, length + 1, endpoint);
}

}  // namespace cipow
