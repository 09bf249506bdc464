#pragma once

#include <vector>

#include "core/bigint.hpp"

namespace cipow {

// Exponent tuple (a_1,...,a_r); every entry >= 0.
using Composition = std::vector<int>;

// C(n, k), exact. Returns 0 when k < 0 or k > n. Throws on n < 0.
BigInt binomial(long n, long k);

// All r-tuples of non-negative integers with entry sum == sum and at least
// min_nonzero nonzero entries, in ascending lexicographic order.
std::vector<Composition> compositions_exact(int r, int sum, int min_nonzero);

// All r-tuples with entry sum <= max_sum, ascending lexicographic order.
std::vector<Composition> compositions_upto(int r, int max_sum);

// Number of weakly increasing chains l_1 <= ... <= l_length with
// l_1 >= length+1 and l_length == endpoint, entries bounded by limit.
// 0 when endpoint < length+1 or endpoint > limit. The closed form
// C(endpoint-2, length-1); see chain_count_enumerated for the literal count.
BigInt chain_count(int length, int endpoint, int limit);

// Same count by direct enumeration of the chains. Ground truth for the
// closed form above; used by the verification suites.
BigInt chain_count_enumerated(int length, int endpoint, int limit);

}  // namespace cipow
