#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cipow {

using BigInt = mpz_class;
using BigRat = mpq_class;

std::string to_decimal(const BigInt& v);

// Strict decimal parser: optional leading '-', digits only.
// Throws std::invalid_argument otherwise.
BigInt parse_decimal(const std::string& text);

// Canonical rational rendering: "p/q" with q > 1, plain "p" when q == 1.
std::string to_fraction(const BigRat& v);

// Accepts "p" and "p/q"; canonicalizes. Throws std::invalid_argument on a
// malformed string or a zero denominator.
BigRat parse_fraction(const std::string& text);

bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);

}  // namespace cipow
