#include "core/bigint.hpp"

#include <stdexcept>

namespace cipow {

namespace {

bool is_plain_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  return true;
}

}  // namespace

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(const std::string& text) {
  // GMP's own parser skips whitespace, which would let "1 2" slip through.
  if (!is_plain_integer(text))
    throw std::invalid_argument("not a decimal integer: \"" + text + "\"");
  return BigInt(text, 10);
}

std::string to_fraction(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_str(10);
}

BigRat parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    BigRat out(parse_decimal(text));
    return out;
  }
  BigInt num = parse_decimal(text.substr(0, slash));
  BigInt den = parse_decimal(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in rational: \"" + text + "\"");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

bool fits_int64(const BigInt& v) {
  static_assert(sizeof(long) == 8, "long must be 64-bit for int64 bridging");
  return v.fits_slong_p();
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw std::overflow_error("value does not fit in int64");
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace cipow
