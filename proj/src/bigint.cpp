#include "ratball/bigint.hpp"

#include "ratball/errors.hpp"

#include <cctype>
#include <limits>

namespace ratball {

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw usage_error("expected an integer, got '" + std::string(text) + "'");
  }
  BigInt result = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char ch = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(ch)) {
      throw usage_error("expected an integer, got '" + std::string(text) + "'");
    }
    result = result * 10 + (ch - '0');
  }
  return negative ? BigInt(-result) : result;
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt mod(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a);
  BigInt y = abs(b);
  while (y != 0) {
    BigInt t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

BigInt mod_inverse(const BigInt& value, const BigInt& modulus) {
  if (modulus <= 0) throw usage_error("modulus must be positive");
  // Extended Euclid on (value mod modulus, modulus).
  BigInt old_r = mod(value, modulus), r = modulus;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quotient = old_r / r;
    BigInt tmp = old_r - quotient * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quotient * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) {
    throw usage_error(to_string(value) + " is not invertible modulo " + to_string(modulus));
  }
  return mod(old_s, modulus);
}

std::int64_t to_int64(const BigInt& value, std::string_view what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw usage_error(std::string(what) + " does not fit in 64 bits: " + to_string(value));
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace ratball
