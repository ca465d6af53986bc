#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ratball {

using BigInt = boost::multiprecision::cpp_int;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

/// Mathematical (nonnegative) residue of value mod modulus, modulus > 0.
BigInt mod(const BigInt& value, const BigInt& modulus);

/// Inverse of value modulo modulus; throws usage_error when gcd != 1.
BigInt mod_inverse(const BigInt& value, const BigInt& modulus);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Narrowing conversion that throws usage_error when out of range.
std::int64_t to_int64(const BigInt& value, std::string_view what);

}  // namespace ratball
