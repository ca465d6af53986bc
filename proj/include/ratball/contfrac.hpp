#pragma once

// Hirzebruch-Jung (negative) continued fractions
//   [a1, ..., ak] = a1 - 1/(a2 - 1/(... - 1/ak)),  every ai >= 2.

#include "ratball/bigint.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ratball::contfrac {

/// Positive fraction in lowest terms.
struct Fraction {
  BigInt numerator;
  BigInt denominator;

  /// Reduces; throws usage_error unless both inputs are positive.
  static Fraction make(const BigInt& numerator, const BigInt& denominator);

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

std::string to_string(const Fraction& f);

class HJExpansion {
 public:
  /// Throws usage_error when empty or some coefficient is below 2.
  explicit HJExpansion(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }

  friend bool operator==(const HJExpansion&, const HJExpansion&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// "[a1,a2,...]"
std::string to_string(const HJExpansion& e);

Fraction hj_eval(const HJExpansion& e);

/// Unique expansion of p/q with all coefficients >= 2; needs p > q >= 1 coprime.
HJExpansion hj_expand(const BigInt& p, const BigInt& q);

HJExpansion hj_reverse(const HJExpansion& e);

/// ([3^(n-1),2], [3^(n-1),5,3^(n-2),2]) for n >= 2. Both evaluations are
/// checked against F(2n+1)/F(2n-1) and F(2n+1)^2/(F(2n+1)F(2n-1)-1);
/// a mismatch raises internal_error.
std::pair<HJExpansion, HJExpansion> fibonacci_identities(long n);

/// Plumbing weights of the linear plumbing bounded by L(p,q): the expansion
/// of p/(p-q).
HJExpansion lens_plumbing(const BigInt& p, const BigInt& q);

}  // namespace ratball::contfrac
