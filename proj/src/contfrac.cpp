#include "ratball/contfrac.hpp"

#include "ratball/errors.hpp"
#include "ratball/markov.hpp"

#include <algorithm>

namespace ratball::contfrac {

Fraction Fraction::make(const BigInt& numerator, const BigInt& denominator) {
  if (numerator < 1 || denominator < 1) {
    throw usage_error("fraction terms must be positive");
  }
  const BigInt g = gcd(numerator, denominator);
  return Fraction{numerator / g, denominator / g};
}

std::string to_string(const Fraction& f) {
  return ratball::to_string(f.numerator) + "/" + ratball::to_string(f.denominator);
}

HJExpansion::HJExpansion(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw usage_error("continued fraction must be nonempty");
  for (std::int64_t a : coefficients_) {
    if (a < 2) {
      throw usage_error("continued fraction coefficient " + std::to_string(a) + " is below 2");
    }
  }
}

std::string to_string(const HJExpansion& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.coefficients()[i]);
  }
  return out + "]";
}

Fraction hj_eval(const HJExpansion& e) {
  const auto& a = e.coefficients();
  // Fold from the right: x -> a_i - 1/x keeps numerator > denominator >= 1,
  // and (a*n - d, n) stays coprime whenever (n, d) is.
  BigInt num = a.back();
  BigInt den = 1;
  for (auto it = a.rbegin() + 1; it != a.rend(); ++it) {
    BigInt next = *it * num - den;
    den = std::move(num);
    num = std::move(next);
  }
  return Fraction::make(num, den);
}

HJExpansion hj_expand(const BigInt& p, const BigInt& q) {
  if (q < 1 || p <= q) throw usage_error("expansion needs p > q >= 1");
  if (gcd(p, q) != 1) throw usage_error("expansion needs gcd(p, q) = 1");
  std::vector<std::int64_t> coefficients;
  BigInt num = p;
  BigInt den = q;
  while (den != 0) {
    const BigInt a = (num + den - 1) / den;
    coefficients.push_back(to_int64(a, "continued fraction coefficient"));
    BigInt rem = a * den - num;
    num = std::move(den);
    den = std::move(rem);
  }
  return HJExpansion(std::move(coefficients));
}

HJExpansion hj_reverse(const HJExpansion& e) {
  std::vector<std::int64_t> reversed(e.coefficients().rbegin(), e.coefficients().rend());
  return HJExpansion(std::move(reversed));
}

std::pair<HJExpansion, HJExpansion> fibonacci_identities(long n) {
  if (n < 2) throw usage_error("Fibonacci continued fraction identities need n >= 2");
  std::vector<std::int64_t> first(static_cast<std::size_t>(n - 1), 3);
  first.push_back(2);

  std::vector<std::int64_t> second(static_cast<std::size_t>(n - 1), 3);
  second.push_back(5);
  second.insert(second.end(), static_cast<std::size_t>(n - 2), 3);
  second.push_back(2);

  HJExpansion short_form(std::move(first));
  HJExpansion long_form(std::move(second));

  const BigInt f_hi = markov::odd_fibonacci(n + 1);
  const BigInt f_lo = markov::odd_fibonacci(n);
  if (hj_eval(short_form) != Fraction::make(f_hi, f_lo)) {
    throw internal_error("F(2n+1)/F(2n-1) identity fails at n = " + std::to_string(n));
  }
  if (hj_eval(long_form) != Fraction::make(f_hi * f_hi, f_hi * f_lo - 1)) {
    throw internal_error("F(2n+1)^2/(F(2n+1)F(2n-1)-1) identity fails at n = " +
                         std::to_string(n));
  }
  return {std::move(short_form), std::move(long_form)};
}

HJExpansion lens_plumbing(const BigInt& p, const BigInt& q) {
  if (q < 1 || p <= q) throw usage_error("lens space L(p,q) needs p > q >= 1");
  if (gcd(p, q) != 1) throw usage_error("lens space L(p,q) needs gcd(p, q) = 1");
  return hj_expand(p, p - q);
}

}  // namespace ratball::contfrac
