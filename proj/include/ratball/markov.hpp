#pragma once

// Markov triples a^2 + b^2 + c^2 = 3abc, their characteristic numbers, and
// the arithmetic criterion for symplectic embeddings of the rational balls
// B(p,q) in the complex projective plane.

#include "ratball/bigint.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace ratball::markov {

/// Sorted Markov triple a <= b <= c. Construct through make().
struct MarkovTriple {
  BigInt a;
  BigInt b;
  BigInt c;

  /// Sorts the entries and validates the Markov equation and pairwise
  /// coprimality; throws usage_error otherwise.
  static MarkovTriple make(BigInt x, BigInt y, BigInt z);

  const BigInt& operator[](std::size_t i) const;
  const BigInt& max() const { return c; }

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
  friend std::strong_ordering operator<=>(const MarkovTriple& lhs, const MarkovTriple& rhs);
};

/// Rational ball B(p,q), p >= 2, gcd(p,q) = 1. Since B(p,q) and B(p,p-q) are
/// the same ball, q is stored as min(q, p-q).
struct BallSpec {
  BigInt p;
  BigInt q;

  static BallSpec make(const BigInt& p, const BigInt& q);

  friend bool operator==(const BallSpec&, const BallSpec&) = default;
};

bool is_markov(const BigInt& a, const BigInt& b, const BigInt& c);

/// Vieta move x -> 3yz - x on the entry at `position` (0-based index into the
/// sorted triple). The result is re-sorted.
MarkovTriple vieta_neighbor(const MarkovTriple& t, std::size_t position);

/// All triples with maximum <= bound, in lexicographic order. Throws
/// limit_error when more than max_triples would be produced.
std::vector<MarkovTriple> enumerate_triples(const BigInt& bound,
                                            std::size_t max_triples = 1'000'000);

/// The residue 0 < u < c/2 with b = +-u*a (mod c). Requires c >= 3.
BigInt characteristic_number(const MarkovTriple& t);

/// F(2k-1): 1, 2, 5, 13, 34, ... for k = 1, 2, 3, ...
BigInt odd_fibonacci(long k);

/// One ball per entry p_i >= 2, q_i = 3 p_j / p_k (mod p_i), in triple order.
std::vector<BallSpec> ball_params(const MarkovTriple& t);

struct SymplecticVerdict {
  bool symplectic = false;
  std::optional<MarkovTriple> witness;

  friend bool operator==(const SymplecticVerdict&, const SymplecticVerdict&) = default;
};

/// B(p,q) embeds symplectically iff some triple with maximum p has
/// q = +-3u (mod p). Every triple with maximum p is examined.
SymplecticVerdict classify_symplectic(const BallSpec& ball, const BigInt& search_bound);

struct FibonacciBallRow {
  long n = 0;
  BallSpec ball;
  SymplecticVerdict verdict;

  friend bool operator==(const FibonacciBallRow&, const FibonacciBallRow&) = default;
};

/// classify_symplectic on B(F(2n+1), F(2n-1)) for n = 1..n_max.
std::vector<FibonacciBallRow> fibonacci_symplectic_table(long n_max);

}  // namespace ratball::markov
