#pragma once

// Linear plumbings of disk bundles over spheres and their -1 blow-downs.

#include "ratball/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ratball::plumbing {

/// Weighted linear graph; consecutive weights are adjacent vertices.
struct PlumbingChain {
  std::vector<std::int64_t> weights;

  std::size_t size() const { return weights.size(); }
  bool empty() const { return weights.empty(); }

  friend bool operator==(const PlumbingChain&, const PlumbingChain&) = default;
};

/// "(-3,0)"
std::string to_string(const PlumbingChain& c);

/// (-3)^(n-1), -2, -1, (-3)^(n-2), -2 for n >= 2.
PlumbingChain rb_chain(long n);

/// Blows down the -1 vertex at `index` (0-based). Its neighbours gain +1 and
/// become adjacent; an isolated -1 simply disappears.
PlumbingChain blow_down(const PlumbingChain& c, std::size_t index);

/// Inverse move: inserts a -1 vertex before position `index` (0..size),
/// lowering the weights of the vertices it lands between by 1.
PlumbingChain blow_up(const PlumbingChain& c, std::size_t index);

struct Reduction {
  PlumbingChain chain;
  std::size_t blowdowns = 0;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Blows down the rightmost -1 until no -1 remains. 0-weight vertices are
/// never absorbed.
Reduction reduce(const PlumbingChain& c);

/// Continuant of the intersection matrix; the empty chain has determinant 1.
BigInt chain_determinant(const PlumbingChain& c);

struct SimpleEmbeddingCertificate {
  long n = 0;
  PlumbingChain initial;
  PlumbingChain final_chain;
  std::size_t blowdowns = 0;
  long b2 = 0;

  friend bool operator==(const SimpleEmbeddingCertificate&,
                         const SimpleEmbeddingCertificate&) = default;
};

/// Reduces rb_chain(n) and checks it lands on (-3,0) after 2n-2 blow-downs;
/// b2 = 1 + (2n-1). Throws internal_error if the reduction disagrees.
SimpleEmbeddingCertificate simple_embedding_certificate(long n);

}  // namespace ratball::plumbing
