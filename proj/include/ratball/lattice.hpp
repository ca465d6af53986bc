#pragma once

// Integer lattices given by Gram matrices, and their isometric embeddings in
// the standard lattice Z^m considered up to signed permutations of the
// orthonormal basis.

#include "ratball/bigint.hpp"
#include "ratball/errors.hpp"
#include "ratball/int_matrix.hpp"
#include "ratball/simd/kernels.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ratball::lattice {

/// Symmetric Gram matrix on an ordered basis v_1..v_k ("vertices"), k >= 1.
class GramLattice {
 public:
  explicit GramLattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }

  friend bool operator==(const GramLattice&, const GramLattice&) = default;

 private:
  IntMatrix gram_;
};

/// Row i is the image of vertex i in Z^m.
using EmbeddingMatrix = IntMatrix;

struct EmbeddingClass {
  /// Canonical representative, see canonical_form().
  EmbeddingMatrix representative;

  friend bool operator==(const EmbeddingClass&, const EmbeddingClass&) = default;
  friend auto operator<=>(const EmbeddingClass&, const EmbeddingClass&) = default;
};

/// Diagonal a_i, -1 between consecutive vertices, 0 elsewhere.
GramLattice linear_lattice(std::span<const std::int64_t> weights);
GramLattice linear_lattice(std::initializer_list<std::int64_t> weights);

/// Block-diagonal sum; basis order is the summands' in sequence.
GramLattice direct_sum(const GramLattice& first, const GramLattice& second);
GramLattice direct_sum(std::span<const GramLattice> summands);

bool is_isometric_embedding(const GramLattice& l, const EmbeddingMatrix& a);

/// Makes the first nonzero entry of every column positive, then sorts the
/// columns in descending lexicographic order (top row most significant).
/// Equal outputs <=> same orbit under signed column permutations.
EmbeddingMatrix canonical_form(const EmbeddingMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt lattice_determinant(const GramLattice& l);
BigInt determinant(const IntMatrix& square);

bool is_primitive_vector(std::span<const std::int64_t> v);

/// Number of nonzero columns of an embedding.
std::size_t support_size(const EmbeddingMatrix& a);

struct Complement {
  /// Rows form a basis of {x in Z^m : A x = 0}, in Hermite normal form.
  IntMatrix basis;
  IntMatrix gram;

  /// True iff some coordinate vector e_i lies in the complement.
  bool has_unit_vector = false;

  std::size_t rank() const { return basis.rows(); }
  /// The primitive generator (first nonzero entry positive) when rank == 1.
  std::optional<std::vector<std::int64_t>> generator() const;
};

/// Saturated orthogonal complement of the image of A in Z^m. A may have
/// fewer than m columns; missing columns are zero.
Complement orthogonal_complement(const EmbeddingMatrix& a, std::size_t m);

struct UnitPairing {
  /// Per coordinate e_i: pairs nonzero with the first image / the second image.
  std::vector<bool> pairs_first;
  std::vector<bool> pairs_second;

  bool pass() const;

  friend bool operator==(const UnitPairing&, const UnitPairing&) = default;
};

/// A_first and A_second must have mutually orthogonal rows (usage_error
/// otherwise).
UnitPairing unit_pairing_profile(const EmbeddingMatrix& first, const EmbeddingMatrix& second,
                                 std::size_t m);

// ---------------------------------------------------------------------------
// Exhaustive embedding search

struct SearchLimits {
  std::uint64_t node_budget = 100'000'000;
  std::chrono::milliseconds time_budget{std::chrono::minutes(10)};
  unsigned threads = 1;
  simd::Isa isa = simd::Isa::automatic;
};

struct SearchStats {
  /// Partial embeddings (placed rows) visited.
  std::uint64_t nodes = 0;
  /// Coordinate choices tried while building rows.
  std::uint64_t steps = 0;
  /// Complete embeddings reached.
  std::uint64_t leaves = 0;
  /// Leaves that were not already canonical; always 0 unless the symmetry
  /// breaking is broken.
  std::uint64_t noncanonical_leaves = 0;
  std::chrono::microseconds elapsed{0};
  bool complete = false;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

class search_limit_error : public limit_error {
 public:
  search_limit_error(const std::string& what, SearchStats partial)
      : limit_error(what), stats_(partial) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

struct EnumerationResult {
  std::vector<EmbeddingClass> classes;
  SearchStats stats;

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

/// Every isometric embedding of a positive-definite lattice in Z^m, one per
/// Aut(Z^m)-orbit, sorted by representative. Throws search_limit_error when
/// a budget runs out.
EnumerationResult enumerate_embedding_classes(const GramLattice& l, std::size_t m,
                                              const SearchLimits& limits = {});

/// Same lattice with the vertex order reversed.
GramLattice reversed(const GramLattice& l);

// ---------------------------------------------------------------------------
// Classification summaries

struct ClassSummary {
  EmbeddingClass embedding;
  std::size_t support = 0;
  /// Complement inside the coordinate sublattice spanned by the support.
  std::size_t complement_rank = 0;
  std::optional<std::int64_t> complement_norm;
  std::optional<std::vector<std::int64_t>> complement_generator;
  bool complement_has_unit_vector = false;

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

struct Survey {
  std::size_t ambient = 0;
  std::vector<ClassSummary> classes;
  SearchStats stats;

  friend bool operator==(const Survey&, const Survey&) = default;
};

Survey survey_embeddings(const GramLattice& l, std::size_t m, const SearchLimits& limits = {});

struct Stabilization {
  std::vector<std::size_t> ambients;
  std::vector<std::size_t> counts;
  bool stable = false;

  friend bool operator==(const Stabilization&, const Stabilization&) = default;
};

/// Class counts at m, m+1, m+2; stable when all three agree.
Stabilization class_count_stabilization(const GramLattice& l, std::size_t m,
                                        const SearchLimits& limits = {});

}  // namespace ratball::lattice
