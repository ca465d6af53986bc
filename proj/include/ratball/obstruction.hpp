#pragma once

// Lattice obstruction to smoothly embedding a disjoint union of rational
// balls B(p_i, q_i) in CP^2.
//
// Replacing each ball by the positive-definite plumbing C_i with the same
// boundary gives a closed positive-definite manifold, so by Donaldson's
// theorem Lambda_M + Lambda_C embeds in Z^m with finite index, where
// Lambda_M is rank one with generator norm prod p_i^2. An embedding can only
// come from a smooth ball embedding if, in addition, the image of the
// Lambda_M generator is primitive and every coordinate vector e_i pairs
// nonzero with both Lambda_M and Lambda_C.
//
// The search enumerates every class of embeddings of Lambda_C in Z^m (m =
// 1 + rank Lambda_C). Its orthogonal complement is then spanned by one
// primitive vector w, and the Lambda_M generator must go to +-w, so a class
// is a witness iff w.w = prod p_i^2, w has no zero coordinate, and no column
// of the Lambda_C image vanishes.

#include "ratball/contfrac.hpp"
#include "ratball/lattice.hpp"
#include "ratball/markov.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ratball::obstruction {

using markov::BallSpec;

/// Lens space parameters (P, Q) of L(P, Q).
struct LensParams {
  BigInt p;
  BigInt q;

  friend bool operator==(const LensParams&, const LensParams&) = default;
};

/// Boundary of B(p,q): L(p^2, pq - 1).
LensParams ball_boundary(const BallSpec& b);

/// Weights of the positive-definite plumbing bounded by the boundary of b:
/// the expansion of P/(P-Q) for (P,Q) = ball_boundary(b).
contfrac::HJExpansion ball_plumbing(const BallSpec& b);

struct ObstructionProblem {
  std::vector<BallSpec> balls;
  /// Norm of the Lambda_M generator, prod p_i^2.
  BigInt m_norm;
  std::vector<contfrac::HJExpansion> plumbings;
  std::vector<lattice::GramLattice> components;
  std::size_t ambient = 0;

  /// Lambda_C, the direct sum of the components in ball order.
  lattice::GramLattice plumbing_lattice() const;

  friend bool operator==(const ObstructionProblem&, const ObstructionProblem&) = default;
};

ObstructionProblem build_problem(std::span<const BallSpec> balls);

enum class Verdict { obstructed, not_obstructed, inconclusive };

std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

struct Witness {
  /// Canonical embedding of Lambda_C.
  lattice::EmbeddingMatrix embedding;
  /// Primitive generator of its orthogonal complement; +-w is the image of
  /// the Lambda_M generator.
  std::vector<std::int64_t> generator;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ObstructionReport {
  ObstructionProblem problem;
  Verdict verdict = Verdict::inconclusive;
  /// Why the search stopped early; empty unless inconclusive.
  std::string limit;
  /// Every witness, in canonical order.
  std::vector<Witness> witnesses;
  /// leaves == number of Lambda_C classes examined.
  lattice::SearchStats stats;

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// The witness built on one Lambda_C class, if that class is a witness.
std::optional<Witness> evaluate_class(const ObstructionProblem& problem,
                                      const lattice::EmbeddingClass& cls);

ObstructionReport check_obstruction(const ObstructionProblem& problem,
                                    const lattice::SearchLimits& limits = {});

/// Classes of Lambda_M + Lambda_C in Z^m obtained from the Lambda_C classes:
/// the Lambda_M row is +-k w for every k with k^2 w.w = m_norm.
std::vector<lattice::EmbeddingClass> complement_strategy_classes(
    const ObstructionProblem& problem, const lattice::SearchLimits& limits = {});

/// Classes of Lambda_M + Lambda_C in Z^m by searching the direct sum itself.
std::vector<lattice::EmbeddingClass> direct_strategy_classes(
    const ObstructionProblem& problem, const lattice::SearchLimits& limits = {});

/// Balls B(F(2k+1), F(2k-1)) and B(F(2n+1), F(2n-1)).
ObstructionProblem fibonacci_pair_problem(long k, long n);

/// check_obstruction on fibonacci_pair_problem(k, n) for each pair. Indices
/// above max_index are refused as too large for an exhaustive search.
std::vector<ObstructionReport> theorem2_suite(std::span<const std::pair<long, long>> pairs,
                                              const lattice::SearchLimits& limits = {},
                                              long max_index = 3);

/// Classification of Lambda(3^(n-1), 2, 2, 3^(n-1), 2) in Z^m.
struct LemmaReport {
  long n = 0;
  std::size_t ambient = 0;
  std::vector<std::int64_t> weights;
  lattice::Survey survey;
  /// Expected supports r, r+1, 4n with r = 2n+1.
  std::vector<std::size_t> expected_supports;
  /// F(2n+1)^2
  BigInt expected_norm;
  /// Three classes with the expected supports, complement norm F(2n+1)^2 on
  /// the support-(r+1) class and no unit vectors in the support-4n
  /// complement.
  bool consistent = false;

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

LemmaReport lemma_cemb_report(long n, std::size_t m, const lattice::SearchLimits& limits = {});

/// B(3,1): the single class of Lambda(9) + Lambda(2,2,2,3) in Z^5 and the
/// obstruction verdict.
struct ExampleB31Report {
  std::vector<lattice::EmbeddingClass> direct_classes;
  /// The embedding v1 -> 3e1, v_i -> -e_i + e_(i+1), v5 -> e2 + e3 + e4.
  lattice::EmbeddingMatrix reference;
  bool matches_reference = false;
  lattice::UnitPairing pairing;
  ObstructionReport obstruction;

  friend bool operator==(const ExampleB31Report&, const ExampleB31Report&) = default;
};

ExampleB31Report example_b31(const lattice::SearchLimits& limits = {});

}  // namespace ratball::obstruction
