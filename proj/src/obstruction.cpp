#include "ratball/obstruction.hpp"

#include "ratball/errors.hpp"

#include <algorithm>
#include <set>

namespace ratball::obstruction {

using lattice::EmbeddingClass;
using lattice::EmbeddingMatrix;
using lattice::GramLattice;
using lattice::SearchLimits;

LensParams ball_boundary(const BallSpec& b) { return {b.p * b.p, b.p * b.q - 1}; }

contfrac::HJExpansion ball_plumbing(const BallSpec& b) {
  const LensParams lens = ball_boundary(b);
  return contfrac::hj_expand(lens.p, lens.p - lens.q);
}

GramLattice ObstructionProblem::plumbing_lattice() const { return lattice::direct_sum(components); }

ObstructionProblem build_problem(std::span<const BallSpec> balls) {
  if (balls.empty()) throw usage_error("obstruction problem needs at least one ball");
  ObstructionProblem problem;
  problem.m_norm = 1;
  problem.ambient = 1;
  for (const BallSpec& b : balls) {
    problem.balls.push_back(b);
    problem.m_norm *= b.p * b.p;
    contfrac::HJExpansion weights = ball_plumbing(b);
    problem.components.push_back(lattice::linear_lattice(weights.coefficients()));
    problem.ambient += weights.size();
    problem.plumbings.push_back(std::move(weights));
  }
  return problem;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::obstructed: return "OBSTRUCTED";
    case Verdict::not_obstructed: return "NOT_OBSTRUCTED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict verdict_from_name(std::string_view name) {
  if (name == "OBSTRUCTED") return Verdict::obstructed;
  if (name == "NOT_OBSTRUCTED") return Verdict::not_obstructed;
  if (name == "INCONCLUSIVE") return Verdict::inconclusive;
  throw usage_error("unknown verdict '" + std::string(name) + "'");
}

std::optional<Witness> evaluate_class(const ObstructionProblem& problem, const EmbeddingClass& cls) {
  const EmbeddingMatrix& a = cls.representative;
  lattice::Complement comp = lattice::orthogonal_complement(a, problem.ambient);
  if (comp.rank() != 1) return std::nullopt;
  std::vector<std::int64_t> w = *comp.generator();

  // Finite index with a primitive Lambda_M image: the generator must map to +-w.
  if (BigInt(comp.gram(0, 0)) != problem.m_norm) return std::nullopt;
  if (!lattice::is_primitive_vector(w)) return std::nullopt;

  EmbeddingMatrix m_row(1, problem.ambient);
  for (std::size_t c = 0; c < problem.ambient; ++c) m_row(0, c) = w[c];
  if (!lattice::unit_pairing_profile(m_row, a, problem.ambient).pass()) return std::nullopt;
  return Witness{a, std::move(w)};
}

ObstructionReport check_obstruction(const ObstructionProblem& problem, const SearchLimits& limits) {
  ObstructionReport report;
  report.problem = problem;
  lattice::EnumerationResult classes;
  try {
    classes = lattice::enumerate_embedding_classes(problem.plumbing_lattice(), problem.ambient, limits);
  } catch (const lattice::search_limit_error& e) {
    report.verdict = Verdict::inconclusive;
    report.limit = e.what();
    report.stats = e.stats();
    return report;
  }
  report.stats = classes.stats;
  for (const EmbeddingClass& cls : classes.classes) {
    if (auto witness = evaluate_class(problem, cls)) report.witnesses.push_back(std::move(*witness));
  }
  report.verdict = report.witnesses.empty() ? Verdict::obstructed : Verdict::not_obstructed;
  return report;
}

namespace {

EmbeddingMatrix stack(std::span<const std::int64_t> first_row, const EmbeddingMatrix& rest) {
  EmbeddingMatrix out(rest.rows() + 1, rest.cols());
  for (std::size_t c = 0; c < rest.cols(); ++c) out(0, c) = first_row[c];
  for (std::size_t r = 0; r < rest.rows(); ++r)
    for (std::size_t c = 0; c < rest.cols(); ++c) out(r + 1, c) = rest(r, c);
  return out;
}

}  // namespace

std::vector<EmbeddingClass> complement_strategy_classes(const ObstructionProblem& problem,
                                                        const SearchLimits& limits) {
  const std::int64_t m_norm = to_int64(problem.m_norm, "Lambda_M norm");
  auto classes =
      lattice::enumerate_embedding_classes(problem.plumbing_lattice(), problem.ambient, limits);
  std::set<EmbeddingMatrix> found;
  for (const EmbeddingClass& cls : classes.classes) {
    lattice::Complement comp = lattice::orthogonal_complement(cls.representative, problem.ambient);
    if (comp.rank() != 1) continue;
    const std::vector<std::int64_t> w = *comp.generator();
    const std::int64_t norm = comp.gram(0, 0);
    for (std::int64_t k = 1; k * k * norm <= m_norm; ++k) {
      if (k * k * norm != m_norm) continue;
      for (std::int64_t sign : {1, -1}) {
        std::vector<std::int64_t> row(w.size());
        for (std::size_t c = 0; c < w.size(); ++c) row[c] = sign * k * w[c];
        found.insert(lattice::canonical_form(stack(row, cls.representative)));
      }
    }
  }
  std::vector<EmbeddingClass> out;
  for (const EmbeddingMatrix& a : found) out.push_back({a});
  return out;
}

std::vector<EmbeddingClass> direct_strategy_classes(const ObstructionProblem& problem,
                                                    const SearchLimits& limits) {
  const std::int64_t m_norm = to_int64(problem.m_norm, "Lambda_M norm");
  const GramLattice full =
      lattice::direct_sum(lattice::linear_lattice({m_norm}), problem.plumbing_lattice());
  return lattice::enumerate_embedding_classes(full, problem.ambient, limits).classes;
}

ObstructionProblem fibonacci_pair_problem(long k, long n) {
  if (k < 1 || n < 1) throw usage_error("Fibonacci ball indices must be at least 1");
  const std::vector<BallSpec> balls{
      BallSpec::make(markov::odd_fibonacci(k + 1), markov::odd_fibonacci(k)),
      BallSpec::make(markov::odd_fibonacci(n + 1), markov::odd_fibonacci(n))};
  return build_problem(balls);
}

std::vector<ObstructionReport> theorem2_suite(std::span<const std::pair<long, long>> pairs,
                                              const SearchLimits& limits, long max_index) {
  std::vector<ObstructionReport> reports;
  for (const auto& [k, n] : pairs) {
    if (k < 1 || n < 1) throw usage_error("Fibonacci ball indices must be at least 1");
    if (k > max_index || n > max_index) {
      throw usage_error("pair (" + std::to_string(k) + "," + std::to_string(n) +
                        ") exceeds the index limit " + std::to_string(max_index));
    }
    reports.push_back(check_obstruction(fibonacci_pair_problem(k, n), limits));
  }
  return reports;
}

LemmaReport lemma_cemb_report(long n, std::size_t m, const SearchLimits& limits) {
  if (n < 2) throw usage_error("lemma report needs n >= 2");
  if (m < static_cast<std::size_t>(4 * n)) throw usage_error("lemma report needs m >= 4n");
  LemmaReport report;
  report.n = n;
  report.ambient = m;
  report.weights.assign(static_cast<std::size_t>(n - 1), 3);
  report.weights.push_back(2);
  report.weights.push_back(2);
  report.weights.insert(report.weights.end(), static_cast<std::size_t>(n - 1), 3);
  report.weights.push_back(2);
  const std::size_t r = report.weights.size();
  report.expected_supports = {r, r + 1, static_cast<std::size_t>(4 * n)};
  const BigInt f = markov::odd_fibonacci(n + 1);
  report.expected_norm = f * f;

  report.survey = lattice::survey_embeddings(lattice::linear_lattice(report.weights), m, limits);

  std::vector<const lattice::ClassSummary*> by_support;
  for (const auto& cls : report.survey.classes) by_support.push_back(&cls);
  std::sort(by_support.begin(), by_support.end(),
            [](const auto* x, const auto* y) { return x->support < y->support; });

  bool ok = by_support.size() == 3;
  for (std::size_t i = 0; ok && i < 3; ++i) ok = by_support[i]->support == report.expected_supports[i];
  if (ok) {
    ok = by_support[0]->complement_rank == 0 && by_support[1]->complement_rank == 1 &&
         by_support[1]->complement_norm &&
         BigInt(*by_support[1]->complement_norm) == report.expected_norm &&
         !by_support[2]->complement_has_unit_vector;
  }
  report.consistent = ok;
  return report;
}

ExampleB31Report example_b31(const SearchLimits& limits) {
  ExampleB31Report report;
  const std::vector<BallSpec> balls{BallSpec::make(3, 1)};
  const ObstructionProblem problem = build_problem(balls);
  report.direct_classes = direct_strategy_classes(problem, limits);
  report.reference = IntMatrix{{3, 0, 0, 0, 0},
                               {0, -1, 1, 0, 0},
                               {0, 0, -1, 1, 0},
                               {0, 0, 0, -1, 1},
                               {0, 1, 1, 1, 0}};
  const EmbeddingMatrix canonical = lattice::canonical_form(report.reference);
  report.matches_reference =
      report.direct_classes.size() == 1 && report.direct_classes.front().representative == canonical;

  EmbeddingMatrix m_part(1, 5);
  EmbeddingMatrix c_part(4, 5);
  for (std::size_t c = 0; c < 5; ++c) {
    m_part(0, c) = report.reference(0, c);
    for (std::size_t r = 0; r < 4; ++r) c_part(r, c) = report.reference(r + 1, c);
  }
  report.pairing = lattice::unit_pairing_profile(m_part, c_part, 5);
  report.obstruction = check_obstruction(problem, limits);
  return report;
}

}  // namespace ratball::obstruction
