#include "ratball/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace ratball::lattice {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0) throw usage_error("lattice must have rank at least 1");
  if (gram_.rows() != gram_.cols()) throw usage_error("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw usage_error("Gram matrix must be symmetric");
    }
  }
}

GramLattice linear_lattice(std::span<const std::int64_t> weights) {
  if (weights.empty()) throw usage_error("linear lattice needs at least one weight");
  IntMatrix g(weights.size(), weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    g(i, i) = weights[i];
    if (i + 1 < weights.size()) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return GramLattice(std::move(g));
}

GramLattice linear_lattice(std::initializer_list<std::int64_t> weights) {
  return linear_lattice(std::span<const std::int64_t>(weights.begin(), weights.size()));
}

GramLattice direct_sum(const GramLattice& first, const GramLattice& second) {
  const std::size_t k1 = first.rank();
  IntMatrix g(k1 + second.rank(), k1 + second.rank());
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) g(i, j) = first.gram()(i, j);
  for (std::size_t i = 0; i < second.rank(); ++i)
    for (std::size_t j = 0; j < second.rank(); ++j) g(k1 + i, k1 + j) = second.gram()(i, j);
  return GramLattice(std::move(g));
}

GramLattice direct_sum(std::span<const GramLattice> summands) {
  if (summands.empty()) throw usage_error("direct sum of no lattices");
  GramLattice acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) acc = direct_sum(acc, summands[i]);
  return acc;
}

GramLattice reversed(const GramLattice& l) {
  const std::size_t k = l.rank();
  IntMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = l.gram()(k - 1 - i, k - 1 - j);
  return GramLattice(std::move(g));
}

bool is_isometric_embedding(const GramLattice& l, const EmbeddingMatrix& a) {
  if (a.rows() != l.rank()) {
    throw usage_error("embedding has " + std::to_string(a.rows()) + " rows for a rank " +
                      std::to_string(l.rank()) + " lattice");
  }
  return gram_of_rows(a) == l.gram();
}

EmbeddingMatrix canonical_form(const EmbeddingMatrix& a) {
  std::vector<std::vector<std::int64_t>> columns;
  columns.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<std::int64_t> col = a.column(c);
    auto lead = std::find_if(col.begin(), col.end(), [](std::int64_t x) { return x != 0; });
    if (lead != col.end() && *lead < 0) {
      for (auto& x : col) x = -x;
    }
    columns.push_back(std::move(col));
  }
  std::sort(columns.begin(), columns.end(), std::greater<>());
  EmbeddingMatrix out(a.rows(), a.cols());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = columns[c][r];
  return out;
}

BigInt determinant(const IntMatrix& square) {
  if (square.rows() != square.cols()) throw usage_error("determinant of a non-square matrix");
  const std::size_t n = square.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = square(i, j);

  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt lattice_determinant(const GramLattice& l) { return determinant(l.gram()); }

bool is_primitive_vector(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  if (g == 0) throw usage_error("primitivity of the zero vector");
  return g == 1;
}

std::size_t support_size(const EmbeddingMatrix& a) {
  std::size_t s = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, c) != 0) {
        ++s;
        break;
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

using BigRow = std::vector<BigInt>;

/// Row-reduces `rows` over the integers in the first `width` columns (integer
/// row operations only) and returns the number of pivot rows, which come first.
std::size_t integer_echelon(std::vector<BigRow>& rows, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < width && pivot_row < rows.size(); ++c) {
    for (;;) {
      // Smallest nonzero |entry| at or below pivot_row becomes the pivot.
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool reduced = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const BigInt q = rows[r][c] / rows[pivot_row][c];
        for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[pivot_row][j];
        if (rows[r][c] != 0) reduced = false;
      }
      if (reduced) {
        if (rows[pivot_row][c] < 0) {
          for (auto& x : rows[pivot_row]) x = -x;
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
          // Bring entries above the pivot into [0, pivot).
          BigInt q = rows[r][c] / rows[pivot_row][c];
          if (rows[r][c] - q * rows[pivot_row][c] < 0) q -= 1;
          if (q != 0) {
            for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[pivot_row][j];
          }
        }
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

}  // namespace

std::optional<std::vector<std::int64_t>> Complement::generator() const {
  if (rank() != 1) return std::nullopt;
  std::vector<std::int64_t> w(basis.row(0).begin(), basis.row(0).end());
  return w;
}

Complement orthogonal_complement(const EmbeddingMatrix& a, std::size_t m) {
  if (a.cols() > m) throw usage_error("embedding has more columns than the ambient rank");
  const std::size_t k = a.rows();
  // [A^T | I_m]: integer row operations on the left block carry a unimodular
  // transform on the right; rows whose left block vanishes span ker A.
  std::vector<BigRow> rows(m, BigRow(k + m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < k; ++r) rows[i][r] = i < a.cols() ? a(r, i) : 0;
    rows[i][k + i] = 1;
  }
  const std::size_t rank = integer_echelon(rows, k);

  std::vector<BigRow> kernel;
  for (std::size_t i = rank; i < m; ++i) kernel.emplace_back(rows[i].begin() + k, rows[i].end());
  integer_echelon(kernel, m);

  Complement out;
  out.basis = IntMatrix(kernel.size(), m);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) out.basis(i, j) = to_int64(kernel[i][j], "complement entry");
  out.gram = gram_of_rows(out.basis);
  for (std::size_t c = 0; c < m && !out.has_unit_vector; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < k && c < a.cols(); ++r) zero = zero && a(r, c) == 0;
    out.has_unit_vector = zero;
  }
  return out;
}

bool UnitPairing::pass() const {
  return std::all_of(pairs_first.begin(), pairs_first.end(), [](bool b) { return b; }) &&
         std::all_of(pairs_second.begin(), pairs_second.end(), [](bool b) { return b; });
}

UnitPairing unit_pairing_profile(const EmbeddingMatrix& first, const EmbeddingMatrix& second,
                                 std::size_t m) {
  if (first.cols() > m || second.cols() > m) {
    throw usage_error("embedding has more columns than the ambient rank");
  }
  auto entry = [](const EmbeddingMatrix& a, std::size_t r, std::size_t c) -> std::int64_t {
    return c < a.cols() ? a(r, c) : 0;
  };
  for (std::size_t i = 0; i < first.rows(); ++i) {
    for (std::size_t j = 0; j < second.rows(); ++j) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < m; ++c) s += entry(first, i, c) * entry(second, j, c);
      if (s != 0) throw usage_error("unit pairing profile needs mutually orthogonal images");
    }
  }
  UnitPairing out;
  out.pairs_first.resize(m);
  out.pairs_second.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < first.rows(); ++r) out.pairs_first[c] = out.pairs_first[c] || entry(first, r, c) != 0;
    for (std::size_t r = 0; r < second.rows(); ++r) out.pairs_second[c] = out.pairs_second[c] || entry(second, r, c) != 0;
  }
  return out;
}

// ---------------------------------------------------------------------------

Survey survey_embeddings(const GramLattice& l, std::size_t m, const SearchLimits& limits) {
  EnumerationResult result = enumerate_embedding_classes(l, m, limits);
  Survey survey{m, {}, result.stats};
  for (EmbeddingClass& cls : result.classes) {
    const EmbeddingMatrix& a = cls.representative;
    ClassSummary summary;
    summary.support = support_size(a);
    // Canonical forms keep zero columns last, so the support is a prefix.
    EmbeddingMatrix restricted(a.rows(), summary.support);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < summary.support; ++c) restricted(r, c) = a(r, c);
    Complement comp = orthogonal_complement(restricted, summary.support);
    summary.complement_rank = comp.rank();
    summary.complement_has_unit_vector = comp.has_unit_vector;
    if (comp.rank() == 1) {
      summary.complement_norm = comp.gram(0, 0);
      summary.complement_generator = comp.generator();
    }
    summary.embedding = std::move(cls);
    survey.classes.push_back(std::move(summary));
  }
  return survey;
}

Stabilization class_count_stabilization(const GramLattice& l, std::size_t m,
                                        const SearchLimits& limits) {
  Stabilization s;
  for (std::size_t dm = 0; dm < 3; ++dm) {
    s.ambients.push_back(m + dm);
    s.counts.push_back(enumerate_embedding_classes(l, m + dm, limits).classes.size());
  }
  s.stable = s.counts[0] == s.counts[1] && s.counts[1] == s.counts[2];
  return s;
}

}  // namespace ratball::lattice
