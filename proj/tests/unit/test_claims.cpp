// Class counts as originally claimed for these chains. The exhaustive search
// and the independent oracle both find more classes, so this suite fails; see
// README.md.

#include "ratball/lattice.hpp"
#include "ratball/obstruction.hpp"

#include <doctest.h>

#include <set>

using namespace ratball;
using namespace ratball::lattice;

namespace {

IntMatrix padded(const IntMatrix& a, std::size_t m) {
  IntMatrix out(a.rows(), m);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

}  // namespace

TEST_SUITE("claims") {

TEST_CASE("inner chain has exactly the three listed embeddings") {
  const std::size_t m = 8;
  std::set<IntMatrix> expected;
  for (const IntMatrix& a :
       {IntMatrix{{0, -1, -1, -1}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {1, 1, 0, -1}},
        IntMatrix{{0, -1, -1, -1, 0}, {-1, 1, 0, 0, 0}, {0, -1, 1, 0, 0}, {0, 0, -1, 1, 1}},
        IntMatrix{{1, 0, 0, 1, 1, 0, 0}, {-1, 1, 0, 0, 0, 0, 0}, {0, -1, 1, 0, 0, 0, 0},
                  {0, 0, -1, 0, 0, 1, 1}}})
    expected.insert(canonical_form(padded(a, m)));
  std::set<IntMatrix> got;
  for (const auto& c : enumerate_embedding_classes(linear_lattice({3, 2, 2, 3}), m).classes)
    got.insert(c.representative);
  CHECK(got == expected);
}

TEST_CASE("chain for n = 3 has exactly three classes") {
  const auto r = obstruction::lemma_cemb_report(3, 12);
  CHECK(r.survey.classes.size() == 3);
  CHECK(r.consistent);
}

}  // TEST_SUITE
