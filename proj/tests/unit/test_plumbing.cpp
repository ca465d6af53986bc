#include "ratball/errors.hpp"
#include "ratball/plumbing.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace ratball;
using namespace ratball::plumbing;

namespace {

PlumbingChain C(std::vector<std::int64_t> w) { return PlumbingChain{std::move(w)}; }

}  // namespace

TEST_SUITE("plumbing") {

TEST_CASE("rb_chain") {
  CHECK(rb_chain(2) == C({-3, -2, -1, -2}));
  CHECK(rb_chain(3) == C({-3, -3, -2, -1, -3, -2}));
  CHECK(rb_chain(7).size() == 14);
  CHECK_THROWS_AS(rb_chain(1), usage_error);
}

TEST_CASE("blow_down") {
  CHECK(blow_down(C({-3, -2, -1, -2}), 2) == C({-3, -1, -1}));
  CHECK(blow_down(C({-3, -1, -1}), 2) == C({-3, 0}));
  CHECK(blow_down(C({-1}), 0).empty());
  CHECK(blow_down(C({-1, -2}), 0) == C({-1}));
  CHECK_THROWS_AS(blow_down(C({-3, -2}), 1), usage_error);
  CHECK_THROWS_AS(blow_down(C({-1}), 1), usage_error);
}

TEST_CASE("blow_up inverts blow_down") {
  const PlumbingChain c = C({-3, -2, -4});
  for (std::size_t i = 0; i <= c.size(); ++i) {
    const PlumbingChain up = blow_up(c, i);
    CHECK(up.size() == c.size() + 1);
    CHECK(up.weights[i] == -1);
    CHECK(blow_down(up, i) == c);
  }
  CHECK_THROWS_AS(blow_up(c, 4), usage_error);
  CHECK(blow_up(C({}), 0) == C({-1}));
}

TEST_CASE("reduce") {
  CHECK(reduce(C({-3, -2, -1, -2})) == Reduction{C({-3, 0}), 2});
  CHECK(reduce(C({-3, -3, -2, -1, -3, -2})) == Reduction{C({-3, 0}), 4});
  CHECK(reduce(C({-3, 0})) == Reduction{C({-3, 0}), 0});
  CHECK(reduce(C({-1})) == Reduction{C({}), 1});
  CHECK(reduce(C({})) == Reduction{C({}), 0});
}

TEST_CASE("chain_determinant") {
  CHECK(chain_determinant(C({-3, 0})) == -1);
  CHECK(chain_determinant(C({-3, -2, -1, -2})) == -1);
  CHECK(chain_determinant(C({-5})) == -5);
  CHECK(chain_determinant(C({})) == 1);
  CHECK(chain_determinant(C({2, 2, 2})) == 4);
}

TEST_CASE("simple_embedding_certificate") {
  SimpleEmbeddingCertificate c = simple_embedding_certificate(2);
  CHECK(c.final_chain == C({-3, 0}));
  CHECK(c.blowdowns == 2);
  CHECK(c.b2 == 4);
  c = simple_embedding_certificate(5);
  CHECK(c.final_chain == C({-3, 0}));
  CHECK(c.blowdowns == 8);
  CHECK(c.b2 == 10);
  CHECK_THROWS_AS(simple_embedding_certificate(1), usage_error);

  for (long n = 2; n <= 12; ++n) {
    CHECK(reduce(rb_chain(n)) == Reduction{C({-3, 0}), static_cast<std::size_t>(2 * n - 2)});
    CHECK(simple_embedding_certificate(n).initial == rb_chain(n));
  }
}

TEST_CASE("determinant invariant under blow-down (exhaustive)") {
  std::vector<std::int64_t> w;
  std::size_t checked = 0;
  std::function<void()> rec = [&] {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != -1) continue;
      const PlumbingChain c{w};
      const PlumbingChain d = blow_down(c, i);
      REQUIRE(d.size() + 1 == c.size());
      REQUIRE(abs(chain_determinant(d)) == abs(chain_determinant(c)));
      ++checked;
    }
    if (w.size() == 8) return;
    for (std::int64_t a = -4; a <= -1; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
  CHECK(checked > 100000);
}

TEST_CASE("reduce terminates and keeps the determinant") {
  std::vector<std::int64_t> w;
  std::function<void()> rec = [&] {
    if (!w.empty()) {
      const PlumbingChain c{w};
      const Reduction r = reduce(c);
      for (std::int64_t a : r.chain.weights) REQUIRE(a != -1);
      REQUIRE(r.chain.size() + r.blowdowns == c.size());
      REQUIRE(abs(chain_determinant(r.chain)) == abs(chain_determinant(c)));
    }
    if (w.size() == 6) return;
    for (std::int64_t a = -4; a <= 0; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

TEST_CASE("blow-up fuzz") {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<std::int64_t> weight(-6, -2);
  std::uniform_int_distribution<std::size_t> length(1, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    PlumbingChain c;
    for (std::size_t i = length(rng); i > 0; --i) c.weights.push_back(weight(rng));
    const BigInt det = abs(chain_determinant(c));
    const std::size_t ups = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    PlumbingChain up = c;
    for (std::size_t u = 0; u < ups; ++u) {
      up = blow_up(up, std::uniform_int_distribution<std::size_t>(0, up.size())(rng));
      REQUIRE(abs(chain_determinant(up)) == det);
    }
    const Reduction r = reduce(up);
    CHECK(abs(chain_determinant(r.chain)) == det);
  }
}

}  // TEST_SUITE
