#include "ratball/markov.hpp"

#include "ratball/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace ratball::markov {

namespace {

void require_positive(const BigInt& x, const char* name) {
  if (x < 1) throw usage_error(std::string(name) + " must be a positive integer");
}

std::array<BigInt, 3> sorted(BigInt x, BigInt y, BigInt z) {
  std::array<BigInt, 3> v{std::move(x), std::move(y), std::move(z)};
  std::sort(v.begin(), v.end());
  return v;
}

MarkovTriple unchecked(std::array<BigInt, 3> v) {
  return MarkovTriple{std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

}  // namespace

MarkovTriple MarkovTriple::make(BigInt x, BigInt y, BigInt z) {
  if (!is_markov(x, y, z)) {
    throw usage_error("(" + to_string(x) + "," + to_string(y) + "," + to_string(z) +
                      ") is not a Markov triple");
  }
  if (gcd(x, y) != 1 || gcd(y, z) != 1 || gcd(x, z) != 1) {
    throw internal_error("Markov triple with a common factor");
  }
  return unchecked(sorted(std::move(x), std::move(y), std::move(z)));
}

const BigInt& MarkovTriple::operator[](std::size_t i) const {
  switch (i) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    default: throw usage_error("triple position must be 0, 1 or 2");
  }
}

std::strong_ordering operator<=>(const MarkovTriple& lhs, const MarkovTriple& rhs) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (lhs[i] < rhs[i]) return std::strong_ordering::less;
    if (lhs[i] > rhs[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

BallSpec BallSpec::make(const BigInt& p, const BigInt& q) {
  if (p < 2) throw usage_error("ball parameter p must be at least 2");
  if (q < 1 || q >= p) throw usage_error("ball parameter q must satisfy 1 <= q < p");
  if (gcd(p, q) != 1) throw usage_error("ball parameters p and q must be coprime");
  return BallSpec{p, std::min(q, BigInt(p - q))};
}

bool is_markov(const BigInt& a, const BigInt& b, const BigInt& c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  return a * a + b * b + c * c == 3 * a * b * c;
}

MarkovTriple vieta_neighbor(const MarkovTriple& t, std::size_t position) {
  if (position > 2) throw usage_error("triple position must be 0, 1 or 2");
  std::array<BigInt, 3> v{t.a, t.b, t.c};
  const BigInt& y = v[(position + 1) % 3];
  const BigInt& z = v[(position + 2) % 3];
  v[position] = 3 * y * z - v[position];
  std::sort(v.begin(), v.end());
  return unchecked(std::move(v));
}

std::vector<MarkovTriple> enumerate_triples(const BigInt& bound, std::size_t max_triples) {
  if (bound < 1) throw usage_error("enumeration bound must be at least 1");
  // Every triple is reached from (1,1,1) along a path whose maxima never
  // decrease, so pruning neighbours above the bound loses nothing.
  std::set<MarkovTriple> seen;
  std::deque<MarkovTriple> queue;
  MarkovTriple root{1, 1, 1};
  seen.insert(root);
  queue.push_back(root);
  while (!queue.empty()) {
    MarkovTriple t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos < 3; ++pos) {
      MarkovTriple next = vieta_neighbor(t, pos);
      if (next.c > bound || next.a < 1) continue;
      if (seen.insert(next).second) {
        if (seen.size() > max_triples) {
          throw limit_error("Markov enumeration exceeds " + std::to_string(max_triples) +
                            " triples");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

BigInt characteristic_number(const MarkovTriple& t) {
  const BigInt& p = t.c;
  if (p <= 2) {
    throw usage_error("characteristic number is undefined for maximum " + to_string(p));
  }
  const BigInt x = mod(t.b * mod_inverse(t.a, p), p);
  return std::min(x, BigInt(p - x));
}

BigInt odd_fibonacci(long k) {
  if (k < 1) throw usage_error("odd Fibonacci index must be at least 1");
  BigInt prev = 1;  // F(1)
  BigInt cur = 2;   // F(3)
  if (k == 1) return prev;
  for (long i = 2; i < k; ++i) {
    BigInt next = 3 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BallSpec> ball_params(const MarkovTriple& t) {
  std::vector<BallSpec> balls;
  for (std::size_t i = 0; i < 3; ++i) {
    const BigInt& p = t[i];
    if (p < 2) continue;
    const BigInt& pj = t[(i + 1) % 3];
    const BigInt& pk = t[(i + 2) % 3];
    balls.push_back(BallSpec::make(p, mod(3 * pj * mod_inverse(pk, p), p)));
  }
  return balls;
}

SymplecticVerdict classify_symplectic(const BallSpec& ball, const BigInt& search_bound) {
  const BigInt& p = ball.p;
  if (search_bound < p) {
    throw usage_error("search bound " + to_string(search_bound) + " is below p = " + to_string(p));
  }
  // The characteristic number is not defined for p = 2; B(2,1) is the only
  // ball and comes from (1,1,2).
  if (p == 2) return {true, MarkovTriple{1, 1, 2}};

  for (const MarkovTriple& t : enumerate_triples(p)) {
    if (t.c != p) continue;
    const BigInt r = mod(3 * characteristic_number(t), p);
    if (std::min(r, BigInt(p - r)) == ball.q) return {true, t};
  }
  return {false, std::nullopt};
}

std::vector<FibonacciBallRow> fibonacci_symplectic_table(long n_max) {
  if (n_max < 1) throw usage_error("n_max must be at least 1");
  std::vector<FibonacciBallRow> rows;
  for (long n = 1; n <= n_max; ++n) {
    BallSpec ball = BallSpec::make(odd_fibonacci(n + 1), odd_fibonacci(n));
    SymplecticVerdict verdict = classify_symplectic(ball, ball.p);
    rows.push_back({n, std::move(ball), std::move(verdict)});
  }
  return rows;
}

}  // namespace ratball::markov
