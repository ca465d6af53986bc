#include "ratball/plumbing.hpp"

#include "ratball/errors.hpp"

namespace ratball::plumbing {

std::string to_string(const PlumbingChain& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.weights[i]);
  }
  return out + ")";
}

PlumbingChain rb_chain(long n) {
  if (n < 2) throw usage_error("rational blow-up chain needs n >= 2");
  PlumbingChain c;
  c.weights.assign(static_cast<std::size_t>(n - 1), -3);
  c.weights.push_back(-2);
  c.weights.push_back(-1);
  c.weights.insert(c.weights.end(), static_cast<std::size_t>(n - 2), -3);
  c.weights.push_back(-2);
  return c;
}

PlumbingChain blow_down(const PlumbingChain& c, std::size_t index) {
  if (index >= c.size()) throw usage_error("blow-down index out of range");
  if (c.weights[index] != -1) {
    throw usage_error("vertex " + std::to_string(index) + " has weight " +
                      std::to_string(c.weights[index]) + ", not -1");
  }
  PlumbingChain out = c;
  if (index > 0) out.weights[index - 1] += 1;
  if (index + 1 < c.size()) out.weights[index + 1] += 1;
  out.weights.erase(out.weights.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

PlumbingChain blow_up(const PlumbingChain& c, std::size_t index) {
  if (index > c.size()) throw usage_error("blow-up position out of range");
  PlumbingChain out = c;
  if (index > 0) out.weights[index - 1] -= 1;
  if (index < c.size()) out.weights[index] -= 1;
  out.weights.insert(out.weights.begin() + static_cast<std::ptrdiff_t>(index), -1);
  return out;
}

Reduction reduce(const PlumbingChain& c) {
  Reduction r{c, 0};
  for (;;) {
    std::size_t i = r.chain.size();
    while (i > 0 && r.chain.weights[i - 1] != -1) --i;
    if (i == 0) return r;
    r.chain = blow_down(r.chain, i - 1);
    ++r.blowdowns;
  }
}

BigInt chain_determinant(const PlumbingChain& c) {
  BigInt prev = 0;  // d_{-1}
  BigInt cur = 1;   // d_0
  for (std::int64_t a : c.weights) {
    BigInt next = a * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SimpleEmbeddingCertificate simple_embedding_certificate(long n) {
  PlumbingChain initial = rb_chain(n);
  Reduction r = reduce(initial);
  const PlumbingChain expected{{-3, 0}};
  if (r.chain != expected || r.blowdowns != static_cast<std::size_t>(2 * n - 2)) {
    throw internal_error("rb_chain(" + std::to_string(n) + ") reduced to " +
                         to_string(r.chain) + " after " + std::to_string(r.blowdowns) +
                         " blow-downs");
  }
  return {n, std::move(initial), std::move(r.chain), r.blowdowns, 2 * n};
}

}  // namespace ratball::plumbing
