// Acceptance gate: one PASS/FAIL line per criterion.
//
//   ratball_acceptance                 run everything
//   ratball_acceptance --criterion N   run one criterion

#include "cli.hpp"

#include "ratball/contfrac.hpp"
#include "ratball/lattice.hpp"
#include "ratball/markov.hpp"
#include "ratball/obstruction.hpp"
#include "ratball/plumbing.hpp"
#include "ratball/serialize.hpp"

#include "../support/oracles.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace ratball;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct CliRun {
  int code;
  json doc;
  std::string text;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  CliRun r{code, nullptr, out.str()};
  if (!r.text.empty() && r.text[0] == '{') r.doc = parse_document(r.text);
  return r;
}

// ---------------------------------------------------------------------------

Outcome markov_enumeration() {
  Outcome o;
  const CliRun r = cli({"--format", "json", "markov", "list", "--max", "1000"});
  o.require(r.code == 0, "markov list exit " + std::to_string(r.code));
  if (r.code != 0) return o;
  std::set<std::array<std::int64_t, 3>> got;
  std::set<std::int64_t> maxima;
  for (const json& t : r.doc["result"]["triples"]) {
    std::array<std::int64_t, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) v[i] = std::stoll(t[i].get<std::string>());
    got.insert(v);
    maxima.insert(v[2]);
  }
  const std::set<std::int64_t> expected{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985};
  o.require(maxima == expected, "maxima differ from the listed set");
  o.require(got == oracle::markov_triples(1000), "triples differ from the brute-force oracle");
  o.detail = o.pass ? std::to_string(got.size()) + " triples, maxima match, oracle agrees" : o.detail;
  return o;
}

Outcome characteristic_numbers() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0, failures = 0;
  for (const auto& t : markov::enumerate_triples(10000)) {
    if (t.c < 3) continue;
    const BigInt u = markov::characteristic_number(t);
    if (mod(u * u + 1, t.c) != 0) ++failures;
    ++checked;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(failures == 0, std::to_string(failures) + " failures");
  o.require(secs < 10, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " triples, u^2 = -1 for all";
  return o;
}

Outcome symplectic_criterion() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  auto classify = [&](const BigInt& p, const BigInt& q) -> std::optional<bool> {
    const CliRun r = cli({"--format", "json", "ball", "classify", to_string(p), to_string(q)});
    if (r.code != 0) return std::nullopt;
    return r.doc["result"]["verdict"]["symplectic"].get<bool>();
  };
  for (long n = 1; n <= 8; ++n) {
    const auto v = classify(markov::odd_fibonacci(n + 1), markov::odd_fibonacci(n));
    o.require(v && *v == (n == 1), "B(F(2n+1),F(2n-1)) wrong at n=" + std::to_string(n));
  }
  for (long n = 2; n <= 8; ++n) {
    const auto v = classify(markov::odd_fibonacci(n + 1), markov::odd_fibonacci(n - 1));
    o.require(v && *v, "B(F(2n+1),F(2n-3)) wrong at n=" + std::to_string(n));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 30, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "true iff n = 1 on the first family, true on the second, n <= 8";
  return o;
}

Outcome continued_fractions() {
  Outcome o;
  for (long n = 2; n <= 12; ++n) {
    try {
      const auto [first, second] = contfrac::fibonacci_identities(n);
      const BigInt big = markov::odd_fibonacci(n + 1), small = markov::odd_fibonacci(n);
      o.require(contfrac::hj_eval(first) == contfrac::Fraction::make(big, small) &&
                    contfrac::hj_eval(second) ==
                        contfrac::Fraction::make(big * big, big * small - 1),
                "identity value wrong at n=" + std::to_string(n));
    } catch (const std::exception& e) {
      o.require(false, std::string("n=") + std::to_string(n) + ": " + e.what());
    }
  }
  std::size_t pairs = 0;
  for (long p = 2; p <= 500; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto e = contfrac::hj_expand(p, q);
      const auto f = contfrac::hj_eval(e);
      const bool ok = f == contfrac::Fraction::make(p, q) &&
                      contfrac::hj_expand(f.numerator, f.denominator) == e;
      if (!ok) o.require(false, "round trip failed at " + std::to_string(p) + "/" + std::to_string(q));
      ++pairs;
    }
  }
  if (o.pass) o.detail = "identities n = 2..12, round trips over " + std::to_string(pairs) + " fractions";
  return o;
}

Outcome example_b31() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto l = lattice::direct_sum(lattice::linear_lattice({9}), lattice::linear_lattice({2, 2, 2, 3}));
  const auto classes = lattice::enumerate_embedding_classes(l, 5);
  o.require(classes.classes.size() == 1,
            std::to_string(classes.classes.size()) + " classes instead of 1");
  const CliRun r = cli({"obstruct", "3,1"});
  o.require(r.code == 0 && r.doc["result"]["verdict"] == "OBSTRUCTED", "obstruct 3,1 not OBSTRUCTED");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 5, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "1 class in Z^5, obstruct 3,1 -> OBSTRUCTED";
  return o;
}

Outcome lemma_classification() {
  Outcome o;
  for (std::size_t m = 4; m <= 7; ++m) {
    const auto s = lattice::survey_embeddings(lattice::linear_lattice({2, 2, 2}), m);
    bool norm4 = false;
    for (const auto& c : s.classes)
      if (c.complement_rank == 1 && c.complement_norm == 4) norm4 = true;
    o.require(s.classes.size() == 2 && norm4, "Lambda(2,2,2) wrong at m=" + std::to_string(m));
  }
  for (std::size_t m = 8; m <= 9; ++m) {
    const auto r = obstruction::lemma_cemb_report(2, m);
    std::set<std::size_t> supports;
    bool norm25 = false;
    for (const auto& c : r.survey.classes) {
      supports.insert(c.support);
      if (c.support == 6 && c.complement_norm == 25) norm25 = true;
    }
    o.require(r.survey.classes.size() == 3 && supports == std::set<std::size_t>{5, 6, 8} && norm25,
              "n=2 wrong at m=" + std::to_string(m));
  }
  const auto r = obstruction::lemma_cemb_report(3, 12);
  bool norm169 = false;
  std::string supports;
  for (const auto& c : r.survey.classes) {
    supports += (supports.empty() ? "" : ",") + std::to_string(c.support);
    if (c.complement_rank == 1 && c.complement_norm == 169) norm169 = true;
  }
  o.require(norm169, "no class with complement norm 169 at n=3");
  o.require(r.survey.classes.size() == 3,
            "n=3, m=12 has " + std::to_string(r.survey.classes.size()) +
                " classes (supports " + supports + "), expected 3");
  if (o.pass) o.detail = "Lambda(2,2,2), n = 2 and n = 3 as stated";
  else if (norm169) o.detail += "; the rank-1 class with norm 169 is present";
  return o;
}

Outcome theorem2() {
  Outcome o;
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  for (auto [k, n] : pairs) {
    const CliRun r = cli({"verify", "theorem2", std::to_string(k), std::to_string(n)});
    const std::string tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
    o.require(r.code == 0, tag + " exit " + std::to_string(r.code));
    if (r.code != 0) continue;
    const auto report = r.doc["result"].get<obstruction::ObstructionReport>();
    o.require(report.verdict == obstruction::Verdict::obstructed, tag + " not OBSTRUCTED");
    o.require(report.stats.complete && report.stats.leaves > 0, tag + " lacks an exhaustion certificate");
  }
  for (const std::string ball : {"2,1", "5,2"}) {
    const CliRun r = cli({"obstruct", ball});
    o.require(r.code == 0, "obstruct " + ball + " exit " + std::to_string(r.code));
    if (r.code != 0) continue;
    const auto report = r.doc["result"].get<obstruction::ObstructionReport>();
    o.require(report.verdict == obstruction::Verdict::not_obstructed && !report.witnesses.empty(),
              "obstruct " + ball + " not NOT_OBSTRUCTED");
    const auto& p = report.problem;
    for (const auto& w : report.witnesses) {
      // [w; A] embeds Lambda_M + Lambda_C with finite index
      IntMatrix full(w.embedding.rows() + 1, p.ambient);
      for (std::size_t c = 0; c < p.ambient; ++c) {
        full(0, c) = w.generator[c];
        for (std::size_t r2 = 0; r2 < w.embedding.rows(); ++r2) full(r2 + 1, c) = w.embedding(r2, c);
      }
      const auto target = lattice::direct_sum(
          lattice::linear_lattice({to_int64(p.m_norm, "m_norm")}), p.plumbing_lattice());
      const BigInt det = lattice::determinant(full);
      const bool ok = lattice::is_isometric_embedding(target, full) &&
                      det * det == p.m_norm * lattice::lattice_determinant(p.plumbing_lattice()) &&
                      lattice::is_primitive_vector(w.generator) &&
                      obstruction::evaluate_class(p, {w.embedding}).has_value();
      o.require(ok, "witness for " + ball + " fails verification");
    }
  }
  if (o.pass) o.detail = "4 pairs OBSTRUCTED with certificates, controls verified";
  return o;
}

Outcome plumbing_certificates() {
  Outcome o;
  for (long n = 2; n <= 12; ++n) {
    const auto c = plumbing::simple_embedding_certificate(n);
    o.require(c.final_chain == plumbing::PlumbingChain{{-3, 0}} &&
                  c.blowdowns == static_cast<std::size_t>(2 * n - 2),
              "certificate wrong at n=" + std::to_string(n));
  }
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> weight(-6, -1);
  std::uniform_int_distribution<std::size_t> length(1, 12);
  std::size_t failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    plumbing::PlumbingChain c;
    for (std::size_t i = length(rng); i > 0; --i) c.weights.push_back(weight(rng));
    const BigInt det = abs(plumbing::chain_determinant(c));
    auto up = plumbing::blow_up(c, std::uniform_int_distribution<std::size_t>(0, c.size())(rng));
    if (abs(plumbing::chain_determinant(up)) != det) ++failures;
    if (abs(plumbing::chain_determinant(plumbing::reduce(up).chain)) != det) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " determinant mismatches in the fuzz suite");
  if (o.pass) o.detail = "n = 2..12 reach (-3,0) after 2n-2 blow-downs, 1000-chain fuzz clean";
  return o;
}

Outcome strategy_equivalence() {
  Outcome o;
  for (auto [p, q] : {std::pair{3, 1}, std::pair{2, 1}}) {
    const std::vector<markov::BallSpec> balls{markov::BallSpec::make(p, q)};
    const auto problem = obstruction::build_problem(balls);
    const auto a = obstruction::complement_strategy_classes(problem);
    const auto b = obstruction::direct_strategy_classes(problem);
    o.require(a == b, "strategies differ on B(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  if (o.pass) o.detail = "identical class sets on B(3,1) and B(2,1)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: ratball_acceptance [--criterion N]\n";
      return 2;
    }
  }

  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria{
      {1, {"Markov enumeration", markov_enumeration}},
      {2, {"characteristic numbers", characteristic_numbers}},
      {3, {"symplectic criterion on Fibonacci balls", symplectic_criterion}},
      {4, {"continued fraction identities", continued_fractions}},
      {5, {"the ball B(3,1)", example_b31}},
      {6, {"embedding classification", lemma_classification}},
      {7, {"Fibonacci pairs", theorem2}},
      {8, {"plumbing blow-down certificates", plumbing_certificates}},
      {9, {"strategy equivalence", strategy_equivalence}},
  };
  if (only != 0 && !criteria.count(only)) {
    std::cerr << "unknown criterion " << only << "\n";
    return 2;
  }

  bool all = true;
  for (const auto& [id, entry] : criteria) {
    if (only != 0 && id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << entry.first << ": "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
