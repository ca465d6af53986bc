#include "cli.hpp"

#include "ratball/contfrac.hpp"
#include "ratball/errors.hpp"
#include "ratball/lattice.hpp"
#include "ratball/markov.hpp"
#include "ratball/obstruction.hpp"
#include "ratball/plumbing.hpp"
#include "ratball/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace ratball::cli {

namespace {

using lattice::SearchLimits;
using lattice::SearchStats;
using markov::BallSpec;

struct RunConfig {
  std::uint64_t node_budget = SearchLimits{}.node_budget;
  std::int64_t time_budget_s = 600;
  unsigned threads = 1;
  std::string kernels = "auto";
  std::optional<std::string> format;
  bool timing = false;
  int verbosity = 0;

  SearchLimits limits() const {
    SearchLimits l;
    l.node_budget = node_budget;
    l.time_budget = std::chrono::seconds(time_budget_s);
    l.threads = threads;
    if (kernels == "scalar") l.isa = simd::Isa::scalar;
    else if (kernels == "avx2") l.isa = simd::Isa::avx2;
    else if (kernels == "neon") l.isa = simd::Isa::neon;
    return l;
  }
};

template <class T>
T parse_positive(const std::string& text, std::string_view what) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 1) {
    throw usage_error(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return v;
}

const CLI::Validator kPositiveInteger(
    [](std::string& text) -> std::string {
      try {
        parse_positive<std::uint64_t>(text, "value");
      } catch (const usage_error& e) {
        return e.what();
      }
      return {};
    },
    "POSITIVE");

/// Budget and thread defaults from the environment; flags override them.
void read_environment(RunConfig& config) {
  if (const char* v = std::getenv("RATBALL_NODE_BUDGET"))
    config.node_budget = parse_positive<std::uint64_t>(v, "RATBALL_NODE_BUDGET");
  if (const char* v = std::getenv("RATBALL_TIME_BUDGET"))
    config.time_budget_s = parse_positive<std::int64_t>(v, "RATBALL_TIME_BUDGET");
  if (const char* v = std::getenv("RATBALL_THREADS"))
    config.threads = parse_positive<unsigned>(v, "RATBALL_THREADS");
}

std::vector<std::string> split_list(const std::vector<std::string>& tokens) {
  std::vector<std::string> items;
  for (const std::string& t : tokens) {
    std::string cur;
    std::istringstream in(t);
    while (std::getline(in, cur, ',')) {
      if (cur.empty()) throw usage_error("empty entry in list '" + t + "'");
      items.push_back(cur);
    }
    if (!t.empty() && t.back() == ',') throw usage_error("empty entry in list '" + t + "'");
  }
  if (items.empty()) throw usage_error("empty list");
  return items;
}

std::int64_t parse_int(const std::string& s, std::string_view what) {
  return to_int64(parse_bigint(s), what);
}

std::vector<std::int64_t> parse_ints(const std::vector<std::string>& tokens, std::string_view what) {
  std::vector<std::int64_t> out;
  for (const std::string& s : split_list(tokens)) out.push_back(parse_int(s, what));
  return out;
}

BallSpec parse_ball(const std::string& token) {
  const std::vector<std::string> pq = split_list({token});
  if (pq.size() != 2) throw usage_error("ball must be given as P,Q, got '" + token + "'");
  return BallSpec::make(parse_bigint(pq[0]), parse_bigint(pq[1]));
}

std::string ints_text(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string triple_text(const markov::MarkovTriple& t) {
  return "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.c) + ")";
}

std::string ball_text(const BallSpec& b) { return "B(" + to_string(b.p) + "," + to_string(b.q) + ")"; }

class Session {
 public:
  Session(RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  bool json_output(bool default_json) const {
    return config_.format ? *config_.format == "json" : default_json;
  }

  void document(const std::string& command, json result) {
    out_ << emit(json{{"command", command}, {"result", std::move(result)}});
  }

  void stats(SearchStats& s) {
    if (!config_.timing) s.elapsed = std::chrono::microseconds(0);
    if (config_.verbosity > 0) {
      err_ << "search: nodes=" << s.nodes << " steps=" << s.steps << " leaves=" << s.leaves
           << " complete=" << (s.complete ? "yes" : "no");
      if (config_.timing) err_ << " elapsed_us=" << s.elapsed.count();
      err_ << "\n";
    }
  }

  /// Exit status for a finished report; an inconclusive one also notes the
  /// limit on stderr.
  int status(const obstruction::ObstructionReport& r) {
    if (r.verdict != obstruction::Verdict::inconclusive) return ok;
    err_ << "limit exceeded: " << r.limit << "\n";
    return limit;
  }

  std::ostream& out() { return out_; }
  const RunConfig& config() const { return config_; }

 private:
  RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
};

// ---------------------------------------------------------------------------
// Commands

int markov_list(Session& s, const std::string& max) {
  const auto triples = markov::enumerate_triples(parse_bigint(max));
  if (s.json_output(false)) {
    s.document("markov list", json{{"max", parse_bigint(max)}, {"triples", triples}});
  } else {
    for (const auto& t : triples) s.out() << triple_text(t) << "\n";
  }
  return ok;
}

int markov_char(Session& s, const std::string& p, const std::string& a, const std::string& b) {
  const auto t = markov::MarkovTriple::make(parse_bigint(a), parse_bigint(b), parse_bigint(p));
  if (t.max() != parse_bigint(p)) throw usage_error("P must be the largest entry of the triple");
  const BigInt u = markov::characteristic_number(t);
  if (s.json_output(false)) {
    s.document("markov char", json{{"triple", t}, {"u", u}});
  } else {
    s.out() << to_string(u) << "\n";
  }
  return ok;
}

int ball_classify(Session& s, const std::string& p, const std::string& q) {
  const BallSpec ball = BallSpec::make(parse_bigint(p), parse_bigint(q));
  const auto v = markov::classify_symplectic(ball, ball.p);
  if (s.json_output(false)) {
    s.document("ball classify", json{{"ball", ball}, {"verdict", v}});
  } else {
    s.out() << ball_text(ball) << ": " << (v.symplectic ? "symplectic" : "not symplectic");
    if (v.witness) s.out() << " (triple " << triple_text(*v.witness) << ")";
    s.out() << "\n";
  }
  return ok;
}

int ball_boundary(Session& s, const std::string& p, const std::string& q) {
  const BallSpec ball = BallSpec::make(parse_bigint(p), parse_bigint(q));
  const auto lens = obstruction::ball_boundary(ball);
  if (s.json_output(false)) {
    s.document("ball boundary", json{{"ball", ball}, {"lens", lens}});
  } else {
    s.out() << "L(" << to_string(lens.p) << "," << to_string(lens.q) << ")\n";
  }
  return ok;
}

int ball_plumbing(Session& s, const std::string& p, const std::string& q) {
  const BallSpec ball = BallSpec::make(parse_bigint(p), parse_bigint(q));
  const auto weights = obstruction::ball_plumbing(ball);
  if (s.json_output(false)) {
    s.document("ball plumbing", json{{"ball", ball}, {"weights", weights}});
  } else {
    s.out() << to_string(weights) << "\n";
  }
  return ok;
}

int cf_expand(Session& s, const std::string& p, const std::string& q) {
  const auto e = contfrac::hj_expand(parse_bigint(p), parse_bigint(q));
  if (s.json_output(false)) {
    s.document("cf expand", json{{"p", parse_bigint(p)}, {"q", parse_bigint(q)}, {"expansion", e}});
  } else {
    s.out() << to_string(e) << "\n";
  }
  return ok;
}

int cf_eval(Session& s, const std::vector<std::string>& coeffs) {
  const contfrac::HJExpansion e(parse_ints(coeffs, "coefficient"));
  const auto f = contfrac::hj_eval(e);
  if (s.json_output(false)) {
    s.document("cf eval", json{{"expansion", e}, {"value", f}});
  } else {
    s.out() << to_string(f) << "\n";
  }
  return ok;
}

int cf_fib(Session& s, const std::string& n_text) {
  const long n = parse_int(n_text, "n");
  const auto [first, second] = contfrac::fibonacci_identities(n);
  const auto v1 = contfrac::hj_eval(first);
  const auto v2 = contfrac::hj_eval(second);
  if (s.json_output(false)) {
    s.document("cf fib-identities",
               json{{"n", std::to_string(n)},
                    {"first", {{"expansion", first}, {"value", v1}}},
                    {"second", {{"expansion", second}, {"value", v2}}}});
  } else {
    s.out() << to_string(first) << " = " << to_string(v1) << "\n"
            << to_string(second) << " = " << to_string(v2) << "\n";
  }
  return ok;
}

int lattice_classes(Session& s, const std::vector<std::string>& weight_lists,
                    const std::string& ambient_text) {
  std::vector<lattice::GramLattice> parts;
  for (const std::string& w : weight_lists) {
    parts.push_back(lattice::linear_lattice(parse_ints({w}, "weight")));
  }
  const std::int64_t m = parse_int(ambient_text, "ambient");
  if (m < 1) throw usage_error("ambient rank must be positive");
  lattice::Survey survey =
      lattice::survey_embeddings(lattice::direct_sum(parts), static_cast<std::size_t>(m),
                                 s.config().limits());
  s.stats(survey.stats);
  if (s.json_output(false)) {
    s.document("lattice classes", survey);
    return ok;
  }
  s.out() << survey.classes.size() << (survey.classes.size() == 1 ? " class" : " classes")
          << " in Z^" << survey.ambient << "\n";
  for (std::size_t i = 0; i < survey.classes.size(); ++i) {
    const auto& c = survey.classes[i];
    s.out() << "class " << i + 1 << ": support " << c.support << ", complement rank "
            << c.complement_rank;
    if (c.complement_norm) s.out() << ", norm " << *c.complement_norm;
    if (c.complement_generator) s.out() << ", generator " << ints_text(*c.complement_generator);
    if (c.complement_rank > 0 && !c.complement_has_unit_vector) s.out() << ", no unit vectors";
    s.out() << "\n  " << to_string(c.embedding.representative) << "\n";
  }
  return ok;
}

int plumbing_reduce(Session& s, const std::vector<std::string>& weights) {
  const plumbing::PlumbingChain chain{parse_ints(weights, "weight")};
  const auto r = plumbing::reduce(chain);
  if (s.json_output(false)) {
    s.document("plumbing reduce", json{{"initial", chain}, {"reduction", r}});
  } else {
    s.out() << to_string(r.chain) << " after " << r.blowdowns
            << (r.blowdowns == 1 ? " blowdown" : " blowdowns") << "\n";
  }
  return ok;
}

int plumbing_certify(Session& s, const std::string& n_text) {
  const auto c = plumbing::simple_embedding_certificate(parse_int(n_text, "n"));
  if (s.json_output(false)) {
    s.document("plumbing certify", c);
  } else {
    s.out() << to_string(c.initial) << " -> " << to_string(c.final_chain) << " after "
            << c.blowdowns << " blowdowns, b2 = " << c.b2 << "\n";
  }
  return ok;
}

void report_text(Session& s, const obstruction::ObstructionReport& r) {
  for (std::size_t i = 0; i < r.problem.balls.size(); ++i) {
    s.out() << (i ? " + " : "") << ball_text(r.problem.balls[i]);
  }
  s.out() << ": " << obstruction::verdict_name(r.verdict) << "\n";
  if (!r.limit.empty()) s.out() << "  stopped: " << r.limit << "\n";
  s.out() << "  classes examined: " << r.stats.leaves << " in Z^" << r.problem.ambient << "\n";
  for (const auto& w : r.witnesses) {
    s.out() << "  witness w = " << ints_text(w.generator) << "\n    "
            << to_string(w.embedding) << "\n";
  }
}

int obstruct(Session& s, const std::vector<std::string>& balls_text) {
  std::vector<BallSpec> balls;
  for (const std::string& b : balls_text) balls.push_back(parse_ball(b));
  auto report = obstruction::check_obstruction(obstruction::build_problem(balls),
                                               s.config().limits());
  s.stats(report.stats);
  if (s.json_output(true)) {
    s.document("obstruct", report);
  } else {
    report_text(s, report);
  }
  return s.status(report);
}

int verify_b31(Session& s) {
  auto r = obstruction::example_b31(s.config().limits());
  s.stats(r.obstruction.stats);
  if (s.json_output(true)) {
    s.document("verify example-b31", r);
  } else {
    s.out() << "direct classes: " << r.direct_classes.size() << "\n"
            << "matches reference: " << (r.matches_reference ? "yes" : "no") << "\n"
            << "unit pairing: " << (r.pairing.pass() ? "pass" : "fail") << "\n";
    report_text(s, r.obstruction);
  }
  return s.status(r.obstruction);
}

int verify_lemma(Session& s, const std::string& n_text, const std::string& m_text) {
  const long n = parse_int(n_text, "n");
  const std::int64_t m = parse_int(m_text, "ambient");
  if (m < 1) throw usage_error("ambient rank must be positive");
  auto r = obstruction::lemma_cemb_report(n, static_cast<std::size_t>(m), s.config().limits());
  s.stats(r.survey.stats);
  if (s.json_output(true)) {
    s.document("verify lemma-cemb", r);
  } else {
    s.out() << "weights " << ints_text(r.weights) << " in Z^" << r.ambient << ": "
            << r.survey.classes.size() << " classes, supports";
    for (const auto& c : r.survey.classes) s.out() << " " << c.support;
    s.out() << "\nexpected supports " << r.expected_supports[0] << " " << r.expected_supports[1]
            << " " << r.expected_supports[2] << ", norm " << to_string(r.expected_norm) << "\n"
            << "consistent: " << (r.consistent ? "yes" : "no") << "\n";
  }
  return ok;
}

int verify_theorem2(Session& s, const std::string& k_text, const std::string& n_text) {
  const std::pair<long, long> pair{parse_int(k_text, "k"), parse_int(n_text, "n")};
  auto reports = obstruction::theorem2_suite(std::span(&pair, 1), s.config().limits());
  auto& r = reports.front();
  s.stats(r.stats);
  if (s.json_output(true)) {
    s.document("verify theorem2", r);
  } else {
    report_text(s, r);
  }
  return s.status(r);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    read_environment(config);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  CLI::App app("Rational ball embeddings in CP^2: Markov triples, plumbings and lattice "
               "obstructions.",
               "ratball");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  app.add_option("--format", config.format, "Output format (default text; json for obstruct/verify)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--node-budget", config.node_budget, "Search node budget")
      ->check(kPositiveInteger);
  app.add_option("--time-budget", config.time_budget_s, "Search time budget in seconds")
      ->check(kPositiveInteger);
  app.add_option("--threads", config.threads, "Search worker threads")
      ->check(kPositiveInteger);
  app.add_option("--kernels", config.kernels, "Search kernels")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
  app.add_flag("--timing", config.timing, "Report elapsed search time");
  app.add_flag("-v,--verbose", config.verbosity, "Search statistics on stderr");

  Session session(config, out, err);
  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };

  // markov
  auto* markov_cmd = app.add_subcommand("markov", "Markov triples");
  markov_cmd->require_subcommand(1);
  std::string max, p, q, a, b, n, m, k;
  std::vector<std::string> list, weight_lists;

  auto* c = leaf(markov_cmd, "list", "Triples with maximum at most N");
  c->add_option("--max", max, "Bound N")->required();
  c->callback([&] { action = [&] { return markov_list(session, max); }; });

  c = leaf(markov_cmd, "char", "Characteristic number of the Markov triple with maximum P");
  c->add_option("P", p, "Largest entry")->required();
  c->add_option("A", a, "Other entry")->required();
  c->add_option("B", b, "Other entry")->required();
  c->callback([&] { action = [&] { return markov_char(session, p, a, b); }; });

  // ball
  auto* ball_cmd = app.add_subcommand("ball", "Rational balls B(P,Q)");
  ball_cmd->require_subcommand(1);
  for (const char* name : {"classify", "boundary", "plumbing"}) {
    c = leaf(ball_cmd, name,
             std::string(name) == "classify"   ? "Symplectic embedding criterion"
             : std::string(name) == "boundary" ? "Boundary lens space"
                                               : "Plumbing weights bounded by the boundary");
    c->add_option("P", p, "Ball index P >= 2")->required();
    c->add_option("Q", q, "Coprime to P")->required();
    const std::string which = name;
    c->callback([&, which] {
      action = [&, which] {
        if (which == "classify") return ball_classify(session, p, q);
        if (which == "boundary") return ball_boundary(session, p, q);
        return ball_plumbing(session, p, q);
      };
    });
  }

  // cf
  auto* cf_cmd = app.add_subcommand("cf", "Hirzebruch-Jung continued fractions");
  cf_cmd->require_subcommand(1);
  c = leaf(cf_cmd, "expand", "Expansion of P/Q");
  c->add_option("P", p, "Numerator")->required();
  c->add_option("Q", q, "Denominator, 0 < Q < P, coprime to P")->required();
  c->callback([&] { action = [&] { return cf_expand(session, p, q); }; });
  c = leaf(cf_cmd, "eval", "Value of [A1,A2,...]");
  c->add_option("coefficients", list, "Comma-separated, each >= 2")->required();
  c->callback([&] { action = [&] { return cf_eval(session, list); }; });
  c = leaf(cf_cmd, "fib-identities", "Fibonacci expansions for index N");
  c->add_option("N", n, "Index n >= 2")->required();
  c->callback([&] { action = [&] { return cf_fib(session, n); }; });

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "Embeddings of linear lattices");
  lattice_cmd->require_subcommand(1);
  c = leaf(lattice_cmd, "classes", "Embedding classes in Z^M");
  c->add_option("--weights", weight_lists, "Comma-separated weights; repeat for a direct sum")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  c->add_option("--ambient", m, "Ambient rank M")->required();
  c->callback([&] { action = [&] { return lattice_classes(session, weight_lists, m); }; });

  // plumbing
  auto* plumbing_cmd = app.add_subcommand("plumbing", "Linear plumbings");
  plumbing_cmd->require_subcommand(1);
  c = leaf(plumbing_cmd, "reduce", "Blow down -1 vertices");
  c->add_option("weights", list, "Comma-separated; use -- before negative values if needed")->required();
  c->callback([&] { action = [&] { return plumbing_reduce(session, list); }; });
  c = leaf(plumbing_cmd, "certify", "Blow-down certificate for index N");
  c->add_option("N", n, "Index n >= 2")->required();
  c->callback([&] { action = [&] { return plumbing_certify(session, n); }; });

  // obstruct
  c = app.add_subcommand("obstruct", "Lattice obstruction for balls P1,Q1 [P2,Q2 ...]");
  c->add_option("balls", list, "One P,Q pair per ball")->required();
  c->callback([&] { action = [&] { return obstruct(session, list); }; });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Worked examples");
  verify_cmd->require_subcommand(1);
  c = leaf(verify_cmd, "example-b31", "The ball B(3,1)");
  c->callback([&] { action = [&] { return verify_b31(session); }; });
  c = leaf(verify_cmd, "lemma-cemb", "Classification of the chain for index N in Z^M");
  c->add_option("N", n, "Index n >= 2")->required();
  c->add_option("M", m, "Ambient rank")->required();
  c->callback([&] { action = [&] { return verify_lemma(session, n, m); }; });
  c = leaf(verify_cmd, "theorem2", "Pair of Fibonacci balls K, N");
  c->add_option("K", k, "First index, at most 3")->required();
  c->add_option("N", n, "Second index, at most 3")->required();
  c->callback([&] { action = [&] { return verify_theorem2(session, k, n); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    return action();
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const limit_error& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return limit;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace ratball::cli
