#include "ratball/serialize.hpp"

#include "ratball/errors.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nlohmann {

void adl_serializer<ratball::BigInt>::to_json(json& j, const ratball::BigInt& v) {
  j = ratball::to_string(v);
}

void adl_serializer<ratball::BigInt>::from_json(const json& j, ratball::BigInt& v) {
  v = ratball::parse_bigint(j.get<std::string>());
}

void adl_serializer<ratball::contfrac::HJExpansion>::to_json(
    json& j, const ratball::contfrac::HJExpansion& e) {
  j = json::array();
  for (std::int64_t a : e.coefficients()) j.push_back(std::to_string(a));
}

ratball::contfrac::HJExpansion adl_serializer<ratball::contfrac::HJExpansion>::from_json(
    const json& j) {
  std::vector<std::int64_t> coeffs;
  for (const json& a : j) coeffs.push_back(ratball::to_int64(a.get<ratball::BigInt>(), "coefficient"));
  return ratball::contfrac::HJExpansion(std::move(coeffs));
}

void adl_serializer<ratball::lattice::GramLattice>::to_json(
    json& j, const ratball::lattice::GramLattice& l) {
  j = json{{"gram", l.gram()}};
}

ratball::lattice::GramLattice adl_serializer<ratball::lattice::GramLattice>::from_json(
    const json& j) {
  return ratball::lattice::GramLattice(j.at("gram").get<ratball::IntMatrix>());
}

}  // namespace nlohmann

namespace ratball {

namespace {

template <class T>
json num(T v) {
  return std::to_string(v);
}

template <class T>
T read_num(const json& j) {
  const std::string s = j.get<std::string>();
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw usage_error("malformed integer '" + s + "'");
  return v;
}

json ints(const std::vector<std::int64_t>& v) {
  json a = json::array();
  for (std::int64_t x : v) a.push_back(num(x));
  return a;
}

std::vector<std::int64_t> read_ints(const json& j) {
  std::vector<std::int64_t> v;
  for (const json& x : j) v.push_back(read_num<std::int64_t>(x));
  return v;
}

json opt_ints(const std::optional<std::vector<std::int64_t>>& v) {
  return v ? ints(*v) : json(nullptr);
}

std::optional<std::vector<std::int64_t>> read_opt_ints(const json& j) {
  if (j.is_null()) return std::nullopt;
  return read_ints(j);
}

}  // namespace

void to_json(json& j, const IntMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(num(m(r, c)));
    j.push_back(std::move(row));
  }
}

void from_json(const json& j, IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const json& row : j) rows.push_back(read_ints(row));
  m = IntMatrix::from_rows(rows);
}

std::string emit(const json& doc) { return doc.dump(2) + "\n"; }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace markov {

void to_json(json& j, const MarkovTriple& t) { j = json::array({t.a, t.b, t.c}); }

void from_json(const json& j, MarkovTriple& t) {
  t = MarkovTriple::make(j.at(0).get<BigInt>(), j.at(1).get<BigInt>(), j.at(2).get<BigInt>());
}

void to_json(json& j, const BallSpec& b) { j = json{{"p", b.p}, {"q", b.q}}; }

void from_json(const json& j, BallSpec& b) {
  b = BallSpec::make(j.at("p").get<BigInt>(), j.at("q").get<BigInt>());
}

void to_json(json& j, const SymplecticVerdict& v) {
  j = json{{"symplectic", v.symplectic}, {"witness", nullptr}};
  if (v.witness) j["witness"] = *v.witness;
}

void from_json(const json& j, SymplecticVerdict& v) {
  v.symplectic = j.at("symplectic").get<bool>();
  v.witness.reset();
  if (!j.at("witness").is_null()) v.witness = j.at("witness").get<MarkovTriple>();
}

void to_json(json& j, const FibonacciBallRow& r) {
  j = json{{"n", num(r.n)}, {"ball", r.ball}, {"verdict", r.verdict}};
}

void from_json(const json& j, FibonacciBallRow& r) {
  r.n = read_num<long>(j.at("n"));
  r.ball = j.at("ball").get<BallSpec>();
  r.verdict = j.at("verdict").get<SymplecticVerdict>();
}

}  // namespace markov

namespace contfrac {

void to_json(json& j, const Fraction& f) {
  j = json{{"numerator", f.numerator}, {"denominator", f.denominator}};
}

void from_json(const json& j, Fraction& f) {
  f = Fraction::make(j.at("numerator").get<BigInt>(), j.at("denominator").get<BigInt>());
}

}  // namespace contfrac

namespace plumbing {

void to_json(json& j, const PlumbingChain& c) { j = ints(c.weights); }

void from_json(const json& j, PlumbingChain& c) { c.weights = read_ints(j); }

void to_json(json& j, const Reduction& r) {
  j = json{{"chain", r.chain}, {"blowdowns", num(r.blowdowns)}};
}

void from_json(const json& j, Reduction& r) {
  r.chain = j.at("chain").get<PlumbingChain>();
  r.blowdowns = read_num<std::size_t>(j.at("blowdowns"));
}

void to_json(json& j, const SimpleEmbeddingCertificate& c) {
  j = json{{"n", num(c.n)},
           {"initial", c.initial},
           {"final", c.final_chain},
           {"blowdowns", num(c.blowdowns)},
           {"b2", num(c.b2)}};
}

void from_json(const json& j, SimpleEmbeddingCertificate& c) {
  c.n = read_num<long>(j.at("n"));
  c.initial = j.at("initial").get<PlumbingChain>();
  c.final_chain = j.at("final").get<PlumbingChain>();
  c.blowdowns = read_num<std::size_t>(j.at("blowdowns"));
  c.b2 = read_num<long>(j.at("b2"));
}

}  // namespace plumbing

namespace lattice {

void to_json(json& j, const EmbeddingClass& c) { j = c.representative; }

void from_json(const json& j, EmbeddingClass& c) { c.representative = j.get<IntMatrix>(); }

void to_json(json& j, const SearchStats& s) {
  j = json{{"nodes", num(s.nodes)},
           {"steps", num(s.steps)},
           {"leaves", num(s.leaves)},
           {"noncanonical_leaves", num(s.noncanonical_leaves)},
           {"complete", s.complete}};
  if (s.elapsed.count() != 0) j["elapsed_us"] = num(s.elapsed.count());
}

void from_json(const json& j, SearchStats& s) {
  s.nodes = read_num<std::uint64_t>(j.at("nodes"));
  s.steps = read_num<std::uint64_t>(j.at("steps"));
  s.leaves = read_num<std::uint64_t>(j.at("leaves"));
  s.noncanonical_leaves = read_num<std::uint64_t>(j.at("noncanonical_leaves"));
  s.complete = j.at("complete").get<bool>();
  s.elapsed = std::chrono::microseconds(
      j.contains("elapsed_us") ? read_num<std::int64_t>(j.at("elapsed_us")) : 0);
}

void to_json(json& j, const EnumerationResult& r) {
  j = json{{"classes", r.classes}, {"stats", r.stats}};
}

void from_json(const json& j, EnumerationResult& r) {
  r.classes = j.at("classes").get<std::vector<EmbeddingClass>>();
  r.stats = j.at("stats").get<SearchStats>();
}

void to_json(json& j, const UnitPairing& p) {
  j = json{{"pairs_first", p.pairs_first}, {"pairs_second", p.pairs_second}, {"pass", p.pass()}};
}

void from_json(const json& j, UnitPairing& p) {
  p.pairs_first = j.at("pairs_first").get<std::vector<bool>>();
  p.pairs_second = j.at("pairs_second").get<std::vector<bool>>();
}

void to_json(json& j, const ClassSummary& c) {
  j = json{{"embedding", c.embedding},
           {"support", num(c.support)},
           {"complement_rank", num(c.complement_rank)},
           {"complement_norm", c.complement_norm ? num(*c.complement_norm) : json(nullptr)},
           {"complement_generator", opt_ints(c.complement_generator)},
           {"complement_has_unit_vector", c.complement_has_unit_vector}};
}

void from_json(const json& j, ClassSummary& c) {
  c.embedding = j.at("embedding").get<EmbeddingClass>();
  c.support = read_num<std::size_t>(j.at("support"));
  c.complement_rank = read_num<std::size_t>(j.at("complement_rank"));
  const json& norm = j.at("complement_norm");
  c.complement_norm = norm.is_null() ? std::nullopt
                                     : std::optional<std::int64_t>(read_num<std::int64_t>(norm));
  c.complement_generator = read_opt_ints(j.at("complement_generator"));
  c.complement_has_unit_vector = j.at("complement_has_unit_vector").get<bool>();
}

void to_json(json& j, const Survey& s) {
  j = json{{"ambient", num(s.ambient)}, {"classes", s.classes}, {"stats", s.stats}};
}

void from_json(const json& j, Survey& s) {
  s.ambient = read_num<std::size_t>(j.at("ambient"));
  s.classes = j.at("classes").get<std::vector<ClassSummary>>();
  s.stats = j.at("stats").get<SearchStats>();
}

void to_json(json& j, const Stabilization& s) {
  json ambients = json::array();
  json counts = json::array();
  for (std::size_t a : s.ambients) ambients.push_back(num(a));
  for (std::size_t c : s.counts) counts.push_back(num(c));
  j = json{{"ambients", ambients}, {"counts", counts}, {"stable", s.stable}};
}

void from_json(const json& j, Stabilization& s) {
  s.ambients.clear();
  s.counts.clear();
  for (const json& a : j.at("ambients")) s.ambients.push_back(read_num<std::size_t>(a));
  for (const json& c : j.at("counts")) s.counts.push_back(read_num<std::size_t>(c));
  s.stable = j.at("stable").get<bool>();
}

}  // namespace lattice

namespace obstruction {

void to_json(json& j, const LensParams& l) { j = json{{"p", l.p}, {"q", l.q}}; }

void from_json(const json& j, LensParams& l) {
  l.p = j.at("p").get<BigInt>();
  l.q = j.at("q").get<BigInt>();
}

void to_json(json& j, const ObstructionProblem& p) {
  j = json{{"balls", p.balls},
           {"m_norm", p.m_norm},
           {"plumbings", p.plumbings},
           {"components", p.components},
           {"ambient", num(p.ambient)}};
}

void from_json(const json& j, ObstructionProblem& p) {
  p.balls = j.at("balls").get<std::vector<BallSpec>>();
  p.m_norm = j.at("m_norm").get<BigInt>();
  p.plumbings = j.at("plumbings").get<std::vector<contfrac::HJExpansion>>();
  p.components = j.at("components").get<std::vector<lattice::GramLattice>>();
  p.ambient = read_num<std::size_t>(j.at("ambient"));
}

void to_json(json& j, const Verdict& v) { j = std::string(verdict_name(v)); }

void from_json(const json& j, Verdict& v) { v = verdict_from_name(j.get<std::string>()); }

void to_json(json& j, const Witness& w) {
  j = json{{"embedding", w.embedding}, {"generator", ints(w.generator)}};
}

void from_json(const json& j, Witness& w) {
  w.embedding = j.at("embedding").get<IntMatrix>();
  w.generator = read_ints(j.at("generator"));
}

void to_json(json& j, const ObstructionReport& r) {
  j = json{{"problem", r.problem},
           {"verdict", r.verdict},
           {"limit", r.limit},
           {"witnesses", r.witnesses},
           {"stats", r.stats}};
}

void from_json(const json& j, ObstructionReport& r) {
  r.problem = j.at("problem").get<ObstructionProblem>();
  r.verdict = j.at("verdict").get<Verdict>();
  r.limit = j.at("limit").get<std::string>();
  r.witnesses = j.at("witnesses").get<std::vector<Witness>>();
  r.stats = j.at("stats").get<lattice::SearchStats>();
}

void to_json(json& j, const LemmaReport& r) {
  json supports = json::array();
  for (std::size_t s : r.expected_supports) supports.push_back(num(s));
  j = json{{"n", num(r.n)},
           {"ambient", num(r.ambient)},
           {"weights", ints(r.weights)},
           {"survey", r.survey},
           {"expected_supports", supports},
           {"expected_norm", r.expected_norm},
           {"consistent", r.consistent}};
}

void from_json(const json& j, LemmaReport& r) {
  r.n = read_num<long>(j.at("n"));
  r.ambient = read_num<std::size_t>(j.at("ambient"));
  r.weights = read_ints(j.at("weights"));
  r.survey = j.at("survey").get<lattice::Survey>();
  r.expected_supports.clear();
  for (const json& s : j.at("expected_supports"))
    r.expected_supports.push_back(read_num<std::size_t>(s));
  r.expected_norm = j.at("expected_norm").get<BigInt>();
  r.consistent = j.at("consistent").get<bool>();
}

void to_json(json& j, const ExampleB31Report& r) {
  j = json{{"direct_classes", r.direct_classes},
           {"reference", r.reference},
           {"matches_reference", r.matches_reference},
           {"pairing", r.pairing},
           {"obstruction", r.obstruction}};
}

void from_json(const json& j, ExampleB31Report& r) {
  r.direct_classes = j.at("direct_classes").get<std::vector<lattice::EmbeddingClass>>();
  r.reference = j.at("reference").get<IntMatrix>();
  r.matches_reference = j.at("matches_reference").get<bool>();
  r.pairing = j.at("pairing").get<lattice::UnitPairing>();
  r.obstruction = j.at("obstruction").get<ObstructionReport>();
}

}  // namespace obstruction

}  // namespace ratball
