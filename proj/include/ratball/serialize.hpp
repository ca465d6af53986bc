#pragma once

// JSON form of every report. Integers are written as decimal strings so that
// arbitrary-precision values survive any consumer; booleans and names stay
// native. Object keys are emitted sorted, so equal reports give identical
// text.

#include "ratball/bigint.hpp"
#include "ratball/contfrac.hpp"
#include "ratball/int_matrix.hpp"
#include "ratball/lattice.hpp"
#include "ratball/markov.hpp"
#include "ratball/obstruction.hpp"
#include "ratball/plumbing.hpp"

#include <json.hpp>

#include <string>

namespace nlohmann {

template <>
struct adl_serializer<ratball::BigInt> {
  static void to_json(json& j, const ratball::BigInt& v);
  static void from_json(const json& j, ratball::BigInt& v);
};

template <>
struct adl_serializer<ratball::contfrac::HJExpansion> {
  static void to_json(json& j, const ratball::contfrac::HJExpansion& e);
  static ratball::contfrac::HJExpansion from_json(const json& j);
};

template <>
struct adl_serializer<ratball::lattice::GramLattice> {
  static void to_json(json& j, const ratball::lattice::GramLattice& l);
  static ratball::lattice::GramLattice from_json(const json& j);
};

}  // namespace nlohmann

namespace ratball {

using json = nlohmann::json;

void to_json(json& j, const IntMatrix& m);
void from_json(const json& j, IntMatrix& m);

/// 2-space indented text with a trailing newline.
std::string emit(const json& doc);
/// Throws usage_error on malformed input.
json parse_document(const std::string& text);

namespace markov {
void to_json(json& j, const MarkovTriple& t);
void from_json(const json& j, MarkovTriple& t);
void to_json(json& j, const BallSpec& b);
void from_json(const json& j, BallSpec& b);
void to_json(json& j, const SymplecticVerdict& v);
void from_json(const json& j, SymplecticVerdict& v);
void to_json(json& j, const FibonacciBallRow& r);
void from_json(const json& j, FibonacciBallRow& r);
}  // namespace markov

namespace contfrac {
void to_json(json& j, const Fraction& f);
void from_json(const json& j, Fraction& f);
}  // namespace contfrac

namespace plumbing {
void to_json(json& j, const PlumbingChain& c);
void from_json(const json& j, PlumbingChain& c);
void to_json(json& j, const Reduction& r);
void from_json(const json& j, Reduction& r);
void to_json(json& j, const SimpleEmbeddingCertificate& c);
void from_json(const json& j, SimpleEmbeddingCertificate& c);
}  // namespace plumbing

namespace lattice {
void to_json(json& j, const EmbeddingClass& c);
void from_json(const json& j, EmbeddingClass& c);
/// elapsed_us is written only when nonzero.
void to_json(json& j, const SearchStats& s);
void from_json(const json& j, SearchStats& s);
void to_json(json& j, const EnumerationResult& r);
void from_json(const json& j, EnumerationResult& r);
void to_json(json& j, const UnitPairing& p);
void from_json(const json& j, UnitPairing& p);
void to_json(json& j, const ClassSummary& c);
void from_json(const json& j, ClassSummary& c);
void to_json(json& j, const Survey& s);
void from_json(const json& j, Survey& s);
void to_json(json& j, const Stabilization& s);
void from_json(const json& j, Stabilization& s);
}  // namespace lattice

namespace obstruction {
void to_json(json& j, const LensParams& l);
void from_json(const json& j, LensParams& l);
void to_json(json& j, const ObstructionProblem& p);
void from_json(const json& j, ObstructionProblem& p);
void to_json(json& j, const Verdict& v);
void from_json(const json& j, Verdict& v);
void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const ObstructionReport& r);
void from_json(const json& j, ObstructionReport& r);
void to_json(json& j, const LemmaReport& r);
void from_json(const json& j, LemmaReport& r);
void to_json(json& j, const ExampleB31Report& r);
void from_json(const json& j, ExampleB31Report& r);
}  // namespace obstruction

}  // namespace ratball
