#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/polar.hpp"

namespace cremona {

// User- or catalog-supplied structure of one singular point.
struct SingularDeclaration {
  std::vector<Rational> point;
  std::string label;
  std::optional<std::vector<Rational>> weights;
  std::optional<std::vector<long>> bp_exponents;
  std::optional<CycDivisor> charpoly;
};

// Reads the singular-data document: a list of
// {point: [..], weights?: [..], bp_exponents?: [..], charpoly?: {"m": e}, label?}.
// Rationals are strings such as "1/3". Throws InvalidArgument.
std::vector<SingularDeclaration> parse_singular_data(const nlohmann::json& doc);

struct AnalysisOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  ModularMode modp = ModularMode::Off;
  GroebnerLimits limits{};
  bool timings = false;
  // Reject inputs outside the reduced / isolated hypotheses; otherwise only
  // the fiber oracle runs for them.
  bool strict = true;
  std::vector<SingularDeclaration> declarations;
};

struct AnalysisReport {
  std::string input;
  std::vector<std::string> vars;
  HypothesisRecord hypotheses;
  std::uint64_t frame_seed = 0;
  bool enumeration_complete = false;
  std::vector<SingularityRecord> singular_points;
  std::optional<long> mu_v;
  std::optional<long> mu0_v;
  std::optional<CycDivisor> delta_v;
  std::optional<PolarDegreeResult> formula;
  std::optional<PolarDegreeResult> fiber_oracle;
  std::optional<PolarDegreeResult> tame;
  std::optional<long> consolidated;
  bool methods_agree = true;
  std::optional<PropP1> prop_p1;
  std::optional<Cor37> cor_37;
  std::optional<ThmT4> thm_t4;
  ConjectureStatus conjecture = ConjectureStatus::OutOfHypothesis;
  std::optional<std::map<std::string, double>> timings;
};

AnalysisReport analyze(const QPoly& f, const std::vector<std::string>& vars, const std::string& input,
                       const AnalysisOptions& opts);
AnalysisReport analyze(const std::string& text, const std::vector<std::string>& vars, const AnalysisOptions& opts);

nlohmann::json divisor_json(const CycDivisor& d);
nlohmann::json to_json(const PolarDegreeResult& r);
nlohmann::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

std::string rational_list(const std::vector<Rational>& v);

}  // namespace cremona
