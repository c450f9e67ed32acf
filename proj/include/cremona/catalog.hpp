#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/analysis.hpp"

namespace cremona {

struct CatalogEntry {
  std::string name;
  std::string polynomial;
  std::vector<std::string> vars;
  std::string description;
  std::string provenance;
  std::vector<SingularDeclaration> singularities;

  // Expected results; unset fields are not checked.
  long expected_d_f = 0;
  bool isolated = true;  // false: reduced/isolated hypotheses fail, oracle only
  std::optional<long> expected_mu_v;
  std::optional<long> expected_mu0_v;
  std::optional<std::string> expected_delta_v;
  std::optional<std::size_t> expected_points;
  std::optional<ConjectureStatus> expected_status;
  std::optional<bool> expected_prop_p1_equality;
  std::vector<long> expected_t4_equality;  // orders k with mult_V = mult_0 - 1
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

struct CatalogCheck {
  std::string name;
  bool pass = false;
  std::vector<std::string> mismatches;
  std::optional<AnalysisReport> report;
  double seconds = 0;
};

// Runs the analyzer on the entry and diffs every expected field.
CatalogCheck run_entry(const CatalogEntry& entry, AnalysisOptions opts);

}  // namespace cremona
