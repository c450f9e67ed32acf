#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/hypersurface.hpp"

namespace cremona {

enum class Method { Formula, FiberOracle, TameSplit };
std::string to_string(Method m);

enum class ModularMode { Off, Dual };

struct OracleTrial {
  std::vector<Rational> target;  // the point u
  int saturation_exponent = 0;
  int projective_dim = -1;       // of the saturated fiber ideal
  long degree = 0;
  int redraws = 0;               // positive-dimensional fibers skipped
  std::string domain;            // "QQ" or "GF(p)+GF(q)"
};

struct PolarDegreeResult {
  Method method = Method::Formula;
  long value = 0;
  std::vector<OracleTrial> trials;
  std::optional<std::uint64_t> frame_seed;
  std::optional<TameSplit> split;
  std::optional<long> mu_v;
  bool inconsistent = false;
  std::string note;
};

struct OracleOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  ModularMode modp = ModularMode::Off;
  GroebnerLimits limits{};
};

struct HypothesisRecord {
  int d = 0;
  int n = 0;
  bool reduced = false;
  bool isolated = false;
  int singular_dim = -1;
  SquarefreeProbe probe{};
};

HypothesisRecord check_hypotheses(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits = {});

// Throws Hypothesis naming the first failed condition.
void require_reduced_isolated(const HypothesisRecord& h);

PolarDegreeResult polar_degree_formula(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits = {});
PolarDegreeResult polar_degree_tame(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits = {});
PolarDegreeResult polar_degree_fiber_oracle(const QPoly& f, const OracleOptions& opts = {});

// Degree of one fiber of the gradient map over u (0 when the fiber is
// empty). Throws PositiveDimensionalFiber.
OracleTrial fiber_degree(const QPoly& f, const std::vector<Rational>& u, ModularMode modp,
                         const GroebnerLimits& limits = {});

// Value on which at least two results agree; nullopt when none do.
struct Consolidated {
  std::optional<long> value;
  bool all_agree = true;
};
Consolidated consolidate(const std::vector<PolarDegreeResult>& results);

struct Homaloidal {
  bool homaloidal = false;
  std::vector<PolarDegreeResult> evidence;
};
Homaloidal is_homaloidal(const QPoly& f, const OracleOptions& opts = {});

struct PropP1 {
  bool applicable = false;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
};
PropP1 check_prop_p1(int d, int n, long d_f, long mu0);

struct Cor37 {
  bool applicable = false;
  long bound = 0;  // (d-1)(d-2) - 1
  bool certified = false;
};
Cor37 check_cor_37(int d, int n, long mu0);

struct T4Row {
  long k = 0;
  long mult_v = 0;
  long mult_0 = 0;
  long required = 0;
  bool holds = false;
};
struct ThmT4 {
  bool applicable = false;
  std::vector<T4Row> rows;
};
ThmT4 check_thm_t4(int d, int n, const CycDivisor& delta_v, long d_f);

enum class ConjectureStatus { OutOfHypothesis, Consistent, Counterexample };
std::string to_string(ConjectureStatus s);
ConjectureStatus conjecture_verdict(const HypothesisRecord& h, long d_f);

}  // namespace cremona
