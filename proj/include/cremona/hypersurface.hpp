#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/calculus.hpp"
#include "cremona/ideal.hpp"
#include "cremona/monodromy.hpp"

namespace cremona {

QIdeal jacobian_ideal(const QPoly& f, const GroebnerLimits& limits = {});

// Projective dimension of the singular locus is at most 0.
bool has_isolated_singularities(const QPoly& f, const GroebnerLimits& limits = {});

// Coordinates in which H_0 = {x_0 = 0} is transversal to V(f).
struct AffineModel {
  QPoly f;
  Matrix frame;          // g = f(frame * x)
  QPoly g;
  QPoly h;               // g(1, x_1, ..., x_n)
  std::uint64_t seed = 0;
  int draws = 0;         // frames drawn before one was certified
  // Both certificates hold by construction; recorded for reports.
  bool section_smooth = false;        // Jacobian of g(0, x') is irrelevant
  bool singularities_off_h0 = false;  // J(g) + (x_0) is irrelevant
};

inline constexpr int kFrameDraws = 32;

// Draws integer frames with entries in [-5, 5]. The identity is tried
// first only when `try_identity` is set. Throws TransversalityNotFound.
AffineModel generic_frame(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits = {},
                          bool try_identity = false);

struct SingularPoints {
  std::vector<ProjectivePoint> points;
  bool complete = false;
  long found_multiplicity = 0;  // sum of local lengths of the Jacobian scheme at the points
  long scheme_degree = 0;       // degree of the Jacobian scheme
};

// Throws NotIsolated when the singular locus is positive-dimensional.
// Incompleteness is reported through the flag, not thrown.
SingularPoints rational_singular_points(const QPoly& f, const GroebnerLimits& limits = {});

// Length of the local ring of K[x]/(gens) at the rational point a, via the
// component supported at a. Throws NotIsolated if that component is not
// zero-dimensional and InvalidArgument if a is not in the zero set.
long local_multiplicity(const std::vector<QPoly>& gens, std::span<const Rational> a,
                        const GroebnerLimits& limits = {});

// Milnor number of the affine polynomial h at a. Throws NotACriticalPoint.
long local_milnor_number(const QPoly& h, std::span<const Rational> a, const GroebnerLimits& limits = {});

// Milnor number of V(f) at a projective point, computed in the chart of the
// point's last nonzero coordinate.
long milnor_number_at(const QPoly& f, const ProjectivePoint& a, const GroebnerLimits& limits = {});

struct TameSplit {
  long total = 0;   // dim K[x]/J_h
  long mu_on = 0;   // critical multiplicity on h = 0
  long mu_off = 0;  // critical multiplicity off h = 0
};

// Throws NotTame unless total == (d-1)^n.
TameSplit tame_split(const AffineModel& model, const GroebnerLimits& limits = {});

struct MuOnV {
  long mu = 0;
  TameSplit split;
  AffineModel model;
  std::optional<long> enumerated_sum;  // set when the rational enumeration is complete
};

// Throws InconsistentMu if the global and pointwise routes disagree.
MuOnV total_mu_on_V(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits = {});

// One singular point with optional declared structure.
struct SingularityRecord {
  ProjectivePoint point;
  long mu = 0;
  std::string label;
  std::optional<std::vector<Rational>> weights;
  std::optional<std::vector<long>> bp_exponents;
  std::optional<CycDivisor> charpoly;
  std::optional<long> mu0;

  // Fills charpoly and mu0 from the declaration. Throws InvalidArgument if
  // the declared structure contradicts mu.
  void resolve_charpoly();
};

}  // namespace cremona
