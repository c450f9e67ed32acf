#include "cremona/hypersurface.hpp"

#include <functional>

#include "cremona/random.hpp"
#include "cremona/univariate.hpp"

namespace cremona {

namespace {

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool irrelevant(const std::vector<QPoly>& gens, int nvars, const GroebnerLimits& limits) {
  QIdeal ideal(nvars, Domain{}, gens, TermOrder::grevlex(), limits);
  return projective_dim(ideal) < 0;
}

// Univariate view of a polynomial in which only `var` occurs.
UPoly as_univariate(const QPoly& p, int var) {
  std::vector<Rational> c(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) c[t.mono[var]] += t.coef;
  return UPoly(std::move(c));
}

// Common zeros of `gens` with rational coordinates. Variables at index
// >= free are already fixed (recorded in `point`) and no longer occur.
void solve_triangular(const std::vector<QPoly>& gens, int free, std::vector<Rational>& point,
                      const GroebnerLimits& limits, std::vector<std::vector<Rational>>& out) {
  std::vector<QPoly> live;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return;
    live.push_back(g);
  }
  if (free == 0 || live.empty()) {
    if (free > 0) throw Error(ErrorKind::NotIsolated, "singular locus is not a finite set of points");
    out.push_back(point);
    return;
  }
  const int n = live.front().nvars();
  QIdeal ideal(n, Domain{}, live, TermOrder::lex(), limits);
  if (ideal.is_unit()) return;
  const int var = free - 1;
  const QPoly* eliminant = nullptr;
  for (const auto& g : ideal.basis())
    if (g.support() == (1u << var)) {
      eliminant = &g;
      break;
    }
  if (!eliminant) throw Error(ErrorKind::NotIsolated, "singular locus is not a finite set of points");
  for (const auto& r : rational_roots(as_univariate(*eliminant, var))) {
    std::vector<QPoly> next;
    for (const auto& g : ideal.basis()) next.push_back(substitute_value(g, var, r));
    point[var] = r;
    solve_triangular(next, free - 1, point, limits, out);
  }
  point[var] = 0;
}

}  // namespace

QIdeal jacobian_ideal(const QPoly& f, const GroebnerLimits& limits) {
  return QIdeal(f.nvars(), f.domain(), gradient(f), TermOrder::grevlex(), limits);
}

bool has_isolated_singularities(const QPoly& f, const GroebnerLimits& limits) {
  homogeneous_degree(f);
  return projective_dim(jacobian_ideal(f, limits)) <= 0;
}

AffineModel generic_frame(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits, bool try_identity) {
  const int d = homogeneous_degree(f);
  const int n1 = f.nvars();
  if (n1 < 2) throw Error(ErrorKind::InvalidArgument, "a frame needs at least two variables");
  if (d < 2) throw Error(ErrorKind::Hypothesis, "polynomial must have degree at least 2");
  Rng rng(seed);
  for (int draw = 0; draw < kFrameDraws; ++draw) {
    Matrix m = Matrix::identity(n1);
    if (!(try_identity && draw == 0))
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-5, 5)));
    if (sgn(m.determinant()) == 0) continue;
    QPoly g = substitute_linear(f, m);
    QPoly section = restrict_to_coordinate_hyperplane(g, 0);
    if (!irrelevant(gradient(section), n1 - 1, limits)) continue;
    std::vector<QPoly> at_infinity = gradient(g);
    at_infinity.push_back(QPoly::variable(n1, g.domain(), 0));
    if (!irrelevant(at_infinity, n1, limits)) continue;
    AffineModel model{f, m, g, dehomogenize(g, 0), seed, draw + 1, true, true};
    return model;
  }
  throw Error(ErrorKind::TransversalityNotFound,
              "no transversal frame among " + std::to_string(kFrameDraws) + " draws (seed " + std::to_string(seed) +
                  ")");
}

long local_multiplicity(const std::vector<QPoly>& gens, std::span<const Rational> a, const GroebnerLimits& limits) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "no generators");
  const int n = gens.front().nvars();
  std::vector<QPoly> moved;
  for (const auto& g : gens) {
    QPoly t = translate(g, a);
    if (!t.is_zero() && t.terms().back().mono.is_one())
      throw Error(ErrorKind::InvalidArgument, "point is not a common zero of the generators");
    moved.push_back(std::move(t));
  }
  QIdeal ideal(n, Domain{}, moved, TermOrder::grevlex(), limits);
  if (ideal.is_zero()) throw Error(ErrorKind::NotIsolated, "the ideal is zero");
  std::vector<QPoly> coords;
  for (int i = 0; i < n; ++i) coords.push_back(QPoly::variable(n, Domain{}, i));
  QIdeal maximal(n, Domain{}, coords, TermOrder::grevlex(), limits);
  // Q collects the components away from the origin; saturating by one of
  // its elements that is a unit at the origin leaves the local component.
  QIdeal away = saturate_ideal(ideal, maximal);
  QIdeal local = ideal;
  if (!away.is_unit()) {
    const QPoly* unit_at_origin = nullptr;
    for (const auto& g : away.basis())
      if (g.terms().back().mono.is_one()) {
        unit_at_origin = &g;
        break;
      }
    if (!unit_at_origin) throw Error(ErrorKind::NotIsolated, "point is not an isolated zero");
    local = saturate(ideal, *unit_at_origin).ideal;
  }
  try {
    return quotient_vs_dim(local);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotZeroDimensional) throw Error(ErrorKind::NotIsolated, "point is not an isolated zero");
    throw;
  }
}

long local_milnor_number(const QPoly& h, std::span<const Rational> a, const GroebnerLimits& limits) {
  if (static_cast<int>(a.size()) != h.nvars()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  std::vector<QPoly> grad = gradient(h);
  for (const auto& g : grad)
    if (sgn(g.evaluate(a)) != 0) throw Error(ErrorKind::NotACriticalPoint, "gradient does not vanish at the point");
  return local_multiplicity(grad, a, limits);
}

long milnor_number_at(const QPoly& f, const ProjectivePoint& a, const GroebnerLimits& limits) {
  if (a.size() != f.nvars()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  const int c = a.chart();
  std::vector<Rational> affine;
  for (int i = 0; i < a.size(); ++i)
    if (i != c) affine.push_back(a.coords()[i]);
  return local_milnor_number(dehomogenize(f, c), affine, limits);
}

SingularPoints rational_singular_points(const QPoly& f, const GroebnerLimits& limits) {
  homogeneous_degree(f);
  const int n1 = f.nvars();
  QIdeal jac = jacobian_ideal(f, limits);
  const int pd = projective_dim(jac);
  if (pd > 0) throw Error(ErrorKind::NotIsolated, "singular locus has dimension " + std::to_string(pd));
  SingularPoints out;
  if (pd < 0) {
    out.complete = true;
    return out;
  }
  out.scheme_degree = zero_dim_degree_projective(jac);
  const std::vector<QPoly> grad = gradient(f);
  for (int chart = n1 - 1; chart >= 0; --chart) {
    std::vector<QPoly> gens;
    for (const auto& g : grad) {
      QPoly s = substitute_value(g, chart, Rational(1));
      for (int j = chart + 1; j < n1; ++j) s = substitute_value(s, j, Rational(0));
      gens.push_back(std::move(s));
    }
    std::vector<Rational> point(n1, Rational(0));
    point[chart] = 1;
    std::vector<std::vector<Rational>> found;
    solve_triangular(gens, chart, point, limits, found);
    for (auto& p : found) {
      ProjectivePoint pp(p);
      std::vector<QPoly> local_gens;
      for (const auto& g : grad) local_gens.push_back(dehomogenize(g, chart));
      std::vector<Rational> affine;
      for (int i = 0; i < n1; ++i)
        if (i != chart) affine.push_back(pp.coords()[i]);
      out.found_multiplicity += local_multiplicity(local_gens, affine, limits);
      out.points.push_back(std::move(pp));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.complete = out.found_multiplicity == out.scheme_degree;
  return out;
}

TameSplit tame_split(const AffineModel& model, const GroebnerLimits& limits) {
  const int d = homogeneous_degree(model.f);
  const QPoly& h = model.h;
  const int n = h.nvars();
  QIdeal jh(n, h.domain(), gradient(h), TermOrder::grevlex(), limits);
  TameSplit out;
  try {
    out.total = quotient_vs_dim(jh);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    throw Error(ErrorKind::NotTame, "affine critical locus is not finite");
  }
  if (out.total != ipow(d - 1, n))
    throw Error(ErrorKind::NotTame, "total critical multiplicity " + std::to_string(out.total) + " differs from (d-1)^n = " +
                                        std::to_string(ipow(d - 1, n)));
  out.mu_off = quotient_vs_dim(saturate(jh, h).ideal);
  out.mu_on = out.total - out.mu_off;
  return out;
}

MuOnV total_mu_on_V(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits) {
  MuOnV out{0, {}, generic_frame(f, seed, limits), std::nullopt};
  out.split = tame_split(out.model, limits);
  out.mu = out.split.mu_on;
  SingularPoints pts = rational_singular_points(f, limits);
  if (pts.complete) {
    long sum = 0;
    for (const auto& p : pts.points) sum += milnor_number_at(f, p, limits);
    out.enumerated_sum = sum;
    if (sum != out.mu)
      throw Error(ErrorKind::InconsistentMu, "global Milnor number " + std::to_string(out.mu) +
                                                 " disagrees with the pointwise sum " + std::to_string(sum));
  }
  return out;
}

void SingularityRecord::resolve_charpoly() {
  const long affine_dim = point.size() - 1;
  if (bp_exponents) {
    charpoly = bp_charpoly(*bp_exponents);
  } else if (weights) {
    charpoly = wh_charpoly(*weights);
  } else if (!charpoly && mu == 1) {
    // A Morse point is the A1 germ in every dimension.
    charpoly = bp_charpoly(std::vector<long>(affine_dim, 2));
    if (label.empty()) label = "A1";
  }
  if (!charpoly) return;
  long deg = divisor_degree(*charpoly);
  if (deg != mu)
    throw Error(ErrorKind::InvalidArgument, "declared structure at " + point.to_string() + " has Milnor number " +
                                                std::to_string(deg) + " but the computed value is " + std::to_string(mu));
  mu0 = mu0_from_charpoly(*charpoly);
}

}  // namespace cremona
