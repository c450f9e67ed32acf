#include "cremona/polar.hpp"

#include <algorithm>
#include <map>

#include "cremona/random.hpp"

namespace cremona {

std::string to_string(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::FiberOracle: return "fiber_oracle";
    case Method::TameSplit: return "tame_split";
  }
  return "?";
}

std::string to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::OutOfHypothesis: return "out_of_hypothesis";
    case ConjectureStatus::Consistent: return "consistent";
    case ConjectureStatus::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

namespace {

long ipow(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

struct FiberData {
  int exponent = 0;
  int pdim = -1;
  long degree = 0;
};

template <class K>
FiberData fiber_in(const std::vector<Polynomial<K>>& grad, const std::vector<K>& u, const GroebnerLimits& limits) {
  const int n1 = static_cast<int>(grad.size());
  const int nv = grad.front().nvars();
  const Domain dom = grad.front().domain();
  std::vector<Polynomial<K>> minors;
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) minors.push_back(grad[i].scaled(u[j]) - grad[j].scaled(u[i]));

  // On the fiber grad f = lambda u with lambda != 0, so g = c . grad f equals
  // lambda (c . u), a unit whenever c . u != 0, while g vanishes on the base
  // locus grad f = 0. Saturating by g therefore removes exactly the
  // components inside the base locus, as saturating by the whole gradient
  // ideal does.
  Polynomial<K> g(nv, dom);
  for (int i = 0; i < n1; ++i) g += grad[i].scaled(u[i]);
  if (g.is_zero()) {
    for (int i = 0; i < n1; ++i)
      if (!FieldOps<K>::is_zero(u[i]) && !grad[i].is_zero()) {
        g = grad[i];
        break;
      }
  }
  FiberData out;
  if (g.is_zero()) return out;  // grad f is never a nonzero multiple of u
  Ideal<K> fiber(nv, dom, minors, TermOrder::grevlex(), limits);
  Saturation<K> sat = saturate(fiber, g);
  out.exponent = sat.exponent;
  out.pdim = projective_dim(sat.ideal);
  if (out.pdim > 0) return out;
  out.degree = out.pdim < 0 ? 0 : zero_dim_degree_projective(sat.ideal);
  return out;
}

FiberData fiber_rational(const QPoly& f, const std::vector<Rational>& u, const GroebnerLimits& limits) {
  return fiber_in(gradient(f), u, limits);
}

FiberData fiber_modular(const QPoly& f, const std::vector<Rational>& u, std::uint32_t p, const GroebnerLimits& limits) {
  std::vector<PPoly> grad;
  for (const auto& g : gradient(f)) grad.push_back(reduce_mod(g, p));
  std::vector<ModP> up;
  for (const auto& c : u) up.push_back(reduce_mod(c, p));
  return fiber_in(grad, up, limits);
}

std::vector<Rational> draw_target(Rng& rng, int n1) {
  for (;;) {
    std::vector<Rational> u;
    bool nonzero = false;
    for (int i = 0; i < n1; ++i) {
      u.push_back(rng.rational(100));
      if (sgn(u.back()) != 0) nonzero = true;
    }
    if (nonzero) return u;
  }
}

}  // namespace

OracleTrial fiber_degree(const QPoly& f, const std::vector<Rational>& u, ModularMode modp,
                         const GroebnerLimits& limits) {
  homogeneous_degree(f);
  if (static_cast<int>(u.size()) != f.nvars()) throw Error(ErrorKind::InvalidArgument, "target has wrong dimension");
  OracleTrial t;
  t.target = u;
  FiberData data;
  bool done = false;
  if (modp == ModularMode::Dual) {
    try {
      FiberData a = fiber_modular(f, u, kPrimeA, limits);
      FiberData b = fiber_modular(f, u, kPrimeB, limits);
      if (a.pdim == b.pdim && a.degree == b.degree) {
        data = a;
        done = true;
        t.domain = Domain{kPrimeA}.name() + "+" + Domain{kPrimeB}.name();
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DomainMismatch) throw;
    }
  }
  if (!done) {
    data = fiber_rational(f, u, limits);
    t.domain = Domain{}.name();
  }
  t.saturation_exponent = data.exponent;
  t.projective_dim = data.pdim;
  t.degree = data.degree;
  if (data.pdim > 0)
    throw Error(ErrorKind::PositiveDimensionalFiber,
                "fiber over the sampled target has dimension " + std::to_string(data.pdim));
  return t;
}

PolarDegreeResult polar_degree_fiber_oracle(const QPoly& f, const OracleOptions& opts) {
  homogeneous_degree(f);
  if (opts.trials < 1) throw Error(ErrorKind::InvalidArgument, "the oracle needs at least one trial");
  const int n1 = f.nvars();
  Rng rng(opts.seed);
  PolarDegreeResult res;
  res.method = Method::FiberOracle;

  auto run_trial = [&] {
    int redraws = 0;
    for (;;) {
      std::vector<Rational> u = draw_target(rng, n1);
      try {
        OracleTrial t = fiber_degree(f, u, opts.modp, opts.limits);
        t.redraws = redraws;
        res.trials.push_back(std::move(t));
        return;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PositiveDimensionalFiber || redraws >= 1) throw;
        ++redraws;
      }
    }
  };

  for (int i = 0; i < opts.trials; ++i) run_trial();
  auto tally = [&] {
    std::map<long, int> counts;
    for (const auto& t : res.trials) ++counts[t.degree];
    return counts;
  };
  auto counts = tally();
  if (counts.size() == 1) {
    res.value = counts.begin()->first;
    return res;
  }
  // Disagreement: draw as many extra targets again and keep the smallest
  // value seen in enough trials.
  for (int i = 0; i < opts.trials; ++i) run_trial();
  counts = tally();
  const int needed = std::min(3, opts.trials);
  res.inconsistent = true;
  std::string seen;
  for (const auto& [v, c] : counts) seen += (seen.empty() ? "" : ", ") + std::to_string(v) + " x" + std::to_string(c);
  for (const auto& [v, c] : counts)
    if (c >= needed) {
      res.value = v;
      res.note = "trials disagreed (" + seen + "); reporting the smallest value seen in " + std::to_string(needed) +
                 " trials";
      return res;
    }
  res.value = counts.begin()->first;
  res.note = "trials disagreed (" + seen + "); no value reached " + std::to_string(needed) + " agreeing trials";
  return res;
}

HypothesisRecord check_hypotheses(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits) {
  HypothesisRecord h;
  h.d = homogeneous_degree(f);
  h.n = f.nvars() - 1;
  if (h.d < 1) throw Error(ErrorKind::Hypothesis, "polynomial must be non-constant");
  h.probe = squarefree_probe(f, 8, seed);
  h.reduced = h.probe.verdict == ReducedVerdict::ProbablyReduced;
  h.singular_dim = projective_dim(jacobian_ideal(f, limits));
  h.isolated = h.singular_dim <= 0;
  return h;
}

void require_reduced_isolated(const HypothesisRecord& h) {
  std::string msg;
  if (!h.isolated) msg = "singular locus has dimension " + std::to_string(h.singular_dim);
  if (!h.reduced) msg += std::string(msg.empty() ? "" : "; ") + "polynomial is not reduced (repeated factor)";
  if (!msg.empty()) throw Error(ErrorKind::Hypothesis, msg);
  if (h.d < 2) throw Error(ErrorKind::Hypothesis, "polynomial must have degree at least 2");
}

PolarDegreeResult polar_degree_formula(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits) {
  HypothesisRecord h = check_hypotheses(f, seed, limits);
  require_reduced_isolated(h);
  MuOnV mu = total_mu_on_V(f, seed, limits);
  PolarDegreeResult res;
  res.method = Method::Formula;
  res.value = ipow(h.d - 1, h.n) - mu.mu;
  res.frame_seed = seed;
  res.mu_v = mu.mu;
  if (res.value < 0) throw Error(ErrorKind::Internal, "negative polar degree from the Milnor number formula");
  return res;
}

PolarDegreeResult polar_degree_tame(const QPoly& f, std::uint64_t seed, const GroebnerLimits& limits) {
  HypothesisRecord h = check_hypotheses(f, seed, limits);
  require_reduced_isolated(h);
  AffineModel model = generic_frame(f, seed, limits);
  PolarDegreeResult res;
  res.method = Method::TameSplit;
  res.split = tame_split(model, limits);
  res.value = res.split->mu_off;
  res.frame_seed = seed;
  res.mu_v = res.split->mu_on;
  return res;
}

Consolidated consolidate(const std::vector<PolarDegreeResult>& results) {
  Consolidated c;
  std::map<long, int> counts;
  for (const auto& r : results) ++counts[r.value];
  c.all_agree = counts.size() <= 1;
  int best = 1;
  for (const auto& [v, n] : counts)
    if (n > best) {
      best = n;
      c.value = v;
    }
  return c;
}

Homaloidal is_homaloidal(const QPoly& f, const OracleOptions& opts) {
  Homaloidal out;
  out.evidence.push_back(polar_degree_fiber_oracle(f, opts));
  HypothesisRecord h = check_hypotheses(f, opts.seed, opts.limits);
  if (h.reduced && h.isolated && h.d >= 2) {
    out.evidence.push_back(polar_degree_formula(f, opts.seed, opts.limits));
    out.evidence.push_back(polar_degree_tame(f, opts.seed, opts.limits));
    Consolidated c = consolidate(out.evidence);
    out.homaloidal = c.value && *c.value == 1;
  } else {
    out.homaloidal = !out.evidence.front().inconsistent && out.evidence.front().value == 1;
  }
  return out;
}

PropP1 check_prop_p1(int d, int n, long d_f, long mu0) {
  PropP1 p;
  p.applicable = d > 2 && n >= 3;
  p.lhs = d_f;
  if (d >= 2 && n >= 2) p.rhs = primitive_betti(d, n - 2) - mu0;
  p.holds = p.lhs >= p.rhs;
  return p;
}

Cor37 check_cor_37(int d, int n, long mu0) {
  Cor37 c;
  c.applicable = n == 3 && d > 2;
  c.bound = static_cast<long>(d - 1) * (d - 2) - 1;
  c.certified = c.applicable && mu0 < c.bound;
  return c;
}

ThmT4 check_thm_t4(int d, int n, const CycDivisor& delta_v, long d_f) {
  ThmT4 t;
  t.applicable = d_f == 1 && n >= 2;
  if (!t.applicable) return t;
  for (long k : divisors_of(d)) {
    T4Row r;
    r.k = k;
    r.mult_v = mult_at_order(delta_v, k);
    r.mult_0 = mult0_reference(d, n, k);
    r.required = r.mult_0 - 1;
    r.holds = r.mult_v >= r.required;
    t.rows.push_back(r);
  }
  return t;
}

ConjectureStatus conjecture_verdict(const HypothesisRecord& h, long d_f) {
  if (h.d <= 2 || h.n <= 2 || !h.reduced || !h.isolated) return ConjectureStatus::OutOfHypothesis;
  return d_f == 1 ? ConjectureStatus::Counterexample : ConjectureStatus::Consistent;
}

}  // namespace cremona
