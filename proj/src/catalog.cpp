#include "cremona/catalog.hpp"

#include <algorithm>
#include <chrono>

namespace cremona {

namespace {

const std::vector<std::string> kPlane{"x", "y", "z"};
const std::vector<std::string> kSpace{"w", "x", "y", "z"};
const std::vector<std::string> kLine{"x", "y"};

SingularDeclaration bp_at(std::vector<long> point, std::vector<long> exponents, std::string label) {
  SingularDeclaration d;
  for (long c : point) d.point.push_back(Rational(c));
  d.bp_exponents = std::move(exponents);
  d.label = std::move(label);
  return d;
}

SingularDeclaration weights_at(std::vector<long> point, std::vector<Rational> weights, std::string label) {
  SingularDeclaration d;
  for (long c : point) d.point.push_back(Rational(c));
  d.weights = std::move(weights);
  d.label = std::move(label);
  return d;
}

CatalogEntry make(std::string name, std::string poly, const std::vector<std::string>& vars, std::string description,
                  std::string provenance) {
  CatalogEntry e;
  e.name = std::move(name);
  e.polynomial = std::move(poly);
  e.vars = vars;
  e.description = std::move(description);
  e.provenance = std::move(provenance);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  {
    CatalogEntry e = make("cremona-triangle", "x*y*z", kPlane, "three lines in general position", "classical");
    e.expected_d_f = 1;
    e.expected_mu_v = 3;
    e.expected_mu0_v = 3;
    e.expected_delta_v = "(t-1)^3";
    e.expected_points = 3;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("conic-tangent", "x*(x*z-y^2)", kPlane, "smooth conic with a tangent line", "classical");
    e.singularities.push_back(bp_at({0, 0, 1}, {4, 2}, "A3"));
    e.expected_d_f = 1;
    e.expected_mu_v = 3;
    e.expected_mu0_v = 1;
    e.expected_delta_v = "(t^4-1)^1*(t^2-1)^-1*(t-1)^1";
    e.expected_points = 1;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    e.expected_t4_equality = {1};
    c.push_back(e);
  }
  {
    CatalogEntry e = make("smooth-conic", "x^2+y^2+z^2", kPlane, "smooth conic", "classical");
    e.expected_d_f = 1;
    e.expected_mu_v = 0;
    e.expected_mu0_v = 0;
    e.expected_delta_v = "1";
    e.expected_points = 0;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("smooth-quadric-surface", "w^2+x^2+y^2+z^2", kSpace, "smooth quadric surface", "classical");
    e.expected_d_f = 1;
    e.expected_mu_v = 0;
    e.expected_mu0_v = 0;
    e.expected_points = 0;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("fermat-cubic-curve", "x^3+y^3+z^3", kPlane, "smooth plane cubic", "closed form (d-1)^n");
    e.expected_d_f = 4;
    e.expected_mu_v = 0;
    e.expected_points = 0;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("fermat-cubic-surface", "w^3+x^3+y^3+z^3", kSpace, "smooth cubic surface",
                   "closed form (d-1)^n");
    e.expected_d_f = 8;
    e.expected_mu_v = 0;
    e.expected_mu0_v = 0;
    e.expected_points = 0;
    e.expected_status = ConjectureStatus::Consistent;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("e6-cubic", "w*x^2+x*z^2+y^3", kSpace, "cubic surface with one E6 point",
                   "equation chosen and verified with this toolkit: the only singular point is (1:0:0:0), where "
                   "the local equation x^2+x*z^2+y^3 is right-equivalent to x^2+y^3+z^4 and mu = 6");
    e.singularities.push_back(bp_at({1, 0, 0, 0}, {2, 3, 4}, "E6"));
    e.expected_d_f = 2;
    e.expected_mu_v = 6;
    e.expected_mu0_v = 0;
    e.expected_points = 1;
    e.expected_status = ConjectureStatus::Consistent;
    e.expected_prop_p1_equality = true;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("a1a5-cubic", "w*x*z+y^2*z+x^3-x^2*z", kSpace, "cubic surface with an A5 and an A1 point",
                   "equation chosen and verified with this toolkit: singular points (1:0:0:0) with corank-1 "
                   "quadratic part and mu = 5 (A5), and (0:0:0:1) with mu = 1 (A1)");
    e.singularities.push_back(bp_at({1, 0, 0, 0}, {6, 2, 2}, "A5"));
    e.expected_d_f = 2;
    e.expected_mu_v = 6;
    e.expected_mu0_v = 0;
    e.expected_points = 2;
    e.expected_status = ConjectureStatus::Consistent;
    e.expected_prop_p1_equality = true;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("nodal-quartic", "y^2*z^2-x^2*z^2+x^4+y^4", kPlane, "plane quartic with one node",
                   "equation chosen and verified with this toolkit: one singular point (0:0:1), mu = 1");
    e.expected_d_f = 8;
    e.expected_mu_v = 1;
    e.expected_mu0_v = 1;
    e.expected_delta_v = "(t-1)^1";
    e.expected_points = 1;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("cuspidal-cubic", "y^2*z-x^3", kPlane, "plane cubic with an ordinary cusp", "classical");
    e.singularities.push_back(bp_at({0, 0, 1}, {2, 3}, "A2"));
    e.expected_d_f = 2;
    e.expected_mu_v = 2;
    e.expected_mu0_v = 0;
    e.expected_points = 1;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("concurrent-lines", "x^3+y^3", kPlane, "three lines through one point (a cone)",
                   "classical: the gradient map is not dominant");
    e.singularities.push_back(weights_at({0, 0, 1}, {Rational(1, 3), Rational(1, 3)}, "D4"));
    e.expected_d_f = 0;
    e.expected_mu_v = 4;
    e.expected_mu0_v = 2;
    e.expected_delta_v = "(t^3-1)^1*(t-1)^1";
    e.expected_points = 1;
    e.expected_status = ConjectureStatus::OutOfHypothesis;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("two-points", "x*y", kLine, "two distinct points of the projective line", "classical");
    e.expected_d_f = 1;
    e.expected_mu_v = 0;
    e.expected_points = 0;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("two-points-skew", "(x+y)*(x-y)", kLine, "two distinct points of the projective line",
                   "classical");
    e.expected_d_f = 1;
    e.expected_mu_v = 0;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("double-point-plus-point", "x^2*y", kLine, "non-reduced: reduced form is x*y",
                   "polar degree depends only on the reduced polynomial");
    e.expected_d_f = 1;
    e.isolated = false;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("double-point-plus-point-skew", "(x+y)^2*(x-y)", kLine, "non-reduced: reduced form is (x+y)*(x-y)",
                   "polar degree depends only on the reduced polynomial");
    e.expected_d_f = 1;
    e.isolated = false;
    c.push_back(e);
  }
  {
    CatalogEntry e = make("double-line-plane", "x^2*y", kPlane, "double line plus a line in the plane",
                   "non-reduced with a singular line; the gradient map misses a coordinate");
    e.expected_d_f = 0;
    e.isolated = false;
    c.push_back(e);
  }
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

CatalogCheck run_entry(const CatalogEntry& entry, AnalysisOptions opts) {
  CatalogCheck out;
  out.name = entry.name;
  auto start = std::chrono::steady_clock::now();
  auto mismatch = [&](const std::string& field, const std::string& want, const std::string& got) {
    out.mismatches.push_back(field + ": expected " + want + ", got " + got);
  };
  auto show = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("none"); };
  try {
    opts.strict = false;
    opts.declarations = entry.singularities;
    AnalysisReport r = analyze(entry.polynomial, entry.vars, opts);
    const bool full = r.formula.has_value();
    if (full != entry.isolated)
      mismatch("hypotheses", entry.isolated ? "reduced and isolated" : "violated", full ? "satisfied" : "violated");
    std::optional<long> d_f = full ? r.consolidated : std::optional<long>(r.fiber_oracle->value);
    if (d_f != entry.expected_d_f) mismatch("d_f", std::to_string(entry.expected_d_f), show(d_f));
    if (!r.methods_agree) mismatch("methods_agree", "true", "false");
    if (r.fiber_oracle->inconsistent) mismatch("fiber_oracle.inconsistent", "false", "true");
    if (entry.expected_mu_v && r.mu_v != entry.expected_mu_v)
      mismatch("mu_V", show(entry.expected_mu_v), show(r.mu_v));
    if (entry.expected_mu0_v && r.mu0_v != entry.expected_mu0_v)
      mismatch("mu0_V", show(entry.expected_mu0_v), show(r.mu0_v));
    if (entry.expected_delta_v) {
      std::string got = r.delta_v ? r.delta_v->render() : "none";
      if (got != *entry.expected_delta_v) mismatch("delta_V", *entry.expected_delta_v, got);
    }
    if (entry.expected_points && r.singular_points.size() != *entry.expected_points)
      mismatch("singular_points", std::to_string(*entry.expected_points), std::to_string(r.singular_points.size()));
    if (full && !r.enumeration_complete) mismatch("enumeration_complete", "true", "false");
    if (entry.expected_status && r.conjecture != *entry.expected_status)
      mismatch("conjecture_status", to_string(*entry.expected_status), to_string(r.conjecture));
    if (entry.expected_prop_p1_equality) {
      bool eq = r.prop_p1 && r.prop_p1->applicable && r.prop_p1->lhs == r.prop_p1->rhs;
      if (eq != *entry.expected_prop_p1_equality)
        mismatch("prop_p1 equality", *entry.expected_prop_p1_equality ? "true" : "false", eq ? "true" : "false");
    }
    if (r.prop_p1 && r.prop_p1->applicable && !r.prop_p1->holds) mismatch("prop_p1.holds", "true", "false");
    if (r.thm_t4)
      for (const auto& row : r.thm_t4->rows) {
        if (!row.holds) mismatch("thm_t4 k=" + std::to_string(row.k), "holds", "fails");
        bool want_eq = std::find(entry.expected_t4_equality.begin(), entry.expected_t4_equality.end(), row.k) !=
                       entry.expected_t4_equality.end();
        if (want_eq && row.mult_v != row.required)
          mismatch("thm_t4 k=" + std::to_string(row.k) + " equality", std::to_string(row.required),
                   std::to_string(row.mult_v));
      }
    if (!entry.expected_t4_equality.empty() && !r.thm_t4) mismatch("thm_t4", "rows", "none");
    out.report = std::move(r);
  } catch (const Error& e) {
    out.mismatches.push_back(std::string("error ") + std::string(to_string(e.kind())) + ": " + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = out.mismatches.empty();
  return out;
}

}  // namespace cremona
