#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/hypersurface.hpp"
#include "cremona/ideal.hpp"
#include "support.hpp"

using namespace cremona;
using testing::P;
using testing::Ps;
using testing::Q;

namespace {

const char* kE6 = "w*x^2+x*z^2+y^3";
const char* kA1A5 = "w*x*z+y^2*z+x^3-x^2*z";
const char* kWXYZ = "w,x,y,z";

long ipow(long b, int e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

// h(A x) for a random invertible A: fixes the origin.
QPoly random_linear_change(Rng& rng, const QPoly& h) {
  const int n = h.nvars();
  Matrix a = testing::random_invertible(rng, n, 3);
  std::vector<QPoly> images;
  for (int i = 0; i < n; ++i) {
    QPoly row(n, Domain{});
    for (int j = 0; j < n; ++j) row += QPoly::variable(n, Domain{}, j).scaled(a(i, j));
    images.push_back(row);
  }
  QPoly out(n, Domain{});
  for (const auto& t : h.terms()) {
    QPoly m = QPoly::constant(n, Domain{}, t.coef);
    for (int i = 0; i < n; ++i) m *= images[i].pow(t.mono[i]);
    out += m;
  }
  return out;
}

// Product of (1/w_i - 1) for weights w_i.
Rational weight_formula(const std::vector<Rational>& w) {
  Rational r = 1;
  for (const auto& x : w) r *= (1 / x - 1);
  return r;
}

}  // namespace

TEST_CASE("jacobian ideal") {
  CHECK(jacobian_ideal(P("x*y*z")).same_as(QIdeal(Ps({"y*z", "x*z", "x*y"}))));
  CHECK(jacobian_ideal(P("x^3+y^3+z^3")).same_as(QIdeal(Ps({"3*x^2", "3*y^2", "3*z^2"}))));
  CHECK(jacobian_ideal(P("x^4")).same_as(QIdeal(Ps({"4*x^3"}))));
}

TEST_CASE("isolated singularities") {
  CHECK(has_isolated_singularities(P("x^3+y^3+z^3")));
  CHECK(has_isolated_singularities(P("x*y*z")));
  CHECK(!has_isolated_singularities(P("x^2*y")));
  CHECK(projective_dim(jacobian_ideal(P("x^2*y"))) == 1);
}

TEST_CASE("generic frame: identity for Fermat") {
  AffineModel m = generic_frame(P("x^3+y^3+z^3"), 1, {}, true);
  CHECK(m.frame == Matrix::identity(3));
  CHECK(m.h == P("1+y^3+z^3", "y,z"));
}

TEST_CASE("generic frame: certificates for xyz") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    AffineModel m = generic_frame(P("x*y*z"), seed);
    CHECK(m.section_smooth);
    CHECK(m.singularities_off_h0);
    CHECK(m.g == substitute_linear(m.f, m.frame));
    // W = g(0, y, z) is a binary cubic with three distinct roots.
    QPoly w = restrict_to_coordinate_hyperplane(m.g, 0);
    CHECK(homogeneous_degree(w) == 3);
    CHECK(projective_dim(QIdeal(gradient(w))) == -1);
    // The coordinate points pulled back into the frame lie off x_0 = 0.
    Matrix inv = m.frame.inverse();
    for (int k = 0; k < 3; ++k) CHECK(inv(0, k) != 0);
  }
}

TEST_CASE("generic frame: E6 point off infinity") {
  QPoly f = P(kE6, kWXYZ);
  AffineModel m = generic_frame(f, 1);
  Matrix inv = m.frame.inverse();
  // Singular point (1:0:0:0) in new coordinates is inv * e_0.
  CHECK(inv(0, 0) != 0);
  CHECK(m.h.nvars() == 3);
}

TEST_CASE("rational singular points") {
  auto tri = rational_singular_points(P("x*y*z"));
  CHECK(tri.complete);
  REQUIRE(tri.points.size() == 3);
  std::vector<ProjectivePoint> expect = {ProjectivePoint(Q({1, 0, 0})), ProjectivePoint(Q({0, 1, 0})),
                                         ProjectivePoint(Q({0, 0, 1}))};
  for (const auto& e : expect) CHECK(std::find(tri.points.begin(), tri.points.end(), e) != tri.points.end());

  auto fermat = rational_singular_points(P("x^3+y^3+z^3"));
  CHECK(fermat.complete);
  CHECK(fermat.points.empty());

  auto conic = rational_singular_points(P("x*(x*z-y^2)"));
  CHECK(conic.complete);
  REQUIRE(conic.points.size() == 1);
  CHECK(conic.points[0] == ProjectivePoint(Q({0, 0, 1})));

  auto e6 = rational_singular_points(P(kE6, kWXYZ));
  CHECK(e6.complete);
  REQUIRE(e6.points.size() == 1);
  CHECK(e6.points[0] == ProjectivePoint(Q({1, 0, 0, 0})));

  auto a1a5 = rational_singular_points(P(kA1A5, kWXYZ));
  CHECK(a1a5.complete);
  CHECK(a1a5.points.size() == 2);

  CHECK_THROWS_AS(rational_singular_points(P("x^2*y")), Error);
}

TEST_CASE("irrational singular points leave the enumeration incomplete") {
  // Two lines x = +-sqrt(2) y meeting z = 0 at irrational points.
  auto r = rational_singular_points(P("(x^2-2*y^2)*z"));
  // (0:0:1) is rational, the two points z = x^2-2y^2 = 0 are not.
  CHECK(!r.complete);
  CHECK(r.points.size() == 1);
  CHECK(r.scheme_degree == 3);
}

TEST_CASE("local Milnor numbers") {
  CHECK(local_milnor_number(P("x^2+y^2", "x,y"), Q({0, 0})) == 1);
  CHECK(local_milnor_number(P("x^2+y^4", "x,y"), Q({0, 0})) == 3);
  CHECK(local_milnor_number(P("x^3+y^4+z^2"), Q({0, 0, 0})) == 6);
  // A point away from the origin, with other critical points present.
  QPoly h = P("(x-1)^2+(y-2)^3+(x-1)^3*(y+5)", "x,y");
  CHECK(local_milnor_number(h, Q({1, 2})) == 2);
  try {
    local_milnor_number(P("x^2+y", "x,y"), Q({0, 0}));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACriticalPoint);
  }
  try {
    local_milnor_number(P("x^2", "x,y"), Q({0, 0}));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsolated);
  }
}

TEST_CASE("local Milnor number is invariant under coordinate changes fixing the point") {
  Rng rng(17);
  for (const auto& [text, vars, mu] : std::vector<std::tuple<const char*, const char*, long>>{
           {"x^2+y^4", "x,y", 3}, {"x^3+y^4+z^2", "x,y,z", 6}, {"x^2*y+y^4+z^2", "x,y,z", 5},
           {"x^3+y^3+x*y*z+z^5", "x,y,z", 0}}) {
    QPoly h = P(text, vars);
    std::vector<Rational> origin(h.nvars(), Rational(0));
    long base = local_milnor_number(h, origin);
    if (mu) CHECK(base == mu);
    for (int k = 0; k < 5; ++k) CHECK(local_milnor_number(random_linear_change(rng, h), origin) == base);
  }
}

TEST_CASE("Milnor numbers of weighted homogeneous normal forms match the weight formula") {
  struct Case {
    const char* h;
    const char* vars;
    std::vector<Rational> weights;
  };
  std::vector<Case> cases = {
      {"x^2+y^2", "x,y", {Rational(1, 2), Rational(1, 2)}},
      {"x^4+y^2", "x,y", {Rational(1, 4), Rational(1, 2)}},
      {"x^3+y^2", "x,y", {Rational(1, 3), Rational(1, 2)}},
      {"x^3+y^3", "x,y", {Rational(1, 3), Rational(1, 3)}},
      {"x^2*y+y^3", "x,y", {Rational(1, 3), Rational(1, 3)}},
      {"x^3+y^4", "x,y", {Rational(1, 3), Rational(1, 4)}},
      {"x^3+y^5", "x,y", {Rational(1, 3), Rational(1, 5)}},
      {"x^2+y^2+z^6", "x,y,z", {Rational(1, 2), Rational(1, 2), Rational(1, 6)}},
      {"x^3+y^4+z^2", "x,y,z", {Rational(1, 3), Rational(1, 4), Rational(1, 2)}},
      {"x^2+y^3+z^4", "x,y,z", {Rational(1, 2), Rational(1, 3), Rational(1, 4)}},
  };
  for (const auto& c : cases) {
    QPoly h = P(c.h, c.vars);
    std::vector<Rational> origin(h.nvars(), Rational(0));
    CHECK_MESSAGE(Rational(local_milnor_number(h, origin)) == weight_formula(c.weights), c.h);
  }
}

TEST_CASE("Milnor numbers at projective points") {
  CHECK(milnor_number_at(P(kE6, kWXYZ), ProjectivePoint(Q({1, 0, 0, 0}))) == 6);
  CHECK(milnor_number_at(P(kA1A5, kWXYZ), ProjectivePoint(Q({1, 0, 0, 0}))) == 5);
  CHECK(milnor_number_at(P(kA1A5, kWXYZ), ProjectivePoint(Q({0, 0, 0, 1}))) == 1);
  CHECK(milnor_number_at(P("x*(x*z-y^2)"), ProjectivePoint(Q({0, 0, 1}))) == 3);
}

TEST_CASE("tame split examples") {
  AffineModel fermat = generic_frame(P("x^3+y^3+z^3"), 1, {}, true);
  TameSplit s = tame_split(fermat);
  CHECK(s.total == 4);
  CHECK(s.mu_on == 0);
  CHECK(s.mu_off == 4);
  // The four critical points of 1 + y^3 + z^3 are off the zero fiber.
  CHECK(fermat.h.evaluate(Q({0, 0})) != 0);

  TameSplit t = tame_split(generic_frame(P("x*y*z"), 1));
  CHECK(t.total == 4);
  CHECK(t.mu_on == 3);
  CHECK(t.mu_off == 1);

  TameSplit e = tame_split(generic_frame(P(kE6, kWXYZ), 1));
  CHECK(e.total == 8);
  CHECK(e.mu_on == 6);
  CHECK(e.mu_off == 2);
}

TEST_CASE("a non-generic frame is rejected") {
  // x = 0 is a component of V(x*y*z): the identity frame is not tame.
  AffineModel bad;
  bad.f = P("x*y*z");
  bad.frame = Matrix::identity(3);
  bad.g = bad.f;
  bad.h = dehomogenize(bad.f, 0);
  try {
    tame_split(bad);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTame);
  }
}

TEST_CASE("tame totals and mu_on across frames") {
  struct Entry {
    const char* f;
    const char* vars;
    long mu;
  };
  std::vector<Entry> entries = {{"x*y*z", "x,y,z", 3},
                                {"x*(x*z-y^2)", "x,y,z", 3},
                                {"x^3+y^3+z^3", "x,y,z", 0},
                                {"y^2*z^2-x^2*z^2+x^4+y^4", "x,y,z", 1},
                                {"y^2*z-x^3", "x,y,z", 2},
                                {kE6, kWXYZ, 6},
                                {kA1A5, kWXYZ, 6}};
  for (const auto& e : entries) {
    QPoly f = P(e.f, e.vars);
    const int d = homogeneous_degree(f);
    const int n = f.nvars() - 1;
    for (std::uint64_t seed : {1u, 5u, 9u}) {
      AffineModel m = generic_frame(f, seed);
      TameSplit s = tame_split(m);
      CHECK(s.total == ipow(d - 1, n));
      CHECK(s.mu_on >= 0);
      CHECK(s.mu_off >= 0);
      CHECK_MESSAGE(s.mu_on == e.mu, e.f);
    }
  }
}

TEST_CASE("total Milnor number of V") {
  CHECK(total_mu_on_V(P("x^3+y^3+z^3"), 1).mu == 0);
  MuOnV tri = total_mu_on_V(P("x*y*z"), 1);
  CHECK(tri.mu == 3);
  REQUIRE(tri.enumerated_sum.has_value());
  CHECK(*tri.enumerated_sum == 3);
  MuOnV a1a5 = total_mu_on_V(P(kA1A5, kWXYZ), 1);
  CHECK(a1a5.mu == 6);
  CHECK(a1a5.enumerated_sum == 6);
}

TEST_CASE("singularity records") {
  SingularityRecord a3{ProjectivePoint(Q({0, 0, 1})), 3, "A3", std::nullopt, std::vector<long>{4, 2}, {}, {}};
  a3.resolve_charpoly();
  REQUIRE(a3.charpoly.has_value());
  CHECK(divisor_degree(*a3.charpoly) == 3);
  CHECK(a3.mu0 == 1);

  SingularityRecord node{ProjectivePoint(Q({1, 0, 0})), 1, "", {}, {}, {}, {}};
  node.resolve_charpoly();
  CHECK(node.label == "A1");
  CHECK(node.mu0 == 1);

  SingularityRecord wrong{ProjectivePoint(Q({1, 0, 0})), 2, "", {}, std::vector<long>{4, 2}, {}, {}};
  CHECK_THROWS_AS(wrong.resolve_charpoly(), Error);
}
