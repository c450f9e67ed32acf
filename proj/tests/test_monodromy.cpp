#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "cremona/ideal.hpp"
#include "cremona/monodromy.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cremona;
using testing::P;
using testing::brute_force_bp;
using testing::order_of;
using testing::phi;

namespace {

CycDivisor L(long m, long c = 1) { return CycDivisor::lambda(m, Rational(c)); }

Rational R(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::vector<long> bp(std::initializer_list<long> a) { return std::vector<long>(a); }

// Eigenvalue counts from a monomial basis x^b of the Milnor algebra of a
// weighted homogeneous germ: eigenvalue exp(2 pi i sum_i w_i (b_i + 1)).
std::map<long, long> brute_force_weighted(const QPoly& h, const std::vector<Rational>& w) {
  QIdeal j(gradient(h));
  auto st = staircase(j);
  std::map<long, long> count;
  for (const auto& m : *st.standard_monomials) {
    Rational s = 0;
    for (int i = 0; i < h.nvars(); ++i) s += w[i] * (m[i] + 1);
    ++count[order_of(s)];
  }
  return count;
}

void check_against(const CycDivisor& d, const std::map<long, long>& counts) {
  long total = 0;
  for (const auto& [k, c] : counts) {
    CHECK(c % phi(k) == 0);
    CHECK(mult_at_order(d, k) == c / phi(k));
    total += c;
  }
  CHECK(divisor_degree(d) == total);
  // Orders that never occur have multiplicity zero.
  for (long k : support_orders(d))
    if (!counts.count(k)) CHECK(mult_at_order(d, k) == 0);
}

}  // namespace

TEST_CASE("join product") {
  CHECK(divisor_mul(L(3) - L(1), L(3) - L(1)) == L(3) + L(1));
  CycDivisor d = L(4) - L(2) + L(1);
  CHECK(divisor_mul(d, L(1)) == d);
  CHECK(divisor_mul(L(3) - L(1), L(5) - L(1)) == L(15) - L(5) - L(3) + L(1));
  CHECK(L(4) * L(6) == L(12, 2));
}

TEST_CASE("Brieskorn-Pham divisors") {
  CycDivisor d33 = bp_charpoly(bp({3, 3}));
  CHECK(d33 == L(3) + L(1));
  CHECK(mult_at_order(d33, 1) == 2);
  CHECK(mult_at_order(d33, 3) == 1);
  CycDivisor d22 = bp_charpoly(bp({2, 2}));
  CHECK(d22 == L(1));
  CHECK(mult_at_order(d22, 1) == 1);
  CycDivisor e6 = bp_charpoly(bp({3, 4, 2}));
  CHECK(divisor_degree(e6) == 6);
  CHECK(mult_at_order(e6, 1) == 0);
  CHECK_THROWS_AS(bp_charpoly(bp({1, 3})), Error);
}

TEST_CASE("weighted homogeneous divisors") {
  CHECK(wh_charpoly({Rational(1, 3), Rational(1, 3)}) == bp_charpoly(bp({3, 3})));
  CycDivisor e8 = wh_charpoly({Rational(1, 3), Rational(1, 5)});
  CHECK(e8 == L(15) - L(5) - L(3) + L(1));
  CHECK(divisor_degree(e8) == 8);
  CycDivisor a3 = wh_charpoly({Rational(1, 2), Rational(1, 4)});
  CHECK(a3 == L(4) - L(2) + L(1));
  CHECK(divisor_degree(a3) == 3);
  std::vector<Integer> expanded = a3.expand();
  // (t - 1)(t^2 + 1) = t^3 - t^2 + t - 1
  CHECK(expanded == std::vector<Integer>{-1, 1, -1, 1});
  try {
    wh_charpoly({Rational(2, 5), Rational(1, 3)});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralResult);
  }
  CHECK_THROWS_AS(wh_charpoly({Rational(3, 2), Rational(1, 3)}), Error);
}

TEST_CASE("weighted divisors match the Milnor algebra eigenvalues") {
  struct Case {
    const char* h;
    const char* vars;
    std::vector<Rational> w;
  };
  std::vector<Case> cases = {
      {"x^2*y+y^3", "x,y", {Rational(1, 3), Rational(1, 3)}},            // D4
      {"x^2*y+y^4", "x,y", {Rational(3, 8), Rational(1, 4)}},            // D5
      {"x^3+x*y^3", "x,y", {Rational(1, 3), Rational(2, 9)}},            // E7
      {"x^3+y^5", "x,y", {Rational(1, 3), Rational(1, 5)}},              // E8
      {"x^3+y^4+z^2", "x,y,z", {Rational(1, 3), Rational(1, 4), Rational(1, 2)}},
      {"x^2*y+y^5+z^2", "x,y,z", {Rational(2, 5), Rational(1, 5), Rational(1, 2)}},
      {"x^4+y^6", "x,y", {Rational(1, 4), Rational(1, 6)}},
  };
  for (const auto& c : cases) {
    INFO(c.h);
    check_against(wh_charpoly(c.w), brute_force_weighted(P(c.h, c.vars), c.w));
  }
}

TEST_CASE("Fermat closed form") {
  CHECK(fermat_charpoly(3, 2) == L(3) + L(1));
  CycDivisor f33 = fermat_charpoly(3, 3);
  CHECK(f33 == L(3, 3) - L(1));
  CHECK(f33.render() == "(t^3-1)^3*(t-1)^-1");
  CHECK(mult_at_order(f33, 1) == 2);
  CHECK(mult_at_order(f33, 3) == 3);
  for (long n = 1; n <= 4; ++n) CHECK(divisor_degree(fermat_charpoly(2, n)) == 1);
}

TEST_CASE("Fermat closed form equals the Brieskorn-Pham product") {
  for (long d = 2; d <= 6; ++d)
    for (long n = 1; n <= 4; ++n) CHECK(fermat_charpoly(d, n) == bp_charpoly(std::vector<long>(n, d)));
}

TEST_CASE("multiplicities match root-of-unity enumeration") {
  int tuples = 0;
  std::function<void(std::vector<long>&, long)> rec = [&](std::vector<long>& a, long prod) {
    if (!a.empty()) {
      CycDivisor d = bp_charpoly(a);
      long expect = 1;
      for (long x : a) expect *= x - 1;
      CHECK(divisor_degree(d) == expect);
      check_against(d, brute_force_bp(a));
      ++tuples;
    }
    if (a.size() == 4) return;
    long start = a.empty() ? 2 : a.back();
    for (long x = start; prod * x <= 200; ++x) {
      a.push_back(x);
      rec(a, prod * x);
      a.pop_back();
    }
  };
  std::vector<long> a;
  rec(a, 1);
  CHECK(tuples > 100);
}

TEST_CASE("products, multiplicities and mu0") {
  CycDivisor node = bp_charpoly(bp({2, 2}));
  CycDivisor tri = charpoly_product({node, node, node});
  CHECK(tri == L(1, 3));
  CHECK(mult_at_order(tri, 1) == 3);
  CHECK(mu0_from_charpoly(tri) == 3);
  CHECK(charpoly_product({}).empty());
  CHECK(charpoly_product({}).render() == "1");
  CycDivisor a3 = L(4) - L(2) + L(1);
  CHECK(charpoly_product({a3}) == a3);
  CHECK(mu0_from_charpoly(a3) == 1);
  CHECK(mult_at_order(L(3) + L(1), 1) == 2);
  CHECK(mult_at_order(L(3) + L(1), 3) == 1);
  CHECK(mult_at_order(L(3) + L(1), 5) == 0);
  CHECK(mu0_from_charpoly(bp_charpoly(bp({3, 4, 2}))) == 0);
}

TEST_CASE("ADE surface germs have no eigenvalue one") {
  // A_k: x^{k+1} + y^2 + z^2, D_k: x^2 y + y^{k-1} + z^2, E6, E7, E8.
  for (long k = 1; k <= 12; ++k) CHECK(mu0_from_charpoly(bp_charpoly({k + 1, 2, 2})) == 0);
  for (long k = 4; k <= 10; ++k)
    CHECK(mu0_from_charpoly(wh_charpoly({R(k - 2, 2 * (k - 1)), R(1, k - 1), R(1, 2)})) == 0);
  CHECK(mu0_from_charpoly(bp_charpoly({3, 4, 2})) == 0);
  CHECK(mu0_from_charpoly(wh_charpoly({Rational(1, 3), Rational(2, 9), Rational(1, 2)})) == 0);
  CHECK(mu0_from_charpoly(bp_charpoly({3, 5, 2})) == 0);
  CHECK(mu0_from_charpoly(bp_charpoly({2, 2})) == 1);
}

TEST_CASE("primitive Betti numbers") {
  CHECK(primitive_betti(3, 1) == 2);
  for (long d = 2; d <= 8; ++d) CHECK(primitive_betti(d, 0) == d - 1);
  CHECK(primitive_betti(3, 2) == 6);
  for (long d = 3; d <= 9; ++d) CHECK(primitive_betti(d, 1) == (d - 1) * (d - 2));
  for (long d = 2; d <= 6; ++d) {
    long pw = (d - 1) * (d - 1);
    for (long m = 1; m <= 5; ++m, pw *= d - 1) CHECK(primitive_betti(d, m) + primitive_betti(d, m - 1) == pw);
  }
}

TEST_CASE("reference multiplicities") {
  CHECK(mult0_reference(3, 3, 3) == 3);
  CHECK(mult0_reference(3, 3, 1) == 2);
  CHECK(mult0_reference(3, 2, 3) == 1);
  try {
    mult0_reference(3, 3, 2);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::KNotDividingD);
  }
  for (long d = 2; d <= 6; ++d)
    for (long n = 2; n <= 4; ++n)
      for (long k : divisors_of(d)) CHECK(mult_at_order(fermat_charpoly(d, n), k) == mult0_reference(d, n, k));
}

TEST_CASE("zero fiber divisor and degrees") {
  CHECK(t1_charpoly(CycDivisor()) == L(1));
  CHECK(t1_charpoly(L(1, 3)) == L(1, 4));
  CycDivisor e6 = bp_charpoly(bp({3, 4, 2}));
  CHECK(divisor_degree(t1_charpoly(e6)) == divisor_degree(e6) + 1);
  CHECK(divisor_degree(bp_charpoly(bp({3, 3}))) == 4);
  CHECK(divisor_degree(CycDivisor()) == 0);
}

TEST_CASE("rendering and expansion") {
  CHECK((L(3) + L(1)).render() == "(t^3-1)^1*(t-1)^1");
  CycDivisor d = bp_charpoly(bp({3, 3}));
  CHECK(d.expand() == std::vector<Integer>{1, -1, 0, -1, 1});
  // Negative exponents divide out exactly.
  // (t^3-1)^2 (t^2+t+1)
  CHECK(fermat_charpoly(3, 3).expand() == std::vector<Integer>{1, 1, 1, -2, -2, -2, 1, 1, 1});
  CHECK_THROWS_AS((L(2) - L(3)).expand(), Error);
  CHECK(divisors_of(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(support_orders(L(4) + L(6)) == std::vector<long>{1, 2, 3, 4, 6});
}
