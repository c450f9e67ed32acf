#include "cremona/univariate.hpp"

#include <algorithm>

namespace cremona {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> m = c_;
  Rational l = c_.back();
  for (auto& x : m) x /= l;
  return UPoly(std::move(m));
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[k + db] / b.c_.back();
    quo[k] = q;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int v = sgn(s.evaluate(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

void isolate(const std::vector<UPoly>& sturm, const UPoly& p, const mpz_class& lo,
             const mpz_class& hi, std::vector<mpz_class>& out) {
  Rational a(lo), b(hi);
  a -= Rational(1, 2);
  b += Rational(1, 2);
  if (sign_changes(sturm, a) - sign_changes(sturm, b) == 0) return;
  if (lo == hi) {
    if (sgn(p.evaluate(Rational(lo))) == 0) out.push_back(lo);
    return;
  }
  mpz_class mid;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(lo + hi).get_mpz_t(), 1);
  isolate(sturm, p, lo, mid, out);
  isolate(sturm, p, mid + 1, hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.degree() <= 0) return {};
  // Squarefree part with integer coefficients.
  UPoly sf = UPoly::divmod(p, gcd(p, p.derivative())).first;
  mpz_class den = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : sf.coeffs()) ic.push_back(mpz_class(c * den));
  const int n = static_cast<int>(ic.size()) - 1;
  const mpz_class lead = ic.back();
  // P(y) = lead^(n-1) * sf(y / lead) is monic with integer coefficients.
  std::vector<Rational> mc(n + 1);
  mpz_class power = 1;
  for (int i = n - 1; i >= 0; --i) {
    mc[i] = Rational(ic[i] * power);
    power *= lead;
  }
  mc[n] = 1;
  UPoly monic(mc);
  mpz_class bound = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class a = abs(mpz_class(mc[i].get_num()));
    if (a + 1 > bound) bound = a + 1;
  }
  std::vector<UPoly> sturm{monic, monic.derivative()};
  while (sturm.back().degree() > 0) {
    UPoly r = UPoly::divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(UPoly() - r);
  }
  std::vector<mpz_class> ints;
  isolate(sturm, monic, -bound, bound, ints);
  std::vector<Rational> roots;
  for (const auto& y : ints) {
    Rational r(y, lead);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cremona
