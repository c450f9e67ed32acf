#include "cremona/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cremona {

CycDivisor CycDivisor::lambda(long m, const Rational& c) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  CycDivisor d;
  d.add(m, c);
  return d;
}

void CycDivisor::add(long m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = e_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) e_.erase(it);
  }
}

Rational CycDivisor::exponent(long m) const {
  auto it = e_.find(m);
  return it == e_.end() ? Rational(0) : it->second;
}

bool CycDivisor::is_integral() const {
  for (const auto& [m, c] : e_)
    if (c.get_den() != 1) return false;
  return true;
}

void CycDivisor::require_integral(const std::string& context) const {
  for (const auto& [m, c] : e_)
    if (c.get_den() != 1)
      throw Error(ErrorKind::NonIntegralResult,
                  context + ": exponent of (t^" + std::to_string(m) + "-1) is " + c.get_str());
}

CycDivisor CycDivisor::operator+(const CycDivisor& o) const {
  CycDivisor r = *this;
  for (const auto& [m, c] : o.e_) r.add(m, c);
  return r;
}

CycDivisor CycDivisor::operator-(const CycDivisor& o) const {
  CycDivisor r = *this;
  for (const auto& [m, c] : o.e_) r.add(m, -c);
  return r;
}

CycDivisor CycDivisor::operator*(const CycDivisor& o) const {
  CycDivisor r;
  for (const auto& [a, ca] : e_)
    for (const auto& [b, cb] : o.e_) {
      long g = std::gcd(a, b);
      r.add(a / g * b, ca * cb * g);
    }
  return r;
}

CycDivisor CycDivisor::scaled(const Rational& c) const {
  CycDivisor r;
  for (const auto& [m, e] : e_) r.add(m, e * c);
  return r;
}

std::string CycDivisor::render() const {
  if (e_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto it = e_.rbegin(); it != e_.rend(); ++it) {
    if (!first) out << '*';
    first = false;
    out << "(t";
    if (it->first > 1) out << '^' << it->first;
    out << "-1)^" << it->second.get_str();
  }
  return out.str();
}

std::vector<Integer> CycDivisor::expand() const {
  require_integral("expansion");
  std::vector<Integer> p{Integer(1)};
  for (const auto& [m, e] : e_) {
    for (long rep = 0; rep < e.get_num().get_si(); ++rep) {
      std::vector<Integer> next(p.size() + m, Integer(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i + m] += p[i];
        next[i] -= p[i];
      }
      p.swap(next);
    }
  }
  // Negative exponents: exact division by (t^m - 1), lowest degree first.
  for (const auto& [m, e] : e_) {
    for (long rep = 0; rep < -e.get_num().get_si(); ++rep) {
      const std::size_t um = static_cast<std::size_t>(m);
      if (p.size() <= um) throw Error(ErrorKind::InvalidArgument, "divisor is not a polynomial");
      std::vector<Integer> q(p.size() - um, Integer(0));
      std::vector<Integer> r = p;
      for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = -r[i];
        r[i] = 0;
        r[i + um] -= q[i];
      }
      for (const auto& c : r)
        if (c != 0) throw Error(ErrorKind::InvalidArgument, "divisor is not a polynomial");
      p.swap(q);
    }
  }
  return p;
}

CycDivisor divisor_mul(const CycDivisor& a, const CycDivisor& b) { return a * b; }

CycDivisor bp_charpoly(const std::vector<long>& exponents) {
  CycDivisor r = CycDivisor::lambda(1);
  for (long a : exponents) {
    if (a < 2) throw Error(ErrorKind::InvalidArgument, "Brieskorn-Pham exponents must be at least 2");
    r = r * (CycDivisor::lambda(a) - CycDivisor::lambda(1));
  }
  return r;
}

CycDivisor wh_charpoly(const std::vector<Rational>& weights) {
  CycDivisor r = CycDivisor::lambda(1);
  for (const auto& w : weights) {
    if (sgn(w) <= 0 || w >= 1)
      throw Error(ErrorKind::InvalidArgument, "weights must lie strictly between 0 and 1, got " + w.get_str());
    long u = w.get_num().get_si();
    long v = w.get_den().get_si();
    r = r * (CycDivisor::lambda(v, Rational(1, u)) - CycDivisor::lambda(1));
  }
  r.require_integral("weighted homogeneous characteristic polynomial");
  return r;
}

namespace {

Integer ipow(long base, long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

CycDivisor fermat_charpoly(long d, long n) {
  if (d < 2 || n < 1) throw Error(ErrorKind::InvalidArgument, "Fermat germ needs d >= 2 and n >= 1");
  const long sign = n % 2 == 1 ? 1 : -1;  // (-1)^{n-1}
  Integer chi = 1 + sign * ipow(d - 1, n);
  Rational ed(chi * sign, d);
  ed.canonicalize();
  CycDivisor r = CycDivisor::lambda(d, ed) + CycDivisor::lambda(1, -sign);
  r.require_integral("Fermat characteristic polynomial");
  return r;
}

CycDivisor charpoly_product(const std::vector<CycDivisor>& parts) {
  CycDivisor r;
  for (const auto& p : parts) r = r + p;
  return r;
}

long mult_at_order(const CycDivisor& d, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "root order must be positive");
  d.require_integral("multiplicity");
  long sum = 0;
  for (const auto& [m, e] : d.exponents())
    if (m % k == 0) sum += e.get_num().get_si();
  return sum;
}

long mu0_from_charpoly(const CycDivisor& d) { return mult_at_order(d, 1); }

long divisor_degree(const CycDivisor& d) {
  Rational sum = 0;
  for (const auto& [m, e] : d.exponents()) sum += e * m;
  if (sum.get_den() != 1) throw Error(ErrorKind::NonIntegralResult, "divisor degree is not an integer");
  return sum.get_num().get_si();
}

std::vector<long> divisors_of(long d) {
  std::vector<long> out;
  for (long k = 1; k <= d; ++k)
    if (d % k == 0) out.push_back(k);
  return out;
}

std::vector<long> support_orders(const CycDivisor& d) {
  std::vector<long> out;
  for (const auto& [m, e] : d.exponents())
    for (long k : divisors_of(m)) out.push_back(k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CycDivisor t1_charpoly(const CycDivisor& delta_v) { return delta_v + CycDivisor::lambda(1); }

long primitive_betti(long d, long m) {
  if (d < 2 || m < 0) throw Error(ErrorKind::InvalidArgument, "primitive Betti number needs d >= 2, m >= 0");
  Integer b = d - 1;
  for (long i = 1; i <= m; ++i) b = ipow(d - 1, i + 1) - b;
  if (!b.fits_slong_p()) throw Error(ErrorKind::ResourceLimit, "primitive Betti number overflows");
  return b.get_si();
}

long mult0_reference(long d, long n, long k) {
  if (k < 1 || d % k != 0)
    throw Error(ErrorKind::KNotDividingD, "order " + std::to_string(k) + " does not divide " + std::to_string(d));
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "reference multiplicity needs n >= 2");
  long b = primitive_betti(d, n - 2);
  if (k == 1) return b;
  return b + (n % 2 == 1 ? 1 : -1);
}

}  // namespace cremona
