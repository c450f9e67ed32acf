#pragma once

#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Dense univariate polynomial over Q; coefficient i multiplies t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& lead() const { return c_.back(); }

  UPoly derivative() const;
  UPoly monic() const;
  Rational evaluate(const Rational& t) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

bool is_squarefree(const UPoly& p);

// All rational roots, ascending, without multiplicity. Works on the monic
// integer transform, whose rational roots are integers, and isolates those
// with a Sturm sequence; no integer factorization is needed.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace cremona
