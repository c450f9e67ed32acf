#pragma once

#include <map>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Formal combination sum_m e_m * L_m, where L_m stands for (t^m - 1).
// Read as a characteristic polynomial it is prod_m (t^m - 1)^{e_m}, so
// addition multiplies polynomials. The join product
// L_a * L_b = gcd(a, b) * L_lcm(a, b) describes eigenvalue products of
// tensor factors (Thom-Sebastiani); its unit is L_1.
class CycDivisor {
 public:
  CycDivisor() = default;

  // L_m with coefficient c.
  static CycDivisor lambda(long m, const Rational& c = 1);

  const std::map<long, Rational>& exponents() const noexcept { return e_; }
  Rational exponent(long m) const;
  bool empty() const noexcept { return e_.empty(); }

  bool is_integral() const;
  // Throws NonIntegralResult unless every exponent is an integer.
  void require_integral(const std::string& context) const;

  CycDivisor operator+(const CycDivisor& o) const;
  CycDivisor operator-(const CycDivisor& o) const;
  CycDivisor operator*(const CycDivisor& o) const;  // join product
  CycDivisor scaled(const Rational& c) const;
  bool operator==(const CycDivisor& o) const { return e_ == o.e_; }

  // prod_m (t^m-1)^e_m rendered as "(t^3-1)^3*(t-1)^-1"; "1" when empty.
  std::string render() const;
  // Dense coefficient list of the represented polynomial (lowest degree
  // first); only for display and tests. Throws InvalidArgument when the
  // negative exponents do not divide out.
  std::vector<Integer> expand() const;

 private:
  void add(long m, const Rational& c);
  std::map<long, Rational> e_;
};

// Join product, same as a * b.
CycDivisor divisor_mul(const CycDivisor& a, const CycDivisor& b);

// prod_i (L_{a_i} - L_1).
CycDivisor bp_charpoly(const std::vector<long>& exponents);

// Weights w_i = u_i / v_i in lowest terms: prod_i (u_i^{-1} L_{v_i} - L_1).
// Throws NonIntegralResult when the expansion is not integral.
CycDivisor wh_charpoly(const std::vector<Rational>& weights);

// Fermat germ x_1^d + ... + x_n^d in closed form.
CycDivisor fermat_charpoly(long d, long n);

// Exponent-wise sum: product of characteristic polynomials.
CycDivisor charpoly_product(const std::vector<CycDivisor>& parts);

// Multiplicity of a primitive k-th root of unity: sum over k | m of e_m.
long mult_at_order(const CycDivisor& d, long k);
long mu0_from_charpoly(const CycDivisor& d);

// sum_m m * e_m.
long divisor_degree(const CycDivisor& d);

// Orders k with a multiple in the support, ascending.
std::vector<long> support_orders(const CycDivisor& d);

// Appends one factor (t - 1).
CycDivisor t1_charpoly(const CycDivisor& delta_v);

// b0_0 = d-1, b0_m = (d-1)^{m+1} - b0_{m-1}.
long primitive_betti(long d, long m);

// Reference multiplicity of an order-k root in the Fermat germ; k | d.
long mult0_reference(long d, long n, long k);

std::vector<long> divisors_of(long d);

}  // namespace cremona
