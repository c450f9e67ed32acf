#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cremona/errors.hpp"

namespace cremona {

// Rationals are kept canonical (lowest terms, positive denominator) by gmpxx.
using Rational = mpq_class;
using Integer = mpz_class;

// Two primes near 2^31 used for dual-prime modular computations.
inline constexpr std::uint32_t kPrimeA = 2147483629u;
inline constexpr std::uint32_t kPrimeB = 2147483587u;

bool is_probable_prime(std::uint32_t p);

// Element of F_p, p an odd prime below 2^31. The canonical representative
// lies in [0, p).
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t prime) : p_(prime) {
    std::int64_t r = value % static_cast<std::int64_t>(prime);
    if (r < 0) r += prime;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  ModP operator+(const ModP& o) const { return from_raw((std::uint64_t{v_} + o.v_) % p_); }
  ModP operator-(const ModP& o) const { return from_raw((std::uint64_t{v_} + p_ - o.v_) % p_); }
  ModP operator*(const ModP& o) const { return from_raw(std::uint64_t{v_} * o.v_ % p_); }
  ModP operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }
  ModP inverse() const;
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }
  bool operator==(const ModP& o) const noexcept { return v_ == o.v_; }
  bool operator!=(const ModP& o) const noexcept { return v_ != o.v_; }

 private:
  ModP from_raw(std::uint64_t v) const {
    ModP r;
    r.v_ = static_cast<std::uint32_t>(v);
    r.p_ = p_;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

// Coefficient domain tag: prime == 0 means the rationals.
struct Domain {
  std::uint32_t prime = 0;

  bool is_rational() const noexcept { return prime == 0; }
  bool operator==(const Domain&) const = default;
  std::string name() const;
};

// Uniform construction and inspection of coefficients for both fields.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational from_int(const Domain&, long v) { return Rational(v); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static Rational inverse(const Rational& a) { return Rational(1) / a; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
};

template <>
struct FieldOps<ModP> {
  static ModP from_int(const Domain& d, long v) { return ModP(v, d.prime); }
  static bool is_zero(const ModP& a) { return a.is_zero(); }
  static bool is_one(const ModP& a) { return a.value() == 1; }
  static ModP inverse(const ModP& a) { return a.inverse(); }
  static std::string to_string(const ModP& a) { return std::to_string(a.value()); }
};

// Reduction of a p-integral rational; throws DomainMismatch when p divides
// the denominator.
ModP reduce_mod(const Rational& q, std::uint32_t prime);

}  // namespace cremona
