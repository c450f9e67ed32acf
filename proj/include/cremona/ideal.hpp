#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cremona/groebner.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Leading-term data of a reduced basis.
struct StaircaseReport {
  std::vector<Monomial> leading_terms;  // minimal generators of the initial ideal
  int krull_dimension = 0;              // of S / in(I); -1 for the unit ideal
  std::optional<std::vector<Monomial>> standard_monomials;  // present iff krull_dimension == 0
};

// Polynomial ideal with a lazily computed, shared reduced Groebner basis.
// Copies share the cache; the first computation wins and is then read-only.
template <class K>
class Ideal {
 public:
  Ideal(int nvars, Domain domain, std::vector<Polynomial<K>> gens, TermOrder order = TermOrder::grevlex(),
        GroebnerLimits limits = {});
  // Ring taken from the first generator, which must exist.
  explicit Ideal(std::vector<Polynomial<K>> gens, TermOrder order = TermOrder::grevlex(), GroebnerLimits limits = {});

  static Ideal unit(int nvars, Domain domain, GroebnerLimits limits = {});

  int nvars() const noexcept { return nvars_; }
  const Domain& domain() const noexcept { return domain_; }
  const TermOrder& order() const noexcept { return order_; }
  const GroebnerLimits& limits() const noexcept { return limits_; }
  const std::vector<Polynomial<K>>& generators() const noexcept { return gens_; }

  const std::vector<Polynomial<K>>& basis() const;

  Ideal with_order(const TermOrder& order) const { return Ideal(nvars_, domain_, gens_, order, limits_); }
  Ideal with_limits(const GroebnerLimits& limits) const { return Ideal(nvars_, domain_, gens_, order_, limits); }

  bool is_zero() const { return basis().empty(); }
  bool is_unit() const;
  bool contains(const Polynomial<K>& p) const;
  Polynomial<K> reduce(const Polynomial<K>& p) const;
  // Same ideal (reduced bases compared under this ideal's order).
  bool same_as(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial<K>> basis;
  };

  int nvars_;
  Domain domain_;
  std::vector<Polynomial<K>> gens_;
  TermOrder order_;
  GroebnerLimits limits_;
  std::shared_ptr<Cache> cache_;
};

using QIdeal = Ideal<Rational>;
using PIdeal = Ideal<ModP>;

// Generators of I intersected with the subring in the variables of `keep`
// (bit i set keeps x_i), via a block elimination order.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::uint32_t keep);

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b);

// {p : p g in I}, from I intersected with (g).
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Polynomial<K>& g);

template <class K>
struct Saturation {
  Ideal<K> ideal;
  int exponent;  // g^exponent * (I : g^inf) lies in I
};

// I : g^inf by iterated quotients until the ideal stops growing.
template <class K>
Saturation<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& g);

// I : g^inf via an extra variable t and elimination of t from I + (1 - t g).
template <class K>
Ideal<K> saturate_rabinowitsch(const Ideal<K>& ideal, const Polynomial<K>& g);

// I : J^inf as the intersection of the saturations by the generators of J.
template <class K>
Ideal<K> saturate_ideal(const Ideal<K>& ideal, const Ideal<K>& by);

// Initial-ideal data under graded reverse lex.
template <class K>
StaircaseReport staircase(const Ideal<K>& ideal);

// Krull dimension of the affine quotient ring; -1 for the unit ideal.
template <class K>
int krull_dimension(const Ideal<K>& ideal);

// Dimension of the projective scheme of a homogeneous ideal; -1 when empty.
template <class K>
int projective_dim(const Ideal<K>& ideal);

// Vector-space dimension of K[x]/I; throws NotZeroDimensional.
template <class K>
long quotient_vs_dim(const Ideal<K>& ideal);

// Degree of a zero-dimensional projective scheme (the eventual constant
// value of its Hilbert function); throws NotZeroDimensional.
template <class K>
long zero_dim_degree_projective(const Ideal<K>& ideal);

// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n of S / (monomials).
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

// Leading coefficient of the Hilbert polynomial times (dim)! for a monomial
// ideal, i.e. the degree of S / (monomials), with dimension `krull_dim`.
long hilbert_degree(const std::vector<Monomial>& gens, int nvars, int krull_dim);

int monomial_krull_dimension(const std::vector<Monomial>& gens, int nvars);

}  // namespace cremona
