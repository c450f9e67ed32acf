#pragma once

#include <cstddef>
#include <vector>

#include "cremona/polynomial.hpp"
#include "cremona/term_order.hpp"

namespace cremona {

// Hard caps; exceeding one raises ResourceLimit instead of running on.
struct GroebnerLimits {
  std::size_t max_basis = 4000;
  unsigned max_degree = 120;
  std::size_t max_pairs = 4'000'000;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced_to_zero = 0;
  std::size_t max_basis_size = 0;
};

template <class K>
Monomial leading_monomial(const Polynomial<K>& p, const TermOrder& order);

template <class K>
K leading_coefficient(const Polynomial<K>& p, const TermOrder& order);

// Multivariate division remainder: no term of the result is divisible by a
// leading monomial of `divisors`, and p - result lies in their span.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& divisors,
                          const TermOrder& order);

// Exact quotient a / b; throws InvalidArgument if b does not divide a.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& a, const Polynomial<K>& b);

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const TermOrder& order);

// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading
// monomial. Pairs are processed by the normal strategy (smallest lcm first)
// with the Gebauer-Moeller criteria. An input of only zeros yields an empty
// basis (the zero ideal).
template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens, const TermOrder& order,
                                      const GroebnerLimits& limits = {}, GroebnerStats* stats = nullptr);

// Buchberger's criterion: every S-polynomial reduces to zero.
template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis, const TermOrder& order);

}  // namespace cremona
