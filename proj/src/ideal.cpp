#include "cremona/ideal.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cremona/calculus.hpp"

namespace cremona {

template <class K>
Ideal<K>::Ideal(int nvars, Domain domain, std::vector<Polynomial<K>> gens, TermOrder order, GroebnerLimits limits)
    : nvars_(nvars), domain_(domain), order_(order), limits_(limits), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != nvars || !(g.domain() == domain))
      throw Error(ErrorKind::DomainMismatch, "ideal generators must share variables and coefficient domain");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

template <class K>
Ideal<K>::Ideal(std::vector<Polynomial<K>> gens, TermOrder order, GroebnerLimits limits)
    : order_(order), limits_(limits), cache_(std::make_shared<Cache>()) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "ideal needs at least one generator");
  nvars_ = gens.front().nvars();
  domain_ = gens.front().domain();
  for (auto& g : gens) {
    if (g.nvars() != nvars_ || !(g.domain() == domain_))
      throw Error(ErrorKind::DomainMismatch, "ideal generators must share variables and coefficient domain");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

template <class K>
Ideal<K> Ideal<K>::unit(int nvars, Domain domain, GroebnerLimits limits) {
  return Ideal(nvars, domain, {Polynomial<K>::constant(nvars, domain, 1L)}, TermOrder::grevlex(), limits);
}

template <class K>
const std::vector<Polynomial<K>>& Ideal<K>::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(gens_, order_, limits_); });
  return cache_->basis;
}

template <class K>
bool Ideal<K>::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
}

template <class K>
Polynomial<K> Ideal<K>::reduce(const Polynomial<K>& p) const {
  if (basis().empty()) return p;
  return normal_form(p, basis(), order_);
}

template <class K>
bool Ideal<K>::contains(const Polynomial<K>& p) const {
  return reduce(p).is_zero();
}

template <class K>
bool Ideal<K>::same_as(const Ideal& other) const {
  if (nvars_ != other.nvars_) return false;
  if (other.order_ == order_) return other.basis() == basis();
  return other.with_order(order_).basis() == basis();
}

namespace {

template <class K>
Polynomial<K> lift(const Polynomial<K>& p, int nvars) {
  return p.resized(nvars);
}

void check_room(int nvars) {
  if (nvars + 1 > kMaxVars)
    throw Error(ErrorKind::ResourceLimit, "no room for an auxiliary variable (" + std::to_string(nvars) + " in use)");
}

}  // namespace

template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::uint32_t keep) {
  const int n = ideal.nvars();
  const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
  const std::uint32_t block = all & ~keep;
  if (block == 0) return ideal;
  auto basis = buchberger(ideal.generators(), TermOrder::elimination(block), ideal.limits());
  std::vector<Polynomial<K>> kept;
  for (auto& g : basis)
    if ((g.support() & block) == 0) kept.push_back(std::move(g));
  return Ideal<K>(n, ideal.domain(), std::move(kept), TermOrder::grevlex(), ideal.limits());
}

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  const int n = a.nvars();
  if (b.nvars() != n) throw Error(ErrorKind::DomainMismatch, "ideals live in different rings");
  if (a.is_zero() || b.is_zero()) return Ideal<K>(n, a.domain(), {}, TermOrder::grevlex(), a.limits());
  if (a.is_unit()) return b.with_order(TermOrder::grevlex());
  if (b.is_unit()) return a.with_order(TermOrder::grevlex());
  check_room(n);
  const int t = n;
  const Domain dom = a.domain();
  auto tvar = Polynomial<K>::variable(n + 1, dom, t);
  auto one_minus_t = Polynomial<K>::constant(n + 1, dom, 1L) - tvar;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.basis()) gens.push_back(tvar * lift(f, n + 1));
  for (const auto& g : b.basis()) gens.push_back(one_minus_t * lift(g, n + 1));
  auto basis = buchberger(gens, TermOrder::elimination(1u << t), a.limits());
  std::vector<Polynomial<K>> kept;
  for (auto& g : basis)
    if (g.degree_in(t) == 0) kept.push_back(g.resized(n));
  return Ideal<K>(n, dom, std::move(kept), TermOrder::grevlex(), a.limits());
}

template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Polynomial<K>& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "ideal quotient by the zero polynomial");
  const int n = ideal.nvars();
  if (g.is_constant() || ideal.is_unit()) return ideal.with_order(TermOrder::grevlex());
  Ideal<K> principal(n, ideal.domain(), {g}, TermOrder::grevlex(), ideal.limits());
  Ideal<K> inter = intersect(ideal, principal);
  std::vector<Polynomial<K>> gens;
  for (const auto& h : inter.generators()) gens.push_back(exact_divide(h, g));
  return Ideal<K>(n, ideal.domain(), std::move(gens), TermOrder::grevlex(), ideal.limits());
}

template <class K>
Saturation<K> saturate(const Ideal<K>& ideal, const Polynomial<K>& g) {
  Ideal<K> current = ideal.with_order(TermOrder::grevlex());
  int exponent = 0;
  for (;;) {
    Ideal<K> next = ideal_quotient(current, g);
    if (next.same_as(current)) break;
    current = next;
    ++exponent;
  }
  return {current, exponent};
}

template <class K>
Ideal<K> saturate_rabinowitsch(const Ideal<K>& ideal, const Polynomial<K>& g) {
  const int n = ideal.nvars();
  check_room(n);
  const Domain dom = ideal.domain();
  std::vector<Polynomial<K>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(lift(f, n + 1));
  auto tvar = Polynomial<K>::variable(n + 1, dom, n);
  gens.push_back(Polynomial<K>::constant(n + 1, dom, 1L) - tvar * lift(g, n + 1));
  Ideal<K> big(n + 1, dom, std::move(gens), TermOrder::grevlex(), ideal.limits());
  Ideal<K> elim = eliminate(big, (1u << n) - 1);
  std::vector<Polynomial<K>> kept;
  for (const auto& p : elim.generators()) kept.push_back(p.resized(n));
  return Ideal<K>(n, dom, std::move(kept), TermOrder::grevlex(), ideal.limits());
}

template <class K>
Ideal<K> saturate_ideal(const Ideal<K>& ideal, const Ideal<K>& by) {
  if (by.is_zero()) throw Error(ErrorKind::InvalidArgument, "saturation by the zero ideal");
  if (by.is_unit()) return ideal.with_order(TermOrder::grevlex());
  std::optional<Ideal<K>> result;
  for (const auto& g : by.basis()) {
    Ideal<K> s = saturate(ideal, g).ideal;
    result = result ? intersect(*result, s) : s;
    if (result->is_zero()) break;
  }
  return *result;
}

int monomial_krull_dimension(const std::vector<Monomial>& gens, int nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  int best = 0;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gens)
      if ((g.support() & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens.swap(out);
}

using IntPoly = std::vector<Integer>;

void add_shifted(IntPoly& acc, const IntPoly& p, unsigned shift, int sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sign > 0) acc[i + shift] += p[i];
    else acc[i + shift] -= p[i];
  }
}

IntPoly numerator_rec(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return {Integer(1)};
  if (gens.front().is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    IntPoly acc{Integer(1)};
    for (const auto& g : gens) {
      IntPoly next = acc;
      add_shifted(next, acc, g.degree(), -1);
      acc.swap(next);
    }
    return acc;
  }
  int pivot = 0, best = -1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v]) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  unsigned e = ~0u;
  for (const auto& g : gens)
    if (g[pivot]) e = std::min(e, g[pivot]);
  Monomial p = Monomial::variable(nvars, pivot, e);
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / g.gcd(p));
  IntPoly result = numerator_rec(std::move(plus), nvars);
  add_shifted(result, numerator_rec(std::move(colon), nvars), e, +1);
  while (!result.empty() && result.back() == 0) result.pop_back();
  return result;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  return numerator_rec(gens, nvars);
}

long hilbert_degree(const std::vector<Monomial>& gens, int nvars, int krull_dim) {
  if (krull_dim < 0) return 0;
  IntPoly q = hilbert_numerator(gens, nvars);
  for (int k = 0; k < nvars - krull_dim; ++k) {
    // q = (1 - t) * q'
    IntPoly next(q.size() > 0 ? q.size() - 1 : 0);
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      next[i] = carry;
    }
    carry += q.empty() ? Integer(0) : q.back();
    if (carry != 0) throw Error(ErrorKind::Internal, "Hilbert numerator has the wrong order at t = 1");
    q.swap(next);
  }
  Integer sum = 0;
  for (const auto& c : q) sum += c;
  return sum.get_si();
}

template <class K>
StaircaseReport staircase(const Ideal<K>& ideal) {
  const TermOrder grevlex = TermOrder::grevlex();
  const auto& basis = ideal.order() == grevlex ? ideal.basis() : ideal.with_order(grevlex).basis();
  StaircaseReport rep;
  for (const auto& g : basis) rep.leading_terms.push_back(g.terms().front().mono);
  const int n = ideal.nvars();
  rep.krull_dimension = monomial_krull_dimension(rep.leading_terms, n);
  if (rep.krull_dimension == 0) {
    std::vector<unsigned> bound(n, 0);
    for (const auto& m : rep.leading_terms)
      for (int v = 0; v < n; ++v)
        if (m.support() == (1u << v)) bound[v] = bound[v] ? std::min(bound[v], m[v]) : m[v];
    double box = 1;
    for (unsigned b : bound) box *= b;
    if (box <= 2e6) {
      std::vector<Monomial> standard;
      Monomial cur(n);
      std::function<void(int)> walk = [&](int v) {
        if (v == n) {
          for (const auto& lt : rep.leading_terms)
            if (lt.divides(cur)) return;
          standard.push_back(cur);
          return;
        }
        for (unsigned e = 0; e < bound[v]; ++e) {
          cur.set(v, e);
          walk(v + 1);
        }
        cur.set(v, 0);
      };
      walk(0);
      std::sort(standard.begin(), standard.end(),
                [&](const Monomial& a, const Monomial& b) { return grevlex.compare(a, b) < 0; });
      rep.standard_monomials = std::move(standard);
    }
  }
  return rep;
}

template <class K>
int krull_dimension(const Ideal<K>& ideal) {
  if (ideal.is_zero()) return ideal.nvars();
  return staircase(ideal).krull_dimension;
}

template <class K>
int projective_dim(const Ideal<K>& ideal) {
  for (const auto& g : ideal.generators()) {
    unsigned d = g.terms().front().mono.degree();
    for (const auto& t : g.terms())
      if (t.mono.degree() != d)
        throw Error(ErrorKind::NotHomogeneous, "projective dimension needs homogeneous generators");
  }
  return std::max(-1, krull_dimension(ideal) - 1);
}

template <class K>
long quotient_vs_dim(const Ideal<K>& ideal) {
  if (ideal.is_zero())
    throw Error(ErrorKind::NotZeroDimensional, "the zero ideal has an infinite-dimensional quotient");
  StaircaseReport rep = staircase(ideal);
  if (rep.krull_dimension < 0) return 0;
  if (rep.krull_dimension > 0)
    throw Error(ErrorKind::NotZeroDimensional,
                "quotient is not finite-dimensional (Krull dimension " + std::to_string(rep.krull_dimension) + ")");
  if (rep.standard_monomials) return static_cast<long>(rep.standard_monomials->size());
  return hilbert_degree(rep.leading_terms, ideal.nvars(), 0);
}

template <class K>
long zero_dim_degree_projective(const Ideal<K>& ideal) {
  int pd = projective_dim(ideal);
  if (pd != 0)
    throw Error(ErrorKind::NotZeroDimensional,
                "projective scheme has dimension " + std::to_string(pd) + ", expected 0");
  StaircaseReport rep = staircase(ideal);
  return hilbert_degree(rep.leading_terms, ideal.nvars(), rep.krull_dimension);
}

#define CREMONA_INSTANTIATE(K)                                                             \
  template class Ideal<K>;                                                                 \
  template Ideal<K> eliminate(const Ideal<K>&, std::uint32_t);                             \
  template Ideal<K> intersect(const Ideal<K>&, const Ideal<K>&);                           \
  template Ideal<K> ideal_quotient(const Ideal<K>&, const Polynomial<K>&);                 \
  template Saturation<K> saturate(const Ideal<K>&, const Polynomial<K>&);                  \
  template Ideal<K> saturate_rabinowitsch(const Ideal<K>&, const Polynomial<K>&);          \
  template Ideal<K> saturate_ideal(const Ideal<K>&, const Ideal<K>&);                      \
  template StaircaseReport staircase(const Ideal<K>&);                                     \
  template int krull_dimension(const Ideal<K>&);                                           \
  template int projective_dim(const Ideal<K>&);                                            \
  template long quotient_vs_dim(const Ideal<K>&);                                          \
  template long zero_dim_degree_projective(const Ideal<K>&);

CREMONA_INSTANTIATE(Rational)
CREMONA_INSTANTIATE(ModP)

#undef CREMONA_INSTANTIATE

}  // namespace cremona
