#pragma once

#include <algorithm>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/monomial.hpp"
#include "cremona/scalar.hpp"
#include "cremona/term_order.hpp"

namespace cremona {

template <class K>
struct Term {
  Monomial mono;
  K coef;
};

// Sparse distributed polynomial. Terms are kept sorted by decreasing
// monomial under graded reverse lex and never carry a zero coefficient,
// so structural equality is polynomial equality.
template <class K>
class Polynomial {
 public:
  using Coeff = K;
  using Ops = FieldOps<K>;

  Polynomial() = default;
  Polynomial(int nvars, Domain domain) : nvars_(nvars), domain_(domain) {
    if (nvars < 0 || nvars > kMaxVars)
      throw Error(ErrorKind::InvalidArgument, "variable count out of range");
  }

  static Polynomial constant(int nvars, Domain domain, const K& c) {
    Polynomial p(nvars, domain);
    if (!Ops::is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }

  static Polynomial constant(int nvars, Domain domain, long c) {
    return constant(nvars, domain, Ops::from_int(domain, c));
  }

  static Polynomial variable(int nvars, Domain domain, int index) {
    Polynomial p(nvars, domain);
    p.terms_.push_back({Monomial::variable(nvars, index), Ops::from_int(domain, 1)});
    return p;
  }

  static Polynomial monomial(const Monomial& m, Domain domain, const K& c) {
    Polynomial p(m.nvars(), domain);
    if (!Ops::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  // Collects like terms and drops zeros.
  static Polynomial from_terms(int nvars, Domain domain, std::vector<Term<K>> terms) {
    Polynomial p(nvars, domain);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    for (auto& t : terms) {
      auto [it, fresh] = acc.try_emplace(t.mono, t.coef);
      if (!fresh) it->second += t.coef;
    }
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!Ops::is_zero(c)) p.terms_.push_back({m, c});
    p.sort_terms();
    return p;
  }

  int nvars() const noexcept { return nvars_; }
  const Domain& domain() const noexcept { return domain_; }
  const std::vector<Term<K>>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

  // -1 for the zero polynomial.
  int total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
  }

  int degree_in(int var) const noexcept {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
  }

  // Leading term under graded reverse lex.
  const Term<K>& leading() const { return terms_.front(); }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return Ops::from_int(domain_, 0);
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Polynomial(nvars_, domain_);
    std::vector<Term<K>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
    return from_terms(nvars_, domain_, std::move(prod));
  }

  Polynomial scaled(const K& c) const {
    if (Ops::is_zero(c)) return Polynomial(nvars_, domain_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  // Multiplication by a monomial preserves the term order.
  Polynomial times_term(const Monomial& m, const K& c) const {
    if (Ops::is_zero(c)) return Polynomial(nvars_, domain_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono * m;
      t.coef *= c;
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(nvars_, domain_, 1L);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(domain_ == o.domain_) || terms_.size() != o.terms_.size())
      return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong dimension");
    K sum = Ops::from_int(domain_, 0);
    for (const auto& t : terms_) {
      K v = t.coef;
      for (int i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
      sum += v;
    }
    return sum;
  }

  // Divides by the leading coefficient.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(Ops::inverse(terms_.front().coef));
  }

  // Same polynomial in a ring with `nvars` variables; variables beyond the
  // new count must not occur.
  Polynomial resized(int nvars) const {
    Polynomial r(nvars, domain_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      for (int i = nvars; i < nvars_; ++i)
        if (t.mono[i]) throw Error(ErrorKind::InvalidArgument, "cannot drop an occurring variable");
      r.terms_.push_back({t.mono.resized(nvars), t.coef});
    }
    r.sort_terms();
    return r;
  }

  std::uint32_t support() const noexcept {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.mono.support();
    return s;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(domain_ == o.domain_))
      throw Error(ErrorKind::DomainMismatch, "polynomials live in different rings");
  }

  void sort_terms() {
    const TermOrder order = TermOrder::grevlex();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<K>& a, const Term<K>& b) { return order.greater(a.mono, b.mono); });
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    const TermOrder order = TermOrder::grevlex();
    Polynomial r(nvars_, domain_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == o.terms_.size()) c = 1;
      else c = order.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? K(-t.coef) : t.coef});
      } else {
        K s = subtract ? K(terms_[i].coef - o.terms_[j].coef) : K(terms_[i].coef + o.terms_[j].coef);
        if (!Ops::is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_ = 0;
  Domain domain_{};
  std::vector<Term<K>> terms_;
};

using QPoly = Polynomial<Rational>;
using PPoly = Polynomial<ModP>;

// Image in F_p[x]; throws DomainMismatch when a coefficient is not p-integral.
PPoly reduce_mod(const QPoly& p, std::uint32_t prime);

}  // namespace cremona
