#include "cremona/groebner.hpp"

#include <algorithm>
#include <string>

namespace cremona {

namespace {

template <class K>
using Terms = std::vector<Term<K>>;

template <class K>
Terms<K> ordered_terms(const Polynomial<K>& p, const TermOrder& order) {
  Terms<K> t = p.terms();
  if (order.kind() != TermOrder::Kind::GrevLex)
    std::sort(t.begin(), t.end(), [&](const Term<K>& a, const Term<K>& b) { return order.greater(a.mono, b.mono); });
  return t;
}

template <class K>
Polynomial<K> from_ordered(int nvars, const Domain& dom, Terms<K> t) {
  return Polynomial<K>::from_terms(nvars, dom, std::move(t));
}

// A basis element in the active order, normalized to leading coefficient 1.
template <class K>
struct Reducer {
  Terms<K> terms;
  Monomial lm;
  std::uint32_t support = 0;
};

template <class K>
Reducer<K> make_reducer(Terms<K> t) {
  K inv = FieldOps<K>::inverse(t.front().coef);
  for (auto& term : t) term.coef *= inv;
  Reducer<K> r;
  r.lm = t.front().mono;
  r.support = r.lm.support();
  r.terms = std::move(t);
  return r;
}

// h := h - c * m * g, where the head of c * m * g cancels h[start].
// Terms before `start` are untouched and dropped from h.
template <class K>
void subtract_multiple(Terms<K>& h, std::size_t start, const K& c, const Monomial& m, const Terms<K>& g,
                       const TermOrder& order, Terms<K>& scratch) {
  scratch.clear();
  scratch.reserve(h.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  while (i < h.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = order.compare(h[i].mono, gm);
    if (cmp > 0) {
      scratch.push_back(std::move(h[i++]));
    } else if (cmp < 0) {
      scratch.push_back({gm, K(-(c * g[j].coef))});
      ++j;
    } else {
      K v = h[i].coef - c * g[j].coef;
      if (!FieldOps<K>::is_zero(v)) scratch.push_back({h[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) scratch.push_back(std::move(h[i]));
  for (; j < g.size(); ++j) scratch.push_back({g[j].mono * m, K(-(c * g[j].coef))});
  h.swap(scratch);
}

template <class K>
const Reducer<K>* find_reducer(const Monomial& m, const std::vector<const Reducer<K>*>& reducers) {
  const std::uint32_t ms = m.support();
  for (const Reducer<K>* r : reducers)
    if ((r->support & ~ms) == 0 && r->lm.divides(m)) return r;
  return nullptr;
}

// Full reduction; the result is in `order`, descending.
template <class K>
Terms<K> reduce_full(Terms<K> h, const std::vector<const Reducer<K>*>& reducers, const TermOrder& order) {
  Terms<K> rem, scratch;
  while (!h.empty()) {
    const Reducer<K>* r = find_reducer(h.front().mono, reducers);
    if (!r) {
      rem.push_back(std::move(h.front()));
      // Drop the head without reallocating the remainder.
      h.erase(h.begin());
      continue;
    }
    K c = h.front().coef;
    Monomial m = h.front().mono / r->lm;
    subtract_multiple(h, 0, c, m, r->terms, order, scratch);
  }
  return rem;
}

template <class K>
Terms<K> spoly_terms(const Reducer<K>& f, const Reducer<K>& g, const TermOrder& order) {
  Monomial l = f.lm.lcm(g.lm);
  Terms<K> h;
  h.reserve(f.terms.size() + g.terms.size());
  Monomial mf = l / f.lm;
  for (const auto& t : f.terms) h.push_back({t.mono * mf, t.coef});
  Terms<K> scratch;
  // Reducers are monic, so g's head coefficient is the field's one.
  subtract_multiple(h, 0, g.terms.front().coef, l / g.lm, g.terms, order, scratch);
  return h;
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

}  // namespace

template <class K>
Monomial leading_monomial(const Polynomial<K>& p, const TermOrder& order) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading monomial");
  if (order.kind() == TermOrder::Kind::GrevLex) return p.terms().front().mono;
  const Monomial* best = &p.terms().front().mono;
  for (const auto& t : p.terms())
    if (order.greater(t.mono, *best)) best = &t.mono;
  return *best;
}

template <class K>
K leading_coefficient(const Polynomial<K>& p, const TermOrder& order) {
  return p.coefficient(leading_monomial(p, order));
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& divisors, const TermOrder& order) {
  std::vector<Reducer<K>> owned;
  for (const auto& d : divisors)
    if (!d.is_zero()) owned.push_back(make_reducer(ordered_terms(d, order)));
  std::vector<const Reducer<K>*> reducers;
  for (const auto& r : owned) reducers.push_back(&r);
  return from_ordered(p.nvars(), p.domain(), reduce_full(ordered_terms(p, order), reducers, order));
}

template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const TermOrder order = TermOrder::grevlex();
  Terms<K> h = a.terms();
  Reducer<K> r = make_reducer(b.terms());
  K lc_inv = FieldOps<K>::inverse(b.terms().front().coef);
  Terms<K> quotient, scratch;
  while (!h.empty()) {
    if (!r.lm.divides(h.front().mono))
      throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
    K c = h.front().coef;
    Monomial m = h.front().mono / r.lm;
    quotient.push_back({m, c * lc_inv});
    subtract_multiple(h, 0, c, m, r.terms, order, scratch);
  }
  return from_ordered(a.nvars(), a.domain(), std::move(quotient));
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const TermOrder& order) {
  Reducer<K> rf = make_reducer(ordered_terms(f, order));
  Reducer<K> rg = make_reducer(ordered_terms(g, order));
  return from_ordered(f.nvars(), f.domain(), spoly_terms(rf, rg, order));
}

template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens, const TermOrder& order,
                                      const GroebnerLimits& limits, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  int nvars = -1;
  Domain dom{};
  for (const auto& g : gens) {
    if (nvars < 0) {
      nvars = g.nvars();
      dom = g.domain();
    } else if (g.nvars() != nvars || !(g.domain() == dom)) {
      throw Error(ErrorKind::DomainMismatch, "generators live in different rings");
    }
  }

  std::vector<Reducer<K>> polys;
  std::vector<char> active;
  std::vector<Pair> pairs;
  polys.reserve(64);

  auto active_reducers = [&] {
    std::vector<const Reducer<K>*> rs;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) rs.push_back(&polys[k]);
    return rs;
  };

  // Gebauer-Moeller update with the new element at index `h`.
  auto update = [&](int h) {
    const Monomial& lh = polys[h].lm;
    std::vector<int> cand;
    for (int g = 0; g < h; ++g)
      if (active[g]) cand.push_back(g);
    std::vector<Monomial> cand_lcm;
    for (int g : cand) cand_lcm.push_back(lh.lcm(polys[g].lm));

    std::vector<char> keep(cand.size(), 0);
    std::vector<char> done(cand.size(), 0);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      done[a] = 1;
      bool take = lh.coprime(polys[cand[a]].lm);
      if (!take) {
        take = true;
        for (std::size_t b = 0; b < cand.size() && take; ++b) {
          if (b == a) continue;
          bool in_c = !done[b];
          bool in_d = done[b] && keep[b];
          if ((in_c || in_d) && cand_lcm[b].divides(cand_lcm[a])) take = false;
        }
      }
      keep[a] = take;
    }

    std::vector<Pair> next;
    next.reserve(pairs.size() + cand.size());
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && lh.lcm(polys[p.i].lm) != p.lcm && lh.lcm(polys[p.j].lm) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] && !lh.coprime(polys[cand[a]].lm)) next.push_back({cand[a], h, cand_lcm[a]});
    pairs.swap(next);
    if (pairs.size() > limits.max_pairs)
      throw Error(ErrorKind::ResourceLimit, "Groebner pair queue exceeded " + std::to_string(limits.max_pairs));

    for (int g : cand)
      if (lh.divides(polys[g].lm)) active[g] = 0;
  };

  auto insert = [&](Terms<K> t) {
    if (t.front().mono.degree() > limits.max_degree)
      throw Error(ErrorKind::ResourceLimit,
                  "Groebner basis element degree exceeded " + std::to_string(limits.max_degree));
    polys.push_back(make_reducer(std::move(t)));
    active.push_back(1);
    update(static_cast<int>(polys.size()) - 1);
    std::size_t live = std::count(active.begin(), active.end(), 1);
    st.max_basis_size = std::max(st.max_basis_size, live);
    if (live > limits.max_basis)
      throw Error(ErrorKind::ResourceLimit, "Groebner basis size exceeded " + std::to_string(limits.max_basis));
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Terms<K> r = reduce_full(ordered_terms(g, order), active_reducers(), order);
    if (!r.empty()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = order.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                               (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
        best = k;
    }
    Pair p = pairs[best];
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    ++st.pairs_considered;
    Terms<K> s = spoly_terms(polys[p.i], polys[p.j], order);
    Terms<K> r = reduce_full(std::move(s), active_reducers(), order);
    if (r.empty()) {
      ++st.pairs_reduced_to_zero;
      continue;
    }
    insert(std::move(r));
  }

  // Inter-reduce the (already minimal) active set.
  std::vector<int> idx;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) idx.push_back(static_cast<int>(k));
  std::vector<Polynomial<K>> out;
  for (int k : idx) {
    std::vector<const Reducer<K>*> others;
    for (int o : idx)
      if (o != k) others.push_back(&polys[o]);
    Terms<K> tail(polys[k].terms.begin() + 1, polys[k].terms.end());
    Terms<K> red = reduce_full(std::move(tail), others, order);
    Terms<K> full;
    full.reserve(red.size() + 1);
    full.push_back(polys[k].terms.front());
    for (auto& t : red) full.push_back(std::move(t));
    out.push_back(from_ordered(nvars, dom, std::move(full)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return order.compare(leading_monomial(a, order), leading_monomial(b, order)) < 0;
  });
  return out;
}

template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis, const TermOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

#define CREMONA_INSTANTIATE(K)                                                                                 \
  template Monomial leading_monomial(const Polynomial<K>&, const TermOrder&);                                \
  template K leading_coefficient(const Polynomial<K>&, const TermOrder&);                                    \
  template Polynomial<K> normal_form(const Polynomial<K>&, const std::vector<Polynomial<K>>&,                \
                                     const TermOrder&);                                                      \
  template Polynomial<K> exact_divide(const Polynomial<K>&, const Polynomial<K>&);                           \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&, const TermOrder&);         \
  template std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>&, const TermOrder&,        \
                                                 const GroebnerLimits&, GroebnerStats*);                     \
  template bool is_groebner_basis(const std::vector<Polynomial<K>>&, const TermOrder&);

CREMONA_INSTANTIATE(Rational)
CREMONA_INSTANTIATE(ModP)

#undef CREMONA_INSTANTIATE

}  // namespace cremona
