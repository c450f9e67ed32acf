#pragma once

#include <string>
#include <vector>

#include "cremona/calculus.hpp"
#include "cremona/parse.hpp"
#include "cremona/random.hpp"

namespace testing {

using namespace cremona;

inline std::vector<std::string> vars_of(const std::string& list) { return parse_var_list(list); }

inline QPoly P(const std::string& text, const std::string& vars = "x,y,z") {
  auto v = vars_of(vars);
  return parse_poly(text, v);
}

inline std::vector<QPoly> Ps(std::initializer_list<const char*> texts, const std::string& vars = "x,y,z") {
  std::vector<QPoly> out;
  for (const char* t : texts) out.push_back(P(t, vars));
  return out;
}

inline std::vector<Rational> Q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Random polynomial with small integer coefficients; homogeneous of degree
// `deg` when `homogeneous`, otherwise of degree at most `deg`.
inline QPoly random_poly(Rng& rng, int nvars, int deg, int nterms, bool homogeneous) {
  std::vector<Term<Rational>> terms;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    int target = homogeneous ? deg : static_cast<int>(rng.uniform(0, deg));
    for (int k = 0; k < target; ++k) {
      int v = static_cast<int>(rng.uniform(0, nvars - 1));
      m.set(v, m[v] + 1);
    }
    long c = rng.uniform(-9, 9);
    if (c == 0) c = 1;
    terms.push_back({m, Rational(c)});
  }
  return QPoly::from_terms(nvars, Domain{}, std::move(terms));
}

inline Matrix random_invertible(Rng& rng, int n, long bound = 5) {
  for (;;) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    if (m.determinant() != 0) return m;
  }
}

}  // namespace testing
