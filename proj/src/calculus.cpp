#include "cremona/calculus.hpp"

#include <map>
#include <sstream>

#include "cremona/parse.hpp"
#include "cremona/random.hpp"
#include "cremona/univariate.hpp"

namespace cremona {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n_ != o.n_) throw Error(ErrorKind::InvalidArgument, "matrix size mismatch");
  Matrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

Rational Matrix::determinant() const {
  Matrix a = *this;
  Rational det = 1;
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (sgn(a(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n_; ++j) std::swap(a(c, j), a(pivot, j));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n_; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = c; j < n_; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  Matrix a = *this;
  Matrix inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int r = c; r < n_; ++r)
      if (sgn(a(r, c)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    if (pivot != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    Rational p = a(c, c);
    for (int j = 0; j < n_; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (int j = 0; j < n_; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : c_(std::move(coords)) {
  int k = chart();
  Rational s = c_[k];
  for (auto& x : c_) x /= s;
}

int ProjectivePoint::chart() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (sgn(c_[i]) != 0) return i;
  throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? ":" : "") << c_[i].get_str();
  out << ')';
  return out.str();
}

bool is_homogeneous(const QPoly& f) {
  if (f.is_zero()) return false;
  unsigned d = f.terms().front().mono.degree();
  for (const auto& t : f.terms())
    if (t.mono.degree() != d) return false;
  return true;
}

int homogeneous_degree(const QPoly& f, std::span<const std::string> vars) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  const auto& first = f.terms().front();
  for (const auto& t : f.terms()) {
    if (t.mono.degree() == first.mono.degree()) continue;
    std::vector<std::string> names =
        vars.size() >= static_cast<std::size_t>(f.nvars()) ? std::vector<std::string>(vars.begin(), vars.end())
                                                           : default_var_names(f.nvars());
    QPoly a = QPoly::monomial(first.mono, f.domain(), first.coef);
    QPoly b = QPoly::monomial(t.mono, f.domain(), t.coef);
    throw Error(ErrorKind::NotHomogeneous, "polynomial is not homogeneous: terms " + to_string(a, names) +
                                               " (degree " + std::to_string(first.mono.degree()) + ") and " +
                                               to_string(b, names) + " (degree " +
                                               std::to_string(t.mono.degree()) + ")");
  }
  return static_cast<int>(first.mono.degree());
}

bool euler_check(const QPoly& f) {
  int d = homogeneous_degree(f);
  QPoly lhs(f.nvars(), f.domain());
  for (int i = 0; i < f.nvars(); ++i)
    lhs += QPoly::variable(f.nvars(), f.domain(), i) * partial_derivative(f, i);
  return lhs == f.scaled(Rational(d));
}

namespace {

// Replaces every variable x_i by images[i] (polynomials in `nvars` variables).
QPoly compose(const QPoly& f, const std::vector<QPoly>& images, int nvars) {
  std::vector<std::vector<QPoly>> powers(images.size());
  auto power = [&](int i, unsigned e) -> const QPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(QPoly::constant(nvars, f.domain(), 1L));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  QPoly result(nvars, f.domain());
  for (const auto& t : f.terms()) {
    QPoly term = QPoly::constant(nvars, f.domain(), t.coef);
    for (int i = 0; i < f.nvars(); ++i)
      if (t.mono[i]) term = term * power(i, t.mono[i]);
    result += term;
  }
  return result;
}

}  // namespace

QPoly substitute_linear(const QPoly& f, const Matrix& m) {
  const int n = f.nvars();
  if (m.size() != n) throw Error(ErrorKind::InvalidArgument, "matrix size does not match variable count");
  if (sgn(m.determinant()) == 0) throw Error(ErrorKind::SingularMatrix, "coordinate change is not invertible");
  std::vector<QPoly> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Term<Rational>> terms;
    for (int j = 0; j < n; ++j)
      if (sgn(m(i, j)) != 0) terms.push_back({Monomial::variable(n, j), m(i, j)});
    images.push_back(QPoly::from_terms(n, f.domain(), std::move(terms)));
  }
  return compose(f, images, n);
}

QPoly dehomogenize(const QPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  const int n = f.nvars() - 1;
  std::vector<Term<Rational>> terms;
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (int i = 0, j = 0; i < f.nvars(); ++i)
      if (i != var) m.set(j++, t.mono[i]);
    terms.push_back({m, t.coef});
  }
  return QPoly::from_terms(n, f.domain(), std::move(terms));
}

QPoly substitute_value(const QPoly& f, int var, const Rational& value) {
  std::vector<Term<Rational>> terms;
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    for (unsigned e = 0; e < t.mono[var]; ++e) c *= value;
    Monomial m = t.mono;
    m.set(var, 0);
    terms.push_back({m, c});
  }
  return QPoly::from_terms(f.nvars(), f.domain(), std::move(terms));
}

QPoly restrict_to_coordinate_hyperplane(const QPoly& f, int var) {
  QPoly g = substitute_value(f, var, Rational(0));
  // Move the remaining variables down by one slot.
  const int n = f.nvars() - 1;
  std::vector<Term<Rational>> terms;
  for (const auto& t : g.terms()) {
    Monomial m(n);
    for (int i = 0, j = 0; i < f.nvars(); ++i)
      if (i != var) m.set(j++, t.mono[i]);
    terms.push_back({m, t.coef});
  }
  return QPoly::from_terms(n, f.domain(), std::move(terms));
}

QPoly translate(const QPoly& h, std::span<const Rational> shift) {
  const int n = h.nvars();
  if (static_cast<int>(shift.size()) != n) throw Error(ErrorKind::InvalidArgument, "shift has wrong dimension");
  std::vector<QPoly> images;
  for (int i = 0; i < n; ++i)
    images.push_back(QPoly::variable(n, h.domain(), i) + QPoly::constant(n, h.domain(), shift[i]));
  return compose(h, images, n);
}

namespace {

// f restricted to the line s -> p + s q, as a univariate polynomial in s.
UPoly restrict_to_line(const QPoly& f, const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const int n = f.nvars();
  std::vector<std::vector<UPoly>> powers(n);
  UPoly sum;
  for (const auto& t : f.terms()) {
    UPoly term(std::vector<Rational>{t.coef});
    for (int i = 0; i < n; ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(UPoly(std::vector<Rational>{Rational(1)}));
      while (cache.size() <= t.mono[i]) cache.push_back(cache.back() * UPoly(std::vector<Rational>{p[i], q[i]}));
      term = term * cache[t.mono[i]];
    }
    sum = sum + term;
  }
  return sum;
}

}  // namespace

SquarefreeProbe squarefree_probe(const QPoly& f, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "squarefree probe needs at least one trial");
  const int d = homogeneous_degree(f);
  const int n = f.nvars();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "squarefree probe needs at least two variables");
  Rng rng(seed);
  SquarefreeProbe out{ReducedVerdict::NotReduced, 0, 0};
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> p(n), q(n);
    for (int i = 0; i < n; ++i) {
      p[i] = Rational(static_cast<long>(rng.uniform(-100, 100)));
      q[i] = Rational(static_cast<long>(rng.uniform(-100, 100)));
    }
    ++out.lines_tried;
    UPoly g = restrict_to_line(f, p, q);
    if (g.is_zero()) {
      ++out.degenerate_lines;
      continue;
    }
    // The binary form F(s, t) has a root at infinity of multiplicity d - deg g.
    if (g.degree() >= d - 1 && is_squarefree(g)) {
      out.verdict = ReducedVerdict::ProbablyReduced;
      return out;
    }
  }
  if (out.degenerate_lines == out.lines_tried)
    throw Error(ErrorKind::DegeneratePencil, "every sampled line lies in V(f)");
  return out;
}

}  // namespace cremona
