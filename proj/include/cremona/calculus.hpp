#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

// Dense square rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static Matrix identity(int n);

  int size() const noexcept { return n_; }
  Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  Rational determinant() const;
  // Throws SingularMatrix.
  Matrix inverse() const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// Rational point of P^n, scaled so that its last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> coords);

  const std::vector<Rational>& coords() const noexcept { return c_; }
  int size() const noexcept { return static_cast<int>(c_.size()); }
  // Index of the last nonzero coordinate (the normalizing chart).
  int chart() const;
  std::string to_string() const;

  bool operator==(const ProjectivePoint& o) const { return c_ == o.c_; }
  bool operator<(const ProjectivePoint& o) const { return c_ < o.c_; }

 private:
  std::vector<Rational> c_;
};

template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& p, int var) {
  if (var < 0 || var >= p.nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  std::vector<Term<K>> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[var];
    if (!e) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coef * FieldOps<K>::from_int(p.domain(), static_cast<long>(e))});
  }
  return Polynomial<K>::from_terms(p.nvars(), p.domain(), std::move(out));
}

template <class K>
std::vector<Polynomial<K>> gradient(const Polynomial<K>& p) {
  std::vector<Polynomial<K>> g;
  for (int i = 0; i < p.nvars(); ++i) g.push_back(partial_derivative(p, i));
  return g;
}

// Throws ZeroPolynomial or NotHomogeneous (naming two offending terms).
int homogeneous_degree(const QPoly& f, std::span<const std::string> vars = {});
bool is_homogeneous(const QPoly& f);

// Whether sum_i x_i * df/dx_i == deg(f) * f.
bool euler_check(const QPoly& f);

// f(M x): x_i is replaced by sum_j M(i, j) x_j. Throws SingularMatrix.
QPoly substitute_linear(const QPoly& f, const Matrix& m);

// Sets x_var = 1 and removes that variable from the ring.
QPoly dehomogenize(const QPoly& f, int var);

// Sets x_var = value, keeping the ring (x_var no longer occurs).
QPoly substitute_value(const QPoly& f, int var, const Rational& value);

// Sets x_var = 0 and removes the variable.
QPoly restrict_to_coordinate_hyperplane(const QPoly& f, int var);

// h(x + a).
QPoly translate(const QPoly& h, std::span<const Rational> shift);

enum class ReducedVerdict { ProbablyReduced, NotReduced };

struct SquarefreeProbe {
  ReducedVerdict verdict;
  int lines_tried = 0;
  int degenerate_lines = 0;
};

// Restricts f to random rational lines; one squarefree restriction proves
// that f has no repeated factor through that line, so NotReduced is always
// correct and ProbablyReduced has one-sided error. Throws DegeneratePencil
// if every sampled line lies inside V(f).
SquarefreeProbe squarefree_probe(const QPoly& f, int trials, std::uint64_t seed);

}  // namespace cremona
