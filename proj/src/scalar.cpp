#include "cremona/scalar.hpp"
#include "cremona/term_order.hpp"

#include "cremona/polynomial.hpp"

namespace cremona {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownVariable:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::SingularMatrix:
    case ErrorKind::DomainMismatch:
    case ErrorKind::NonIntegralResult:
    case ErrorKind::KNotDividingD:
    case ErrorKind::NotACriticalPoint:
      return 1;
    case ErrorKind::InconsistentMu:
    case ErrorKind::Internal:
      return 3;
    default:
      return 2;
  }
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::DegeneratePencil: return "DegeneratePencil";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotACriticalPoint: return "NotACriticalPoint";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::TransversalityNotFound: return "TransversalityNotFound";
    case ErrorKind::IncompleteEnumeration: return "IncompleteEnumeration";
    case ErrorKind::InconsistentMu: return "InconsistentMu";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::KNotDividingD: return "KNotDividingD";
    case ErrorKind::Hypothesis: return "HypothesisViolation";
    case ErrorKind::PositiveDimensionalFiber: return "PositiveDimensionalFiber";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Unknown";
}

bool is_probable_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw Error(ErrorKind::DomainMismatch, "division by zero in F_p");
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, p_);
}

std::string Domain::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(prime) + ")";
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

ModP reduce_mod(const Rational& q, std::uint32_t prime) {
  mpz_class num = q.get_num() % prime;
  mpz_class den = q.get_den() % prime;
  if (den == 0)
    throw Error(ErrorKind::DomainMismatch,
                "coefficient " + q.get_str() + " is not integral at p=" + std::to_string(prime));
  ModP n(num.get_si(), prime);
  ModP d(den.get_si(), prime);
  return n / d;
}

PPoly reduce_mod(const QPoly& p, std::uint32_t prime) {
  std::vector<Term<ModP>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, reduce_mod(t.coef, prime)});
  return PPoly::from_terms(p.nvars(), Domain{prime}, std::move(terms));
}

}  // namespace cremona
