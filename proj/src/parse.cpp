#include "cremona/parse.hpp"

#include <cctype>
#include <sstream>

namespace cremona {

namespace {

constexpr unsigned kMaxExponent = 1000;

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars)
      : text_(text), vars_(vars), nvars_(static_cast<int>(vars.size())) {}

  QPoly parse() {
    QPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  QPoly expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    QPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      QPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    skip_space();
    // Anything that could start a factor here would be implicit multiplication.
    char c = peek();
    if (c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      throw SyntaxError(pos_, "implicit multiplication is not allowed");
    return acc;
  }

  QPoly factor() {
    QPoly b = base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw SyntaxError(start, "expected exponent");
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent)
        throw SyntaxError(start, "exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  QPoly base() {
    skip_space();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      QPoly inner = expression();
      skip_space();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{mpz_class(read_digits())};
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        std::size_t dpos = pos_;
        std::string den = read_digits();
        if (den.empty()) throw SyntaxError(dpos, "expected denominator");
        mpz_class d(den);
        if (d == 0) throw SyntaxError(dpos, "zero denominator");
        value /= Rational(d);
      }
      return QPoly::constant(nvars_, Domain{}, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      for (int i = 0; i < nvars_; ++i)
        if (vars_[i] == name) return QPoly::variable(nvars_, Domain{}, i);
      throw Error(ErrorKind::UnknownVariable,
                  "unknown variable '" + name + "' at position " + std::to_string(start));
    }
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      d += text_[pos_++];
    return d;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::span<const std::string> vars_;
  int nvars_;
  std::size_t pos_ = 0;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

QPoly parse_poly(std::string_view text, std::span<const std::string> vars) {
  if (vars.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(ErrorKind::InvalidArgument, "too many variables");
  return Parser(text, vars).parse();
}

std::vector<std::string> parse_var_list(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    std::string trimmed;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (!is_identifier(trimmed))
      throw Error(ErrorKind::InvalidArgument, "invalid variable name '" + trimmed + "'");
    for (const auto& n : names)
      if (n == trimmed) throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + trimmed + "'");
    names.push_back(trimmed);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return names;
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

template <class K>
std::string to_string(const Polynomial<K>& p, std::span<const std::string> vars) {
  if (static_cast<int>(vars.size()) < p.nvars())
    throw Error(ErrorKind::InvalidArgument, "not enough variable names");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string coef = FieldOps<K>::to_string(t.coef);
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (negative) out << '-';
    else if (!first) out << '+';
    first = false;
    bool unit = coef == "1";
    bool wrote = false;
    if (!unit || t.mono.is_one()) {
      out << coef;
      wrote = true;
    }
    for (int i = 0; i < p.nvars(); ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (wrote) out << '*';
      out << vars[i];
      if (e > 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

template std::string to_string(const Polynomial<Rational>&, std::span<const std::string>);
template std::string to_string(const Polynomial<ModP>&, std::span<const std::string>);

}  // namespace cremona
