#pragma once

#include <cstdint>
#include <string>

#include "cremona/monomial.hpp"

namespace cremona {

// Monomial orders used by the Groebner engine. Variables are ranked
// x_0 > x_1 > ... in every kind. An elimination order compares the
// variables in `block` first (graded reverse lex restricted to the block)
// and breaks ties with graded reverse lex on the remaining variables.
class TermOrder {
 public:
  enum class Kind { GrevLex, Lex, Elimination };

  static TermOrder grevlex() { return TermOrder(Kind::GrevLex, 0); }
  static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
  static TermOrder elimination(std::uint32_t block) { return TermOrder(Kind::Elimination, block); }

  Kind kind() const noexcept { return kind_; }
  std::uint32_t block() const noexcept { return block_; }

  // Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::GrevLex:
        return grevlex_masked(a, b, ~0u);
      case Kind::Lex:
        for (int i = 0; i < a.nvars(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Elimination:
        if (int c = grevlex_masked(a, b, block_)) return c;
        return grevlex_masked(a, b, ~block_);
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  bool operator==(const TermOrder&) const = default;

  std::string name() const;

 private:
  TermOrder(Kind k, std::uint32_t block) : kind_(k), block_(block) {}

  static int grevlex_masked(const Monomial& a, const Monomial& b, std::uint32_t mask) noexcept {
    unsigned da = 0, db = 0;
    for (int i = 0; i < a.nvars(); ++i) {
      if (mask & (1u << i)) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
      if (!(mask & (1u << i))) continue;
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::uint32_t block_;
};

}  // namespace cremona
