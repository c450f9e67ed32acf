#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace cremona {

// Upper bound on ring size, including auxiliary variables introduced by
// elimination (tag variables for intersections and saturations).
inline constexpr int kMaxVars = 12;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {}

  static Monomial variable(int nvars, int index, unsigned power = 1) {
    Monomial m(nvars);
    m.e_[index] = static_cast<std::uint16_t>(power);
    m.deg_ = power;
    return m;
  }

  int nvars() const noexcept { return n_; }
  unsigned degree() const noexcept { return deg_; }
  unsigned operator[](int i) const noexcept { return e_[i]; }

  void set(int i, unsigned v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = static_cast<std::uint16_t>(v);
  }

  bool is_one() const noexcept { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  // Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const noexcept {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const noexcept {
    for (int i = 0; i < n_; ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
      r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
      r.deg_ += r.e_[i];
    }
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
      r.e_[i] = e_[i] < o.e_[i] ? e_[i] : o.e_[i];
      r.deg_ += r.e_[i];
    }
    return r;
  }

  // Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept {
    std::uint32_t s = 0;
    for (int i = 0; i < n_; ++i)
      if (e_[i]) s |= 1u << i;
    return s;
  }

  // Same exponents in a ring with a different number of variables; the
  // dropped variables must have exponent zero.
  Monomial resized(int nvars) const {
    Monomial r(nvars);
    for (int i = 0; i < nvars && i < n_; ++i) r.e_[i] = e_[i];
    for (int i = 0; i < nvars; ++i) r.deg_ += r.e_[i];
    return r;
  }

  bool operator==(const Monomial& o) const noexcept { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const noexcept { return !(*this == o); }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 1000003u + e_[i];
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  unsigned deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace cremona
