#pragma once

// Exact arithmetic in Z/p^K together with the small rational helpers used to
// embed p-integral fractions into it.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "supercong/errors.hpp"

namespace supercong {

bool is_prime(std::uint64_t n) noexcept;

/// The ring Z/p^K. Moduli up to 2^62 are supported, which leaves room for
/// carry-free addition of two reduced values.
class Modulus {
 public:
  Modulus(std::uint64_t p, unsigned precision);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned precision() const noexcept { return k_; }
  std::uint64_t value() const noexcept { return m_; }

  Modulus with_precision(unsigned precision) const { return Modulus(p_, precision); }

  std::uint64_t reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % static_cast<std::int64_t>(m_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
  }
  std::uint64_t reduce_unsigned(std::uint64_t x) const noexcept { return x % m_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (m_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : m_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (small_) return (a * b) % m_;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t m_;
  bool small_;  // m < 2^32, so products fit in 64 bits
};

/// A residue class modulo p^K. Binary operations on residues with different
/// moduli throw ModulusMismatch.
class Residue {
 public:
  Residue(const Modulus& mod, std::int64_t v) : mod_(mod), v_(mod.reduce(v)) {}
  static Residue from_raw(const Modulus& mod, std::uint64_t reduced) {
    Residue r(mod, 0);
    r.v_ = reduced;
    return r;
  }

  const Modulus& modulus() const noexcept { return mod_; }
  std::uint64_t value() const noexcept { return v_; }
  // Representative in (-m/2, m/2].
  std::int64_t signed_value() const noexcept {
    const std::uint64_t m = mod_.value();
    return v_ > m / 2 ? -static_cast<std::int64_t>(m - v_) : static_cast<std::int64_t>(v_);
  }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_unit() const noexcept { return v_ % mod_.prime() != 0; }

  Residue operator-() const { return from_raw(mod_, mod_.neg(v_)); }
  Residue& operator+=(const Residue& o) { check(o); v_ = mod_.add(v_, o.v_); return *this; }
  Residue& operator-=(const Residue& o) { check(o); v_ = mod_.sub(v_, o.v_); return *this; }
  Residue& operator*=(const Residue& o) { check(o); v_ = mod_.mul(v_, o.v_); return *this; }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator*(Residue a, std::int64_t k) { return a *= Residue(a.mod_, k); }

  Residue pow(std::uint64_t e) const { return from_raw(mod_, mod_.pow(v_, e)); }
  Residue inverse() const;

  /// Residue reinterpreted at a lower precision.
  Residue reduced_to(unsigned precision) const;
  /// Exact division by p; the result lives one precision step lower.
  Residue divide_by_p() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    a.check(b);
    return a.v_ == b.v_;
  }

 private:
  void check(const Residue& o) const {
    if (!(mod_ == o.mod_)) throw Error(ErrorCode::ModulusMismatch, "residues from different moduli");
  }

  Modulus mod_;
  std::uint64_t v_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Reduced fraction num/den with den > 0.
class RationalArg {
 public:
  RationalArg(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend RationalArg operator+(const RationalArg& a, const RationalArg& b);
  friend RationalArg operator-(const RationalArg& a, const RationalArg& b);
  friend RationalArg operator*(const RationalArg& a, const RationalArg& b);
  friend RationalArg operator/(const RationalArg& a, const RationalArg& b);
  friend bool operator==(const RationalArg& a, const RationalArg& b) = default;
  friend std::strong_ordering operator<=>(const RationalArg& a, const RationalArg& b);

  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const RationalArg& q);

Residue inv_mod(const Residue& a);

/// num * den^{-1} mod p^K; throws DenominatorDivisibleByP.
Residue reduce_rational(const RationalArg& x, const Modulus& mod);

/// Teichmüller representative of x in Z/p^K: the (p-1)-th root of unity
/// congruent to x mod p, and 0 for x = 0.
Residue teichmuller(std::uint64_t x, const Modulus& mod);

/// (floor(q), q - floor(q)) with floor toward -infinity.
std::pair<std::int64_t, RationalArg> floor_frac(const RationalArg& q);

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept;
std::int64_t mod_floor(std::int64_t a, std::int64_t b) noexcept;

}  // namespace supercong
