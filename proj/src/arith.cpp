#include "supercong/arith.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace supercong {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t p, unsigned precision) : p_(p), k_(precision), m_(1) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not prime");
  if (precision == 0) throw Error(ErrorCode::InvalidModulus, "precision must be at least 1");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (unsigned i = 0; i < precision; ++i) {
    if (m_ > kLimit / p) {
      throw Error(ErrorCode::InvalidModulus,
                  std::to_string(p) + "^" + std::to_string(precision) + " exceeds 2^62");
    }
    m_ *= p;
  }
  small_ = m_ < (std::uint64_t{1} << 32);
}

std::uint64_t Modulus::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % m_;
  base %= m_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

Residue Residue::inverse() const { return inv_mod(*this); }

Residue Residue::reduced_to(unsigned precision) const {
  if (precision > mod_.precision()) {
    throw Error(ErrorCode::BadParameters, "cannot raise precision of a residue");
  }
  const Modulus lower = mod_.with_precision(precision);
  return from_raw(lower, v_ % lower.value());
}

Residue Residue::divide_by_p() const {
  const std::uint64_t p = mod_.prime();
  if (v_ % p != 0) throw Error(ErrorCode::InexactDivision, "residue not divisible by p");
  if (mod_.precision() < 2) throw Error(ErrorCode::InexactDivision, "no precision left to divide by p");
  return from_raw(mod_.with_precision(mod_.precision() - 1), v_ / p);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus().value() << ")";
}

namespace {

std::int64_t checked_narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

RationalArg make(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return RationalArg(checked_narrow(num), checked_narrow(den));
}

}  // namespace

RationalArg::RationalArg(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(ErrorCode::BadParameters, "zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

RationalArg operator+(const RationalArg& a, const RationalArg& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

RationalArg operator-(const RationalArg& a, const RationalArg& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

RationalArg operator*(const RationalArg& a, const RationalArg& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

RationalArg operator/(const RationalArg& a, const RationalArg& b) {
  if (b.num_ == 0) throw Error(ErrorCode::BadParameters, "division by zero rational");
  return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const RationalArg& a, const RationalArg& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RationalArg::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalArg& q) { return os << q.str(); }

Residue inv_mod(const Residue& a) {
  const Modulus& mod = a.modulus();
  if (!a.is_unit()) {
    throw Error(ErrorCode::NonInvertible, std::to_string(a.value()) + " shares a factor with p");
  }
  // Extended Euclid on (value, m).
  std::int64_t old_r = static_cast<std::int64_t>(a.value());
  std::int64_t r = static_cast<std::int64_t>(mod.value());
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return Residue(mod, old_s);
}

Residue reduce_rational(const RationalArg& x, const Modulus& mod) {
  if (x.den() % static_cast<std::int64_t>(mod.prime()) == 0) {
    throw Error(ErrorCode::DenominatorDivisibleByP,
                x.str() + " is not " + std::to_string(mod.prime()) + "-integral");
  }
  return Residue(mod, x.num()) * inv_mod(Residue(mod, x.den()));
}

Residue teichmuller(std::uint64_t x, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (x >= p) throw Error(ErrorCode::OutOfRange, "teichmuller argument must lie in [0, p)");
  // Frobenius x -> x^p fixes the lift and each step gains one p-adic digit.
  std::uint64_t y = x;
  for (unsigned i = 1; i < mod.precision(); ++i) y = mod.pow(y, p);
  return Residue::from_raw(mod, y);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) noexcept { return a - floor_div(a, b) * b; }

std::pair<std::int64_t, RationalArg> floor_frac(const RationalArg& q) {
  const std::int64_t fl = floor_div(q.num(), q.den());
  return {fl, RationalArg(q.num() - fl * q.den(), q.den())};
}

}  // namespace supercong
