#pragma once

// Truncated q-series with exact integer coefficients: Dedekind eta factors,
// eta quotients and the weight-four form f = f1 + 5 f2 + 20 f3 + 25 f4 + 25 f5.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "supercong/errors.hpp"

namespace supercong {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "series coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "series coefficient overflow");
  return r;
}

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }

}  // namespace detail

/// Coefficients c_0 .. c_N of a power series in q, truncated at order N.
template <class Int>
class BasicSeries {
 public:
  explicit BasicSeries(std::size_t order) : c_(order + 1, Int(0)) {}

  static BasicSeries one(std::size_t order) {
    BasicSeries s(order);
    s.c_[0] = Int(1);
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }
  const Int& operator[](std::size_t n) const { return c_[n]; }
  Int& operator[](std::size_t n) { return c_[n]; }

  /// c(n); throws OutOfRange past the truncation order.
  const Int& coefficient(std::size_t n) const {
    if (n > order()) throw Error(ErrorCode::OutOfRange, "coefficient beyond truncation order");
    return c_[n];
  }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  std::vector<Int> c_;
};

using IntSeries = BasicSeries<std::int64_t>;
using BigSeries = BasicSeries<BigInt>;

template <class Int>
BasicSeries<Int> series_mul(const BasicSeries<Int>& a, const BasicSeries<Int>& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::OrderMismatch, "series of different orders");
  const std::size_t N = a.order();
  BasicSeries<Int> r(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j) {
      if (b[j] == 0) continue;
      r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a[i], b[j]));
    }
  }
  return r;
}

template <class Int>
BasicSeries<Int> series_pow(const BasicSeries<Int>& a, std::uint64_t e) {
  BasicSeries<Int> result = BasicSeries<Int>::one(a.order());
  BasicSeries<Int> base = a;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

/// prod_{n >= 1} (1 - q^{s n}) truncated at N, via the pentagonal number
/// theorem: sum_k (-1)^k q^{s k(3k-1)/2} over all integers k.
template <class Int = std::int64_t>
BasicSeries<Int> eta_core(std::uint64_t scale, std::size_t N) {
  if (scale == 0) throw Error(ErrorCode::BadParameters, "eta scale must be positive");
  BasicSeries<Int> s(N);
  s[0] = Int(1);
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t lo = scale * (k * (3 * k - 1) / 2);
    if (lo > N) break;
    const Int sign = (k & 1) ? Int(-1) : Int(1);
    s[lo] = sign;
    const std::uint64_t hi = scale * (k * (3 * k + 1) / 2);
    if (hi <= N) s[hi] = sign;
  }
  return s;
}

struct EtaFactor {
  std::uint64_t scale = 1;
  std::uint64_t exponent = 0;
};

/// prod eta(s z)^e, where each eta(s z) = q^{s/24} prod (1 - q^{s n}).
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;

  /// Leading q-power sum s e / 24; throws NonIntegralOffset.
  std::uint64_t offset() const {
    std::uint64_t total = 0;
    for (const auto& f : factors) total += f.scale * f.exponent;
    if (total % 24 != 0) {
      throw Error(ErrorCode::NonIntegralOffset, "eta quotient offset " + std::to_string(total) + "/24");
    }
    return total / 24;
  }
};

template <class Int = std::int64_t>
BasicSeries<Int> eta_quotient(const EtaQuotientSpec& spec, std::size_t N) {
  const std::uint64_t shift = spec.offset();
  BasicSeries<Int> out(N);
  if (shift > N) return out;
  const std::size_t inner = N - shift;
  BasicSeries<Int> prod = BasicSeries<Int>::one(inner);
  for (const auto& f : spec.factors) {
    if (f.exponent == 0) continue;
    prod = series_mul(prod, series_pow(eta_core<Int>(f.scale, inner), f.exponent));
  }
  for (std::size_t n = 0; n <= inner; ++n) out[n + shift] = prod[n];
  return out;
}

/// f_i = eta^{5-i}(z) eta^4(5z) eta^{i-1}(25z), i in [1, 5].
EtaQuotientSpec weight_four_component(int i);

/// f = f1 + 5 f2 + 20 f3 + 25 f4 + 25 f5 to order N. Computed in 64-bit with
/// overflow detection, redone with arbitrary precision if that trips.
IntSeries modular_form_f(std::size_t N);

/// c(n) of a computed series.
std::int64_t coefficient(const IntSeries& f, std::size_t n);

}  // namespace supercong
