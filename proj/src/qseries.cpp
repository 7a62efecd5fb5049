#include "supercong/qseries.hpp"

#include <array>
#include <limits>

namespace supercong {

namespace {

constexpr std::array<int, 5> kWeights = {1, 5, 20, 25, 25};

template <class Int>
BasicSeries<Int> build_f(std::size_t N) {
  BasicSeries<Int> f(N);
  for (int i = 1; i <= 5; ++i) {
    const auto fi = eta_quotient<Int>(weight_four_component(i), N);
    const Int w(kWeights[static_cast<std::size_t>(i - 1)]);
    for (std::size_t n = 0; n <= N; ++n) f[n] = detail::checked_add(f[n], detail::checked_mul(w, fi[n]));
  }
  return f;
}

}  // namespace

EtaQuotientSpec weight_four_component(int i) {
  if (i < 1 || i > 5) throw Error(ErrorCode::OutOfRange, "component index must lie in [1, 5]");
  const auto u = static_cast<std::uint64_t>(i);
  return EtaQuotientSpec{{{1, 5 - u}, {5, 4}, {25, u - 1}}};
}

IntSeries modular_form_f(std::size_t N) {
  if (N < 1) throw Error(ErrorCode::BadParameters, "order must be at least 1");
  try {
    return build_f<std::int64_t>(N);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }
  const BigSeries big = build_f<BigInt>(N);
  IntSeries out(N);
  for (std::size_t n = 0; n <= N; ++n) {
    if (big[n] > std::numeric_limits<std::int64_t>::max() || big[n] < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::Overflow, "c(" + std::to_string(n) + ") exceeds 64 bits");
    }
    out[n] = static_cast<std::int64_t>(big[n]);
  }
  return out;
}

std::int64_t coefficient(const IntSeries& f, std::size_t n) { return f.coefficient(n); }

}  // namespace supercong
