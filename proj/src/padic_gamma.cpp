#include "supercong/padic_gamma.hpp"

#include <algorithm>
#include <numeric>

namespace supercong {

namespace {

// Fills out[i] = Gamma_p(lifts[i]) for integer lifts in [0, p^K).
void sweep(std::span<const std::uint64_t> lifts, const Modulus& mod, std::span<std::uint64_t> out) {
  std::vector<std::size_t> order(lifts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lifts[a] < lifts[b]; });

  const std::uint64_t p = mod.prime();
  std::uint64_t prod = 1 % mod.value();  // product over 0 < j < next, p not dividing j
  std::uint64_t next = 1;
  std::uint64_t phase = 1;  // next mod p
  for (std::size_t idx : order) {
    const std::uint64_t n = lifts[idx];
    while (next < n) {
      if (phase != 0) prod = mod.mul(prod, next);
      ++next;
      if (++phase == p) phase = 0;
    }
    out[idx] = (n & 1) ? mod.neg(prod) : prod;
  }
}

}  // namespace

Residue gamma_p_int(std::uint64_t n, const Modulus& mod) {
  std::uint64_t lift = n;
  std::uint64_t value = 0;
  sweep(std::span(&lift, 1), mod, std::span(&value, 1));
  return Residue::from_raw(mod, value);
}

Residue gamma_p(const RationalArg& x, const Modulus& mod) {
  return gamma_p_int(reduce_rational(x, mod).value(), mod);
}

std::vector<Residue> gamma_p_batch(std::span<const RationalArg> xs, const Modulus& mod) {
  std::vector<std::uint64_t> lifts;
  lifts.reserve(xs.size());
  for (const auto& x : xs) lifts.push_back(reduce_rational(x, mod).value());
  std::vector<std::uint64_t> values(xs.size());
  sweep(lifts, mod, values);
  std::vector<Residue> result;
  result.reserve(xs.size());
  for (std::uint64_t v : values) result.push_back(Residue::from_raw(mod, v));
  return result;
}

VerificationReport check_mult_formula(std::uint64_t m, const RationalArg& x, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (m == 0 || m % p == 0) throw Error(ErrorCode::BadParameters, "m must be positive and prime to p");
  const RationalArg scaled = x * RationalArg(static_cast<std::int64_t>(p - 1));
  if (!scaled.is_integer() || scaled.num() < 0 || scaled.num() > static_cast<std::int64_t>(p - 1)) {
    throw Error(ErrorCode::BadParameters, "x must be r/(p-1) with 0 <= r <= p-1");
  }
  const auto r = static_cast<std::uint64_t>(scaled.num());
  const auto mm = static_cast<std::int64_t>(m);

  // Arguments: (x+h)/m for h < m, then x, then h/m for 0 < h < m.
  std::vector<RationalArg> args;
  for (std::int64_t h = 0; h < mm; ++h) args.push_back((x + RationalArg(h)) / RationalArg(mm));
  args.push_back(x);
  for (std::int64_t h = 1; h < mm; ++h) args.push_back(RationalArg(h, mm));
  const auto g = gamma_p_batch(args, mod);

  Residue lhs(mod, 1);
  for (std::size_t h = 0; h < m; ++h) lhs *= g[h];

  // Exponent (1-x)(1-p) = r - (p-1), reduced mod the order of omega(m).
  const std::uint64_t e = r % (p - 1);
  Residue rhs = teichmuller(m % p, mod).pow(e) * g[m];
  for (std::size_t h = 1; h < m; ++h) rhs *= g[m + h];

  return compare("gamma-multiplication", "m=" + std::to_string(m) + " x=" + x.str(), lhs, rhs);
}

}  // namespace supercong
