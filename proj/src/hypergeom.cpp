#include "supercong/hypergeom.hpp"

#include <numeric>

#include "supercong/char_sums.hpp"
#include "supercong/padic_gamma.hpp"

namespace supercong {

namespace {

std::string describe(const GSpec& spec) {
  std::string s = "(";
  for (std::size_t i = 0; i < spec.fractions.size(); ++i) {
    if (i) s += ",";
    s += spec.fractions[i].str();
  }
  return s + ")";
}

bool p_integral(const RationalArg& x, std::uint64_t p) {
  return x.den() % static_cast<std::int64_t>(p) != 0;
}

}  // namespace

HypergeomSpec quartic_series_spec(std::int64_t d, std::int64_t r, std::uint64_t p) {
  HypergeomSpec spec;
  spec.upper = {RationalArg(1, d), RationalArg(r, d), RationalArg(d - r, d), RationalArg(d - 1, d)};
  spec.lower = {RationalArg(1), RationalArg(1), RationalArg(1)};
  spec.z = RationalArg(1);
  spec.truncation = p - 1;
  return spec;
}

GSpec quartic_g_spec(std::int64_t d, std::int64_t r) {
  return GSpec{{RationalArg(1, d), RationalArg(r, d), RationalArg(d - r, d), RationalArg(d - 1, d)}};
}

Residue rising_factorial(const RationalArg& a, std::uint64_t n, const Modulus& mod) {
  Residue acc(mod, 1);
  RationalArg factor = a;
  for (std::uint64_t i = 0; i < n; ++i) {
    acc *= reduce_rational(factor, mod);
    factor = factor + RationalArg(1);
  }
  return acc;
}

Residue truncated_hypergeom(const HypergeomSpec& spec, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  for (const auto& b : spec.lower) {
    if (b.is_integer() && b.num() <= 0) {
      throw Error(ErrorCode::BadParameters, "lower parameter " + b.str() + " is a non-positive integer");
    }
  }
  if (!p_integral(spec.z, p)) throw Error(ErrorCode::TermNotPIntegral, "argument z is not p-integral");
  const Residue z = reduce_rational(spec.z, mod);

  Residue term(mod, 1);
  Residue sum = term;
  for (std::uint64_t n = 0; n < spec.truncation; ++n) {
    const RationalArg shift(static_cast<std::int64_t>(n));
    Residue numer = z;
    Residue denom(mod, static_cast<std::int64_t>(n + 1));
    for (const auto& a : spec.upper) {
      const RationalArg f = a + shift;
      if (!p_integral(f, p)) {
        throw Error(ErrorCode::TermNotPIntegral, "term n=" + std::to_string(n + 1) + " has p in a denominator");
      }
      numer *= reduce_rational(f, mod);
    }
    for (const auto& b : spec.lower) {
      const RationalArg f = b + shift;
      if (!p_integral(f, p)) {
        throw Error(ErrorCode::TermNotPIntegral, "term n=" + std::to_string(n + 1) + " has p in a denominator");
      }
      denom *= reduce_rational(f, mod);
    }
    if (!denom.is_unit()) {
      throw Error(ErrorCode::TermNotPIntegral, "term n=" + std::to_string(n + 1) + " divides by p");
    }
    term *= numer * inv_mod(denom);
    sum += term;
  }
  return sum;
}

Residue n_plus_one_g(const GSpec& spec, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (p == 2) throw Error(ErrorCode::BadParameters, "nG is defined for odd primes");
  if (spec.fractions.empty()) throw Error(ErrorCode::BadParameters, "nG needs at least one parameter");
  for (const auto& f : spec.fractions) {
    if (f <= RationalArg(0) || f >= RationalArg(1)) {
      throw Error(ErrorCode::BadParameters, "parameter " + f.str() + " must lie strictly between 0 and 1");
    }
    if (!p_integral(f, p)) throw Error(ErrorCode::DenominatorDivisibleByP, "parameter " + f.str());
  }
  const std::size_t count = spec.fractions.size();
  const auto n = static_cast<std::int64_t>(p - 1);

  // Layout: [j/(p-1) for j] [<m_i/d_i - j/(p-1)> for j, i] [m_i/d_i for i].
  std::vector<RationalArg> args;
  std::vector<std::int64_t> floors;
  args.reserve(static_cast<std::size_t>(n) * (count + 1) + count);
  for (std::int64_t j = 0; j < n; ++j) args.emplace_back(j, n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (const auto& f : spec.fractions) {
      auto [fl, frac] = floor_frac(f - RationalArg(j, n));
      if (fl != 0 && fl != -1) throw Error(ErrorCode::BadParameters, "floor outside {-1, 0}");
      floors.push_back(fl);
      args.push_back(frac);
    }
  }
  for (const auto& f : spec.fractions) args.push_back(f);
  const auto gammas = gamma_p_batch(args, mod);

  const std::size_t base_offset = static_cast<std::size_t>(n);
  const std::size_t denom_offset = base_offset + static_cast<std::size_t>(n) * count;
  Residue denom_inv(mod, 1);
  for (std::size_t i = 0; i < count; ++i) denom_inv *= gammas[denom_offset + i];
  denom_inv = inv_mod(denom_inv);
  const Residue minus_p(mod, -static_cast<std::int64_t>(p));

  Residue sum(mod, 0);
  for (std::int64_t j = 0; j < n; ++j) {
    Residue lead = gammas[static_cast<std::size_t>(j)];
    if (j & 1) lead = -lead;
    Residue term = lead.pow(count) * denom_inv;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = static_cast<std::size_t>(j) * count + i;
      term *= gammas[base_offset + at];
      if (floors[at] == -1) term *= minus_p;
    }
    sum += term;
  }
  return -(sum * inv_mod(Residue(mod, n)));
}

Residue s_factor(std::int64_t d, std::int64_t r, const Modulus& mod) {
  if (d < 4 || r < 2 || r > d - 2 || std::gcd(r, d) != 1) {
    throw Error(ErrorCode::BadParameters, "s(p) needs 2 <= r <= d-2 with gcd(r, d) = 1");
  }
  const RationalArg args[4] = {RationalArg(1, d), RationalArg(r, d), RationalArg(d - r, d), RationalArg(d - 1, d)};
  const auto g = gamma_p_batch(args, mod);
  return g[0] * g[1] * g[2] * g[3];
}

bool quartic_conditions_hold(std::int64_t d, std::int64_t r, std::uint64_t p) noexcept {
  if (d < 4 || r < 2 || r > d - 2 || std::gcd(r, d) != 1) return false;
  if (p == 2 || !is_prime(p) || static_cast<std::int64_t>(p) % d == 0) return false;
  const std::int64_t pm = static_cast<std::int64_t>(p) % d;
  if (pm == 1 || pm == d - 1) return true;
  const std::int64_t r2 = (r * r) % d;
  const bool r_square_unit = r2 == 1 || r2 == d - 1;
  return r_square_unit && (pm == r || pm == d - r);
}

VerificationReport check_thm_4g2(std::int64_t d, std::int64_t r, std::uint64_t p, unsigned K) {
  if (!quartic_conditions_hold(d, r, p)) {
    throw Error(ErrorCode::ConditionsNotMet, "d=" + std::to_string(d) + " r=" + std::to_string(r) +
                                                 " p=" + std::to_string(p));
  }
  const Modulus mod(p, K);
  const Residue lhs = n_plus_one_g(quartic_g_spec(d, r), mod);
  const Residue rhs = truncated_hypergeom(quartic_series_spec(d, r, p), mod) +
                      s_factor(d, r, mod) * static_cast<std::int64_t>(p);
  return compare("g4-supercongruence", "d=" + std::to_string(d) + " r=" + std::to_string(r), lhs, rhs);
}

VerificationReport check_prop_gtoghs(const GSpec& spec, std::uint64_t p, unsigned K) {
  if (spec.fractions.size() < 2) throw Error(ErrorCode::BadParameters, "need at least two parameters");
  std::vector<CharExponent> upper;
  for (const auto& f : spec.fractions) {
    if ((p - 1) % static_cast<std::uint64_t>(f.den()) != 0) {
      throw Error(ErrorCode::ConditionsNotMet, "p must be 1 mod " + std::to_string(f.den()));
    }
    // rho^{m} with rho = omega^{-(p-1)/d}
    upper.push_back(-f.num() * static_cast<std::int64_t>((p - 1) / static_cast<std::uint64_t>(f.den())));
  }
  const std::vector<CharExponent> lower(upper.size() - 1, 0);
  const Modulus mod(p, K);
  const Residue scaled = greene_hypergeom(upper, lower, 1, mod.with_precision(K + 1));
  Residue rhs = scaled.divide_by_p();  // p^n F
  if (lower.size() & 1) rhs = -rhs;
  const Residue lhs = n_plus_one_g(spec, mod);
  return compare("g-to-greene", "params=" + describe(spec), lhs, rhs);
}

VerificationReport check_greene_to_cp(std::uint64_t p, unsigned K, std::int64_t c_p) {
  if (p % 5 != 1) throw Error(ErrorCode::ConditionsNotMet, "needs p = 1 mod 5");
  const auto t = static_cast<std::int64_t>((p - 1) / 5);
  const std::vector<CharExponent> upper = {-t, -2 * t, -3 * t, -4 * t};
  const std::vector<CharExponent> lower = {0, 0, 0};
  const Modulus mod(p, K);
  const Residue p3F = greene_hypergeom(upper, lower, 1, mod.with_precision(K + 1)).divide_by_p();
  const Residue lhs = -p3F - Residue(mod, static_cast<std::int64_t>(p));
  return compare("greene-to-cp", "chi5=omega^-" + std::to_string(t), lhs, Residue(mod, c_p));
}

}  // namespace supercong
