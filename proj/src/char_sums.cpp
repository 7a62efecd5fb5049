#include "supercong/char_sums.hpp"

#include <string>

namespace supercong {

namespace {

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const std::uint64_t n = p - 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t r = n;
  for (std::uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      factors.push_back(d);
      while (r % d == 0) r /= d;
    }
  }
  if (r > 1) factors.push_back(r);
  const Modulus fp(p, 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors) ok = ok && fp.pow(g, n / q) != 1;
    if (ok) return g;
  }
  throw Error(ErrorCode::BadParameters, "no primitive root");
}

std::string join(std::span<const CharExponent> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + ")";
}

std::uint64_t order_five_step(const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (p % 5 != 1) throw Error(ErrorCode::NotOneModFive, "an order-5 character needs p = 1 mod 5");
  return (p - 1) / 5;
}

}  // namespace

bool twisted_sum_admissible(std::int64_t a, std::int64_t b, std::int64_t c) noexcept {
  return mod_floor(a + c, 5) != 0 && mod_floor(b + c, 5) != 0;
}

CharacterTable::CharacterTable(const Modulus& mod) : mod_(mod) {
  const std::uint64_t p = mod.prime();
  const std::uint64_t n = p - 1;
  const std::uint64_t g = primitive_root(p);
  log_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    log_[x] = k;
    x = x * g % p;
  }
  const Residue w = teichmuller(g % p, mod);
  roots_.reserve(n);
  Residue acc(mod, 1);
  for (std::uint64_t k = 0; k < n; ++k) {
    roots_.push_back(acc.value());
    acc *= w;
  }
}

std::uint64_t CharacterTable::raw(CharExponent a, std::uint64_t x) const {
  const std::uint64_t p = mod_.prime();
  const std::uint64_t xr = x % p;
  if (xr == 0) return 0;
  const auto n = static_cast<std::int64_t>(p - 1);
  const auto e = static_cast<std::uint64_t>(mod_floor(a, n));
  return roots_[(e * log_[xr]) % (p - 1)];
}

std::vector<std::uint64_t> CharacterTable::values(CharExponent a) const {
  std::vector<std::uint64_t> v(mod_.prime());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = raw(a, x);
  return v;
}

Residue char_value(CharExponent a, std::uint64_t x, const Modulus& mod) {
  if (x >= mod.prime()) throw Error(ErrorCode::OutOfRange, "character argument must lie in [0, p)");
  return CharacterTable(mod)(a, x);
}

Residue orthogonality_element(CharExponent a, const Modulus& mod) {
  const CharacterTable chars(mod);
  Residue sum(mod, 0);
  for (std::uint64_t x = 0; x < mod.prime(); ++x) sum += chars(a, x);
  return sum;
}

Residue orthogonality_character(std::uint64_t x, const Modulus& mod) {
  const CharacterTable chars(mod);
  Residue sum(mod, 0);
  for (std::uint64_t a = 0; a < chars.order(); ++a) sum += chars(static_cast<CharExponent>(a), x);
  return sum;
}

Residue jacobi_sum(std::span<const CharExponent> exponents, const Modulus& mod) {
  const std::size_t k = exponents.size();
  if (k < 2 || k > 4) throw Error(ErrorCode::BadParameters, "Jacobi sums are evaluated for 2 <= k <= 4");
  const CharacterTable chars(mod);
  const std::uint64_t p = mod.prime();
  std::vector<std::vector<std::uint64_t>> vals;
  vals.reserve(k);
  for (CharExponent a : exponents) vals.push_back(chars.values(a));

  // t_1 .. t_{k-1} free, t_k = 1 - (t_1 + ... + t_{k-1}).
  std::uint64_t total = 0;
  std::vector<std::uint64_t> t(k - 1, 0);
  const auto walk = [&](auto&& self, std::size_t depth, std::uint64_t partial_sum, std::uint64_t partial) -> void {
    if (partial == 0) return;
    if (depth == k - 1) {
      const std::uint64_t last = (1 + p - partial_sum) % p;
      total = mod.add(total, mod.mul(partial, vals[k - 1][last]));
      return;
    }
    for (std::uint64_t x = 1; x < p; ++x) {
      self(self, depth + 1, (partial_sum + x) % p, mod.mul(partial, vals[depth][x]));
    }
  };
  walk(walk, 0, 0, 1 % mod.value());
  return Residue::from_raw(mod, total);
}

VerificationReport jacobi_to_gauss_check(std::span<const CharExponent> exponents, const Modulus& mod) {
  const auto n = static_cast<std::int64_t>(mod.prime() - 1);
  bool all_trivial = true;
  std::int64_t product = 0;
  for (CharExponent a : exponents) {
    all_trivial = all_trivial && mod_floor(a, n) == 0;
    product += a;
  }
  if (all_trivial) throw Error(ErrorCode::BadParameters, "Jacobi-to-Gauss relation needs a nontrivial character");

  const Residue J = jacobi_sum(exponents, mod);
  // One division by p happens in either branch; compute one digit higher.
  const GaussSumTable g(mod.with_precision(mod.precision() + 1), GaussRoute::Direct);
  GKElement numer = GKElement::constant(g.modulus(), 1);
  for (CharExponent a : exponents) numer *= g.of_character(a);
  GKElement rhs(mod);
  if (mod_floor(product, n) != 0) {
    rhs = g.divide_by(numer, product).reduced_to(mod.precision());
  } else {
    rhs = (-numer).divide_by_p();
  }
  return compare_elements("jacobi-to-gauss", "chars=" + join(exponents), GKElement::constant(J), rhs);
}

VerificationReport jacobi_reduction_check(std::span<const CharExponent> exponents, const Modulus& mod) {
  const auto n = static_cast<std::int64_t>(mod.prime() - 1);
  if (exponents.size() < 3) throw Error(ErrorCode::BadParameters, "reduction needs k >= 3");
  bool all_trivial = true;
  std::int64_t product = 0;
  for (CharExponent a : exponents) {
    all_trivial = all_trivial && mod_floor(a, n) == 0;
    product += a;
  }
  if (all_trivial || mod_floor(product, n) != 0) {
    throw Error(ErrorCode::BadParameters, "reduction needs a trivial product of not-all-trivial characters");
  }
  const Residue lhs = jacobi_sum(exponents, mod);
  const Residue sign = char_value(exponents.back(), mod.prime() - 1, mod);
  const Residue rhs = -(sign * jacobi_sum(exponents.first(exponents.size() - 1), mod));
  return compare("jacobi-reduction", "chars=" + join(exponents), lhs, rhs);
}

Residue twisted_jacobi_sum(std::int64_t a, std::int64_t b, std::int64_t c, const Modulus& mod) {
  const auto t = static_cast<std::int64_t>(order_five_step(mod));
  if (!twisted_sum_admissible(a, b, c)) throw Error(ErrorCode::BadParameters, "a+c and b+c must be nonzero mod 5");
  const CharacterTable chars(mod);
  const std::uint64_t minus_one = mod.prime() - 1;
  Residue sum(mod, 0);
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(chars.order()); ++s) {
    const CharExponent triple[3] = {-s + t * a, -s + t * b, s + t * c};
    sum += chars(s, minus_one) * jacobi_sum(triple, mod);
  }
  return sum;
}

Residue twisted_gauss_sum(std::int64_t a, std::int64_t b, std::int64_t c, const Modulus& mod) {
  const auto t = static_cast<std::int64_t>(order_five_step(mod));
  if (!twisted_sum_admissible(a, b, c)) throw Error(ErrorCode::BadParameters, "a+c and b+c must be nonzero mod 5");
  const GaussSumTable g(mod, GaussRoute::Direct);
  GKElement sum(mod);
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(mod.prime() - 1); ++s) {
    sum += g.of_character(-s + t * a) * g.of_character(-s + t * b) * g.of_character(s + t * c) *
           g.of_character(s - t * (a + b + c));
  }
  if (!sum.is_integral_rational()) throw Error(ErrorCode::NonIntegralResult, "Gauss-sum total " + sum.str());
  return sum.constant_term();
}

Residue greene_binom(CharExponent A, CharExponent B, const Modulus& mod) {
  const CharacterTable chars(mod);
  const std::uint64_t p = mod.prime();
  Residue sum(mod, 0);
  for (std::uint64_t x = 0; x < p; ++x) sum += chars(A, x) * chars(-B, (1 + p - x) % p);
  return chars(B, p - 1) * sum;
}

namespace {

std::uint64_t scaled_binom(const CharacterTable& chars, CharExponent A, CharExponent B) {
  const Modulus& mod = chars.modulus();
  const std::uint64_t p = mod.prime();
  std::uint64_t sum = 0;
  for (std::uint64_t x = 1; x < p; ++x) sum = mod.add(sum, mod.mul(chars.raw(A, x), chars.raw(-B, (1 + p - x) % p)));
  return mod.mul(chars.raw(B, p - 1), sum);
}

}  // namespace

Residue greene_hypergeom(std::span<const CharExponent> upper, std::span<const CharExponent> lower,
                         std::uint64_t x, const Modulus& mod) {
  if (upper.size() != lower.size() + 1) {
    throw Error(ErrorCode::BadParameters, "need n+1 upper and n lower characters");
  }
  if (x >= mod.prime()) throw Error(ErrorCode::OutOfRange, "argument must lie in [0, p)");
  const CharacterTable chars(mod);
  std::uint64_t total = 0;
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(chars.order()); ++s) {
    std::uint64_t term = mod.mul(scaled_binom(chars, upper[0] + s, s), chars.raw(s, x));
    for (std::size_t i = 0; i < lower.size() && term != 0; ++i) {
      term = mod.mul(term, scaled_binom(chars, upper[i + 1] + s, lower[i] + s));
    }
    total = mod.add(total, term);
  }
  const auto p = static_cast<std::int64_t>(mod.prime());
  return Residue::from_raw(mod, total) * p * inv_mod(Residue(mod, p - 1));
}

VerificationReport check_gauss_pair_product(std::uint64_t j, const GaussSumTable& sums) {
  const Modulus& mod = sums.modulus();
  const auto jj = static_cast<std::int64_t>(j);
  const GKElement lhs = sums.conj_index(jj) * sums.conj_index(-jj);
  const auto p = static_cast<std::int64_t>(mod.prime());
  const std::int64_t rhs = (j % (mod.prime() - 1) == 0) ? 1 : ((j & 1) ? -p : p);
  return compare_elements("gauss-pair-product", "chi=omega^-" + std::to_string(j), lhs,
                          GKElement::constant(mod, rhs));
}

VerificationReport check_additive_expansion(std::uint64_t x, const GaussSumTable& sums,
                                            const AdditiveCharacter& theta) {
  const Modulus& mod = sums.modulus();
  const auto n = static_cast<std::int64_t>(mod.prime() - 1);
  if (x % mod.prime() == 0) throw Error(ErrorCode::BadParameters, "expansion holds for x != 0");
  GKElement sum(mod);
  for (std::int64_t a = 0; a < n; ++a) sum += sums.of_character(-a) * sums.character(a, x);
  sum *= inv_mod(Residue(mod, n));
  return compare_elements("additive-expansion", "x=" + std::to_string(x), theta(static_cast<std::int64_t>(x)), sum);
}

}  // namespace supercong
