#include "supercong/point_count.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "supercong/gk_ring.hpp"
#include "supercong/hypergeom.hpp"

namespace supercong {

std::string_view to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::Brute: return "brute";
    case CountMethod::Koblitz: return "koblitz";
    case CountMethod::CharSum: return "charsum";
  }
  return "brute";
}

CountMethod parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::Brute;
  if (name == "koblitz") return CountMethod::Koblitz;
  if (name == "charsum") return CountMethod::CharSum;
  throw Error(ErrorCode::BadParameters, "unknown count method " + std::string(name));
}

namespace {

std::uint64_t int_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t projective_base(std::uint64_t p) {  // (p^4 - 1)/(p - 1)
  return p * p * p + p * p + p + 1;
}

// Reads the integer off an integral-rational element known to exceed any count.
std::uint64_t extract_count(const GKElement& total, unsigned K, const char* what) {
  if (!total.is_integral_rational()) {
    throw Error(ErrorCode::NonIntegralResult, std::string(what) + " produced " + total.str());
  }
  return total.reduced_to(K).constant_term().value();
}

void require_generator(std::uint64_t p, std::int64_t g) {
  if (std::gcd(mod_floor(g, static_cast<std::int64_t>(p - 1)), static_cast<std::int64_t>(p - 1)) != 1) {
    throw Error(ErrorCode::BadParameters, "omega^" + std::to_string(g) + " does not generate the characters");
  }
}

}  // namespace

std::vector<std::uint8_t> fifth_power_root_table(std::uint64_t p) {
  std::vector<std::uint8_t> table(p * p, 0);
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t x = 0; x < p; ++x) {
      const std::uint64_t x5 = int_pow(x, 5) % p;
      const std::uint64_t b = (2 * p - (x5 + a * x % p)) % p;
      ++table[a * p + b];
    }
  }
  return table;
}

std::uint64_t affine_count_brute(std::uint64_t p, std::uint64_t lambda, unsigned jobs) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
  if (p > kBruteForceLimit) {
    throw Error(ErrorCode::TooLarge, "enumeration is limited to p <= " + std::to_string(kBruteForceLimit));
  }
  const auto table = fifth_power_root_table(p);
  std::vector<std::uint64_t> pow5(p);
  for (std::uint64_t x = 0; x < p; ++x) pow5[x] = int_pow(x, 5) % p;
  // x5^5 + a x5 + b = 0 with a = -5 lambda x1 x2 x3 x4 and b = x1^5 + ... + x4^5.
  const std::uint64_t coef = (p - (5 * (lambda % p)) % p) % p;

  const auto work = [&](std::uint64_t x1_begin, std::uint64_t x1_end) {
    std::uint64_t acc = 0;
    for (std::uint64_t x1 = x1_begin; x1 < x1_end; ++x1) {
      const std::uint64_t c1 = coef * x1 % p;
      for (std::uint64_t x2 = 0; x2 < p; ++x2) {
        const std::uint64_t c2 = c1 * x2 % p;
        const std::uint64_t s2 = (pow5[x1] + pow5[x2]) % p;
        for (std::uint64_t x3 = 0; x3 < p; ++x3) {
          const std::uint64_t c3 = c2 * x3 % p;
          const std::uint64_t s3 = (s2 + pow5[x3]) % p;
          std::uint64_t a = 0;  // c3 * x4 mod p, stepped
          for (std::uint64_t x4 = 0; x4 < p; ++x4) {
            std::uint64_t b = s3 + pow5[x4];
            if (b >= p) b -= p;
            acc += table[a * p + b];
            a += c3;
            if (a >= p) a -= p;
          }
        }
      }
    }
    return acc;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(p)));
  if (threads == 1) return work(0, p);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = p * t / threads;
    const std::uint64_t hi = p * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] { partial[t] = work(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

CountResult count_brute(std::uint64_t p, std::uint64_t lambda, unsigned jobs) {
  const std::uint64_t affine = affine_count_brute(p, lambda, jobs);
  if ((affine - 1) % (p - 1) != 0) {
    throw Error(ErrorCode::NonIntegralResult, "affine count is not 1 mod p-1");
  }
  return CountResult{p, lambda % p, (affine - 1) / (p - 1), CountMethod::Brute};
}

KoblitzData koblitz_data(std::uint64_t p, std::int64_t generator_exponent, int d) {
  if (d < 1 || (p - 1) % static_cast<std::uint64_t>(d) != 0) {
    throw Error(ErrorCode::OrderNotDividing, "d must divide p-1");
  }
  KoblitzData data;
  data.d = d;
  data.t = (p - 1) / static_cast<std::uint64_t>(d);
  data.generator_exponent = generator_exponent;
  Exponents w{};
  const auto total = static_cast<int>(int_pow(static_cast<std::uint64_t>(d), 5));
  for (int code = 0; code < total; ++code) {
    int c = code;
    int sum = 0;
    for (int i = 4; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = c % d;
      sum += c % d;
      c /= d;
    }
    if (sum % d != 0) continue;
    data.W.push_back(w);
    Exponents least = w;
    for (int k = 1; k < d; ++k) {
      Exponents shifted;
      for (std::size_t i = 0; i < 5; ++i) shifted[i] = (w[i] + k) % d;
      least = std::min(least, shifted);
    }
    if (least == w) data.classes.push_back(w);
  }
  return data;
}

std::map<Exponents, int> w_star_listing(const KoblitzData& data) {
  std::map<Exponents, int> out;
  for (Exponents w : data.W) {
    if (std::find(w.begin(), w.end(), 0) != w.end()) continue;
    std::sort(w.begin(), w.end());
    ++out[w];
  }
  return out;
}

std::map<Exponents, int> class_listing(const KoblitzData& data) {
  std::map<Exponents, int> out;
  for (const Exponents& w : data.classes) {
    Exponents best{};
    bool first = true;
    for (int k = 0; k < data.d; ++k) {
      Exponents shifted;
      for (std::size_t i = 0; i < 5; ++i) shifted[i] = (w[i] + k) % data.d;
      std::sort(shifted.begin(), shifted.end());
      if (first || shifted < best) best = shifted;
      first = false;
    }
    ++out[best];
  }
  return out;
}

unsigned count_precision(std::uint64_t p) {
  const std::uint64_t bound = p * p * p + 25 * p * p;
  unsigned K = 1;
  for (std::uint64_t m = p; m <= bound; m *= p) ++K;
  return K;
}

unsigned n_to_g_precision(std::uint64_t p) {
  const std::uint64_t bound = 2 * (p * p * p + 25 * p * p);
  unsigned K = 1;
  for (std::uint64_t m = p; m <= bound; m *= p) ++K;
  return K;
}

CountResult count_koblitz(std::uint64_t p, std::uint64_t lambda, unsigned K, std::int64_t generator_exponent) {
  if (!is_prime(p)) throw Error(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
  if (p % 5 != 1) throw Error(ErrorCode::NotOneModFive, "Koblitz's formula needs p = 1 mod 5");
  if (p > kRingCountLimit) throw Error(ErrorCode::TooLarge, "Gauss sums in R are limited to p <= 31");
  if ((5 * lambda) % p == 0) throw Error(ErrorCode::BadParameters, "lambda must be nonzero mod p");
  require_generator(p, generator_exponent);
  if (K == 0) K = count_precision(p);

  const Modulus work(p, K + 1);  // every division by p costs one digit
  const Modulus lower = work.with_precision(K);
  const GaussSumTable g(work, GaussRoute::GrossKoblitz);
  const KoblitzData data = koblitz_data(p, generator_exponent);
  const auto t = static_cast<std::int64_t>(data.t);
  const std::int64_t gen = generator_exponent;
  const auto gT = [&](std::int64_t k) -> const GKElement& { return g.of_character(gen * k); };

  // sum over W of N_p(0, w)
  GKElement zero_part(lower);
  std::int64_t all_zero_count = 0;
  for (const Exponents& w : data.W) {
    const auto zeros = std::count(w.begin(), w.end(), 0);
    if (zeros == 5) {
      ++all_zero_count;
    } else if (zeros == 0) {
      GKElement prod = GKElement::constant(work, 1);
      for (int wi : w) prod *= gT(wi * t);
      zero_part += prod.divide_by_p();
    }
  }
  zero_part += GKElement::constant(lower, all_zero_count * static_cast<std::int64_t>(projective_base(p)));

  GKElement class_part(lower);
  const std::uint64_t target = (5 * lambda) % p;
  for (const Exponents& w : data.classes) {
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(p - 1); ++j) {
      GKElement prod = GKElement::constant(work, 1);
      for (int wi : w) prod *= gT(j + wi * t);
      prod *= g.character(gen * 5 * j, target);
      GKElement q = g.divide_by(prod, gen * 5 * j);
      class_part += q.modulus().precision() == lower.precision() ? q : q.reduced_to(lower.precision());
    }
  }
  class_part *= Residue(lower, static_cast<std::int64_t>(p - 1)).inverse();

  const std::uint64_t n = extract_count(zero_part + class_part, K, "Koblitz count");
  return CountResult{p, lambda % p, n, CountMethod::Koblitz};
}

CountResult count_charsum(std::uint64_t p, std::uint64_t lambda, unsigned K, std::int64_t generator_exponent) {
  if (!is_prime(p) || p == 2) throw Error(ErrorCode::BadParameters, "character-sum count needs an odd prime");
  if (p % 5 == 1) throw Error(ErrorCode::IsOneModFive, "x -> x^5 is not a bijection when p = 1 mod 5");
  if (p > kRingCountLimit) throw Error(ErrorCode::TooLarge, "Gauss sums in R are limited to p <= 31");
  if (lambda % p == 0) throw Error(ErrorCode::BadParameters, "lambda must be nonzero mod p");
  require_generator(p, generator_exponent);
  if (K == 0) K = count_precision(p);

  const Modulus work(p, K + 1);  // every division by p costs one digit
  const Modulus lower = work.with_precision(K);
  const GaussSumTable g(work, GaussRoute::Direct);
  const std::int64_t gen = generator_exponent;
  const std::uint64_t arg = (p - (5 * (lambda % p)) % p) % p;  // -5 lambda

  GKElement sum(work);
  for (std::int64_t e = 1; e < static_cast<std::int64_t>(p - 1); ++e) {
    const GKElement& ge = g.of_character(-gen * e);
    GKElement term = ge * ge;
    term *= term;
    term *= ge;
    term *= g.of_character(gen * 5 * e);
    term *= g.character(-gen * 5 * e, arg);
    sum += term;
  }
  GKElement bracket = sum.divide_by_p() + GKElement::constant(lower, 1);
  bracket *= Residue(lower, static_cast<std::int64_t>(p - 1)).inverse();
  bracket += GKElement::constant(lower, static_cast<std::int64_t>(projective_base(p)));
  const std::uint64_t n = extract_count(bracket, K, "character-sum count");
  return CountResult{p, lambda % p, n, CountMethod::CharSum};
}

std::int64_t schoen_cp(std::uint64_t p, std::uint64_t n_p) {
  const auto q = static_cast<std::int64_t>(p);
  const auto n = static_cast<std::int64_t>(n_p);
  switch (p % 5) {
    case 0: throw Error(ErrorCode::PIsFive, "no trace relation at p = 5");
    case 1: return q * q * q + 25 * q * q - 100 * q + 1 - n;
    case 4: return q * q * q + q * q + 1 - n;
    default: return q * q * q + q * q + 2 * q + 1 - n;
  }
}

std::int64_t point_count_polynomial(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p);
  if (p % 5 == 0) throw Error(ErrorCode::PIsFive, "no point-count identity at p = 5");
  if (p % 5 == 1) return q * q * q + 25 * q * q - 99 * q + 1;
  return q * q * q + q * q + q + 1;
}

VerificationReport check_n_to_g(std::uint64_t p, unsigned K, unsigned jobs) {
  if (p == 2 || p == 5 || !is_prime(p)) throw Error(ErrorCode::BadParameters, "needs an odd prime other than 5");
  if (K == 0) K = n_to_g_precision(p);
  const Modulus mod(p, K);
  const CountResult count = count_brute(p, 1, jobs);
  const Residue g4 = n_plus_one_g(quartic_g_spec(5, 2), mod);
  const Residue lhs = Residue(mod, static_cast<std::int64_t>(count.projective_count)) + g4;
  const Residue rhs(mod, point_count_polynomial(p));
  VerificationReport r = compare("count-plus-g4", "K=" + std::to_string(K) + " N_p=" + std::to_string(count.projective_count), lhs, rhs);
  return r;
}

VerificationReport check_fifth_power_sum(std::uint64_t p, unsigned K) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::BadParameters, "needs an odd prime");
  if (p % 5 == 1) throw Error(ErrorCode::IsOneModFive, "fifth powers are not a bijection when p = 1 mod 5");
  const Modulus mod(p, K);
  // dist[s] = #{x in (F_p^*)^5 : sum x_i^5 = s}
  std::vector<std::uint64_t> one(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) ++one[int_pow(x, 5) % p];
  std::vector<std::uint64_t> dist(p, 0);
  dist[0] = 1;
  for (int round = 0; round < 5; ++round) {
    std::vector<std::uint64_t> next(p, 0);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) next[(a + b) % p] += dist[a] * one[b];
    }
    dist = std::move(next);
  }
  const AdditiveCharacter theta(mod);
  GKElement lhs(mod);
  for (std::uint64_t y = 1; y < p; ++y) {
    for (std::uint64_t s = 0; s < p; ++s) {
      lhs += theta(static_cast<std::int64_t>(y * s % p)) * Residue(mod, static_cast<std::int64_t>(dist[s]));
    }
  }
  return compare_elements("fifth-power-sum", "", lhs,
                          GKElement::constant(mod, -static_cast<std::int64_t>(p - 1)));
}

VerificationReport check_koblitz_listing() {
  const std::map<Exponents, int> expected_w_star = {
      {{1, 1, 1, 1, 1}, 1},  {{2, 2, 2, 2, 2}, 1},  {{3, 3, 3, 3, 3}, 1},  {{4, 4, 4, 4, 4}, 1},
      {{1, 1, 1, 3, 4}, 20}, {{1, 2, 2, 2, 3}, 20}, {{2, 3, 3, 3, 4}, 20}, {{1, 2, 4, 4, 4}, 20},
      {{1, 1, 2, 2, 4}, 30}, {{2, 2, 3, 4, 4}, 30}, {{1, 1, 2, 3, 3}, 30}, {{1, 3, 3, 4, 4}, 30}};
  const std::map<Exponents, int> expected_classes = {
      {{0, 0, 0, 0, 0}, 1},  {{0, 1, 2, 3, 4}, 24}, {{0, 0, 0, 1, 4}, 20},
      {{0, 0, 0, 2, 3}, 20}, {{0, 0, 1, 1, 3}, 30}, {{0, 0, 1, 2, 2}, 30}};
  const KoblitzData data = koblitz_data(11);
  const auto w_star = w_star_listing(data);
  const auto classes = class_listing(data);

  const auto total = [](const std::map<Exponents, int>& m) {
    int n = 0;
    for (const auto& [k, v] : m) n += v;
    return n;
  };
  VerificationReport r;
  r.identity = "koblitz-listing";
  r.prime = 11;
  r.params = "d=5 n=5";
  r.lhs = "W*=" + std::to_string(total(w_star)) + " classes=" + std::to_string(total(classes));
  r.rhs = "W*=" + std::to_string(total(expected_w_star)) + " classes=" + std::to_string(total(expected_classes));
  r.status = (w_star == expected_w_star && classes == expected_classes) ? Status::Pass : Status::Fail;
  return r;
}

}  // namespace supercong
