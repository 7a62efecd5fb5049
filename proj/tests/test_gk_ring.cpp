#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/char_sums.hpp"
#include "supercong/errors.hpp"
#include "supercong/gk_ring.hpp"
#include "supercong/padic_gamma.hpp"

using namespace supercong;

namespace {

GKElement random_element(const Modulus& mod, std::mt19937_64& rng) {
  GKElement x(mod);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x += GKElement::constant(mod, static_cast<std::int64_t>(rng() % mod.value())) *
         GKElement::pi_power(mod, i);
  }
  return x;
}

// Schoolbook product in Z[x] with x^{p-1} -> -p applied one degree at a time.
std::vector<std::int64_t> reference_mul(const GKElement& a, const GKElement& b) {
  const Modulus& mod = a.modulus();
  const auto m = static_cast<__int128>(mod.value());
  const std::size_t n = a.size();
  std::vector<__int128> full(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) full[i + j] = (full[i + j] + static_cast<__int128>(a.raw()[i]) * b.raw()[j]) % m;
  }
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    full[d - n] = (full[d - n] - static_cast<__int128>(mod.prime()) * full[d]) % m;
    full[d] = 0;
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(((full[i] % m) + m) % m);
  return out;
}

}  // namespace

TEST_CASE("defining relation") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const Modulus mod(p, 3);
    const GKElement pi = GKElement::pi_power(mod, 1);
    CHECK(pi * GKElement::pi_power(mod, p - 2) == GKElement::constant(mod, -static_cast<std::int64_t>(p)));
    CHECK(pi.pow(p - 1) + GKElement::constant(mod, static_cast<std::int64_t>(p)) == GKElement(mod));
    CHECK(GKElement::pi_power(mod, p - 1) == GKElement::constant(mod, -static_cast<std::int64_t>(p)));
  }
}

TEST_CASE("(1 + pi)^2 at p = 3") {
  const Modulus mod(3, 2);
  const GKElement x = GKElement::constant(mod, 1) + GKElement::pi_power(mod, 1);
  const GKElement sq = x * x;
  CHECK(sq.coeff(0).value() == 7);
  CHECK(sq.coeff(1).value() == 2);
}

TEST_CASE("ring product matches the schoolbook reference and the ring axioms") {
  std::mt19937_64 rng(3);
  for (auto [p, K] : {std::pair{3u, 4u}, {7u, 3u}, {13u, 3u}, {31u, 3u}}) {
    const Modulus mod(p, K);
    const GKElement one = GKElement::constant(mod, 1);
    for (int i = 0; i < 20; ++i) {
      const GKElement a = random_element(mod, rng);
      const GKElement b = random_element(mod, rng);
      const GKElement c = random_element(mod, rng);
      const GKElement ab = a * b;
      const auto ref = reference_mul(a, b);
      for (std::size_t k = 0; k < ab.size(); ++k) CHECK(ab.raw()[k] == static_cast<std::uint64_t>(ref[k]));
      CHECK(ab == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(one * a == a);
    }
  }
}

TEST_CASE("zeta_p is a primitive p-th root congruent to 1 + pi") {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 31}) {
    const Modulus mod(p, 3);
    const GKElement z = zeta_p(mod);
    CHECK(z.pow(p) == GKElement::constant(mod, 1));
    CHECK(z != GKElement::constant(mod, 1));
    GKElement sum(mod);
    for (std::uint64_t x = 0; x < p; ++x) sum += z.pow(x);
    CHECK(sum.is_zero());
    const GKElement diff = z - GKElement::constant(mod, 1) - GKElement::pi_power(mod, 1);
    CHECK(diff.valuation() >= 2);
  }
  CHECK_THROWS_AS(zeta_p(Modulus(2, 3)), Error);
}

TEST_CASE("trivial Gauss sums") {
  const Modulus mod(7, 3);
  CHECK(gauss_sum_direct(0, mod) == GKElement::constant(mod, -1));
  CHECK(gauss_sum_gk(0, mod) == GKElement::constant(mod, -1));
}

TEST_CASE("p = 3, j = 1 against -pi Gamma_3(1/2)") {
  const Modulus mod(3, 3);
  const GKElement expected = -(GKElement::constant(gamma_p(RationalArg(1, 2), mod)) * GKElement::pi_power(mod, 1));
  CHECK(gauss_sum_direct(1, mod) == expected);
}

TEST_CASE("Gauss sums from the definition agree with Gross-Koblitz") {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 31}) {
    const Modulus mod(p, 3);
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      CHECK_MESSAGE(gauss_sum_direct(j, mod) == gauss_sum_gk(j, mod), "p=" << p << " j=" << j);
      CHECK(gauss_sum_direct(j, mod).valuation() == j);
    }
  }
}

TEST_CASE("pair product of Gauss sums") {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const Modulus mod(p, 3);
    const GaussSumTable g(mod, GaussRoute::Direct);
    CHECK(g.conj_index(0) * g.conj_index(0) == GKElement::constant(mod, 1));
    const CharacterTable chars(mod);
    for (std::uint64_t j = 1; j + 1 < p; ++j) {
      const auto a = -static_cast<std::int64_t>(j);
      const GKElement prod = g.of_character(a) * g.of_character(-a);
      CHECK(prod == GKElement::constant(chars(a, p - 1) * static_cast<std::int64_t>(p)));
      CHECK(check_gauss_pair_product(j, g).passed());
    }
  }
}

TEST_CASE("division by a Gauss sum is exact and undoes multiplication") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {5, 7, 11}) {
    const Modulus mod(p, 4);
    const GaussSumTable g(mod, GaussRoute::GrossKoblitz);
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p - 1); ++a) {
      const GKElement x = random_element(mod, rng);
      const GKElement back = g.divide_by(x * g.of_character(a), a);
      CHECK(back == x.reduced_to(back.modulus().precision()));
    }
  }
}

TEST_CASE("divide_by_p and units") {
  const Modulus mod(7, 3);
  const GKElement x = GKElement::constant(mod, 14) + GKElement::pi_power(mod, 6);  // 14 - 7
  const GKElement q = x.divide_by_p();
  CHECK(q.modulus().precision() == 2);
  CHECK(q == GKElement::constant(mod.with_precision(2), 1));
  CHECK_THROWS_AS(GKElement::pi_power(mod, 1).divide_by_p(), Error);
  const GKElement u = GKElement::constant(mod, 3) + GKElement::pi_power(mod, 2);
  CHECK(u * u.unit_inverse() == GKElement::constant(mod, 1));
  CHECK(GKElement::pi_power(mod, 5).divide_by_pi_power(5) == GKElement::constant(mod.with_precision(2), 1));
}

TEST_CASE("Hasse-Davenport at p = 11") {
  const Modulus mod(11, 3);
  for (std::uint64_t m : {2, 5}) {
    for (std::uint64_t j = 0; j < 10; ++j) CHECK(check_hasse_davenport(m, j, mod).passed());
  }
  CHECK_THROWS_AS(check_hasse_davenport(3, 1, mod), Error);
}

TEST_CASE("additive character expansion at p = 7") {
  const Modulus mod(7, 3);
  const GaussSumTable g(mod, GaussRoute::Direct);
  const AdditiveCharacter theta(mod);
  for (std::uint64_t x = 1; x < 7; ++x) CHECK(check_additive_expansion(x, g, theta).passed());
}
