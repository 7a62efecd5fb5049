#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/arith.hpp"
#include "supercong/errors.hpp"

using namespace supercong;

namespace {

// brute-force scan: the unique y in [0, m) with a*y = 1 mod m
std::uint64_t scan_inverse(std::uint64_t a, std::uint64_t m) {
  for (std::uint64_t y = 0; y < m; ++y) {
    if ((a % m) * y % m == 1 % m) return y;
  }
  return m;
}

}  // namespace

TEST_CASE("modulus rejects non-prime and oversized moduli") {
  CHECK_THROWS_AS(Modulus(9, 2), Error);
  CHECK_THROWS_AS(Modulus(7, 0), Error);
  CHECK_THROWS_AS(Modulus(3, 60), Error);
  CHECK(Modulus(7, 3).value() == 343);
}

TEST_CASE("inverse examples") {
  const Modulus m8(2, 3);
  CHECK(inv_mod(Residue(m8, 625)).value() == 1);
  CHECK(inv_mod(Residue(Modulus(7, 3), 1)).value() == 1);
  try {
    inv_mod(Residue(Modulus(7, 2), 7));
    FAIL("expected NonInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonInvertible);
  }
}

TEST_CASE("inverse agrees with a scan and is an involution") {
  for (auto [p, K] : {std::pair{2u, 5u}, {3u, 4u}, {7u, 3u}, {11u, 2u}}) {
    const Modulus mod(p, K);
    for (std::uint64_t a = 0; a < mod.value(); ++a) {
      const Residue x(mod, static_cast<std::int64_t>(a));
      if (!x.is_unit()) continue;
      CHECK(inv_mod(x).value() == scan_inverse(a, mod.value()));
      CHECK(inv_mod(inv_mod(x)) == x);
    }
  }
}

TEST_CASE("residue arithmetic matches 128-bit reference") {
  std::mt19937_64 rng(42);
  for (auto [p, K] : {std::pair{2u, 61u}, {3u, 38u}, {101u, 9u}, {65521u, 3u}, {7u, 3u}}) {
    const Modulus mod(p, K);
    const unsigned __int128 m = mod.value();
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t a = rng() % mod.value();
      const std::uint64_t b = rng() % mod.value();
      const Residue x = Residue::from_raw(mod, a);
      const Residue y = Residue::from_raw(mod, b);
      CHECK((x * y).value() == static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m));
      CHECK((x + y).value() == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m));
      CHECK((x - y + y) == x);
    }
  }
}

TEST_CASE("mixed moduli are rejected") {
  const Residue a(Modulus(7, 2), 3);
  const Residue b(Modulus(7, 3), 3);
  CHECK_THROWS_AS((void)(a + b), Error);
  CHECK_THROWS_AS((void)(a == b), Error);
}

TEST_CASE("reduce_rational examples") {
  const Modulus mod(7, 3);
  const Residue fifth = reduce_rational(RationalArg(1, 5), mod);
  CHECK(fifth.value() == scan_inverse(5, 343));
  CHECK(reduce_rational(RationalArg(0, 1), mod).value() == 0);
  try {
    reduce_rational(RationalArg(1, 7), mod);
    FAIL("expected DenominatorDivisibleByP");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorDivisibleByP);
  }
  CHECK(reduce_rational(RationalArg(-3, 10), mod) * 10 == Residue(mod, -3));
}

TEST_CASE("teichmuller examples") {
  const Modulus m(7, 2);
  CHECK(teichmuller(2, m).value() == 30);
  CHECK(teichmuller(1, Modulus(11, 3)).value() == 1);
  for (std::uint64_t p : {3, 5, 7, 13}) {
    const Modulus mod(p, 3);
    CHECK(teichmuller(p - 1, mod).value() == mod.value() - 1);
  }
  // scan oracle: the unique y = 2 mod 7 with y^6 = 1 mod 49
  std::uint64_t found = 0;
  for (std::uint64_t y = 2; y < 49; y += 7) {
    std::uint64_t acc = 1;
    for (int i = 0; i < 6; ++i) acc = acc * y % 49;
    if (acc == 1) found = y;
  }
  CHECK(found == 30);
}

TEST_CASE("teichmuller is a multiplicative root-of-unity lift") {
  for (auto [p, K] : {std::pair{3u, 5u}, {7u, 4u}, {11u, 3u}, {31u, 3u}}) {
    const Modulus mod(p, K);
    CHECK(teichmuller(0, mod).value() == 0);
    for (std::uint64_t x = 1; x < p; ++x) {
      const Residue w = teichmuller(x, mod);
      CHECK(w.pow(p - 1).value() == 1);
      CHECK(w.value() % p == x);
    }
    for (std::uint64_t x = 0; x < p; ++x) {
      for (std::uint64_t y = 0; y < p; ++y) {
        CHECK(teichmuller(x * y % p, mod) == teichmuller(x, mod) * teichmuller(y, mod));
      }
    }
  }
}

TEST_CASE("floor_frac examples and shift property") {
  CHECK(floor_frac(RationalArg(7, 5)) == std::pair<std::int64_t, RationalArg>{1, RationalArg(2, 5)});
  CHECK(floor_frac(RationalArg(-3, 10)) == std::pair<std::int64_t, RationalArg>{-1, RationalArg(7, 10)});
  CHECK(floor_frac(RationalArg(0)) == std::pair<std::int64_t, RationalArg>{0, RationalArg(0)});
  for (std::int64_t num = -30; num <= 30; ++num) {
    for (std::int64_t den : {1, 2, 5, 7, 12}) {
      const RationalArg q(num, den);
      const auto [f, frac] = floor_frac(q);
      for (std::int64_t n = -4; n <= 4; ++n) {
        const auto [g, frac2] = floor_frac(q + RationalArg(n));
        CHECK(g == f + n);
        CHECK(frac2 == frac);
      }
      CHECK(RationalArg(0) <= frac);
      CHECK(frac < RationalArg(1));
    }
  }
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_floor(-7, 5) == 3);
}

TEST_CASE("rationals stay reduced with a positive denominator") {
  const RationalArg q(6, -4);
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(q.str() == "-3/2");
  CHECK_THROWS_AS(RationalArg(1, 0), Error);
}

TEST_CASE("divide_by_p lowers precision and requires exactness") {
  const Modulus mod(5, 4);
  const Residue x(mod, 5 * 37);
  const Residue q = x.divide_by_p();
  CHECK(q.modulus().precision() == 3);
  CHECK(q.value() == 37);
  CHECK_THROWS_AS(Residue(mod, 6).divide_by_p(), Error);
  CHECK(Residue(mod, 612).reduced_to(2).value() == 612 % 25);
}
