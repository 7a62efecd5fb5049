#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercong/errors.hpp"
#include "supercong/point_count.hpp"

using namespace supercong;

namespace {

// All p^5 affine tuples, no tables.
std::uint64_t naive_affine(std::uint64_t p, std::uint64_t lambda) {
  std::uint64_t n = 0;
  const auto pw5 = [p](std::uint64_t x) { return x * x % p * x % p * x % p * x % p; };
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d)
          for (std::uint64_t e = 0; e < p; ++e) {
            const std::uint64_t sum = (pw5(a) + pw5(b) + pw5(c) + pw5(d) + pw5(e)) % p;
            const std::uint64_t prod = 5 * (lambda % p) % p * a % p * b % p * c % p * d % p * e % p;
            if (sum == prod) ++n;
          }
  return n;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::BadParameters;
}

}  // namespace

TEST_CASE("p = 2 base case") {
  CHECK(affine_count_brute(2, 1) == 17);
  CHECK(count_brute(2).projective_count == 16);
  CHECK(schoen_cp(2, 16) == 1);
}

TEST_CASE("root table") {
  for (std::uint64_t p : {2, 3, 7, 11, 31}) {
    const auto t = fifth_power_root_table(p);
    std::uint64_t total = 0;
    for (auto v : t) total += v;
    CHECK(total == p * p);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        std::uint64_t roots = 0;
        for (std::uint64_t x = 0; x < p; ++x) {
          if ((x * x % p * x % p * x % p * x + a * x + b) % p == 0) ++roots;
        }
        CHECK(t[a * p + b] == roots);
      }
    }
  }
}

TEST_CASE("enumeration against the naive scan") {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (std::uint64_t lambda : {0, 1, 2}) {
      CHECK(affine_count_brute(p, lambda) == naive_affine(p, lambda));
    }
  }
  CHECK(affine_count_brute(13, 1, 1) == affine_count_brute(13, 1, 4));
  CHECK(affine_count_brute(13, 1, 1) == affine_count_brute(13, 1, 64));
  CHECK(code_of([] { count_brute(103); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { count_brute(9); }) == ErrorCode::BadParameters);
}

TEST_CASE("character-sum count equals enumeration") {
  for (std::uint64_t p : {3, 7, 13, 17, 19, 23, 29}) {
    CHECK_MESSAGE(count_charsum(p).projective_count == count_brute(p).projective_count, "p=" << p);
  }
  for (std::uint64_t lambda : {2, 3, 6, 8}) {
    CHECK(count_charsum(7, lambda).projective_count == count_brute(7, lambda).projective_count);
    CHECK(count_charsum(13, lambda).projective_count == count_brute(13, lambda).projective_count);
  }
  CHECK(count_charsum(7, 1, 0, 5).projective_count == count_charsum(7).projective_count);
  CHECK(code_of([] { count_charsum(11); }) == ErrorCode::IsOneModFive);
  CHECK(code_of([] { count_charsum(7, 14); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { count_charsum(37); }) == ErrorCode::TooLarge);
}

TEST_CASE("Koblitz count equals enumeration") {
  for (std::uint64_t p : {11, 31}) {
    CHECK(count_koblitz(p).projective_count == count_brute(p).projective_count);
  }
  for (std::uint64_t lambda : {2, 3, 4, 10}) {
    CHECK(count_koblitz(11, lambda).projective_count == count_brute(11, lambda).projective_count);
  }
  CHECK(code_of([] { count_koblitz(7); }) == ErrorCode::NotOneModFive);
  CHECK(code_of([] { count_koblitz(41); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { count_koblitz(11, 0); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { count_koblitz(11, 1, 0, 2); }) == ErrorCode::BadParameters);
}

TEST_CASE("Koblitz count does not depend on the generator") {
  for (std::int64_t g : {1, 3, 7, 9, -1}) {
    CHECK(count_koblitz(11, 1, 0, g).projective_count == 3300);
  }
  CHECK(count_koblitz(31, 1, 0, 7).projective_count == count_koblitz(31).projective_count);
}

TEST_CASE("W and its classes") {
  const KoblitzData data = koblitz_data(11);
  CHECK(data.t == 2);
  CHECK(data.W.size() == 625);
  CHECK(data.classes.size() == 125);
  const auto w_star = w_star_listing(data);
  int total = 0;
  for (const auto& [w, mult] : w_star) total += mult;
  CHECK(total == 204);
  CHECK(w_star.at({1, 1, 2, 3, 3}) == 30);
  CHECK(w_star.at({2, 2, 3, 4, 4}) == 30);
  CHECK(w_star.count({2, 2, 3, 3, 4}) == 0);  // entries must sum to 0 mod 5
  const auto classes = class_listing(data);
  CHECK(classes.size() == 6);
  CHECK(classes.at({0, 1, 2, 3, 4}) == 24);
  CHECK(check_koblitz_listing().passed());
  CHECK(code_of([] { koblitz_data(13); }) == ErrorCode::OrderNotDividing);
}

TEST_CASE("Schoen relation and the point-count polynomial") {
  CHECK(schoen_cp(11, 3300) == -43);
  CHECK(schoen_cp(3, 36) == 7);
  CHECK(schoen_cp(19, 7256) == -35);
  CHECK(code_of([] { schoen_cp(5, 1); }) == ErrorCode::PIsFive);
  CHECK(point_count_polynomial(11) == 1331 + 25 * 121 - 99 * 11 + 1);
  CHECK(point_count_polynomial(7) == 343 + 49 + 7 + 1);
}

TEST_CASE("count plus 4G") {
  CHECK(check_n_to_g(3, 6).passed());
  CHECK(check_n_to_g(7, 5).passed());
  CHECK(check_n_to_g(11, 5).passed());
  for (std::uint64_t p : {13, 17, 19, 23, 29, 31}) CHECK(check_n_to_g(p).passed());
  CHECK(n_to_g_precision(11) == 4);
  CHECK(n_to_g_precision(3) == 6);
  CHECK(count_precision(11) == 4);
}

TEST_CASE("fifth-power character sum") {
  CHECK(check_fifth_power_sum(3, 3).passed());
  CHECK(check_fifth_power_sum(7, 3).passed());
  CHECK(check_fifth_power_sum(13, 3).passed());
  CHECK(code_of([] { check_fifth_power_sum(11, 3); }) == ErrorCode::IsOneModFive);
}

TEST_CASE("method names") {
  CHECK(parse_count_method("koblitz") == CountMethod::Koblitz);
  CHECK(to_string(CountMethod::CharSum) == "charsum");
  CHECK(code_of([] { parse_count_method("magic"); }) == ErrorCode::BadParameters);
}
