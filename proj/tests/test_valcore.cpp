#include <doctest.h>

#include "oracles.hpp"
#include "ultradyn/error.hpp"
#include "ultradyn/valcore.hpp"

using namespace ultradyn;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("expected a DomainError");
  return Errc::OutOfRange;
}

}  // namespace

TEST_CASE("decompose splits off the p-part") {
  const auto a = decompose(2, 8);
  CHECK(a.big_n() == 1);
  CHECK(a.k() == 3);
  CHECK(a.is_prime_power());
  const auto b = decompose(3, 6);
  CHECK(b.big_n() == 2);
  CHECK(b.k() == 1);
  const auto c = decompose(5, 6);
  CHECK(c.big_n() == 6);
  CHECK(c.k() == 0);
  CHECK(c.is_tame());
  CHECK(decompose(2, 24).p_pow(3) == 8);
  CHECK(code_of([] { (void)decompose(2, 24).p_pow(4); }) == Errc::IndexOutOfRange);
}

TEST_CASE("decompose rejects bad input") {
  CHECK(code_of([] { (void)decompose(4, 8); }) == Errc::NotPrime);
  CHECK(code_of([] { (void)decompose(1, 8); }) == Errc::NotPrime);
  CHECK(code_of([] { (void)decompose(2, 1); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { (void)decompose(3, 0); }) == Errc::DegreeTooSmall);
}

TEST_CASE("is_prime by trial division") {
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 0; n < 60; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  CHECK(primes == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                            53, 59});
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(7917));
}

TEST_CASE("vp_int and vp_ext") {
  CHECK(vp_int(2, 28) == 2);
  CHECK(vp_int(3, 20) == 0);
  CHECK(vp_int(2, 8) == 3);
  CHECK(code_of([] { (void)vp_int(2, 0); }) == Errc::ZeroInput);
  CHECK(vp_ext(2, 0).is_pos_inf());
  CHECK(vp_ext(5, 250) == ExtRat(3));
}

TEST_CASE("vp_binom small cases") {
  CHECK(vp_binom(2, 8, 2) == 2);  // 28
  CHECK(vp_binom(2, 8, 4) == 1);  // 70
  CHECK(vp_binom(3, 6, 3) == 0);  // 20
  CHECK(vp_binom(2, 8, 0) == 0);
  CHECK(vp_binom(2, 8, 8) == 0);
  CHECK(code_of([] { (void)vp_binom(2, 8, 9); }) == Errc::OutOfRange);
  CHECK(code_of([] { (void)vp_binom(2, 8, -1); }) == Errc::OutOfRange);
}

TEST_CASE("vp_binom agrees with factorial valuations") {
  for (const std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t ell = 1; ell <= 400; ++ell) {
      for (std::int64_t n = 0; n <= ell; ++n) {
        if (vp_binom(p, ell, n) != oracle::vp_binom(p, ell, n)) {
          FAIL("p=" << p << " ell=" << ell << " n=" << n);
        }
      }
    }
  }
}

TEST_CASE("v(binom(N p^k, n)) = k - v(n) for n up to p^k") {
  for (const std::int64_t p : {2, 3, 5}) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      for (std::int64_t big_n = 1; big_n <= 5; ++big_n) {
        if (big_n % p == 0) continue;
        const std::int64_t pk = oracle::ipow(p, k);
        const std::int64_t ell = big_n * pk;
        if (ell < 2) continue;
        for (std::int64_t n = 1; n <= pk; ++n) {
          CHECK(vp_binom(p, ell, n) == k - oracle::vp(p, n));
        }
      }
    }
  }
}
