#include "ultradyn/valcore.hpp"

#include <string>

#include "ultradyn/error.hpp"

namespace ultradyn {

std::int64_t UnicritParams::p_pow(std::int64_t n) const {
  if (n < 0 || n > k_) {
    throw DomainError(Errc::IndexOutOfRange, "p^n requested for n = " + std::to_string(n));
  }
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < n; ++i) r *= p_;
  return r;
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

UnicritParams decompose(std::int64_t p, std::int64_t ell) {
  if (!is_prime(p)) throw DomainError(Errc::NotPrime, "p = " + std::to_string(p));
  if (ell < 2) throw DomainError(Errc::DegreeTooSmall, "ell = " + std::to_string(ell));
  std::int64_t big_n = ell;
  std::int64_t k = 0;
  while (big_n % p == 0) {
    big_n /= p;
    ++k;
  }
  return UnicritParams(p, ell, big_n, k);
}

std::int64_t vp_int(std::int64_t p, std::int64_t n) {
  if (n == 0) throw DomainError(Errc::ZeroInput, "v_p(0) is infinite");
  if (n < 0) n = -n;
  std::int64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

ExtRat vp_ext(std::int64_t p, std::int64_t n) {
  if (n == 0) return ExtRat::pos_inf();
  return ExtRat(static_cast<long>(vp_int(p, n)));
}

std::int64_t vp_binom(std::int64_t p, std::int64_t ell, std::int64_t n) {
  if (n < 0 || n > ell) {
    throw DomainError(Errc::OutOfRange, "binomial(" + std::to_string(ell) + ", " +
                                            std::to_string(n) + ")");
  }
  std::int64_t a = n;
  std::int64_t b = ell - n;
  std::int64_t carry = 0;
  std::int64_t carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::int64_t digit_sum = a % p + b % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

}  // namespace ultradyn
