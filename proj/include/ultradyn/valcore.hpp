#pragma once

#include <cstdint>

#include "ultradyn/extrat.hpp"

namespace ultradyn {

/**
 * Degree data of the unicritical map z^ell - c over a field of residue
 * characteristic p, with ell = big_n * p^k and p not dividing big_n.
 *
 * Only decompose() builds one, so every instance satisfies the invariants.
 */
class UnicritParams {
 public:
  std::int64_t p() const noexcept { return p_; }
  std::int64_t ell() const noexcept { return ell_; }
  std::int64_t big_n() const noexcept { return big_n_; }
  std::int64_t k() const noexcept { return k_; }

  /// p^n for 0 <= n <= k.
  std::int64_t p_pow(std::int64_t n) const;

  bool is_prime_power() const noexcept { return big_n_ == 1; }
  bool is_tame() const noexcept { return k_ == 0; }

  friend bool operator==(const UnicritParams&, const UnicritParams&) = default;

 private:
  friend UnicritParams decompose(std::int64_t p, std::int64_t ell);
  UnicritParams(std::int64_t p, std::int64_t ell, std::int64_t big_n, std::int64_t k)
      : p_(p), ell_(ell), big_n_(big_n), k_(k) {}

  std::int64_t p_;
  std::int64_t ell_;
  std::int64_t big_n_;
  std::int64_t k_;
};

/// Deterministic trial division.
bool is_prime(std::int64_t n) noexcept;

/// Splits ell = N p^k. Throws NotPrime or DegreeTooSmall.
UnicritParams decompose(std::int64_t p, std::int64_t ell);

/// Largest e with p^e | n, for n >= 1. Throws ZeroInput for n = 0.
std::int64_t vp_int(std::int64_t p, std::int64_t n);

/// v_p(n) as an extended rational, with v_p(0) = +inf.
ExtRat vp_ext(std::int64_t p, std::int64_t n);

/// v_p of binomial(ell, n) by Kummer: the carries in n + (ell - n) in base p.
std::int64_t vp_binom(std::int64_t p, std::int64_t ell, std::int64_t n);

}  // namespace ultradyn
