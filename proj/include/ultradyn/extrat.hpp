#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ultradyn {

/**
 * Exact rational number extended by +inf and -inf.
 *
 * Carries every valuation, slope, threshold and log-radius in the library.
 * Finite values are kept in canonical form (reduced, positive denominator).
 * The text form is "a/b" in lowest terms ("a" when b = 1), "inf" or "-inf".
 *
 * Arithmetic follows the usual conventions: infinities absorb finite
 * summands, and inf + (-inf) throws DomainError(UndefinedInfiniteSum).
 */
class ExtRat {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtRat() = default;
  ExtRat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExtRat(mpq_class value);
  ExtRat(long num, long den);

  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }
  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }

  /// Parses the text form. Throws DomainError(ParseError).
  static ExtRat parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  /// The rational value; throws DomainError(OutOfRange) when infinite.
  const mpq_class& value() const;
  const mpz_class& num() const { return value().get_num(); }
  const mpz_class& den() const { return value().get_den(); }

  std::string to_string() const;

  ExtRat operator-() const;
  ExtRat& operator+=(const ExtRat& rhs);
  ExtRat& operator-=(const ExtRat& rhs) { return *this += -rhs; }

  /// Scaling by a finite rational. inf * 0 is undefined and throws.
  ExtRat scaled(const mpq_class& factor) const;
  ExtRat divided(const mpq_class& divisor) const;

  friend ExtRat operator+(ExtRat lhs, const ExtRat& rhs) { return lhs += rhs; }
  friend ExtRat operator-(ExtRat lhs, const ExtRat& rhs) { return lhs -= rhs; }
  friend ExtRat operator*(const ExtRat& lhs, const mpq_class& rhs) { return lhs.scaled(rhs); }
  friend ExtRat operator*(const mpq_class& lhs, const ExtRat& rhs) { return rhs.scaled(lhs); }
  friend ExtRat operator/(const ExtRat& lhs, const mpq_class& rhs) { return lhs.divided(rhs); }

  friend std::strong_ordering operator<=>(const ExtRat& lhs, const ExtRat& rhs) noexcept;
  friend bool operator==(const ExtRat& lhs, const ExtRat& rhs) noexcept {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

 private:
  explicit ExtRat(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  mpq_class value_;  // zero when infinite
};

inline const ExtRat& min(const ExtRat& a, const ExtRat& b) noexcept { return b < a ? b : a; }
inline const ExtRat& max(const ExtRat& a, const ExtRat& b) noexcept { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtRat& x);

/// Canonical num/den; den must be nonzero.
mpq_class make_q(long num, long den);

/// Largest e with p^e dividing the reduced denominator of x (0 for infinities).
std::int64_t den_p_valuation(const ExtRat& x, std::int64_t p);

}  // namespace ultradyn
