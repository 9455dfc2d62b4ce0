#include "ultradyn/extrat.hpp"

#include <cctype>

#include "ultradyn/error.hpp"

namespace ultradyn {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UndefinedInfiniteSum: return "UndefinedInfiniteSum";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InfiniteVd: return "InfiniteVd";
    case Errc::NoPreimage: return "NoPreimage";
    case Errc::TraceTooShort: return "TraceTooShort";
    case Errc::TameCaseUnsupported: return "TameCaseUnsupported";
    case Errc::MissingRootPointData: return "MissingRootPointData";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::InconsistentRootPoint: return "InconsistentRootPoint";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

ExtRat::ExtRat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

mpq_class make_q(long num, long den) {
  if (den == 0) throw DomainError(Errc::OutOfRange, "zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

ExtRat::ExtRat(long num, long den) : value_(make_q(num, den)) {}

const mpq_class& ExtRat::value() const {
  if (!is_finite()) throw DomainError(Errc::OutOfRange, "value() of " + to_string());
  return value_;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();

  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text[0] == '-' ||
      den_text[0] == '+') {
    throw DomainError(Errc::ParseError, "not an extended rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return s[0] == '+' ? s.substr(1) : s; };
  mpz_class num(std::string(strip_plus(num_text)), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw DomainError(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return ExtRat(mpq_class(num, den));
}

std::string ExtRat::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  // mpq_class::get_str already omits a unit denominator.
  return value_.get_str();
}

ExtRat ExtRat::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: break;
  }
  return ExtRat(mpq_class(-value_));
}

ExtRat& ExtRat::operator+=(const ExtRat& rhs) {
  if (is_finite() && rhs.is_finite()) {
    value_ += rhs.value_;
    return *this;
  }
  if (!is_finite() && !rhs.is_finite() && kind_ != rhs.kind_) {
    throw DomainError(Errc::UndefinedInfiniteSum, "inf + (-inf)");
  }
  if (!is_finite()) return *this;
  *this = rhs;
  return *this;
}

ExtRat ExtRat::scaled(const mpq_class& factor) const {
  if (is_finite()) return ExtRat(mpq_class(value_ * factor));
  const int s = sgn(factor);
  if (s == 0) throw DomainError(Errc::UndefinedInfiniteSum, "infinity times zero");
  return s > 0 ? *this : -*this;
}

ExtRat ExtRat::divided(const mpq_class& divisor) const {
  if (sgn(divisor) == 0) throw DomainError(Errc::OutOfRange, "division by zero");
  if (is_finite()) return ExtRat(mpq_class(value_ / divisor));
  return sgn(divisor) > 0 ? *this : -*this;
}

std::strong_ordering operator<=>(const ExtRat& lhs, const ExtRat& rhs) noexcept {
  if (lhs.kind_ != rhs.kind_ || !lhs.is_finite()) {
    return static_cast<int>(lhs.kind_) <=> static_cast<int>(rhs.kind_);
  }
  return cmp(lhs.value_, rhs.value_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const ExtRat& x) { return os << x.to_string(); }

std::int64_t den_p_valuation(const ExtRat& x, std::int64_t p) {
  if (!x.is_finite()) return 0;
  mpz_class den = x.den();
  std::int64_t e = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p));
    ++e;
  }
  return e;
}

}  // namespace ultradyn
