#include "ultradyn/julia.hpp"

#include <string>

#include "ultradyn/error.hpp"
#include "ultradyn/newton.hpp"
#include "ultradyn/reduction.hpp"

namespace ultradyn {

namespace {

mpq_class as_q(std::int64_t n) { return mpq_class(static_cast<long>(n)); }

std::string where(const UnicritParams& params, const ExtRat& v_c) {
  return "p = " + std::to_string(params.p()) + ", ell = " + std::to_string(params.ell()) +
         ", v(c) = " + v_c.to_string();
}

void require_bad_reduction(const UnicritParams& params, const ExtRat& v_c) {
  if (v_c >= cutoffs(params).nu_good) {
    throw DomainError(Errc::OutOfRange, "requires v(c) < nu_good; " + where(params, v_c));
  }
}

// g(z) = sum a_n z^n seen through valuations: the max-plus polynomial
// rho -> max_n (n*rho - v(a_n)). Only indices on the lower hull of the
// points (n, v(a_n)) can attain the max, so those are kept.
class TropicalMap {
 public:
  TropicalMap(const UnicritParams& params, const ExtRat& v_c)
      : coeffs_(conjugate_coeff_valuations(params, v_c)) {
    std::vector<ValuedPoint> points;
    points.reserve(coeffs_.entries.size());
    for (std::int64_t n = 1; n <= params.ell(); ++n) points.push_back({n, coeffs_.at(n)});
    for (const auto& vertex : lower_hull(points).vertices) active_.push_back(vertex.x);
  }

  const CoeffValuations& coeffs() const { return coeffs_; }
  const std::vector<std::int64_t>& active() const { return active_; }

  ExtRat term(std::int64_t n, const ExtRat& rho) const { return rho * as_q(n) - coeffs_.at(n); }

  ExtRat value(const ExtRat& rho) const {
    if (!rho.is_finite()) return rho;
    ExtRat best = term(active_.front(), rho);
    for (const std::int64_t n : active_) best = max(best, term(n, rho));
    return best;
  }

  // Largest maximising index; as rho -> -inf the linear term wins.
  std::int64_t argmax(const ExtRat& rho) const {
    if (rho.is_neg_inf()) return 1;
    std::int64_t best_n = active_.front();
    ExtRat best = term(best_n, rho);
    for (const std::int64_t n : active_) {
      ExtRat t = term(n, rho);
      if (t >= best) {
        best = std::move(t);
        best_n = n;
      }
    }
    return best_n;
  }

  ExtRat invert(const ExtRat& target) const {
    if (target.is_neg_inf()) return target;
    for (const std::int64_t n : active_) {
      ExtRat candidate = (target + coeffs_.at(n)) / as_q(n);
      if (value(candidate) == target) return candidate;
    }
    throw InternalInconsistency("no max-plus segment inverts " + target.to_string());
  }

 private:
  CoeffValuations coeffs_;
  std::vector<std::int64_t> active_;
};

}  // namespace

std::string_view julia_verdict_name(JuliaVerdict verdict) noexcept {
  switch (verdict) {
    case JuliaVerdict::CantorTypeI: return "CantorTypeI";
    case JuliaVerdict::CantorWithTypeII: return "CantorWithTypeII";
    case JuliaVerdict::SingleTypeII: return "SingleTypeII";
  }
  return "Unknown";
}

std::vector<LogRadius> breakpoint_log_radii(const UnicritParams& params, const ExtRat& v_c) {
  const ExtRat v_b = fixed_point_valuation(params, v_c);
  std::vector<LogRadius> out{{ExtRat::neg_inf()}};
  for (std::int64_t n = 1; n <= params.k(); ++n) {
    const long run = static_cast<long>(params.p_pow(n) - params.p_pow(n - 1));
    out.push_back({ExtRat(-1, run) - v_b});
  }
  out.push_back({params.is_prime_power() ? ExtRat::pos_inf() : -v_b});
  return out;
}

std::int64_t wdeg_on_disk(const UnicritParams& params, const ExtRat& v_c, const LogRadius& rho) {
  if (rho.value.is_pos_inf()) throw DomainError(Errc::OutOfRange, "disk of infinite radius");
  const std::int64_t tropical = TropicalMap(params, v_c).argmax(rho.value);

  const auto bands = breakpoint_log_radii(params, v_c);
  const std::int64_t k = params.k();
  std::int64_t closed_form = 1;
  if (rho >= bands[static_cast<std::size_t>(k + 1)]) {
    closed_form = params.ell();
  } else {
    for (std::int64_t n = k; n >= 0; --n) {
      if (bands[static_cast<std::size_t>(n)] <= rho) {
        closed_form = params.p_pow(n);
        break;
      }
    }
  }
  if (tropical != closed_form) {
    throw InternalInconsistency("wdeg " + std::to_string(tropical) + " vs band value " +
                                std::to_string(closed_form) + " at rho = " +
                                rho.value.to_string() + "; " + where(params, v_c));
  }
  return tropical;
}

LogRadius tau_image_log_radius(const UnicritParams& params, const ExtRat& v_c,
                               const LogRadius& rho) {
  return {TropicalMap(params, v_c).value(rho.value)};
}

LogRadius initial_log_radius(const UnicritParams& params, const ExtRat& v_c) {
  const ExtRat v_b = fixed_point_valuation(params, v_c);
  if (!params.is_prime_power()) return {-v_b};
  const std::int64_t k = params.k();
  const long run = static_cast<long>(params.p_pow(k) - params.p_pow(k - 1));
  return {ExtRat(-1, run) - v_b};
}

LogRadius preimage_log_radius(const UnicritParams& params, const ExtRat& v_c,
                              const LogRadius& target) {
  if (target.value.is_pos_inf()) throw DomainError(Errc::NoPreimage, "target radius is infinite");
  const TropicalMap tau(params, v_c);
  if (v_c < cutoffs(params).nu_good) {
    const ExtRat ceiling = tau.value(initial_log_radius(params, v_c).value);
    if (target.value > ceiling) {
      throw DomainError(Errc::NoPreimage, "target " + target.value.to_string() +
                                              " above tau(log R_0) = " + ceiling.to_string());
    }
  }
  return {tau.invert(target.value)};
}

std::vector<ExtRat> c_levels(const UnicritParams& params) {
  const std::int64_t k = params.k();
  const long ell = static_cast<long>(params.ell());
  const mpq_class scale = make_q(-ell, ell - 1);
  std::vector<ExtRat> out{ExtRat::neg_inf()};
  for (std::int64_t n = 1; n <= k; ++n) {
    const long pn = static_cast<long>(params.p_pow(n));
    const long run = static_cast<long>(params.p_pow(n) - params.p_pow(n - 1));
    const mpq_class inner = as_q(k - n) + make_q(pn - 1, run);
    out.emplace_back(mpq_class(scale * inner));
  }
  if (!params.is_prime_power()) out.emplace_back(0);
  return out;
}

std::int64_t c_level_band(const UnicritParams& params, const ExtRat& v_c) {
  require_bad_reduction(params, v_c);
  const auto levels = c_levels(params);
  for (std::size_t n = levels.size(); n-- > 0;) {
    if (levels[n] <= v_c) return static_cast<std::int64_t>(n);
  }
  return 0;
}

LogRadius limit_log_radius(const UnicritParams& params, const ExtRat& v_c) {
  const std::int64_t band = c_level_band(params, v_c);
  if (band == 0) return {ExtRat::neg_inf()};
  const TropicalMap tau(params, v_c);
  const std::int64_t q = params.p_pow(band);
  ExtRat limit = tau.coeffs().at(q) / as_q(q - 1);
  if (tau.value(limit) != limit) {
    throw InternalInconsistency("limit log-radius " + limit.to_string() +
                                " is not fixed by tau; " + where(params, v_c));
  }
  return {std::move(limit)};
}

RadiiTrace radii_sequence(const UnicritParams& params, const ExtRat& v_c, std::int64_t m_max) {
  require_bad_reduction(params, v_c);
  if (m_max < 1) throw DomainError(Errc::OutOfRange, "m_max must be at least 1");

  const TropicalMap tau(params, v_c);
  RadiiTrace trace{params,
                   v_c,
                   tau.coeffs().v_b,
                   {initial_log_radius(params, v_c)},
                   limit_log_radius(params, v_c),
                   c_level_band(params, v_c)};
  trace.rho_seq.reserve(static_cast<std::size_t>(m_max) + 1);
  for (std::int64_t m = 0; m < m_max; ++m) {
    LogRadius next{tau.invert(trace.rho_seq.back().value)};
    if (!(next < trace.rho_seq.back()) || !(trace.rho_limit < next)) {
      throw InternalInconsistency("preimage disks not strictly nested at m = " +
                                  std::to_string(m + 1) + "; " + where(params, v_c));
    }
    trace.rho_seq.push_back(std::move(next));
  }
  return trace;
}

JuliaVerdict julia_classify(const UnicritParams& params, const ExtRat& v_c) {
  const Cutoffs cut = cutoffs(params);
  if (has_potential_good_reduction(params, v_c)) {
    if (v_c < cut.nu_good) throw InternalInconsistency("good reduction below nu_good");
    return JuliaVerdict::SingleTypeII;
  }
  const JuliaVerdict verdict =
      v_c < cut.nu_infty ? JuliaVerdict::CantorTypeI : JuliaVerdict::CantorWithTypeII;
  const bool radius_vanishes = limit_log_radius(params, v_c).value.is_neg_inf();
  if (radius_vanishes != (verdict == JuliaVerdict::CantorTypeI)) {
    throw InternalInconsistency("Julia verdict disagrees with the limit radius; " +
                                where(params, v_c));
  }
  return verdict;
}

}  // namespace ultradyn
