#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ultradyn/extrat.hpp"
#include "ultradyn/valcore.hpp"

namespace ultradyn {

/**
 * log_p of a disk radius. Radius 0 is -inf. A point x lies in the closed
 * disk of log-radius rho about 0 iff v(x) >= -rho.
 */
struct LogRadius {
  ExtRat value;

  static LogRadius from_valuation(const ExtRat& v) { return {-v}; }
  ExtRat as_valuation() const { return -value; }

  friend auto operator<=>(const LogRadius&, const LogRadius&) = default;
  friend bool operator==(const LogRadius&, const LogRadius&) = default;
};

enum class JuliaVerdict { CantorTypeI, CantorWithTypeII, SingleTypeII };

std::string_view julia_verdict_name(JuliaVerdict verdict) noexcept;

/// Log-radii of the nested disks U_m = g^{-m}(U_0) about 0, and their limit.
struct RadiiTrace {
  UnicritParams params;
  ExtRat v_c;
  ExtRat v_b;
  std::vector<LogRadius> rho_seq;
  LogRadius rho_limit;
  std::int64_t band_n;
};

/// [-inf, log r_1, ..., log r_k, log r_{k+1}]; the slopes of the Newton
/// polygon of g between consecutive powers of p.
std::vector<LogRadius> breakpoint_log_radii(const UnicritParams& params, const ExtRat& v_c);

/// Weierstrass degree of g on the closed disk of log-radius rho about 0:
/// the largest n maximising n*rho - v(a_n). Cross-checked against the
/// breakpoint bands.
std::int64_t wdeg_on_disk(const UnicritParams& params, const ExtRat& v_c, const LogRadius& rho);

/// log of T(s) = max |a_n| s^n, i.e. max_n (n*rho - v(a_n)).
LogRadius tau_image_log_radius(const UnicritParams& params, const ExtRat& v_c,
                               const LogRadius& rho);

/// The unique rho with tau(rho) = target. Throws NoPreimage for +inf or,
/// under bad reduction, for targets above tau(log R_0).
LogRadius preimage_log_radius(const UnicritParams& params, const ExtRat& v_c,
                              const LogRadius& target);

/// log R_0 for the smallest disk about 0 holding every root of g.
LogRadius initial_log_radius(const UnicritParams& params, const ExtRat& v_c);

/// [c_0 = -inf, c_1, ..., c_k] plus c_{k+1} = 0 when N > 1.
std::vector<ExtRat> c_levels(const UnicritParams& params);

/// The n with c_n <= v_c < c_{n+1}. Requires v_c < nu_good.
std::int64_t c_level_band(const UnicritParams& params, const ExtRat& v_c);

/// log R for R = lim R_m: v(a_{p^n})/(p^n - 1) on band n >= 1, -inf on band 0.
LogRadius limit_log_radius(const UnicritParams& params, const ExtRat& v_c);

RadiiTrace radii_sequence(const UnicritParams& params, const ExtRat& v_c, std::int64_t m_max);

JuliaVerdict julia_classify(const UnicritParams& params, const ExtRat& v_c);

}  // namespace ultradyn
