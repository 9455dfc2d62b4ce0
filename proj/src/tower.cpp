#include "ultradyn/tower.hpp"

#include "ultradyn/error.hpp"
#include "ultradyn/newton.hpp"
#include "ultradyn/reduction.hpp"

namespace ultradyn {

namespace {

mpq_class as_q(std::int64_t n) { return mpq_class(static_cast<long>(n)); }

void require_steps(std::int64_t n_steps) {
  if (n_steps < 1) throw DomainError(Errc::OutOfRange, "n_steps must be at least 1");
}

// q = p^{n0} for the band of a two-part polygon; a single-segment polygon
// behaves as q = ell with v(a_ell) = 0.
std::int64_t band_q(const UnicritParams& params, std::int64_t n0) {
  if (n0 > params.k()) return params.ell();
  return params.p_pow(n0);
}

}  // namespace

std::string_view tower_mode_name(TowerMode mode) noexcept {
  switch (mode) {
    case TowerMode::Closest: return "closest";
    case TowerMode::Furthest: return "furthest";
    case TowerMode::Hybrid: return "hybrid";
  }
  return "unknown";
}

std::optional<TowerMode> parse_tower_mode(std::string_view text) noexcept {
  if (text == "closest") return TowerMode::Closest;
  if (text == "furthest") return TowerMode::Furthest;
  if (text == "hybrid") return TowerMode::Hybrid;
  return std::nullopt;
}

std::string_view extension_kind_name(ExtensionKind kind) noexcept {
  switch (kind) {
    case ExtensionKind::Finite: return "Finite";
    case ExtensionKind::InfiniteFinitelyRamified: return "InfiniteFinitelyRamified";
    case ExtensionKind::InfiniteWildlyRamified: return "InfiniteWildlyRamified";
  }
  return "Unknown";
}

AlphaPropagation propagate_alpha_valuation(const UnicritParams& params, const ExtRat& v_c,
                                           const ExtRat& v_alpha, std::int64_t n_steps) {
  require_steps(n_steps);
  AlphaPropagation out;
  out.values.reserve(static_cast<std::size_t>(n_steps) + 1);
  out.values.push_back(v_alpha);
  const mpq_class ell = as_q(params.ell());
  for (std::int64_t n = 0; n < n_steps; ++n) {
    const ExtRat& prev = out.values.back();
    if (prev == v_c) out.ambiguous = true;
    out.values.push_back(min(v_c, prev) / ell);
  }
  return out;
}

ExtRat next_distance_valuation(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d,
                               TowerMode mode) {
  const PredictedNP np = predicted_polygon(params, v_y, v_d);
  if (mode == TowerMode::Closest) {
    if (np.m1.is_neg_inf()) return -np.slopes.at(1);
    return -np.m1;
  }
  // Roots of slope 0 are units times y when y is a unit; the furthest
  // root of interest is on the last segment that moves.
  for (auto it = np.slopes.rbegin(); it != np.slopes.rend(); ++it) {
    if (it->is_finite() && *it != ExtRat(0)) return -*it;
  }
  return -np.m_ell;
}

TowerTrace tower_trace(const UnicritParams& params, const ExtRat& v_c, const RootPointSpec& root,
                       TowerMode mode, std::int64_t n_steps) {
  require_steps(n_steps);
  check_root_point(params, v_c, root);
  AlphaPropagation alpha = propagate_alpha_valuation(params, v_c, root.v_alpha, n_steps);
  TowerTrace trace{params, v_c, mode, std::move(alpha.values), {}, {}, {}, alpha.ambiguous};

  ExtRat v_d = ExtRat::pos_inf();
  for (std::int64_t n = 0; n < n_steps; ++n) {
    TowerMode step_mode = mode;
    if (mode == TowerMode::Hybrid) step_mode = n == 0 ? TowerMode::Furthest : TowerMode::Closest;
    const ExtRat& v_y = trace.v_alpha_seq[static_cast<std::size_t>(n) + 1];
    trace.n0_seq.push_back(v_d.is_pos_inf() ? std::nullopt
                                            : std::optional(select_n0(params, v_y, v_d)));
    v_d = next_distance_valuation(params, v_y, v_d, step_mode);
    trace.den_p_val_seq.push_back(den_p_valuation(v_d, params.p()));
    trace.v_d_seq.push_back(v_d);
  }
  return trace;
}

std::vector<ExtRat> fixed_point_trace(const UnicritParams& params, const ExtRat& v_c,
                                      const ExtRat& v_alpha_minus_b, std::int64_t n_steps) {
  require_steps(n_steps);
  // (z + b)^ell - b^ell = alpha_n - b has the roots alpha_{n+1} - b.
  const ExtRat v_b = fixed_point_valuation(params, v_c);
  std::vector<ExtRat> out{v_alpha_minus_b};
  for (std::int64_t n = 0; n < n_steps; ++n) {
    out.push_back(next_distance_valuation(params, v_b, out.back(), TowerMode::Closest));
  }
  return out;
}

ExtRat closed_form_dn(const ExtRat& v_dm, std::int64_t q, const ExtRat& v_aq, std::int64_t n) {
  if (q < 2) throw DomainError(Errc::OutOfRange, "q must be at least 2");
  if (n < 0) throw DomainError(Errc::OutOfRange, "n must be nonnegative");
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  const mpq_class weight(mpz_class(qn - 1), mpz_class(qn * (q - 1)));
  return v_dm / mpq_class(qn) - v_aq.scaled(weight);
}

std::optional<BandWindow> terminal_band(const TowerTrace& trace) {
  const std::size_t len = trace.v_d_seq.size();
  if (trace.mode == TowerMode::Furthest || len == 0 || !trace.n0_seq.back()) return std::nullopt;
  const std::int64_t n0 = *trace.n0_seq.back();
  const ExtRat& v_y = trace.v_alpha_seq[len];
  std::size_t first = len - 1;
  while (first > 0 && trace.n0_seq[first - 1] == n0 && trace.v_alpha_seq[first] == v_y) {
    --first;
  }
  const std::int64_t q = band_q(trace.params, n0);
  if (q < 2 || first == 0) return std::nullopt;
  // Step `first` maps v_d_seq[first - 1] forward, so the window opens there.
  const ExtRat v_aq =
      ExtRat(static_cast<long>(vp_binom(trace.params.p(), trace.params.ell(), q))) +
      v_y * as_q(trace.params.ell() - q);
  return BandWindow{first - 1, q, v_aq};
}

bool is_wildly_ramified(const std::vector<std::int64_t>& den_p_val_seq) {
  const std::size_t len = den_p_val_seq.size();
  if (len < 3) throw DomainError(Errc::TraceTooShort, "need at least 3 terms");
  for (std::size_t i = len / 2 + 1; i < len; ++i) {
    if (den_p_val_seq[i] <= den_p_val_seq[i - 1]) return false;
  }
  return true;
}

bool is_wildly_ramified(const TowerTrace& trace) { return is_wildly_ramified(trace.den_p_val_seq); }

std::optional<std::size_t> first_base_field_root_step(const TowerTrace& trace) {
  for (std::size_t n = 0; n + 2 < trace.v_alpha_seq.size(); ++n) {
    const ExtRat& v_d = trace.v_d_seq[n];
    if (!v_d.is_finite()) continue;
    if (base_field_root_exists(trace.params, trace.v_alpha_seq[n + 2], v_d)) return n;
  }
  return std::nullopt;
}

RootPointSpec root_near_fixed_point(const UnicritParams& params, const ExtRat& v_c,
                                    const ExtRat& v_alpha_minus_b) {
  return {min(v_alpha_minus_b, fixed_point_valuation(params, v_c)), v_alpha_minus_b};
}

void check_root_point(const UnicritParams& params, const ExtRat& v_c, const RootPointSpec& root) {
  if (!root.v_alpha_minus_b) return;
  const ExtRat v_b = fixed_point_valuation(params, v_c);
  const ExtRat& v_ab = *root.v_alpha_minus_b;
  const bool ok = root.v_alpha == v_b ? v_ab >= v_b : v_ab == min(root.v_alpha, v_b);
  if (!ok) {
    throw DomainError(Errc::InconsistentRootPoint,
                      "v(alpha) = " + root.v_alpha.to_string() + " and v(b) = " + v_b.to_string() +
                          " do not allow v(alpha - b) = " + v_ab.to_string());
  }
}

ExtensionVerdict classify_extension(const UnicritParams& params, const ExtRat& v_c,
                                    const RootPointSpec& root) {
  if (params.is_tame()) {
    throw DomainError(Errc::TameCaseUnsupported,
                      "p = " + std::to_string(params.p()) + " does not divide ell = " +
                          std::to_string(params.ell()));
  }
  check_root_point(params, v_c, root);
  const Cutoffs cut = cutoffs(params);
  if (v_c < cut.nu_infty) return {ExtensionKind::Finite, "below_nu_infty"};
  if (v_c == cut.nu_infty) {
    if (params.ell() != params.p()) {
      return {ExtensionKind::InfiniteWildlyRamified, "boundary_ell_ne_p"};
    }
    if (!root.v_alpha_minus_b) {
      throw DomainError(Errc::MissingRootPointData,
                        "v(alpha - b) is required when ell = p and v(c) = nu_infty");
    }
    if (*root.v_alpha_minus_b >= ExtRat(0)) {
      return {ExtensionKind::InfiniteFinitelyRamified, "boundary_in_fixed_point_disk"};
    }
    return {ExtensionKind::InfiniteWildlyRamified, "boundary_outside_fixed_point_disk"};
  }
  if (v_c >= ExtRat(0) && params.ell() != params.p()) {
    return {ExtensionKind::InfiniteWildlyRamified, "nonnegative_vc"};
  }
  return {ExtensionKind::InfiniteWildlyRamified, "above_nu_infty"};
}

}  // namespace ultradyn
