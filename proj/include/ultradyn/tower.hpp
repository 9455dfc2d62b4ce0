#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultradyn/extrat.hpp"
#include "ultradyn/valcore.hpp"

// The preimage tower of a root point alpha under z^ell - c, seen through
// valuations only: v(alpha_n) for a chain alpha_{n+1} -> alpha_n and the
// distances d_n = alpha_{n+1} - alpha_n.
namespace ultradyn {

struct RootPointSpec {
  ExtRat v_alpha;
  /// v(alpha - b) for a fixed point b. Needed only when ell = p and
  /// v(c) sits on the lower cutoff.
  std::optional<ExtRat> v_alpha_minus_b;
};

/// Closest and Furthest pick the preimage at each step; Hybrid starts
/// Furthest and continues Closest.
enum class TowerMode { Closest, Furthest, Hybrid };

std::string_view tower_mode_name(TowerMode mode) noexcept;
std::optional<TowerMode> parse_tower_mode(std::string_view text) noexcept;

struct AlphaPropagation {
  std::vector<ExtRat> values;
  /// Set when some step had v(alpha_n) = v(c), so that v(c + alpha_n) is
  /// only bounded below by the value used.
  bool ambiguous = false;
};

struct TowerTrace {
  UnicritParams params;
  ExtRat v_c;
  TowerMode mode;
  std::vector<ExtRat> v_alpha_seq;  // n_steps + 1 entries
  std::vector<ExtRat> v_d_seq;      // n_steps entries; v_d_seq[n] = v(alpha_{n+1} - alpha_n)
  std::vector<std::int64_t> den_p_val_seq;
  /// Band index of the polygon that produced each v_d_seq entry; empty
  /// for a step started from d = 0.
  std::vector<std::optional<std::int64_t>> n0_seq;
  bool ambiguous = false;
};

enum class ExtensionKind { Finite, InfiniteFinitelyRamified, InfiniteWildlyRamified };

std::string_view extension_kind_name(ExtensionKind kind) noexcept;

struct ExtensionVerdict {
  ExtensionKind kind;
  std::string reason;
};

/// A tail of a trace that stays in one lambda band with a constant v(y),
/// so that v(d) follows v(d') = (v(d) - v(a_q)) / q.
struct BandWindow {
  std::size_t start;
  std::int64_t q;
  ExtRat v_aq;
};

/// The root point with v(alpha - b) given and v(alpha) = min(v(alpha - b), v(b)).
RootPointSpec root_near_fixed_point(const UnicritParams& params, const ExtRat& v_c,
                                    const ExtRat& v_alpha_minus_b);

/// Throws InconsistentRootPoint unless v(alpha - b) = min(v(alpha), v(b)),
/// or v(alpha - b) >= v(b) when v(alpha) = v(b).
void check_root_point(const UnicritParams& params, const ExtRat& v_c, const RootPointSpec& root);

/// v(alpha_{n+1}) = min(v(c), v(alpha_n)) / ell.
AlphaPropagation propagate_alpha_valuation(const UnicritParams& params, const ExtRat& v_c,
                                           const ExtRat& v_alpha, std::int64_t n_steps);

/// -m1 (Closest) or -(last nonzero slope) (Furthest) of the predicted
/// polygon. At d = 0 Closest skips the slope -inf segment of the root z = 0.
ExtRat next_distance_valuation(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d,
                               TowerMode mode);

TowerTrace tower_trace(const UnicritParams& params, const ExtRat& v_c, const RootPointSpec& root,
                       TowerMode mode, std::int64_t n_steps);

/// Closest-preimage chain anchored at a fixed point b: entry n is
/// v(alpha_n - b), starting from v(alpha - b).
std::vector<ExtRat> fixed_point_trace(const UnicritParams& params, const ExtRat& v_c,
                                      const ExtRat& v_alpha_minus_b, std::int64_t n_steps);

/// v(d_m)/q^n - (q^n - 1)/(q^n (q - 1)) v(a_q).
ExtRat closed_form_dn(const ExtRat& v_dm, std::int64_t q, const ExtRat& v_aq, std::int64_t n);

/// The longest tail of the trace driven by a single band with q >= 2.
std::optional<BandWindow> terminal_band(const TowerTrace& trace);

/// den_p_val_seq strictly increases over the second half of the trace.
bool is_wildly_ramified(const TowerTrace& trace);
bool is_wildly_ramified(const std::vector<std::int64_t>& den_p_val_seq);

/// First n at which the polygon for the step after v_d_seq[n] has a
/// width-1 first segment, i.e. the next closest preimage lies in the base.
std::optional<std::size_t> first_base_field_root_step(const TowerTrace& trace);

ExtensionVerdict classify_extension(const UnicritParams& params, const ExtRat& v_c,
                                    const RootPointSpec& root);

}  // namespace ultradyn
