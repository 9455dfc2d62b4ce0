#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ultradyn/newton.hpp"
#include "ultradyn/valcore.hpp"

// Property suites run by `ultradyn selftest`. Each suite walks a parameter
// grid and compares a closed form with an independent computation.
namespace ultradyn::selftest {

enum class Depth { Quick, Full };

struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  /// The first few failing inputs, one per line.
  std::vector<std::string> counterexamples;

  bool passed() const { return cases > 0 && failures == 0; }
};

using Predictor = std::function<PredictedNP(const UnicritParams&, const ExtRat&, const ExtRat&)>;

struct Options {
  Depth depth = Depth::Quick;
  /// Replaces predicted_polygon in the Newton suites.
  Predictor predictor;
};

/// predicted_polygon with the band-edge tie resolved the wrong way: the
/// collinear vertex at p^{n0} is kept.
PredictedNP predict_with_tiebreak_fault(const UnicritParams& params, const ExtRat& v_y,
                                        const ExtRat& v_d);

/// All (p, ell) with p in primes, k <= max_k, N in big_ns coprime to p, ell >= 2.
std::vector<UnicritParams> param_grid(const std::vector<std::int64_t>& primes, std::int64_t max_k,
                                      const std::vector<std::int64_t>& big_ns);

std::vector<UnicritParams> newton_params(Depth depth);
std::vector<ExtRat> newton_vy_values();
/// Evenly spaced values across every lambda band, each lambda exactly,
/// and +inf.
std::vector<ExtRat> newton_vd_values(const UnicritParams& params, const ExtRat& v_y);

std::vector<UnicritParams> reduction_params(Depth depth);
/// Negative v(c) values: an even spread plus nu_good, nu_infty and the c levels.
std::vector<ExtRat> negative_vc_values(const UnicritParams& params, std::int64_t count);

/// p in {2, 3}, 1 <= k <= 3, N in {1, 2, 3}; the same at both depths.
std::vector<UnicritParams> tower_params();
/// 25 values of v(c) across every regime, both cutoffs included.
std::vector<ExtRat> tower_vc_values(const UnicritParams& params);
std::vector<ExtRat> tower_valpha_values();

std::vector<SuiteResult> run_all(const Options& options);

}  // namespace ultradyn::selftest
