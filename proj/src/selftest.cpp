#include "ultradyn/selftest.hpp"

#include <random>
#include <set>
#include <sstream>

#include "ultradyn/error.hpp"
#include "ultradyn/julia.hpp"
#include "ultradyn/reduction.hpp"
#include "ultradyn/tower.hpp"

namespace ultradyn::selftest {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

mpq_class as_q(std::int64_t n) { return mpq_class(static_cast<long>(n)); }

std::string tag(const UnicritParams& params) {
  return "p=" + std::to_string(params.p()) + " ell=" + std::to_string(params.ell());
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  // Runs one case; a thrown library error counts as a failure.
  template <typename Case, typename Describe>
  void check(Case&& body, Describe&& describe) {
    ++result_.cases;
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < kMaxCounterexamples) {
      std::string line = describe();
      if (!detail.empty()) line += ": " + detail;
      result_.counterexamples.push_back(std::move(line));
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string xs_text(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::int64_t legendre_factorial(std::int64_t p, std::int64_t n) {
  std::int64_t e = 0;
  for (std::int64_t q = p; q <= n; q *= p) e += n / q;
  return e;
}

std::int64_t legendre_binom(std::int64_t p, std::int64_t ell, std::int64_t n) {
  return legendre_factorial(p, ell) - legendre_factorial(p, n) - legendre_factorial(p, ell - n);
}

// v(a_n) for the conjugate g, computed from factorial valuations.
std::vector<ExtRat> coeff_oracle(const UnicritParams& params, const ExtRat& v_c) {
  const ExtRat v_b = v_c < ExtRat(0) ? v_c / as_q(params.ell()) : ExtRat(0);
  std::vector<ExtRat> out;
  for (std::int64_t n = 1; n <= params.ell(); ++n) {
    out.push_back(ExtRat(static_cast<long>(legendre_binom(params.p(), params.ell(), n))) +
                  v_b * as_q(params.ell() - n));
  }
  return out;
}

ExtRat tau_oracle(const std::vector<ExtRat>& coeffs, const ExtRat& rho) {
  ExtRat best = ExtRat::neg_inf();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    best = max(best, rho * as_q(static_cast<std::int64_t>(i) + 1) - coeffs[i]);
  }
  return best;
}

ExtRat preimage_oracle(const std::vector<ExtRat>& coeffs, const ExtRat& target) {
  ExtRat best = ExtRat::pos_inf();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    best = min(best, (target + coeffs[i]) / as_q(static_cast<std::int64_t>(i) + 1));
  }
  return best;
}

std::vector<ExtRat> bad_reduction_vc(const UnicritParams& params, std::int64_t count) {
  const ExtRat nu_good = cutoffs(params).nu_good;
  std::vector<ExtRat> out;
  for (auto& v : negative_vc_values(params, count)) {
    if (v < nu_good) out.push_back(std::move(v));
  }
  return out;
}

// ---- valcore ---------------------------------------------------------------

SuiteResult suite_legendre(Depth depth) {
  Recorder rec("valcore.vp_binom_legendre");
  const std::vector<std::int64_t> primes =
      depth == Depth::Full ? std::vector<std::int64_t>{2, 3, 5, 7} : std::vector<std::int64_t>{2, 3};
  const std::int64_t max_ell = depth == Depth::Full ? 2000 : 300;
  for (const std::int64_t p : primes) {
    for (std::int64_t ell = 1; ell <= max_ell; ++ell) {
      // One case per (p, ell) keeps the count readable; every n is checked.
      std::int64_t bad_n = -1;
      rec.check(
          [&](std::string&) {
            for (std::int64_t n = 0; n <= ell; ++n) {
              if (vp_binom(p, ell, n) != legendre_binom(p, ell, n)) {
                bad_n = n;
                return false;
              }
            }
            return true;
          },
          [&] {
            return "p=" + std::to_string(p) + " ell=" + std::to_string(ell) +
                   " n=" + std::to_string(bad_n);
          });
    }
  }
  return rec.take();
}

SuiteResult suite_binom_k_minus_v(Depth depth) {
  Recorder rec("valcore.binom_k_minus_v");
  const auto grid = param_grid(depth == Depth::Full ? std::vector<std::int64_t>{2, 3, 5, 7}
                                                    : std::vector<std::int64_t>{2, 3},
                               depth == Depth::Full ? 6 : 3, {1, 2, 3, 4, 5});
  for (const auto& params : grid) {
    if (params.ell() > 20000) continue;
    const std::int64_t top = params.p_pow(params.k());
    for (std::int64_t n = 1; n <= top; ++n) {
      rec.check(
          [&](std::string&) {
            return vp_binom(params.p(), params.ell(), n) == params.k() - vp_int(params.p(), n);
          },
          [&] { return tag(params) + " n=" + std::to_string(n); });
    }
  }
  return rec.take();
}

SuiteResult suite_extrat_laws(Depth depth) {
  Recorder rec("valcore.extrat_laws");
  std::mt19937_64 rng(0x5eed0001);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 36);
  std::uniform_int_distribution<int> pick(0, 19);
  auto draw = [&]() {
    const int r = pick(rng);
    if (r == 0) return ExtRat::pos_inf();
    if (r == 1) return ExtRat::neg_inf();
    return ExtRat(num(rng), den(rng));
  };
  const int trials = depth == Depth::Full ? 20000 : 3000;
  for (int t = 0; t < trials; ++t) {
    const ExtRat a = draw(), b = draw(), c = draw();
    rec.check(
        [&](std::string&) {
          bool ok = (a < b) + (a == b) + (a > b) == 1;
          ok = ok && ((a <= b && b <= c) ? a <= c : true);
          ok = ok && ((a <= b && b <= a) ? a == b : true);
          ok = ok && min(a, b) <= max(a, b);
          auto defined = [](const ExtRat& x, const ExtRat& y) {
            return x.is_finite() || y.is_finite() || x.kind() == y.kind();
          };
          if (defined(a, b)) ok = ok && a + b == b + a;
          if (defined(a, b) && defined(b, c) && defined(a, c) && defined(a + b, c) &&
              defined(a, b + c)) {
            ok = ok && (a + b) + c == a + (b + c);
          }
          if (a.is_finite()) ok = ok && ExtRat::parse(a.to_string()) == a;
          return ok;
        },
        [&] { return a.to_string() + " " + b.to_string() + " " + c.to_string(); });
  }
  return rec.take();
}

// ---- newton ----------------------------------------------------------------

struct NewtonCase {
  UnicritParams params;
  ExtRat v_y;
  ExtRat v_d;
};

std::vector<NewtonCase> newton_cases(Depth depth) {
  std::vector<NewtonCase> out;
  for (const auto& params : newton_params(depth)) {
    for (const auto& v_y : newton_vy_values()) {
      for (auto& v_d : newton_vd_values(params, v_y)) out.push_back({params, v_y, std::move(v_d)});
    }
  }
  return out;
}

std::string case_tag(const NewtonCase& c) {
  return "(p=" + std::to_string(c.params.p()) + ", ell=" + std::to_string(c.params.ell()) +
         ", v_y=" + c.v_y.to_string() + ", v_d=" + c.v_d.to_string() + ")";
}

std::vector<SuiteResult> newton_suites(const Options& options) {
  Recorder oracle("newton.predicted_vs_hull");
  Recorder root("newton.width_one_iff_base_root");
  Recorder mono("newton.slopes_increasing");
  Recorder single("newton.single_segment_below_last_threshold");
  const Predictor predict = options.predictor ? options.predictor : Predictor(predicted_polygon);

  for (const auto& c : newton_cases(options.depth)) {
    const NewtonPolygon hull = lower_hull(difference_points(c.params, c.v_y, c.v_d));
    oracle.check(
        [&](std::string& detail) {
          const PredictedNP pred = predict(c.params, c.v_y, c.v_d);
          const auto xs = hull.vertex_xs();
          if (xs == pred.vertex_xs && hull.first_slope() == pred.m1 &&
              hull.last_slope() == pred.m_ell) {
            return true;
          }
          detail = "hull x=[" + xs_text(xs) + "] m1=" + hull.first_slope().to_string() +
                   " m_ell=" + hull.last_slope().to_string() + "; predicted x=[" +
                   xs_text(pred.vertex_xs) + "] m1=" + pred.m1.to_string() +
                   " m_ell=" + pred.m_ell.to_string();
          return false;
        },
        [&] { return case_tag(c); });
    root.check(
        [&](std::string&) {
          return (hull.segments.front().width == 1) ==
                 base_field_root_exists(c.params, c.v_y, c.v_d);
        },
        [&] { return case_tag(c); });
    mono.check(
        [&](std::string&) {
          for (std::size_t i = 1; i < hull.segments.size(); ++i) {
            if (!(hull.segments[i - 1].slope < hull.segments[i].slope)) return false;
          }
          return true;
        },
        [&] { return case_tag(c); });

    const std::int64_t k = c.params.k();
    const ExtRat threshold = c.params.is_prime_power()
                                 ? lambda_threshold(c.params, c.v_y, k)
                                 : c.v_y * as_q(c.params.ell());
    if (c.v_d.is_finite() && c.v_d < threshold) {
      single.check(
          [&](std::string&) {
            const auto roots = root_valuation_multiset(hull);
            return roots.size() == 1 && roots[0].multiplicity == c.params.ell() &&
                   roots[0].valuation == c.v_d / as_q(c.params.ell());
          },
          [&] { return case_tag(c); });
    }
  }
  return {oracle.take(), root.take(), mono.take(), single.take()};
}

// ---- reduction -------------------------------------------------------------

std::vector<SuiteResult> reduction_suites(Depth depth) {
  Recorder good("reduction.good_iff_integral_coefficients");
  Recorder c1("reduction.nu_infty_is_c1");
  Recorder order("reduction.cutoff_order");
  const std::int64_t count = depth == Depth::Full ? 120 : 40;
  for (const auto& params : reduction_params(depth)) {
    const Cutoffs cut = cutoffs(params);
    for (const auto& v_c : negative_vc_values(params, count)) {
      good.check(
          [&](std::string&) {
            const auto coeffs = coeff_oracle(params, v_c);
            bool integral = true;
            for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
              integral = integral && coeffs[i] >= ExtRat(0);
            }
            const bool expected = v_c >= cut.nu_good;
            return integral == expected && has_potential_good_reduction(params, v_c) == expected;
          },
          [&] { return tag(params) + " v_c=" + v_c.to_string(); });
    }
    c1.check([&](std::string&) { return c_levels(params).at(1) == cut.nu_infty; },
             [&] { return tag(params); });
    order.check(
        [&](std::string&) {
          const bool strict = (params.is_prime_power() && params.k() >= 2) ||
                              (!params.is_prime_power() && params.k() >= 1);
          return strict ? cut.nu_infty < cut.nu_good : cut.nu_infty == cut.nu_good;
        },
        [&] { return tag(params); });
  }
  return {good.take(), c1.take(), order.take()};
}

// ---- julia -----------------------------------------------------------------

// Length of the final run of gaps shrinking by exactly 1/q.
std::size_t ratio_run(const RadiiTrace& trace, std::int64_t q) {
  std::size_t run = 0;
  for (std::size_t m = trace.rho_seq.size() - 1; m > 0; --m) {
    const ExtRat gap_next = trace.rho_seq[m].value - trace.rho_limit.value;
    const ExtRat gap = trace.rho_seq[m - 1].value - trace.rho_limit.value;
    if (!(gap_next > ExtRat(0)) || gap_next * as_q(q) != gap) break;
    ++run;
  }
  return run;
}

std::vector<SuiteResult> julia_suites(Depth depth) {
  Recorder fixed("julia.limit_is_tau_fixed_point");
  Recorder ratio("julia.gap_ratio_one_over_q");
  Recorder wdeg("julia.wdeg_matches_bands");
  Recorder boundary("julia.limit_vanishes_iff_below_nu_infty");
  Recorder nesting("julia.radii_strictly_decreasing");
  Recorder preimage("julia.preimage_matches_min_formula");
  const std::int64_t count = depth == Depth::Full ? 24 : 12;

  for (const auto& params : reduction_params(depth)) {
    const Cutoffs cut = cutoffs(params);
    for (const auto& v_c : bad_reduction_vc(params, count)) {
      const auto describe = [&] { return tag(params) + " v_c=" + v_c.to_string(); };
      const auto coeffs = coeff_oracle(params, v_c);
      const std::int64_t band = c_level_band(params, v_c);
      const LogRadius limit = limit_log_radius(params, v_c);

      boundary.check(
          [&](std::string&) {
            const bool vanishes = limit.value.is_neg_inf();
            return vanishes == (v_c < c_levels(params).at(1)) &&
                   vanishes == (v_c < cut.nu_infty);
          },
          describe);

      if (band >= 1) {
        fixed.check([&](std::string&) { return tau_oracle(coeffs, limit.value) == limit.value; },
                    describe);
        const std::int64_t q = params.p_pow(band);
        ratio.check(
            [&](std::string& detail) {
              for (std::int64_t m_max = 40; m_max <= 640; m_max *= 2) {
                const RadiiTrace trace = radii_sequence(params, v_c, m_max);
                if (ratio_run(trace, q) >= 20) return true;
              }
              detail = "fewer than 20 stable terms by m = 640";
              return false;
            },
            describe);
      }

      const RadiiTrace trace = radii_sequence(params, v_c, 25);
      nesting.check(
          [&](std::string&) {
            for (std::size_t m = 1; m < trace.rho_seq.size(); ++m) {
              if (!(trace.rho_seq[m] < trace.rho_seq[m - 1])) return false;
            }
            return true;
          },
          describe);

      for (std::size_t m = 0; m + 1 < trace.rho_seq.size(); m += 6) {
        const ExtRat& target = trace.rho_seq[m].value;
        preimage.check(
            [&](std::string&) {
              return preimage_log_radius(params, v_c, {target}).value ==
                     preimage_oracle(coeffs, target);
            },
            [&] { return describe() + " target=" + target.to_string(); });
      }

      const auto breaks = breakpoint_log_radii(params, v_c);
      std::vector<ExtRat> probes{ExtRat::neg_inf()};
      for (std::size_t i = 1; i < breaks.size(); ++i) {
        const ExtRat& r = breaks[i].value;
        if (!r.is_finite()) continue;
        probes.push_back(r);
        probes.push_back(r - ExtRat(1, 3));
        probes.push_back(r + ExtRat(1, 5));
      }
      for (const auto& rho : probes) {
        wdeg.check(
            [&](std::string&) {
              // Band lookup from the breakpoint formula alone.
              std::int64_t expected = 1;
              if (rho.is_finite()) {
                for (std::int64_t n = 1; n <= params.k(); ++n) {
                  const long run = static_cast<long>(params.p_pow(n) - params.p_pow(n - 1));
                  const ExtRat r_n = ExtRat(-1, run) - fixed_point_valuation(params, v_c);
                  if (r_n <= rho) expected = params.p_pow(n);
                }
                if (!params.is_prime_power() && -fixed_point_valuation(params, v_c) <= rho) {
                  expected = params.ell();
                }
              }
              return wdeg_on_disk(params, v_c, {rho}) == expected;
            },
            [&] { return describe() + " rho=" + rho.to_string(); });
      }
    }
  }
  return {fixed.take(), ratio.take(), wdeg.take(), boundary.take(), nesting.take(),
          preimage.take()};
}

// ---- tower -----------------------------------------------------------------

constexpr std::int64_t kTowerSteps = 100;

std::vector<SuiteResult> tower_suites() {
  Recorder duality("tower.distance_equals_radius");
  Recorder limit("tower.limit_matches_julia");
  Recorder closed("tower.closed_form_in_terminal_band");
  Recorder consistency("tower.verdict_matches_trace");
  Recorder finiteness("tower.finite_case_reaches_base_root");

  for (const auto& params : tower_params()) {
    const Cutoffs cut = cutoffs(params);
    for (const auto& v_c : tower_vc_values(params)) {
      const auto describe = [&] { return tag(params) + " v_c=" + v_c.to_string(); };
      const ExtRat v_b = fixed_point_valuation(params, v_c);
      const bool bad = v_c < cut.nu_good;

      if (bad) {
        const TowerTrace aligned = tower_trace(params, v_c, {v_b, v_b}, TowerMode::Hybrid, 30);
        const RadiiTrace radii = radii_sequence(params, v_c, 29);
        duality.check(
            [&](std::string& detail) {
              for (std::size_t n = 0; n < aligned.v_d_seq.size(); ++n) {
                if (aligned.v_d_seq[n] != -radii.rho_seq[n].value) {
                  detail = "n=" + std::to_string(n) + " v_d=" + aligned.v_d_seq[n].to_string() +
                           " rho=" + radii.rho_seq[n].value.to_string();
                  return false;
                }
              }
              return true;
            },
            describe);

        const TowerTrace longer =
            tower_trace(params, v_c, {v_b, v_b}, TowerMode::Hybrid, kTowerSteps);
        const LogRadius rho_limit = limit_log_radius(params, v_c);
        const auto window = terminal_band(longer);
        limit.check(
            [&](std::string& detail) {
              if (rho_limit.value.is_neg_inf()) {
                return first_base_field_root_step(longer).has_value();
              }
              if (!window) {
                detail = "no terminal band";
                return false;
              }
              const ExtRat tower_limit = -window->v_aq / as_q(window->q - 1);
              return window->q == params.p_pow(c_level_band(params, v_c)) &&
                     tower_limit == -rho_limit.value;
            },
            describe);
        if (window) {
          closed.check(
              [&](std::string& detail) {
                const ExtRat& start = longer.v_d_seq[window->start];
                for (std::size_t j = window->start; j < longer.v_d_seq.size(); ++j) {
                  const auto n = static_cast<std::int64_t>(j - window->start);
                  if (closed_form_dn(start, window->q, window->v_aq, n) != longer.v_d_seq[j]) {
                    detail = "n=" + std::to_string(n);
                    return false;
                  }
                }
                return true;
              },
              describe);
        }
      }

      for (const auto& v_alpha : tower_valpha_values()) {
        const RootPointSpec root{v_alpha, v_alpha != v_b ? min(v_alpha, v_b) : v_alpha};
        consistency.check(
            [&](std::string& detail) {
              const ExtensionVerdict verdict = classify_extension(params, v_c, root);
              const TowerTrace trace = tower_trace(params, v_c, root, TowerMode::Hybrid, kTowerSteps);
              bool wild = false;
              if (v_c == cut.nu_infty && params.ell() == params.p()) {
                std::vector<std::int64_t> dens;
                for (const auto& v : fixed_point_trace(params, v_c, *root.v_alpha_minus_b,
                                                       kTowerSteps)) {
                  dens.push_back(den_p_valuation(v, params.p()));
                }
                wild = is_wildly_ramified(dens);
              } else {
                wild = is_wildly_ramified(trace);
              }
              const bool finite = verdict.kind == ExtensionKind::Finite;
              bool ok = wild == (verdict.kind == ExtensionKind::InfiniteWildlyRamified);
              if (finite) {
                ok = ok && first_base_field_root_step(trace).has_value() &&
                     julia_classify(params, v_c) == JuliaVerdict::CantorTypeI;
              }
              if (!ok) {
                detail = std::string(extension_kind_name(verdict.kind)) +
                         (wild ? " but trace is wild" : " but trace is bounded");
              }
              return ok;
            },
            [&] { return describe() + " v_alpha=" + v_alpha.to_string(); });
      }

      if (v_c < cut.nu_infty) {
        const ExtRat threshold = params.is_prime_power()
                                     ? lambda_threshold(params, v_b, params.k())
                                     : v_b * as_q(params.ell());
        for (const ExtRat& start :
             {threshold - ExtRat(1), threshold - ExtRat(1, 3), threshold * as_q(4) - ExtRat(2)}) {
          finiteness.check(
              [&](std::string& detail) {
                const auto seq = fixed_point_trace(params, v_c, start, kTowerSteps);
                bool reached = false;
                for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
                  if (seq[n] < threshold && seq[n + 1] != seq[n] / as_q(params.ell())) {
                    detail = "step " + std::to_string(n) + " is not division by ell";
                    return false;
                  }
                  if (base_field_root_exists(params, v_b, seq[n])) {
                    reached = true;
                    break;
                  }
                }
                if (!reached) detail = "no base-field root within the trace";
                return reached;
              },
              [&] { return describe() + " v(d0)=" + start.to_string(); });
        }
      }
    }
  }
  return {duality.take(), limit.take(), closed.take(), consistency.take(), finiteness.take()};
}

void append(std::vector<SuiteResult>& out, std::vector<SuiteResult> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

PredictedNP predict_with_tiebreak_fault(const UnicritParams& params, const ExtRat& v_y,
                                        const ExtRat& v_d) {
  PredictedNP np = predicted_polygon(params, v_y, v_d);
  if (!np.n0 || *np.n0 > params.k()) return np;
  const std::int64_t n0 = *np.n0;
  if (v_d != lambda_threshold(params, v_y, n0 + 1)) return np;
  const std::int64_t x = params.p_pow(n0);
  if (np.vertex_xs.size() > 1 && np.vertex_xs[1] != x) {
    np.vertex_xs.insert(np.vertex_xs.begin() + 1, x);
  }
  return np;
}

std::vector<UnicritParams> param_grid(const std::vector<std::int64_t>& primes, std::int64_t max_k,
                                      const std::vector<std::int64_t>& big_ns) {
  std::vector<UnicritParams> out;
  for (const std::int64_t p : primes) {
    for (std::int64_t k = 0; k <= max_k; ++k) {
      for (const std::int64_t n : big_ns) {
        if (n % p == 0) continue;
        std::int64_t ell = n;
        for (std::int64_t i = 0; i < k; ++i) ell *= p;
        if (ell < 2) continue;
        out.push_back(decompose(p, ell));
      }
    }
  }
  return out;
}

std::vector<UnicritParams> newton_params(Depth depth) {
  if (depth == Depth::Full) return param_grid({2, 3, 5}, 4, {1, 2, 3});
  return param_grid({2, 3}, 3, {1, 2, 3});
}

std::vector<ExtRat> newton_vy_values() {
  return {ExtRat(-7, 3), ExtRat(-1), ExtRat(-1, 2), ExtRat(0), ExtRat(1, 4), ExtRat(2)};
}

std::vector<ExtRat> newton_vd_values(const UnicritParams& params, const ExtRat& v_y) {
  std::set<ExtRat> values;
  std::vector<ExtRat> lambdas;
  for (std::int64_t n = 1; n <= params.k() + 1; ++n) {
    ExtRat l = lambda_threshold(params, v_y, n);
    if (l.is_finite()) lambdas.push_back(std::move(l));
  }
  for (const auto& l : lambdas) values.insert(l);
  const ExtRat hi = lambdas.front() + ExtRat(4);
  const ExtRat lo = lambdas.back() - ExtRat(4);
  constexpr long kSpread = 52;
  for (long i = 0; i < kSpread; ++i) {
    values.insert(lo + (hi - lo) * mpq_class(i, kSpread - 1));
  }
  values.insert(ExtRat::pos_inf());
  return {values.begin(), values.end()};
}

std::vector<UnicritParams> reduction_params(Depth depth) {
  if (depth == Depth::Full) return param_grid({2, 3, 5}, 4, {1, 2, 3, 4});
  return param_grid({2, 3}, 3, {1, 2, 3, 4});
}

std::vector<ExtRat> negative_vc_values(const UnicritParams& params, std::int64_t count) {
  const Cutoffs cut = cutoffs(params);
  std::set<ExtRat> values;
  const ExtRat lo = cut.nu_infty - ExtRat(3);
  for (std::int64_t i = 0; i < count; ++i) {
    values.insert(lo - lo * mpq_class(static_cast<long>(i), static_cast<long>(count)));
  }
  for (const auto& v : c_levels(params)) {
    if (v.is_finite() && v < ExtRat(0)) values.insert(v);
  }
  if (cut.nu_good < ExtRat(0)) values.insert(cut.nu_good);
  return {values.begin(), values.end()};
}

std::vector<UnicritParams> tower_params() {
  std::vector<UnicritParams> out;
  for (auto& params : param_grid({2, 3}, 3, {1, 2, 3})) {
    if (!params.is_tame()) out.push_back(params);
  }
  return out;
}

std::vector<ExtRat> tower_vc_values(const UnicritParams& params) {
  constexpr std::size_t kCount = 25;
  const Cutoffs cut = cutoffs(params);
  std::set<ExtRat> values{cut.nu_infty, cut.nu_good,   ExtRat(0),
                          ExtRat(1, 2), ExtRat(3),     cut.nu_infty - ExtRat(1, 7),
                          cut.nu_infty - ExtRat(4)};
  for (const auto& v : c_levels(params)) {
    if (v.is_finite()) values.insert(v);
  }
  if (cut.nu_infty < cut.nu_good) values.insert((cut.nu_infty + cut.nu_good) / mpq_class(2));
  const ExtRat lo = cut.nu_infty - ExtRat(3);
  const ExtRat hi(2);
  const std::size_t fill = kCount > values.size() ? kCount - values.size() : 0;
  for (std::size_t i = 0; i < fill; ++i) {
    values.insert(lo + (hi - lo) * mpq_class(static_cast<long>(2 * i + 1), static_cast<long>(2 * fill)));
  }
  for (long j = 1; values.size() < kCount; ++j) values.insert(lo - ExtRat(j, 3));
  return {values.begin(), values.end()};
}

std::vector<ExtRat> tower_valpha_values() {
  return {ExtRat(-5), ExtRat(-1), ExtRat(0), ExtRat(1, 3), ExtRat(2)};
}

std::vector<SuiteResult> run_all(const Options& options) {
  std::vector<SuiteResult> out;
  out.push_back(suite_legendre(options.depth));
  out.push_back(suite_binom_k_minus_v(options.depth));
  out.push_back(suite_extrat_laws(options.depth));
  append(out, newton_suites(options));
  append(out, reduction_suites(options.depth));
  append(out, julia_suites(options.depth));
  append(out, tower_suites());
  return out;
}

}  // namespace ultradyn::selftest
