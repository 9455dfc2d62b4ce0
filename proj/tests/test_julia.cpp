#include <doctest.h>

#include "oracles.hpp"
#include "ultradyn/error.hpp"
#include "ultradyn/julia.hpp"
#include "ultradyn/reduction.hpp"
#include "ultradyn/selftest.hpp"

using namespace ultradyn;

namespace {

const UnicritParams p2_8 = decompose(2, 8);
const UnicritParams p3_6 = decompose(3, 6);

LogRadius lr(long num, long den = 1) { return {ExtRat(num, den)}; }

std::vector<ExtRat> values_of(const std::vector<LogRadius>& radii) {
  std::vector<ExtRat> out;
  for (const auto& r : radii) out.push_back(r.value);
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("expected a DomainError");
  return Errc::OutOfRange;
}

}  // namespace

TEST_CASE("breakpoint log-radii") {
  CHECK(values_of(breakpoint_log_radii(p2_8, ExtRat(-3))) ==
        std::vector<ExtRat>{ExtRat::neg_inf(), ExtRat(-5, 8), ExtRat(-1, 8), ExtRat(1, 8),
                            ExtRat::pos_inf()});
  CHECK(values_of(breakpoint_log_radii(p3_6, ExtRat(-1))) ==
        std::vector<ExtRat>{ExtRat::neg_inf(), ExtRat(-1, 3), ExtRat(1, 6)});
  CHECK(values_of(breakpoint_log_radii(decompose(2, 2), ExtRat(-4))) ==
        std::vector<ExtRat>{ExtRat::neg_inf(), ExtRat(1), ExtRat::pos_inf()});
}

TEST_CASE("Weierstrass degree on disks") {
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), lr(0)) == 4);
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), lr(-1, 4)) == 2);
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), lr(1, 2)) == 8);
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), lr(-10)) == 1);
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), {ExtRat::neg_inf()}) == 1);
  // On a breakpoint the degree jumps to the higher power.
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), lr(-1, 8)) == 4);
  CHECK(wdeg_on_disk(p2_8, ExtRat(-3), lr(1, 8)) == 8);
}

TEST_CASE("tropical radius map and its inverse") {
  CHECK(tau_image_log_radius(p2_8, ExtRat(-3), lr(-1, 4)) == lr(-1, 4));
  CHECK(tau_image_log_radius(p2_8, ExtRat(-3), lr(1, 8)) == lr(1));
  CHECK(tau_image_log_radius(p2_8, ExtRat(-3), lr(-3, 32)) == lr(1, 8));
  CHECK(preimage_log_radius(p2_8, ExtRat(-3), lr(1, 8)) == lr(-3, 32));
  CHECK(preimage_log_radius(p2_8, ExtRat(-3), lr(-3, 32)) == lr(-11, 64));
  CHECK(preimage_log_radius(p2_8, ExtRat(-3), lr(-1, 4)) == lr(-1, 4));
  CHECK(code_of([] { (void)preimage_log_radius(p2_8, ExtRat(-3), {ExtRat::pos_inf()}); }) ==
        Errc::NoPreimage);
  CHECK(code_of([] { (void)preimage_log_radius(p2_8, ExtRat(-3), lr(2)); }) == Errc::NoPreimage);
}

TEST_CASE("initial radius and c levels") {
  CHECK(initial_log_radius(p2_8, ExtRat(-3)) == lr(1, 8));
  CHECK(initial_log_radius(p3_6, ExtRat(-1)) == lr(1, 6));
  CHECK(initial_log_radius(p2_8, ExtRat(-2)) == lr(0));
  CHECK(c_levels(p2_8) ==
        std::vector<ExtRat>{ExtRat::neg_inf(), ExtRat(-24, 7), ExtRat(-20, 7), ExtRat(-2)});
  CHECK(c_levels(p3_6) == std::vector<ExtRat>{ExtRat::neg_inf(), ExtRat(-6, 5), ExtRat(0)});
  CHECK(c_levels(decompose(2, 2)) == std::vector<ExtRat>{ExtRat::neg_inf(), ExtRat(-2)});
  CHECK(c_level_band(p2_8, ExtRat(-3)) == 1);
  CHECK(c_level_band(p2_8, ExtRat(-20, 7)) == 2);
  CHECK(code_of([] { (void)c_level_band(p2_8, ExtRat(-2)); }) == Errc::OutOfRange);
}

TEST_CASE("limit radius") {
  CHECK(limit_log_radius(p2_8, ExtRat(-3)) == lr(-1, 4));
  CHECK(limit_log_radius(p2_8, ExtRat(-4)).value.is_neg_inf());
  CHECK(limit_log_radius(p2_8, ExtRat(-5, 2)) == lr(-1, 12));
}

TEST_CASE("radii sequence") {
  const RadiiTrace t = radii_sequence(p2_8, ExtRat(-3), 3);
  CHECK(values_of(t.rho_seq) ==
        std::vector<ExtRat>{ExtRat(1, 8), ExtRat(-3, 32), ExtRat(-11, 64), ExtRat(-27, 128)});
  CHECK(t.rho_limit == lr(-1, 4));
  CHECK(t.band_n == 1);
  CHECK(t.v_b == ExtRat(-3, 8));

  const RadiiTrace below = radii_sequence(p2_8, ExtRat(-4), 40);
  CHECK(below.rho_limit.value.is_neg_inf());
  for (std::size_t m = 1; m < below.rho_seq.size(); ++m) CHECK(below.rho_seq[m] < below.rho_seq[m - 1]);
  // Once on the degree-1 segment each step drops by |v(a_1)| = 1/2.
  for (std::size_t m = 2; m < below.rho_seq.size(); ++m) {
    CHECK(below.rho_seq[m - 1].value - below.rho_seq[m].value == ExtRat(1, 2));
  }

  const RadiiTrace mixed = radii_sequence(p3_6, ExtRat(-1), 1);
  REQUIRE(mixed.rho_seq.size() == 2);
  CHECK(mixed.rho_seq[0] == lr(1, 6));
  CHECK(tau_image_log_radius(p3_6, ExtRat(-1), mixed.rho_seq[1]) == mixed.rho_seq[0]);

  CHECK(code_of([] { (void)radii_sequence(p2_8, ExtRat(-3), 0); }) == Errc::OutOfRange);
  CHECK(code_of([] { (void)radii_sequence(p2_8, ExtRat(-1), 3); }) == Errc::OutOfRange);
}

TEST_CASE("Julia classification") {
  CHECK(julia_classify(p2_8, ExtRat(-4)) == JuliaVerdict::CantorTypeI);
  CHECK(julia_classify(p2_8, ExtRat(-3)) == JuliaVerdict::CantorWithTypeII);
  CHECK(julia_classify(p2_8, ExtRat(-24, 7)) == JuliaVerdict::CantorWithTypeII);
  CHECK(julia_classify(p2_8, ExtRat(-2)) == JuliaVerdict::SingleTypeII);
  CHECK(julia_classify(p3_6, ExtRat(0)) == JuliaVerdict::SingleTypeII);
  CHECK(julia_verdict_name(JuliaVerdict::CantorWithTypeII) == "CantorWithTypeII");
}

TEST_CASE("radius map agrees with a full scan and the min formula over the grid") {
  for (const auto& params : selftest::param_grid({2, 3}, 3, {1, 2, 3})) {
    if (params.k() == 0) continue;
    for (const auto& v_c : selftest::negative_vc_values(params, 30)) {
      if (v_c >= cutoffs(params).nu_good) continue;
      const auto coeffs = oracle::conjugate_coeffs(params.p(), params.ell(), v_c);
      const RadiiTrace t = radii_sequence(params, v_c, 12);
      for (std::size_t m = 1; m < t.rho_seq.size(); ++m) {
        CHECK(oracle::tau(coeffs, t.rho_seq[m].value) == t.rho_seq[m - 1].value);
        CHECK(oracle::tau_inverse(coeffs, t.rho_seq[m - 1].value) == t.rho_seq[m].value);
        CHECK(t.rho_seq[m] < t.rho_seq[m - 1]);
        CHECK(t.rho_limit < t.rho_seq[m]);
      }
      if (t.band_n >= 1) {
        CHECK(oracle::tau(coeffs, t.rho_limit.value) == t.rho_limit.value);
      }
      CHECK((t.rho_limit.value.is_neg_inf()) ==
            (v_c < oracle::nu_infty(params.p(), params.ell())));
    }
  }
}

TEST_CASE("gap to the limit shrinks by exactly 1/q once the segment settles") {
  const RadiiTrace t = radii_sequence(p2_8, ExtRat(-3), 20);
  const ExtRat half(1, 2);
  for (std::size_t m = 3; m + 1 < t.rho_seq.size(); ++m) {
    const ExtRat gap = t.rho_seq[m].value - t.rho_limit.value;
    const ExtRat next = t.rho_seq[m + 1].value - t.rho_limit.value;
    CHECK(next == gap * half.value());
  }
}
