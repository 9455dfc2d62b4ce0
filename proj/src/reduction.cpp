#include "ultradyn/reduction.hpp"

#include "ultradyn/error.hpp"

namespace ultradyn {

Cutoffs cutoffs(const UnicritParams& params) {
  const long ell = static_cast<long>(params.ell());
  const long p = static_cast<long>(params.p());
  ExtRat nu_infty(-ell * static_cast<long>(params.k()), ell - 1);
  ExtRat nu_good = params.is_prime_power() ? ExtRat(-p, p - 1) : ExtRat(0);
  return {std::move(nu_infty), std::move(nu_good)};
}

ExtRat fixed_point_valuation(const UnicritParams& params, const ExtRat& v_c) {
  if (v_c < ExtRat(0)) return v_c / mpq_class(static_cast<long>(params.ell()));
  return ExtRat(0);
}

CoeffValuations conjugate_coeff_valuations(const UnicritParams& params, const ExtRat& v_c) {
  CoeffValuations out{v_c, fixed_point_valuation(params, v_c), {}};
  const std::int64_t ell = params.ell();
  out.entries.reserve(static_cast<std::size_t>(ell));
  for (std::int64_t n = 1; n <= ell; ++n) {
    const long binom_val = static_cast<long>(vp_binom(params.p(), ell, n));
    out.entries.push_back(ExtRat(binom_val) + out.v_b * mpq_class(static_cast<long>(ell - n)));
  }
  return out;
}

bool has_potential_good_reduction(const UnicritParams& params, const ExtRat& v_c) {
  if (v_c >= ExtRat(0)) return true;
  const bool closed_form = v_c >= cutoffs(params).nu_good;

  // g is monic with g(0) = 0, so only a_1 .. a_{ell-1} can spoil good reduction.
  const auto coeffs = conjugate_coeff_valuations(params, v_c);
  bool integral = true;
  for (std::int64_t n = 1; n < params.ell(); ++n) {
    if (coeffs.at(n) < ExtRat(0)) {
      integral = false;
      break;
    }
  }
  if (integral != closed_form) {
    throw InternalInconsistency("good-reduction cutoff disagrees with coefficient check at p = " +
                                std::to_string(params.p()) + ", ell = " +
                                std::to_string(params.ell()) + ", v(c) = " + v_c.to_string());
  }
  return closed_form;
}

}  // namespace ultradyn
