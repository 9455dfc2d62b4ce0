#pragma once

#include <vector>

#include "ultradyn/extrat.hpp"
#include "ultradyn/valcore.hpp"

namespace ultradyn {

/// The two cutoffs on v(c): below nu_infty the preimage tower is finite,
/// from nu_good on the map has potential good reduction.
struct Cutoffs {
  ExtRat nu_infty;
  ExtRat nu_good;
};

/// Valuations of the coefficients a_n of g(z) = (z + b)^ell - b - c, the
/// conjugate of z^ell - c that moves a fixed point b to 0. entries[n - 1]
/// is v(a_n) for n = 1..ell.
struct CoeffValuations {
  ExtRat v_c;
  ExtRat v_b;
  std::vector<ExtRat> entries;

  const ExtRat& at(std::int64_t n) const { return entries.at(static_cast<std::size_t>(n - 1)); }
};

Cutoffs cutoffs(const UnicritParams& params);

/// v(b) for a fixed point b: v(c)/ell when v(c) < 0, else 0.
ExtRat fixed_point_valuation(const UnicritParams& params, const ExtRat& v_c);

CoeffValuations conjugate_coeff_valuations(const UnicritParams& params, const ExtRat& v_c);

/// v(c) >= nu_good. For v(c) < 0 the answer is cross-checked against the
/// conjugate's coefficients; a disagreement throws InternalInconsistency.
bool has_potential_good_reduction(const UnicritParams& params, const ExtRat& v_c);

}  // namespace ultradyn
