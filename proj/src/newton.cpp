#include "ultradyn/newton.hpp"

#include <string>

#include "ultradyn/error.hpp"

namespace ultradyn {

namespace {

void require_finite_vy(const ExtRat& v_y) {
  if (!v_y.is_finite()) throw DomainError(Errc::OutOfRange, "v(y) must be finite");
}

mpq_class as_q(std::int64_t n) { return mpq_class(static_cast<long>(n)); }

// Sign of the turn o -> a -> b; positive when counter-clockwise.
int turn(const ValuedPoint& o, const ValuedPoint& a, const ValuedPoint& b) {
  const mpq_class lhs = as_q(a.x - o.x) * (b.y.value() - o.y.value());
  const mpq_class rhs = (a.y.value() - o.y.value()) * as_q(b.x - o.x);
  return cmp(lhs, rhs);
}

ExtRat slope_between(const ValuedPoint& a, const ValuedPoint& b) {
  return (b.y - a.y) / as_q(b.x - a.x);
}

// Height of the point of F at x = p^j (0 <= j <= k), or at x = ell when N > 1.
ExtRat predicted_height(const UnicritParams& params, const ExtRat& v_y, std::int64_t x) {
  if (x == params.ell()) return ExtRat(0);
  std::int64_t j = 0;
  for (std::int64_t q = 1; q < x; q *= params.p()) ++j;
  return ExtRat(static_cast<long>(params.k() - j)) + v_y * as_q(params.ell() - x);
}

}  // namespace

std::vector<std::int64_t> NewtonPolygon::vertex_xs() const {
  std::vector<std::int64_t> xs;
  xs.reserve(vertices.size());
  for (const auto& v : vertices) xs.push_back(v.x);
  return xs;
}

ValuedPointSet difference_points(const UnicritParams& params, const ExtRat& v_y,
                                 const ExtRat& v_d) {
  require_finite_vy(v_y);
  ValuedPointSet set{{}, params, v_y, v_d};
  set.points.reserve(static_cast<std::size_t>(params.ell()) + 1);
  set.points.push_back({0, v_d});
  for (std::int64_t n = 1; n <= params.ell(); ++n) {
    const long binom_val = static_cast<long>(vp_binom(params.p(), params.ell(), n));
    set.points.push_back({n, ExtRat(binom_val) + v_y * as_q(params.ell() - n)});
  }
  return set;
}

NewtonPolygon lower_hull(std::span<const ValuedPoint> points) {
  if (points.size() < 2) throw DomainError(Errc::DegenerateInput, "fewer than two points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x <= points[i - 1].x) {
      throw DomainError(Errc::DegenerateInput, "x-coordinates must strictly increase");
    }
  }

  std::span<const ValuedPoint> finite = points;
  const bool leading_infinite = points.front().y.is_pos_inf();
  if (leading_infinite) finite = points.subspan(1);
  for (const auto& pt : finite) {
    if (!pt.y.is_finite()) {
      throw DomainError(Errc::DegenerateInput,
                        "infinite ordinate at x = " + std::to_string(pt.x));
    }
  }
  if (finite.empty()) throw DomainError(Errc::DegenerateInput, "all ordinates infinite");

  std::vector<ValuedPoint> chain;
  for (const auto& pt : finite) {
    while (chain.size() >= 2 && turn(chain[chain.size() - 2], chain.back(), pt) <= 0) {
      chain.pop_back();
    }
    chain.push_back(pt);
  }

  NewtonPolygon np;
  if (leading_infinite) {
    np.vertices.push_back(points.front());
    np.segments.push_back({ExtRat::neg_inf(), chain.front().x - points.front().x});
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    np.vertices.push_back(chain[i]);
    if (i + 1 < chain.size()) {
      np.segments.push_back({slope_between(chain[i], chain[i + 1]), chain[i + 1].x - chain[i].x});
    }
  }
  if (np.segments.empty()) throw DomainError(Errc::DegenerateInput, "single finite point");
  return np;
}

ExtRat lambda_threshold(const UnicritParams& params, const ExtRat& v_y, std::int64_t n) {
  const std::int64_t k = params.k();
  if (n < 0 || n > k + 1) {
    throw DomainError(Errc::IndexOutOfRange, "lambda index " + std::to_string(n));
  }
  require_finite_vy(v_y);
  if (n == 0) return ExtRat::pos_inf();
  const ExtRat ell_vy = v_y * as_q(params.ell());
  if (n == k + 1) return params.is_prime_power() ? ExtRat::neg_inf() : ell_vy;
  const mpq_class p_over = make_q(static_cast<long>(params.p()), static_cast<long>(params.p() - 1));
  return ExtRat(mpq_class(as_q(k - n) + p_over)) + ell_vy;
}

std::int64_t select_n0(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d) {
  if (v_d.is_pos_inf()) throw DomainError(Errc::InfiniteVd, "d = 0 has no lambda band");
  if (v_d.is_neg_inf()) throw DomainError(Errc::OutOfRange, "v(d) = -inf");
  const std::int64_t k = params.k();
  ExtRat upper = lambda_threshold(params, v_y, 0);
  for (std::int64_t n0 = 0; n0 <= k; ++n0) {
    ExtRat lower = lambda_threshold(params, v_y, n0 + 1);
    if (lower <= v_d && v_d < upper) return n0;
    upper = std::move(lower);
  }
  return k + 1;
}

PredictedNP predicted_polygon(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d) {
  require_finite_vy(v_y);
  const std::int64_t k = params.k();
  const std::int64_t ell = params.ell();
  const bool tame_tail = !params.is_prime_power();

  PredictedNP out;
  // Last slope when the chain reaches p^k through p^{k-1}, or through the
  // flat tail p^k -> N p^k when N > 1.
  auto chain_last_slope = [&]() -> ExtRat {
    if (tame_tail) return -v_y;
    const std::int64_t run = params.p_pow(k) - params.p_pow(k - 1);
    return ExtRat(-1, static_cast<long>(run)) - v_y;
  };
  auto push_chain_from = [&](std::int64_t j0) {
    for (std::int64_t j = j0; j <= k; ++j) out.vertex_xs.push_back(params.p_pow(j));
    if (tame_tail) out.vertex_xs.push_back(ell);
  };

  out.vertex_xs.push_back(0);
  if (v_d.is_pos_inf()) {
    push_chain_from(0);
    out.m1 = ExtRat::neg_inf();
    out.m_ell = chain_last_slope();
  } else {
    const std::int64_t n0 = select_n0(params, v_y, v_d);
    out.n0 = n0;
    const bool single = n0 == k + 1 || (n0 == k && !tame_tail);
    if (single) {
      out.vertex_xs.push_back(ell);
      out.m1 = -v_d / as_q(ell);
      out.m_ell = out.m1;
    } else {
      const std::int64_t q = params.p_pow(n0);
      // On the lower band edge the vertex at p^{n0} is collinear with its
      // neighbours and drops out of the hull.
      const bool collinear = v_d == lambda_threshold(params, v_y, n0 + 1);
      push_chain_from(collinear ? n0 + 1 : n0);
      const ExtRat numer = ExtRat(static_cast<long>(k - n0)) + v_y * as_q(ell - q) - v_d;
      out.m1 = numer / as_q(q);
      out.m_ell = chain_last_slope();
    }
  }

  for (std::size_t i = 0; i + 1 < out.vertex_xs.size(); ++i) {
    const std::int64_t x0 = out.vertex_xs[i];
    const std::int64_t x1 = out.vertex_xs[i + 1];
    const ExtRat h0 = x0 == 0 ? v_d : predicted_height(params, v_y, x0);
    const ExtRat h1 = predicted_height(params, v_y, x1);
    out.slopes.push_back(h0.is_pos_inf() ? ExtRat::neg_inf() : (h1 - h0) / as_q(x1 - x0));
  }
  if (out.slopes.front() != out.m1 || out.slopes.back() != out.m_ell) {
    throw InternalInconsistency("predicted slopes disagree with vertex heights at v(y) = " +
                                v_y.to_string() + ", v(d) = " + v_d.to_string());
  }
  return out;
}

std::vector<RootValuation> root_valuation_multiset(const NewtonPolygon& np) {
  std::vector<RootValuation> out;
  out.reserve(np.segments.size());
  for (const auto& seg : np.segments) out.push_back({-seg.slope, seg.width});
  return out;
}

bool base_field_root_exists(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d) {
  return v_d > lambda_threshold(params, v_y, 1);
}

}  // namespace ultradyn
