#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ultradyn/extrat.hpp"
#include "ultradyn/valcore.hpp"

// Newton polygons of F(z) = (z + y)^ell - y^ell - d, where only the
// valuations v(y) and v(d) are known. Slopes are geometric: a segment of
// slope s and width w accounts for exactly w roots of valuation -s.

namespace ultradyn {

struct ValuedPoint {
  std::int64_t x;
  ExtRat y;

  friend bool operator==(const ValuedPoint&, const ValuedPoint&) = default;
};

struct ValuedPointSet {
  std::vector<ValuedPoint> points;
  UnicritParams params;
  ExtRat v_y;
  ExtRat v_d;
};

struct Segment {
  ExtRat slope;
  std::int64_t width;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct NewtonPolygon {
  std::vector<ValuedPoint> vertices;
  std::vector<Segment> segments;

  const ExtRat& first_slope() const { return segments.front().slope; }
  const ExtRat& last_slope() const { return segments.back().slope; }
  std::vector<std::int64_t> vertex_xs() const;
};

/// Closed-form description of the polygon. n0 is empty when d = 0 and
/// equals k + 1 in the regime below the last threshold when N > 1.
struct PredictedNP {
  std::vector<std::int64_t> vertex_xs;
  std::vector<ExtRat> slopes;
  ExtRat m1;
  ExtRat m_ell;
  std::optional<std::int64_t> n0;
};

struct RootValuation {
  ExtRat valuation;
  std::int64_t multiplicity;

  friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

/// The ell + 1 points (n, v(coefficient of z^n)) of F; (0, v_d) leads.
ValuedPointSet difference_points(const UnicritParams& params, const ExtRat& v_y,
                                 const ExtRat& v_d);

/// Lower convex hull by a monotone chain on exact rationals. A +inf leading
/// point becomes a width-1-or-more segment of slope -inf. Collinear points
/// are not vertices.
NewtonPolygon lower_hull(std::span<const ValuedPoint> points);
inline NewtonPolygon lower_hull(const ValuedPointSet& set) { return lower_hull(set.points); }

/// lambda_n(y) = k - n + p/(p-1) + ell v(y), with lambda_0 = inf and
/// lambda_{k+1} = -inf (N = 1) or ell v(y) (N > 1).
ExtRat lambda_threshold(const UnicritParams& params, const ExtRat& v_y, std::int64_t n);

/// The n0 in [0, k] with lambda_{n0+1} <= v_d < lambda_{n0}; k + 1 when
/// N > 1 and v_d < lambda_{k+1}. Throws InfiniteVd when d = 0.
std::int64_t select_n0(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d);

PredictedNP predicted_polygon(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d);

std::vector<RootValuation> root_valuation_multiset(const NewtonPolygon& np);

/// True iff v_d > lambda_1(v_y), i.e. the first segment has width 1 and the
/// nearest root is defined over K(d, y).
bool base_field_root_exists(const UnicritParams& params, const ExtRat& v_y, const ExtRat& v_d);

}  // namespace ultradyn
