#include <doctest.h>

#include "oracles.hpp"
#include "ultradyn/error.hpp"
#include "ultradyn/newton.hpp"
#include "ultradyn/selftest.hpp"

using namespace ultradyn;

namespace {

std::vector<ValuedPoint> pts(std::initializer_list<std::pair<std::int64_t, ExtRat>> list) {
  std::vector<ValuedPoint> out;
  for (const auto& [x, y] : list) out.push_back({x, y});
  return out;
}

std::vector<ExtRat> slopes_of(const NewtonPolygon& np) {
  std::vector<ExtRat> out;
  for (const auto& s : np.segments) out.push_back(s.slope);
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

const UnicritParams p2_8 = decompose(2, 8);
const UnicritParams p3_6 = decompose(3, 6);

}  // namespace

TEST_CASE("difference points for ell = 8") {
  const auto set = difference_points(p2_8, ExtRat(0), ExtRat(9, 2));
  CHECK(set.points == pts({{0, ExtRat(9, 2)},
                           {1, ExtRat(3)},
                           {2, ExtRat(2)},
                           {3, ExtRat(3)},
                           {4, ExtRat(1)},
                           {5, ExtRat(3)},
                           {6, ExtRat(2)},
                           {7, ExtRat(3)},
                           {8, ExtRat(0)}}));
  const auto zero_d = difference_points(p2_8, ExtRat(0), ExtRat::pos_inf());
  CHECK(zero_d.points.front().y.is_pos_inf());
  CHECK(zero_d.points.size() == 9);
}

TEST_CASE("difference points for ell = 6, p = 3 follow the binomial valuations") {
  // v_3 of binom(6, n) for n = 1..5 is 1, 1, 0, 1, 1.
  const ExtRat v_y(-1, 2);
  const auto set = difference_points(p3_6, v_y, ExtRat(0));
  REQUIRE(set.points.size() == 7);
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(set.points[static_cast<std::size_t>(n)].y ==
          ExtRat(static_cast<long>(oracle::vp_binom(3, 6, n))) + v_y * oracle::q(6 - n));
  }
  CHECK(set.points[3].y == ExtRat(-3, 2));
  CHECK(set.points[4].y == ExtRat(0));
  CHECK(set.points[5].y == ExtRat(1, 2));
}

TEST_CASE("lower hull of the example figure") {
  const auto set = difference_points(p2_8, ExtRat(0), ExtRat(9, 2));
  const NewtonPolygon np = lower_hull(set);
  CHECK(np.vertex_xs() == std::vector<std::int64_t>{0, 1, 2, 4, 8});
  CHECK(slopes_of(np) == std::vector<ExtRat>{ExtRat(-3, 2), ExtRat(-1), ExtRat(-1, 2), ExtRat(-1, 4)});
  CHECK(root_valuation_multiset(np) ==
        std::vector<RootValuation>{{ExtRat(3, 2), 1}, {ExtRat(1), 1}, {ExtRat(1, 2), 2}, {ExtRat(1, 4), 4}});
  CHECK(oracle::is_lower_hull(set.points, np));
}

TEST_CASE("lower hull edge cases") {
  const NewtonPolygon flat = lower_hull(pts({{0, ExtRat(0)}, {1, ExtRat(0)}}));
  CHECK(flat.segments.size() == 1);
  CHECK(flat.first_slope() == ExtRat(0));

  // Collinear interior points are not vertices.
  const NewtonPolygon line = lower_hull(pts({{0, ExtRat(0)}, {1, ExtRat(1)}, {3, ExtRat(3)}}));
  CHECK(line.vertex_xs() == std::vector<std::int64_t>{0, 3});

  const auto zero_d = difference_points(p2_8, ExtRat(0), ExtRat::pos_inf());
  const NewtonPolygon np = lower_hull(zero_d);
  CHECK(np.first_slope().is_neg_inf());
  CHECK(np.segments.front().width == 1);
  CHECK(root_valuation_multiset(np) == std::vector<RootValuation>{{ExtRat::pos_inf(), 1},
                                                                  {ExtRat(1), 1},
                                                                  {ExtRat(1, 2), 2},
                                                                  {ExtRat(1, 4), 4}});
  CHECK(oracle::is_lower_hull(zero_d.points, np));

  CHECK(code_of([] { (void)lower_hull(pts({{0, ExtRat(1)}})); }) == Errc::DegenerateInput);
  CHECK(code_of([] {
          (void)lower_hull(pts({{0, ExtRat::pos_inf()}, {1, ExtRat::pos_inf()}}));
        }) == Errc::DegenerateInput);
  CHECK(code_of([] { (void)lower_hull(pts({{1, ExtRat(0)}, {0, ExtRat(0)}})); }) ==
        Errc::DegenerateInput);
}

TEST_CASE("lambda thresholds") {
  CHECK(lambda_threshold(p2_8, ExtRat(0), 1) == ExtRat(4));
  CHECK(lambda_threshold(p2_8, ExtRat(0), 0).is_pos_inf());
  CHECK(lambda_threshold(p2_8, ExtRat(0), 4).is_neg_inf());
  CHECK(lambda_threshold(p3_6, ExtRat(-1, 2), 2) == ExtRat(-3));
  CHECK(lambda_threshold(p3_6, ExtRat(-1, 2), 1) == ExtRat(-3, 2));
  CHECK(code_of([] { (void)lambda_threshold(p2_8, ExtRat(0), 5); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { (void)lambda_threshold(p2_8, ExtRat(0), -1); }) == Errc::IndexOutOfRange);
}

TEST_CASE("select_n0 uses the half-open bands") {
  CHECK(select_n0(p2_8, ExtRat(0), ExtRat(9, 2)) == 0);
  CHECK(select_n0(p2_8, ExtRat(0), ExtRat(1)) == 3);
  CHECK(select_n0(p2_8, ExtRat(0), ExtRat(7, 2)) == 1);
  // On a band edge the lower index wins.
  CHECK(select_n0(p2_8, ExtRat(0), ExtRat(4)) == 0);
  CHECK(select_n0(p2_8, ExtRat(0), ExtRat(3)) == 1);
  CHECK(select_n0(p3_6, ExtRat(-1, 2), ExtRat(-4)) == 2);
  CHECK(code_of([] { (void)select_n0(p2_8, ExtRat(0), ExtRat::pos_inf()); }) == Errc::InfiniteVd);
}

TEST_CASE("predicted polygon closed forms") {
  const PredictedNP a = predicted_polygon(p2_8, ExtRat(0), ExtRat(9, 2));
  CHECK(a.vertex_xs == std::vector<std::int64_t>{0, 1, 2, 4, 8});
  CHECK(a.m1 == ExtRat(-3, 2));
  CHECK(a.m_ell == ExtRat(-1, 4));

  const PredictedNP b = predicted_polygon(p2_8, ExtRat(0), ExtRat(1));
  CHECK(b.vertex_xs == std::vector<std::int64_t>{0, 8});
  CHECK(b.m1 == ExtRat(-1, 8));
  CHECK(b.m_ell == ExtRat(-1, 8));

  const PredictedNP c = predicted_polygon(p3_6, ExtRat(-1, 2), ExtRat(-4));
  CHECK(c.n0 == 2);
  CHECK(c.m1 == ExtRat(2, 3));
  CHECK(c.m_ell == ExtRat(2, 3));

  const PredictedNP d = predicted_polygon(p2_8, ExtRat(0), ExtRat(7, 2));
  CHECK(d.vertex_xs == std::vector<std::int64_t>{0, 2, 4, 8});

  const PredictedNP zero = predicted_polygon(p2_8, ExtRat(0), ExtRat::pos_inf());
  CHECK_FALSE(zero.n0.has_value());
  CHECK(zero.m1.is_neg_inf());
  CHECK(zero.vertex_xs == std::vector<std::int64_t>{0, 1, 2, 4, 8});
}

TEST_CASE("a band edge drops the collinear vertex") {
  // v_d = lambda_1 = 4: (0,4), (1,3), (2,2) are collinear.
  const PredictedNP np = predicted_polygon(p2_8, ExtRat(0), ExtRat(4));
  CHECK(np.n0 == 0);
  CHECK(np.vertex_xs == std::vector<std::int64_t>{0, 2, 4, 8});
  CHECK(np.m1 == ExtRat(-1));
  const NewtonPolygon hull = lower_hull(difference_points(p2_8, ExtRat(0), ExtRat(4)));
  CHECK(hull.vertex_xs() == np.vertex_xs);

  // With N > 1 the last edge lambda_{k+1} = ell v(y) collapses to one segment.
  const ExtRat edge = lambda_threshold(p3_6, ExtRat(-1, 2), 2);
  const PredictedNP tail = predicted_polygon(p3_6, ExtRat(-1, 2), edge);
  CHECK(tail.vertex_xs == std::vector<std::int64_t>{0, 6});
  CHECK(lower_hull(difference_points(p3_6, ExtRat(-1, 2), edge)).vertex_xs() == tail.vertex_xs);
}

TEST_CASE("base-field root criterion is strict") {
  CHECK(base_field_root_exists(p2_8, ExtRat(0), ExtRat(9, 2)));
  CHECK_FALSE(base_field_root_exists(p2_8, ExtRat(0), ExtRat(4)));
  CHECK_FALSE(base_field_root_exists(p2_8, ExtRat(0), ExtRat(1)));
}

TEST_CASE("closed form matches an independently validated hull across bands") {
  for (const auto& params : selftest::param_grid({2, 3, 5}, 3, {1, 2, 3})) {
    for (const auto& v_y : selftest::newton_vy_values()) {
      for (const auto& v_d : selftest::newton_vd_values(params, v_y)) {
        const auto set = difference_points(params, v_y, v_d);
        const NewtonPolygon hull = lower_hull(set);
        std::string why;
        if (!oracle::is_lower_hull(set.points, hull, &why)) {
          FAIL("hull invalid p=" << params.p() << " ell=" << params.ell() << " v_y=" << v_y
                                 << " v_d=" << v_d << ": " << why);
        }
        const PredictedNP pred = predicted_polygon(params, v_y, v_d);
        const bool same = hull.vertex_xs() == pred.vertex_xs && hull.first_slope() == pred.m1 &&
                          hull.last_slope() == pred.m_ell;
        if (!same) {
          FAIL("mismatch p=" << params.p() << " ell=" << params.ell() << " v_y=" << v_y
                             << " v_d=" << v_d);
        }
        CHECK((hull.segments.front().width == 1) == base_field_root_exists(params, v_y, v_d));
        std::int64_t total = 0;
        for (const auto& r : root_valuation_multiset(hull)) total += r.multiplicity;
        CHECK(total == params.ell());
      }
    }
  }
}
