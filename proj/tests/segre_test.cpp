#include <gtest/gtest.h>

#include <set>

#include "nodal/segre.hpp"

using namespace nodal;

TEST(Segre, OrbitSizes) {
  EXPECT_EQ(segre_nodes().size(), 10u);
  EXPECT_EQ(segre_planes().size(), 15u);
}

TEST(Segre, NodesAreOrdinaryDoublePoints) {
  const auto x = build_segre();
  for (const auto& r : singular_points_check(x, segre_nodes())) {
    EXPECT_TRUE(r.ordinary_double_point);
    EXPECT_EQ(r.quadratic_rank, 4u);
  }
}

TEST(Segre, SmoothPointsAreNotNodes) {
  const auto x = build_segre();
  const auto r = check_point(x, ProjPoint{1, -1, 2, -2, 3, -3});
  EXPECT_TRUE(r.on_variety);
  EXPECT_FALSE(r.singular);
}

TEST(Segre, Incidence) {
  const auto r = planes_check(build_segre());
  EXPECT_TRUE(r.is_configuration(4, 6));
  EXPECT_EQ(r.incidences, 60u);
  EXPECT_FALSE(r.is_configuration(3, 6));
}

TEST(Segre, PlaneOffTheCubicIsRejected) {
  const auto x = build_segre();
  const std::vector<LinearSubspace> bad{
      LinearSubspace::from_equations(5, std::vector<Vector>{{1, 1, 1, 1, 1, 1}, {1, -1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}})};
  EXPECT_FALSE(lies_on(x, bad.front()));
  EXPECT_THROW(planes_check(x, bad, segre_nodes()), VerificationError);
}

TEST(Segre, NodeChartReconstructsEquation) {
  const auto x = build_segre();
  for (const auto& q : segre_nodes()) {
    const auto chart = node_chart(x, q);
    EXPECT_EQ(quadric_rank(chart.a2), 4u);
    EXPECT_TRUE(chart.a3.is_homogeneous(3));
  }
  EXPECT_THROW(node_chart(x, ProjPoint{1, -1, 2, -2, 3, -3}), std::exception);
}

TEST(Segre, AssociatedCurve) {
  const auto x = build_segre();
  const auto nodes = segre_nodes();
  const auto chart = node_chart(x, nodes.front());
  std::vector<ProjPoint> projected;
  for (std::size_t i = 1; i < nodes.size(); ++i) projected.push_back(chart.project(nodes[i]));
  EXPECT_EQ(std::set<ProjPoint>(projected.begin(), projected.end()).size(), 9u);
  for (const auto& r : associated_curve_singularities(chart, projected)) {
    EXPECT_TRUE(r.on_curve);
    EXPECT_TRUE(r.curve_singular);
  }
  const auto triples = collinear_triples(projected);
  ASSERT_EQ(triples.size(), 6u);
  for (const auto& t : triples) {
    EXPECT_TRUE(lies_on(chart.a2, t.line));
    EXPECT_TRUE(lies_on(chart.a3, t.line));
  }
  // a general point of V(a2) is not on the curve
  const auto gen = associated_curve_singularities(chart, std::vector<ProjPoint>{ProjPoint{1, 2, 3, 5}});
  EXPECT_FALSE(gen.front().on_curve && gen.front().curve_singular);
}

TEST(Segre, ChartLiftInvertsProjection) {
  const auto x = build_segre();
  const auto chart = node_chart(x, segre_nodes().front());
  Rng rng(32);
  for (int i = 0; i < 10; ++i) {
    const ProjPoint y = random_point(3, rng);
    if (chart.a2(y.coords()) == 0) continue;
    const ProjPoint lifted(chart.lift(y.coords()));
    EXPECT_TRUE(x.contains(lifted));
    EXPECT_EQ(chart.project(lifted), y);
  }
}

TEST(Castelnuovo, ImageIsTenNodalCubic) {
  const auto f = castelnuovo_map();
  EXPECT_EQ(f.quadrics.size(), 5u);
  EXPECT_THROW(f(f.base_points.front()), VerificationError);
  const auto img = castelnuovo_image(f, 5, 40);
  EXPECT_EQ(img.nullity3, 1u);
  EXPECT_TRUE(img.images_well_defined);
  EXPECT_TRUE(img.images_singular);
  EXPECT_EQ(std::set<ProjPoint>(img.line_images.begin(), img.line_images.end()).size(), 10u);
}

TEST(Kummer, BranchQuartic) {
  const auto x = build_segre();
  const auto k = kummer_projection(x, ProjPoint{1, -1, 2, -2, 3, -3}, 7);
  EXPECT_GE(k.samples.size(), 50u);
  EXPECT_EQ(k.nullity3, 0u);
  EXPECT_EQ(k.nullity4, 1u);
  EXPECT_TRUE(k.held_out_vanish);
  EXPECT_TRUE(k.matches_discriminant);
  // the projection is a double cover, so projected generic points fill P^3
  EXPECT_EQ(k.generic_nullity4, 0u);
  EXPECT_THROW(kummer_projection(x, segre_nodes().front(), 7), VerificationError);
}

TEST(Weddle, VanishesAtItsPoints) {
  Rng rng(31);
  for (int s = 0; s < 3; ++s) {
    std::vector<ProjPoint> pts;
    while (pts.size() < 6) pts.push_back(random_point(3, rng));
    if (!every_subset_independent(pts, 4)) continue;
    const Poly w = weddle_surface(pts);
    EXPECT_EQ(w.degree(), 4);
    for (const auto& p : pts) EXPECT_EQ(w(p.coords()), 0);
  }
  const std::vector<ProjPoint> coplanar{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}, {1, 2, 3, 4}};
  EXPECT_THROW(weddle_surface(coplanar), VerificationError);
}

TEST(Coble, ComputedDimensions) {
  EXPECT_EQ(coble_dimension(2, 1).computed_dim, 5u);
  EXPECT_EQ(coble_dimension(3, 1).computed_dim, 14u);
  EXPECT_EQ(binomial(6, 3) - binomial(6, 1), 14);
  EXPECT_THROW(coble_dimension(1, 1), std::invalid_argument);
}
