#include <gtest/gtest.h>

#include "nodal/hklattice.hpp"
#include "nodal/projspace.hpp"

using namespace nodal;

TEST(HkLattice, BbValues) {
  const Mat2& g = pic_gram();
  EXPECT_EQ(bb_value(g, {1, 0}, {1, 0}), 6);
  EXPECT_EQ(bb_value(g, nef_ray1(), nef_ray1()), 60);
  EXPECT_EQ(bb_value(g, nef_ray2(), nef_ray2()), 60);
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const Vec2 v{rng.uniform(-99, 99), rng.uniform(-99, 99)}, w{rng.uniform(-99, 99), rng.uniform(-99, 99)};
    EXPECT_EQ(bb_value(g, v, w), bb_value(g, w, v));
  }
}

TEST(HkLattice, Isometry) {
  const Mat2& g = pic_gram();
  EXPECT_TRUE(isometry_check(identity2(), g));
  EXPECT_TRUE(isometry_check(flop_matrix(), g));
  EXPECT_FALSE(isometry_check({2, 0, 0, 1}, g));
  for (unsigned k = 1; k <= 10; ++k) EXPECT_TRUE(isometry_check(power(flop_matrix(), k), g));
  // with row vectors the same matrix is not an isometry of this form
  EXPECT_FALSE(isometry_check(flop_matrix().transpose(), g));
  EXPECT_EQ(bb_value(g, {-1, -2}, {-1, -2}), 38);
}

TEST(HkLattice, Order) {
  const auto r = infinite_order_check(flop_matrix());
  EXPECT_EQ(r.det, 1);
  EXPECT_EQ(r.trace, 10);
  EXPECT_TRUE(r.infinite);
  EXPECT_EQ(infinite_order_check(identity2()).order, 1u);
  EXPECT_EQ(infinite_order_check({0, -1, 1, 0}).order, 4u);
  EXPECT_EQ(infinite_order_check({0, -1, 1, 1}).order, 6u);
  EXPECT_EQ(infinite_order_check({-1, 0, 0, -1}).order, 2u);
}

TEST(HkLattice, DualCone) {
  const Mat2& g = pic_gram();
  const auto rays = dual_cone(g, nef_ray1(), nef_ray2());
  EXPECT_EQ(g * nef_ray1(), (Vec2{24, 36}));
  EXPECT_EQ(g * nef_ray2(), (Vec2{24, 12}));
  EXPECT_EQ(rays[0], (Vec2{3, -2}));
  EXPECT_EQ(rays[1], (Vec2{-1, 2}));
  for (const auto& r : rays) {
    EXPECT_GE(bb_value(g, r, nef_ray1()), 0);
    EXPECT_GE(bb_value(g, r, nef_ray2()), 0);
  }
  EXPECT_EQ(dual_cone(g, {21, -9}, {5, 15}), rays);
  EXPECT_THROW(dual_cone(g, nef_ray1(), {14, -6}), DegenerateCone);
}

TEST(HkLattice, Orbit) {
  const auto orb = flop_orbit(flop_matrix(), {1, 0}, 20);
  ASSERT_EQ(orb.size(), 20u);
  EXPECT_EQ(orb[1], (Vec2{-1, 6}));
  EXPECT_TRUE(pairwise_nonproportional(orb));
  // values outgrow 64 bits
  EXPECT_GT(abs(flop_orbit(flop_matrix(), {1, 0}, 30).back()[1]), Integer("9223372036854775807"));
  for (const auto& v : orb) EXPECT_EQ(bb_value(pic_gram(), v, v), 6);
  const auto still = flop_orbit(identity2(), {2, 3}, 5);
  for (const auto& v : still) EXPECT_EQ(v, (Vec2{2, 3}));
  EXPECT_THROW(flop_orbit(identity2(), {1, 0}, 0), std::invalid_argument);
  EXPECT_TRUE(pairwise_nonproportional(flop_orbit(flop_matrix(), {1, 0}, 20, Convention::row)));
}

TEST(HkLattice, Catalog) {
  const auto cat = gram_catalog();
  ASSERT_EQ(cat.size(), 2u);
  EXPECT_EQ(cat[0].gram.det(), 12);
  EXPECT_TRUE(cat[0].gram.symmetric());
  EXPECT_EQ(cat[1].gram.a, 6);
  EXPECT_EQ(cat[1].gram.d, 2);
  const Vec2 t2 = residual_plane_class();
  EXPECT_EQ(bb_value(cat[0].gram, t2, t2), 7);
}
