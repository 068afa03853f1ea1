#include <gtest/gtest.h>

#include "nodal/sixnodal.hpp"

using namespace nodal;

TEST(ReferenceFamily, DimensionFour) {
  const auto fam = reference_family();
  EXPECT_EQ(fam.condition_rank, 5u);
  EXPECT_EQ(fam.projective_dim(), 4u);
  for (const auto& f : fam.basis) {
    EXPECT_TRUE(f.is_homogeneous(3));
    for (const auto& p : reference_nodes()) EXPECT_TRUE(nodal::is_zero(gradient_at(f, p.coords())));
  }
}

TEST(ReferenceFamily, MembersAreCertified) {
  for (std::uint64_t s = 1; s <= 3; ++s) {
    const auto m = sample_reference_member(s);
    Rng rng(s);
    EXPECT_TRUE(certify(m.cubic, m.nodes, rng).ok());
    EXPECT_EQ(m.provenance, Provenance::reference_family);
  }
  EXPECT_EQ(sample_reference_member(9).cubic.equation, sample_reference_member(9).cubic.equation);
}

TEST(QuadricSynthesis, IdentityAndNodes) {
  const auto syn = quadric_synthesis(5);
  const Poly restricted = compose(syn.a3, quadric_param_forms());
  EXPECT_EQ(restricted, syn.chart.g1 * syn.chart.g2);
  EXPECT_EQ(syn.instance.nodes.size(), 6u);
  for (const auto& r : singular_points_check(syn.instance.cubic, syn.instance.nodes))
    EXPECT_TRUE(r.ordinary_double_point);
  EXPECT_TRUE(every_subset_independent(syn.instance.nodes, 5));
  for (const auto& b : syn.chart.base_points) {
    EXPECT_EQ(syn.chart.g1(std::span<const Scalar>(b)), 0);
    EXPECT_EQ(syn.chart.g2(std::span<const Scalar>(b)), 0);
  }
}

TEST(QuadricSynthesis, Bidegrees) {
  const auto syn = quadric_synthesis(6);
  for (const auto& [e, c] : syn.chart.g1.terms()) {
    EXPECT_EQ(e[0] + e[1], 2u);
    EXPECT_EQ(e[2] + e[3], 1u);
  }
  for (const auto& [e, c] : syn.chart.g2.terms()) {
    EXPECT_EQ(e[0] + e[1], 1u);
    EXPECT_EQ(e[2] + e[3], 2u);
  }
}

TEST(QuadricSynthesis, Deterministic) {
  EXPECT_EQ(quadric_synthesis(42).instance.cubic.equation, quadric_synthesis(42).instance.cubic.equation);
}

TEST(QuadricSynthesis, Prop31Checks) {
  const auto syn = quadric_synthesis(7);
  const auto r = prop31_checks(syn.instance, syn.chart);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.nullity21, 1u);
  EXPECT_EQ(r.nullity12, 1u);
  EXPECT_THROW(prop31_checks(sample_reference_member(1), syn.chart), std::invalid_argument);
}

TEST(QuadricSynthesis, ChartRoundTrip) {
  const auto syn = quadric_synthesis(8);
  const auto chart = node_chart(syn.instance.cubic, syn.instance.nodes.front());
  EXPECT_EQ(chart.a2, split_quadric());
  EXPECT_EQ(chart.a3, syn.a3);
}

TEST(QuadricSynthesis, DegenerateInputs) {
  const std::vector<QuadricPoint> on_diagonal{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {1, 2, 1, 2}, {1, 3, 2, 1}};
  EXPECT_THROW(synthesize_from_points(on_diagonal, Vector(4, Scalar(0))), DegenerateSample);
  const std::vector<QuadricPoint> shared_ruling{{1, 0, 1, 0}, {1, 0, 0, 1}, {1, 1, 1, 2}, {1, 2, 1, 3}, {1, 3, 2, 1}};
  EXPECT_THROW(synthesize_from_points(shared_ruling, Vector(4, Scalar(0))), DegenerateSample);
  EXPECT_THROW(synthesize_from_points(std::vector<QuadricPoint>(4), Vector(4, Scalar(0))), std::invalid_argument);
}

TEST(QuadricSynthesis, ResultantDetectsCommonZeros) {
  const auto syn = quadric_synthesis(9);
  const Poly r = common_zero_resultant(syn.chart);
  for (const auto& b : syn.chart.base_points) EXPECT_EQ(r(Vector{b[0], b[1], 0, 0}), 0);
  EXPECT_EQ(r.degree(), 5);
}

TEST(BlowUp, CubicSurfaceWithTwelveLines) {
  const auto syn = quadric_synthesis(10);
  const auto b = blowup_cubic_surface(syn.chart, 10);
  EXPECT_EQ(b.system.size(), 4u);
  EXPECT_EQ(b.image_nullity, 1u);
  EXPECT_EQ(b.collinear_rulings, 10u);
  EXPECT_TRUE(b.curve_images_are_lines);
  EXPECT_TRUE(b.curve_lines_disjoint);
  EXPECT_TRUE(b.lines_on_surface);
  EXPECT_TRUE(b.held_out_on_surface);
}
