#include <gtest/gtest.h>

#include "gen.hpp"
#include "nodal/detrep.hpp"
#include "nodal/segre.hpp"

using namespace nodal;

namespace {
Poly v(std::size_t i) { return Poly::variable(5, i); }
}  // namespace

TEST(DetRep, DiagonalMatrix) {
  PolyMatrix m(3, 3, Poly(5));
  m(0, 0) = v(0);
  m(1, 1) = v(1);
  m(2, 2) = v(2);
  const auto rep = verify_detrep(m, CubicThreefold(v(0) * v(1) * v(2)));
  EXPECT_EQ(rep.scale, 1);
  const auto half = verify_detrep(m, CubicThreefold(Scalar(2) * v(0) * v(1) * v(2)));
  EXPECT_EQ(half.scale, make_scalar(1, 2));
  EXPECT_THROW(verify_detrep(m, CubicThreefold(v(0) * v(0) * v(1))), VerificationError);
}

TEST(DetRep, RejectsBadShapes) {
  EXPECT_THROW(verify_detrep(PolyMatrix(2, 2, v(0)), CubicThreefold(v(0) * v(0) * v(0))), std::invalid_argument);
  EXPECT_THROW(verify_detrep(PolyMatrix(3, 3, v(0) * v(0)), CubicThreefold(v(0) * v(0) * v(0))),
               std::invalid_argument);
}

TEST(Expansion, GradedIdentity) {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const auto e = det_sum_expansion(gen::matrix(rng, 3, 3, 9), random_linear_matrix(5, 1, rng));
    EXPECT_EQ(e.pieces[0] + e.pieces[1] + e.pieces[2] + e.pieces[3], e.direct);
  }
}

TEST(Expansion, Collapses) {
  Rng rng(42);
  const auto b = random_linear_matrix(5, 1, rng);
  const auto zero_a = det_sum_expansion(ScalarMatrix(3, 3), b);
  EXPECT_EQ(zero_a.direct, poly_det(b));
  const ScalarMatrix a = gen::matrix(rng, 3, 3, 9);
  const auto zero_b = det_sum_expansion(a, PolyMatrix(3, 3, Poly(5)));
  EXPECT_EQ(zero_b.direct, determinant(a) * v(0) * v(0) * v(0));
}

TEST(Rank1Lift, StructureAndNode) {
  Rng rng(43);
  const ProjPoint apex{1, 0, 0, 0, 0};
  for (int i = 0; i < 5; ++i) {
    const auto b = random_linear_matrix(5, 1, rng);
    const auto lift = rank1_lift(b, Vector{rng.nonzero(5), rng.uniform(-5, 5), rng.uniform(-5, 5)});
    EXPECT_EQ(determinant(lift.a), 0);
    const auto by_t0 = coefficients_in(poly_det(lift.matrix), 0);
    EXPECT_LE(by_t0.size(), 2u);
    EXPECT_TRUE(lift.qv.is_homogeneous(2));
    EXPECT_EQ(rank_at(lift.matrix, apex), 1u);
    const CubicThreefold x(lift.cubic);
    EXPECT_EQ(verify_detrep(lift.matrix, x).scale, 1);
    if (quadric_rank(restrict_t0(lift.qv)) == 4) EXPECT_TRUE(check_point(x, apex).ordinary_double_point);
  }
  EXPECT_THROW(rank1_lift(random_linear_matrix(5, 1, rng), Vector{0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(rank1_lift(random_linear_matrix(5, 0, rng), Vector{1, 0, 0}), std::invalid_argument);
}

TEST(Restriction, RepresentsSurface) {
  Rng rng(44);
  const auto lift = rank1_lift(random_linear_matrix(5, 1, rng), Vector{1, 2, 3});
  const auto rep = verify_detrep(lift.matrix, CubicThreefold(lift.cubic));
  const auto r = restriction_check(rep);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.surface.nvars(), 4u);
}

TEST(Kernels, DiagonalExample) {
  PolyMatrix m(3, 3, Poly(5));
  m(0, 0) = v(0);
  m(1, 1) = v(1);
  m(2, 2) = v(2);
  const ProjPoint p{0, 1, 1, 0, 0};
  EXPECT_EQ(rank_at(m, p), 2u);
  EXPECT_EQ(kernel_point(m, p, KernelSide::right), (ProjPoint{1, 0, 0}));
  EXPECT_EQ(kernel_point(m, p, KernelSide::left), (ProjPoint{1, 0, 0}));
  EXPECT_THROW(kernel_point(m, ProjPoint{1, 1, 1, 0, 0}, KernelSide::right), std::invalid_argument);
}

TEST(Kernels, TransposeSwapsSides) {
  Rng rng(45);
  const auto lift = rank1_lift(random_linear_matrix(5, 1, rng), Vector{1, -1, 2});
  const CubicThreefold x(lift.cubic);
  const auto t = lift.matrix.transpose();
  for (int i = 0; i < 5; ++i) {
    const auto p = sample_via_node(x, ProjPoint{1, 0, 0, 0, 0}, rng);
    ASSERT_EQ(rank_at(lift.matrix, p), 2u);
    const auto right = kernel_point(lift.matrix, p, KernelSide::right);
    EXPECT_TRUE(nodal::is_zero(evaluate(lift.matrix, p.coords()) * right.coords()));
    EXPECT_EQ(kernel_point(t, p, KernelSide::left), right);
  }
}
