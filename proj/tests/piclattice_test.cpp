#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nodal/piclattice.hpp"

using namespace nodal;

TEST(PicLattice, BasicProducts) {
  EXPECT_EQ(pic_dot(kCanonical, kCanonical), 3);
  const PicClass e1 = basis_class(1);
  EXPECT_EQ(pic_dot(e1, e1), -1);
  EXPECT_EQ(pic_dot(e1, kCanonical), -1);
  const PicClass l12 = basis_class(0) - basis_class(1) - basis_class(2);
  const PicClass l13 = basis_class(0) - basis_class(1) - basis_class(3);
  EXPECT_EQ(pic_dot(l12, l13), 0);
}

TEST(PicLattice, TwentySevenLines) {
  const auto lines = enumerate_lines();
  EXPECT_EQ(lines.size(), 27u);
  EXPECT_EQ(lines, closed_form_lines());
  for (const auto& c : lines) EXPECT_TRUE(is_line_class(c));
  // nothing new in a much larger box
  EXPECT_EQ(enumerate_lines_in_box(-4, 6, 4), lines);
}

TEST(PicLattice, Trichotomy) {
  const auto p = classify_types();
  EXPECT_EQ(p.count({0, 2}), 6u);
  EXPECT_EQ(p.count({2, 0}), 6u);
  EXPECT_EQ(p.count({1, 1}), 15u);
  EXPECT_TRUE(pairwise_disjoint(p.classes.at({0, 2})));
  EXPECT_TRUE(pairwise_disjoint(p.classes.at({2, 0})));
  for (const auto& c : p.classes.at({1, 1})) EXPECT_EQ(c[0], 1);
  EXPECT_THROW(classify_types(kGamma1, kGamma1), std::invalid_argument);
}

TEST(PicLattice, TrichotomyInvariantUnderRelabeling) {
  // permuting e1..e6 maps lines to lines and fixes both gammas
  std::array<std::size_t, 6> perm{0, 1, 2, 3, 4, 5};
  const auto lines = enumerate_lines();
  int checked = 0;
  do {
    if (++checked > 50) break;
    std::map<LineType, std::size_t> counts;
    for (const auto& c : lines) {
      PicClass d = c;
      for (std::size_t i = 0; i < 6; ++i) d[perm[i] + 1] = c[i + 1];
      ASSERT_TRUE(std::binary_search(lines.begin(), lines.end(), d));
      ++counts[line_type(d)];
    }
    EXPECT_EQ(counts[LineType(0, 2)], 6u);
    EXPECT_EQ(counts[LineType(1, 1)], 15u);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(PicLattice, CoplanarPairs) {
  for (const auto& l : enumerate_lines()) {
    const auto pairs = coplanar_pairs(l);
    ASSERT_EQ(pairs.size(), 5u);
    PicClass sum{};
    for (const auto& [a, b] : pairs) {
      EXPECT_EQ(pic_dot(a, l), 1);
      EXPECT_EQ(pic_dot(b, l), 1);
      EXPECT_EQ(a + b, (-1 * kCanonical) - l);
      sum = sum + a + b;
    }
    EXPECT_EQ(sum, 5 * ((-1 * kCanonical) - l));
  }
  // for e1 the partner of e0 - e1 - ej is 2e0 - sum e + ej
  for (const auto& [a, b] : coplanar_pairs(basis_class(1))) {
    const PicClass& conic = a[0] == 1 ? a : b;
    const PicClass& other = a[0] == 1 ? b : a;
    EXPECT_EQ(other[0], 2);
    for (std::size_t j = 2; j <= 6; ++j)
      if (conic[j] == -1) EXPECT_EQ(other[j], 0);
  }
  EXPECT_THROW(coplanar_pairs(kCanonical), std::invalid_argument);
}

TEST(PicLattice, MeetProfiles) {
  const auto [a, b] = disjoint_pair_of_type({2, 0});
  EXPECT_EQ(pic_dot(a, b), 0);
  EXPECT_EQ(meet_profile({a, b}, {0, 2}), 4u);
  EXPECT_EQ(meet_profile({a, b}, {1, 1}), 1u);
  const auto [c, d] = disjoint_pair_of_type({1, 1});
  EXPECT_EQ(meet_profile({c, d}, {0, 2}), 1u);
  EXPECT_EQ(meet_profile({c, d}, {2, 0}), 1u);
  EXPECT_EQ(meet_profile({c, d}, {1, 1}), 3u);
}

TEST(PicLattice, DoubleSix) {
  const auto d = double_six();
  EXPECT_TRUE(is_double_six(d));
  auto swapped = d;
  std::swap(swapped.second[0], swapped.second[1]);
  EXPECT_FALSE(is_double_six(swapped));
}

TEST(PicLattice, Bookkeeping) {
  const auto f = fano_bookkeeping();
  EXPECT_TRUE(f.ok());
  EXPECT_EQ(f.diag20_computed, (std::vector<long>{4, 1}));
  EXPECT_EQ(f.diag11_computed, (std::vector<long>{1, 1, 3}));
  EXPECT_TRUE(line_tally().front().holds());
}

TEST(PicLattice, MeetTable) {
  const auto t = meet_table();
  ASSERT_EQ(t.matrix.size(), 27u);
  for (std::size_t i = 0; i < 27; ++i) {
    EXPECT_EQ(t.matrix[i][i], -1);
    EXPECT_EQ(std::count(t.matrix[i].begin(), t.matrix[i].end(), 1), 10);
    for (std::size_t j = 0; j < 27; ++j) EXPECT_EQ(t.matrix[i][j], t.matrix[j][i]);
  }
  EXPECT_EQ(std::set<std::string>(t.labels.begin(), t.labels.end()).size(), 27u);
}
