#pragma once

// Rank-2 integral lattices: Gram forms, isometries and the nef-cone rays.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nodal/scalar.hpp"

namespace nodal {

using Vec2 = std::array<Integer, 2>;

struct Mat2 {
  Integer a, b, c, d;  // [[a, b], [c, d]]

  Integer det() const { return a * d - b * c; }
  Integer trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  bool symmetric() const { return b == c; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Vec2 operator*(const Mat2& m, const Vec2& v) { return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]}; }
};

inline Mat2 identity2() { return {1, 0, 0, 1}; }

inline Mat2 power(const Mat2& m, unsigned k) {
  Mat2 r = identity2();
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

inline const Mat2& flop_matrix() {
  static const Mat2 m{-1, -2, 6, 11};
  return m;
}

inline const Mat2& pic_gram() {
  static const Mat2 g{6, 6, 6, 2};
  return g;
}

inline Integer bb_value(const Mat2& g, const Vec2& v, const Vec2& w) {
  const Vec2 gw = g * w;
  return v[0] * gw[0] + v[1] * gw[1];
}

/// True iff M^T G M = G.
inline bool isometry_check(const Mat2& m, const Mat2& g) { return m.transpose() * g * m == g; }

struct OrderReport {
  Integer det;
  Integer trace;
  bool infinite = false;
  std::optional<unsigned> order;  // smallest k <= bound with M^k = I
};

inline OrderReport infinite_order_check(const Mat2& m, unsigned bound = 12) {
  OrderReport r{m.det(), m.trace()};
  if (r.det == 1 && abs(r.trace) > 2) {
    r.infinite = true;
    return r;
  }
  Mat2 p = identity2();
  for (unsigned k = 1; k <= bound; ++k) {
    p = p * m;
    if (p == identity2()) {
      r.order = k;
      return r;
    }
  }
  r.infinite = true;  // no finite order up to the bound
  return r;
}

inline Vec2 primitive2(Vec2 v) {
  Integer g = gcd(v[0], v[1]);
  if (g == 0) return v;
  v[0] /= g;
  v[1] /= g;
  return v;
}

inline Integer cross(const Vec2& v, const Vec2& w) { return v[0] * w[1] - v[1] * w[0]; }

class DegenerateCone : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rays of {x : q(x, alpha1) >= 0, q(x, alpha2) >= 0}: rays[i] is the primitive
/// solution of q(x, alpha_i) = 0 on the side where q(x, alpha_j) > 0.
inline std::array<Vec2, 2> dual_cone(const Mat2& g, const Vec2& alpha1, const Vec2& alpha2) {
  if (cross(alpha1, alpha2) == 0 || g.det() == 0) throw DegenerateCone("dual_cone: rays are dependent");
  std::array<Vec2, 2> out;
  const std::array<Vec2, 2> alphas{alpha1, alpha2};
  for (std::size_t i = 0; i < 2; ++i) {
    const Vec2 ga = g * alphas[i];
    Vec2 x = primitive2({-ga[1], ga[0]});
    const Integer other = bb_value(g, x, alphas[1 - i]);
    if (other == 0) throw DegenerateCone("dual_cone: cone is degenerate");
    if (other < 0) x = {-x[0], -x[1]};
    out[i] = x;
  }
  return out;
}

enum class Convention { column, row };

/// v, Mv, M^2 v, ... (column) or v, M^T v, ... (row vectors times M).
inline std::vector<Vec2> flop_orbit(const Mat2& m, const Vec2& v, std::size_t n, Convention conv = Convention::column) {
  if (n == 0) throw std::invalid_argument("flop_orbit: n must be positive");
  const Mat2 act = conv == Convention::column ? m : m.transpose();
  std::vector<Vec2> out{v};
  while (out.size() < n) out.push_back(act * out.back());
  return out;
}

inline bool pairwise_nonproportional(const std::vector<Vec2>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (cross(vs[i], vs[j]) == 0) return false;
  return true;
}

struct GramEntry {
  std::string name;
  std::string basis;
  Mat2 gram;
  std::string note;
};

inline std::vector<GramEntry> gram_catalog() {
  return {
      {"H4", "h^2, [T]", {3, 3, 3, 7},
       "as given the matrix reads [[3,6],[3,7]], which is not symmetric; the symmetric form [[3,3],[3,7]] is "
       "adopted"},
      {"Pic", "sigma, tau", pic_gram(), "Beauville-Bogomolov form on the rank-2 Picard lattice"},
  };
}

/// [T'] = 2h^2 - [T] in the H4 basis.
inline Vec2 residual_plane_class() { return {2, -1}; }

inline const Vec2& nef_ray1() {
  static const Vec2 v{7, -3};
  return v;
}
inline const Vec2& nef_ray2() {
  static const Vec2 v{1, 3};
  return v;
}

}  // namespace nodal
