#pragma once

// Nondegenerate 6-nodal cubic threefolds, built two ways:
//  * members of the linear family of cubics singular at the reference points
//    e0..e4, (1,1,1,1,1) of P^4;
//  * t0*(t1t4 - t2t3) + a3 where a3 cuts the smooth quadric Q = V(t1t4 - t2t3)
//    in a (2,1) curve plus a (1,2) curve meeting at 5 rational points.
// Quadric coordinates: (u,v;s,w) in P^1 x P^1 maps to (us, uw, vs, vw).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nodal/interpolate.hpp"
#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"
#include "nodal/projspace.hpp"
#include "nodal/segre.hpp"
#include "nodal/variety.hpp"

namespace nodal {

class DegenerateSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { reference_family, quadric_synthesis };

inline std::string to_string(Provenance p) {
  return p == Provenance::reference_family ? "reference_family" : "quadric_synthesis";
}

struct SixNodalInstance {
  CubicThreefold cubic;
  std::vector<ProjPoint> nodes;
  Provenance provenance;
  std::uint64_t seed = 0;
};

struct InstanceCertificate {
  std::vector<PointReport> node_reports;
  bool all_nodes_odp = false;
  bool nondegenerate = false;  // every 5 nodes span P^4
  bool generic_point_smooth = false;

  bool ok() const { return all_nodes_odp && nondegenerate && generic_point_smooth; }
};

inline InstanceCertificate certify(const CubicThreefold& x, std::span<const ProjPoint> nodes, Rng& rng) {
  InstanceCertificate c;
  c.node_reports = singular_points_check(x, nodes);
  c.all_nodes_odp = nodes.size() == 6;
  for (const auto& r : c.node_reports) c.all_nodes_odp = c.all_nodes_odp && r.ordinary_double_point;
  c.nondegenerate = every_subset_independent(nodes, 5);
  if (c.all_nodes_odp) {
    const ProjPoint p = sample_via_node(x, nodes.front(), rng);
    c.generic_point_smooth = !check_point(x, p).singular;
  }
  return c;
}

inline std::vector<ProjPoint> reference_nodes() {
  return {ProjPoint{1, 0, 0, 0, 0}, ProjPoint{0, 1, 0, 0, 0}, ProjPoint{0, 0, 1, 0, 0},
          ProjPoint{0, 0, 0, 1, 0}, ProjPoint{0, 0, 0, 0, 1}, ProjPoint{1, 1, 1, 1, 1}};
}

struct ReferenceFamily {
  std::vector<Poly> basis;         // cubics sum a_ijk t_i t_j t_k in the family
  std::size_t condition_rank = 0;  // rank of the conditions on the 10 coefficients
  std::size_t projective_dim() const { return basis.size() - 1; }
};

/// Cubics sum_{i<j<k} a_ijk t_i t_j t_k (exactly the cubics singular at
/// e0..e4) that are also singular at (1,1,1,1,1).
inline ReferenceFamily reference_family() {
  std::vector<Poly> mons;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        mons.push_back(Poly::variable(5, i) * Poly::variable(5, j) * Poly::variable(5, k));
  const Vector ones(5, Scalar(1));
  ScalarMatrix conditions(5, mons.size());
  for (std::size_t m = 0; m < 5; ++m)
    for (std::size_t c = 0; c < mons.size(); ++c) conditions(m, c) = partial_derivative(mons[c], m)(ones);
  ReferenceFamily fam;
  fam.condition_rank = exact_rank(conditions);
  for (const auto& v : exact_nullspace(conditions)) {
    Poly f(5);
    for (std::size_t c = 0; c < mons.size(); ++c) f += v[c] * mons[c];
    fam.basis.push_back(std::move(f));
  }
  return fam;
}

/// Random member of the reference family, certified with a node at each
/// reference point. Deterministic for a fixed seed.
inline SixNodalInstance sample_reference_member(std::uint64_t seed, int max_attempts = 100) {
  const auto fam = reference_family();
  const auto nodes = reference_nodes();
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Poly f(5);
    for (const auto& b : fam.basis) f += Scalar(rng.uniform(-10, 10)) * b;
    if (f.is_zero()) continue;
    CubicThreefold x(f);
    if (certify(x, nodes, rng).ok()) return {x, nodes, Provenance::reference_family, seed};
  }
  throw DegenerateSample("sample_reference_member: resampling bound exhausted");
}

/// A point of P^1 x P^1 as (u, v, s, w).
using QuadricPoint = std::array<Scalar, 4>;

inline Vector quadric_param(const QuadricPoint& p) {
  return {p[0] * p[2], p[0] * p[3], p[1] * p[2], p[1] * p[3]};
}

/// The parametrization (us, uw, vs, vw) as four forms in (u, v, s, w).
inline std::vector<Poly> quadric_param_forms() {
  const Poly u = Poly::variable(4, 0), v = Poly::variable(4, 1), s = Poly::variable(4, 2), w = Poly::variable(4, 3);
  return {u * s, u * w, v * s, v * w};
}

/// t1t4 - t2t3 written in the four variables of the hyperplane t0 = 0.
inline Poly split_quadric() {
  return Poly::variable(4, 0) * Poly::variable(4, 3) - Poly::variable(4, 1) * Poly::variable(4, 2);
}

/// Monomials u^i v^(a-i) s^j w^(b-j) of bidegree (a, b).
inline std::vector<Exponents> bihomogeneous_monomials(unsigned a, unsigned b) {
  std::vector<Exponents> out;
  for (unsigned i = a + 1; i-- > 0;)
    for (unsigned j = b + 1; j-- > 0;) out.push_back({i, a - i, j, b - j});
  return out;
}

/// Basis of the bidegree-(a, b) forms through the given points.
inline std::vector<Poly> bihomogeneous_through(unsigned a, unsigned b, std::span<const QuadricPoint> points) {
  const auto mons = bihomogeneous_monomials(a, b);
  ScalarMatrix m(points.size(), mons.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j)
      m(i, j) = monomial_value(mons[j], std::span<const Scalar>(points[i]));
  std::vector<Poly> out;
  for (const auto& v : exact_nullspace(m)) {
    Poly f(4);
    for (std::size_t j = 0; j < mons.size(); ++j) f.add_term(mons[j], v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

/// Recovers (u, v, s, w) from a point of Q = V(t1t4 - t2t3).
inline QuadricPoint quadric_preimage(const ProjPoint& p) {
  const Vector& t = p.coords();
  Vector uv = (t[0] != 0 || t[2] != 0) ? Vector{t[0], t[2]} : Vector{t[1], t[3]};
  Vector sw = (t[0] != 0 || t[1] != 0) ? Vector{t[0], t[1]} : Vector{t[2], t[3]};
  uv = primitive(uv);
  sw = primitive(sw);
  return {uv[0], uv[1], sw[0], sw[1]};
}

struct QuadricChart {
  Poly g1 = Poly(4);  // bidegree (2,1)
  Poly g2 = Poly(4);  // bidegree (1,2)
  std::vector<QuadricPoint> base_points;

  /// (s : w) on V(g1) over the point (u : v).
  std::array<Scalar, 2> g1_fiber(const Scalar& u, const Scalar& v) const {
    const Vector pt{u, v, 0, 0};
    return {coefficients_in(g1, 3).at(1)(pt), -coefficients_in(g1, 2).at(1)(pt)};
  }
  /// (u : v) on V(g2) over the point (s : w).
  std::array<Scalar, 2> g2_fiber(const Scalar& s, const Scalar& w) const {
    const Vector pt{0, 0, s, w};
    return {coefficients_in(g2, 1).at(1)(pt), -coefficients_in(g2, 0).at(1)(pt)};
  }
};

/// Eliminates (s : w) from g1 = g2 = 0: with g1 = s A + w B, the binary quintic
/// g2(B, -A) in (u, v). Its roots are the u-coordinates of the common zeros.
inline Poly common_zero_resultant(const QuadricChart& c) {
  const auto by_s = coefficients_in(c.g1, 2);
  const auto by_w = coefficients_in(c.g1, 3);
  if (by_s.size() < 2 || by_w.size() < 2) return Poly(4);
  const Poly a = by_s[1], b = by_w[1];
  const Poly u = Poly::variable(4, 0), v = Poly::variable(4, 1);
  return compose(c.g2, std::vector<Poly>{u, v, b, -a});
}

inline bool distinct_in_p1(std::span<const QuadricPoint> pts, std::size_t first) {
  std::set<ProjPoint> seen;
  for (const auto& p : pts)
    if (!seen.insert(ProjPoint(Vector{p[first], p[first + 1]})).second) return false;
  return true;
}

struct Synthesis {
  SixNodalInstance instance;
  QuadricChart chart;
  Poly a3 = Poly(4);
};

/// Builds t0*(t1t4 - t2t3) + a3 from 5 points of P^1 x P^1: g1 and g2 are the
/// unique (2,1) and (1,2) forms through them, and a3 solves
/// a3(us, uw, vs, vw) = g1 * g2 (plus the multiple `shift` of the quadric).
/// Nodes: the apex [1,0,0,0,0] and [-lambda : P] at each point P where
/// grad a3 = lambda grad a2. Throws DegenerateSample for unusable input.
inline Synthesis synthesize_from_points(std::span<const QuadricPoint> points, const Vector& shift,
                                        std::uint64_t seed = 0) {
  if (points.size() != 5) throw std::invalid_argument("synthesize_from_points: need 5 points");
  if (!distinct_in_p1(points, 0) || !distinct_in_p1(points, 2))
    throw DegenerateSample("two base points share a ruling line");
  Synthesis out{{CubicThreefold(Poly::variable(5, 0) * Poly::variable(5, 0) * Poly::variable(5, 0)), {},
                 Provenance::quadric_synthesis, seed},
                {}};
  auto& chart = out.chart;
  chart.base_points.assign(points.begin(), points.end());
  const auto f21 = bihomogeneous_through(2, 1, points);
  const auto f12 = bihomogeneous_through(1, 2, points);
  if (f21.size() != 1 || f12.size() != 1) throw DegenerateSample("curve through the base points is not unique");
  chart.g1 = f21.front();
  chart.g2 = f12.front();

  // the 5 common zeros are exactly the base points, all distinct
  Poly roots = Poly::constant(4, 1);
  for (const auto& p : points)
    roots *= p[1] * Poly::variable(4, 0) - p[0] * Poly::variable(4, 1);
  if (!proportional(common_zero_resultant(chart), roots))
    throw DegenerateSample("g1 and g2 do not meet in 5 distinct points");

  // a3 from the identity a3(us, uw, vs, vw) = g1 g2
  const auto param = quadric_param_forms();
  const auto cubics = monomials(4, 3);
  const auto target_mons = bihomogeneous_monomials(3, 3);
  const Poly target = chart.g1 * chart.g2;
  ScalarMatrix system(target_mons.size(), cubics.size());
  std::vector<Poly> images;
  for (std::size_t j = 0; j < cubics.size(); ++j) {
    const Poly img = compose(Poly::monomial(cubics[j]), param);
    for (std::size_t i = 0; i < target_mons.size(); ++i) system(i, j) = img.coefficient(target_mons[i]);
  }
  Vector rhs;
  for (const auto& m : target_mons) rhs.push_back(target.coefficient(m));
  const auto sol = solve(system, rhs);
  if (!sol) throw std::logic_error("synthesize_from_points: g1 g2 is not a restricted cubic");
  Poly a3 = poly_from_coefficients(4, 3, *sol) + split_quadric() * Poly::linear_form(shift);
  out.a3 = a3;

  const Poly a2 = split_quadric();
  const Poly eq = Poly::variable(5, 0) * extend_variables(a2, 1, true) + extend_variables(a3, 1, true);
  std::vector<ProjPoint> nodes{ProjPoint{1, 0, 0, 0, 0}};
  for (const auto& p : points) {
    const Vector pt = quadric_param(p);
    const Vector g2v = gradient_at(a2, pt), g3v = gradient_at(a3, pt);
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < 4; ++i)
      if (g2v[i] != 0) {
        lambda = g3v[i] / g2v[i];
        break;
      }
    if (!lambda) throw std::logic_error("synthesize_from_points: quadric singular at a base point");
    for (std::size_t i = 0; i < 4; ++i)
      if (g3v[i] != *lambda * g2v[i]) throw DegenerateSample("gradients not proportional at a base point");
    nodes.push_back(ProjPoint(Vector{-*lambda, pt[0], pt[1], pt[2], pt[3]}));
  }
  out.instance = SixNodalInstance{CubicThreefold(eq), std::move(nodes), Provenance::quadric_synthesis, seed};
  return out;
}

/// Seeded quadric synthesis with certification; resamples base points until
/// the instance is a certified nondegenerate 6-nodal cubic.
inline Synthesis quadric_synthesis(std::uint64_t seed, int max_attempts = 1000) {
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<QuadricPoint> pts;
    for (int i = 0; i < 5; ++i) {
      QuadricPoint p;
      do p = {rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
      while ((p[0] == 0 && p[1] == 0) || (p[2] == 0 && p[3] == 0));
      const Vector uv = primitive(Vector{p[0], p[1]}), sw = primitive(Vector{p[2], p[3]});
      pts.push_back({uv[0], uv[1], sw[0], sw[1]});
    }
    const Vector shift = rng.vector(4, 5);
    try {
      Synthesis s = synthesize_from_points(pts, shift, seed);
      if (certify(s.instance.cubic, s.instance.nodes, rng).ok()) return s;
    } catch (const DegenerateSample&) {
    }
  }
  throw DegenerateSample("quadric_synthesis: resampling bound exhausted");
}

struct Prop31Report {
  std::vector<ProjPoint> projected;  // the 5 non-apex nodes seen from the apex
  bool projections_distinct = false;
  bool on_quadric = false;
  std::size_t nullity21 = 0;
  std::size_t nullity12 = 0;
  bool spans_g1 = false;
  bool spans_g2 = false;

  bool ok() const {
    return projections_distinct && on_quadric && nullity21 == 1 && nullity12 == 1 && spans_g1 && spans_g2;
  }
};

/// Necessary conditions on a synthesized instance, recomputed from its nodes:
/// the projections from the apex are 5 distinct points of Q, and exactly one
/// (2,1) form and one (1,2) form pass through them, namely g1 and g2.
inline Prop31Report prop31_checks(const SixNodalInstance& inst, const QuadricChart& chart) {
  if (inst.provenance != Provenance::quadric_synthesis)
    throw std::invalid_argument("prop31_checks: needs a quadric-synthesis instance");
  Prop31Report r;
  const NodeChart nc = node_chart(inst.cubic, inst.nodes.front());
  std::set<ProjPoint> distinct;
  r.on_quadric = true;
  std::vector<QuadricPoint> pre;
  for (std::size_t i = 1; i < inst.nodes.size(); ++i) {
    r.projected.push_back(nc.project(inst.nodes[i]));
    distinct.insert(r.projected.back());
    r.on_quadric = r.on_quadric && split_quadric()(r.projected.back().coords()) == 0;
    pre.push_back(quadric_preimage(r.projected.back()));
  }
  r.projections_distinct = distinct.size() == 5;
  if (!r.on_quadric) return r;
  const auto f21 = bihomogeneous_through(2, 1, pre);
  const auto f12 = bihomogeneous_through(1, 2, pre);
  r.nullity21 = f21.size();
  r.nullity12 = f12.size();
  r.spans_g1 = f21.size() == 1 && proportional(f21.front(), chart.g1);
  r.spans_g2 = f12.size() == 1 && proportional(f12.front(), chart.g2);
  return r;
}

struct BlowupReport {
  std::vector<Poly> system;           // basis of the (2,2) forms through the base points
  std::size_t image_nullity = 0;
  Poly surface = Poly(4);             // the image cubic surface
  bool held_out_on_surface = false;
  std::vector<LinearSubspace> ruling_lines;  // 10 images of ruling lines through base points
  std::size_t collinear_rulings = 0;
  std::optional<LinearSubspace> line1, line2;  // images of V(g1), V(g2)
  bool curve_images_are_lines = false;
  bool curve_lines_disjoint = false;
  bool lines_on_surface = false;

  bool ok() const {
    return system.size() == 4 && image_nullity == 1 && held_out_on_surface && collinear_rulings == 10 &&
           curve_images_are_lines && curve_lines_disjoint && lines_on_surface;
  }
};

/// Map of the blow-up of Q at the 5 base points to P^3 by the (2,2) forms
/// through them; verifies the image is a cubic surface and that 12 curves go
/// to lines (10 ruling lines through base points, V(g1) and V(g2)).
inline BlowupReport blowup_cubic_surface(const QuadricChart& chart, std::uint64_t seed) {
  BlowupReport r;
  r.system = bihomogeneous_through(2, 2, chart.base_points);
  if (r.system.size() != 4) throw DegenerateSample("blowup: (2,2) system is not 4-dimensional");
  Rng rng(seed);
  auto image = [&](const QuadricPoint& p) -> std::optional<Vector> {
    Vector y;
    for (const auto& f : r.system) y.push_back(f(std::span<const Scalar>(p)));
    if (nodal::is_zero(y)) return std::nullopt;
    return primitive(y);
  };
  auto random_qpoint = [&] {
    QuadricPoint p;
    do p = {rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(-30, 30)};
    while ((p[0] == 0 && p[1] == 0) || (p[2] == 0 && p[3] == 0));
    return p;
  };

  std::vector<Vector> samples, held;
  while (samples.size() < 25 || held.size() < 5) {
    if (auto y = image(random_qpoint())) (samples.size() < 25 ? samples : held).push_back(std::move(*y));
  }
  const auto cubics = interpolate_hypersurface(samples, 3);
  r.image_nullity = cubics.size();
  if (cubics.size() != 1) return r;
  r.surface = cubics.front();
  r.held_out_on_surface = true;
  for (const auto& y : held) r.held_out_on_surface = r.held_out_on_surface && r.surface(y) == 0;

  // images of a one-parameter family; a line iff the sampled images span rank 2
  auto curve_image = [&](auto&& point_at) -> std::optional<LinearSubspace> {
    std::vector<Vector> ys;
    for (int guard = 0; ys.size() < 4 && guard < 100; ++guard) {
      const Scalar a = rng.uniform(-30, 30), b = rng.uniform(-30, 30);
      if (a == 0 && b == 0) continue;
      auto p = point_at(a, b);
      if ((p[0] == 0 && p[1] == 0) || (p[2] == 0 && p[3] == 0)) continue;
      if (auto y = image(p)) ys.push_back(std::move(*y));
    }
    if (ys.size() < 4 || exact_rank(ScalarMatrix::from_rows(ys)) != 2) return std::nullopt;
    return LinearSubspace::span(std::span<const Vector>(ys));
  };

  r.lines_on_surface = true;
  for (const auto& bp : chart.base_points) {
    auto fixed_uv = curve_image([&](const Scalar& s, const Scalar& w) { return QuadricPoint{bp[0], bp[1], s, w}; });
    auto fixed_sw = curve_image([&](const Scalar& u, const Scalar& v) { return QuadricPoint{u, v, bp[2], bp[3]}; });
    for (auto* line : {&fixed_uv, &fixed_sw}) {
      if (!*line) continue;
      ++r.collinear_rulings;
      r.lines_on_surface = r.lines_on_surface && lies_on(r.surface, **line);
      r.ruling_lines.push_back(**line);
    }
  }
  r.line1 = curve_image([&](const Scalar& u, const Scalar& v) {
    const auto sw = chart.g1_fiber(u, v);
    return QuadricPoint{u, v, sw[0], sw[1]};
  });
  r.line2 = curve_image([&](const Scalar& s, const Scalar& w) {
    const auto uv = chart.g2_fiber(s, w);
    return QuadricPoint{uv[0], uv[1], s, w};
  });
  r.curve_images_are_lines = r.line1.has_value() && r.line2.has_value();
  if (r.curve_images_are_lines) {
    r.lines_on_surface = r.lines_on_surface && lies_on(r.surface, *r.line1) && lies_on(r.surface, *r.line2);
    auto both = r.line1->basis_vectors();
    for (auto& v : r.line2->basis_vectors()) both.push_back(std::move(v));
    r.curve_lines_disjoint = exact_rank(ScalarMatrix::from_rows(both)) == 4;
  }
  return r;
}

}  // namespace nodal
