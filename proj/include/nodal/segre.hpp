#pragma once

// The Segre cubic primal sum t_i^3 = sum t_i = 0 in P^5 and the classical
// constructions around it: nodes and planes, node charts and associated
// curves, the quadric map from P^3, the Kummer quartic as branch surface of a
// projection, Weddle quartics and dimensions of Coble's linear systems.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nodal/interpolate.hpp"
#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"
#include "nodal/projspace.hpp"
#include "nodal/variety.hpp"

namespace nodal {

inline CubicThreefold build_segre() {
  Poly cubic(6), linear(6);
  for (std::size_t i = 0; i < 6; ++i) {
    Poly t = Poly::variable(6, i);
    cubic += t * t * t;
    linear += t;
  }
  return CubicThreefold(std::move(cubic), std::move(linear));
}

inline std::vector<ProjPoint> segre_nodes() {
  return orbit(ProjPoint{1, 1, 1, -1, -1, -1}, PermGroupAction::symmetric(6));
}

inline std::vector<LinearSubspace> segre_planes() {
  const std::vector<Vector> eqs{{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
  return orbit(LinearSubspace::from_equations(5, eqs), PermGroupAction::symmetric(6));
}

/// True when the linear subspace lies on the threefold: the cubic (and the
/// constraint) restricted to it vanish identically.
inline bool lies_on(const CubicThreefold& x, const LinearSubspace& s) {
  const ScalarMatrix param = s.parametrization();
  if (!substitute_linear(x.equation, param).is_zero()) return false;
  return !x.constraint || substitute_linear(*x.constraint, param).is_zero();
}

struct IncidenceReport {
  std::size_t plane_count = 0;
  std::size_t node_count = 0;
  std::vector<std::size_t> nodes_per_plane;
  std::vector<std::size_t> planes_per_node;
  std::size_t incidences = 0;

  bool is_configuration(std::size_t per_plane, std::size_t per_node) const {
    return std::all_of(nodes_per_plane.begin(), nodes_per_plane.end(), [&](auto c) { return c == per_plane; }) &&
           std::all_of(planes_per_node.begin(), planes_per_node.end(), [&](auto c) { return c == per_node; });
  }
};

/// Incidence structure of the given planes and nodes; throws if some plane
/// does not lie on the threefold.
inline IncidenceReport planes_check(const CubicThreefold& x, std::span<const LinearSubspace> planes,
                                    std::span<const ProjPoint> nodes) {
  IncidenceReport r;
  r.plane_count = planes.size();
  r.node_count = nodes.size();
  r.planes_per_node.assign(nodes.size(), 0);
  for (const auto& plane : planes) {
    if (!lies_on(x, plane)) throw VerificationError("planes_check: a plane does not lie on the cubic");
    std::size_t count = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (plane.contains(nodes[j])) {
        ++count;
        ++r.planes_per_node[j];
      }
    }
    r.nodes_per_plane.push_back(count);
    r.incidences += count;
  }
  return r;
}

inline IncidenceReport planes_check(const CubicThreefold& x) {
  const auto planes = segre_planes();
  const auto nodes = segre_nodes();
  return planes_check(x, planes, nodes);
}

/// The threefold written as t0*a2 + a3 in coordinates where a node sits at
/// [1,0,0,0,0]. Old coordinates are `change` times chart coordinates.
struct NodeChart {
  ProjPoint node;
  ScalarMatrix change;
  Poly a2;  // quadric in 4 variables
  Poly a3;  // cubic in 4 variables

  /// Chart coordinates (t0..t4) of a point of the threefold.
  Vector chart_coordinates(const ProjPoint& p) const {
    auto x = solve(change, p.coords());
    if (!x) throw std::invalid_argument("chart_coordinates: point outside the chart's ambient space");
    return *x;
  }

  /// Projection from the node to the hyperplane t0 = 0 (a point of P^3).
  ProjPoint project(const ProjPoint& p) const {
    const Vector x = chart_coordinates(p);
    return ProjPoint(Vector(x.begin() + 1, x.end()));
  }

  /// Point of the threefold over a point y of P^3: [-a3(y) : a2(y) y].
  Vector lift(std::span<const Scalar> y) const {
    Vector chart(5);
    chart[0] = -a3(y);
    const Scalar s = a2(y);
    for (std::size_t i = 0; i < 4; ++i) chart[i + 1] = s * y[i];
    return change * chart;
  }

  Poly chart_equation() const {
    return Poly::variable(5, 0) * extend_variables(a2, 1, true) + extend_variables(a3, 1, true);
  }
};

inline std::size_t quadric_rank(const Poly& q) {
  return exact_rank(hessian_at(q, Vector(q.nvars(), Scalar(0))));
}

/// Moves the node q to [1,0,0,0,0] by an explicit change of basis (after
/// eliminating the linear constraint, if any) and reads off a2 and a3.
inline NodeChart node_chart(const CubicThreefold& x, const ProjPoint& q) {
  const PointReport rep = check_point(x, q);
  if (!rep.singular) throw VerificationError("node_chart: point is not a singular point");
  // basis of the ambient space starting with q, completed greedily
  std::vector<Vector> cols{q.coords()};
  for (const auto& b : x.ambient_basis()) {
    if (cols.size() == 5) break;
    auto trial = cols;
    trial.push_back(b);
    if (exact_rank(ScalarMatrix::from_rows(trial)) == trial.size()) cols = std::move(trial);
  }
  const ScalarMatrix change = ScalarMatrix::from_columns(cols);
  const Poly g = substitute_linear(x.equation, change);
  auto parts = coefficients_in(g, 0);
  parts.resize(4, Poly(5));
  if (!parts[2].is_zero() || !parts[3].is_zero())
    throw std::logic_error("node_chart: t0^2 or t0^3 term at a singular point");
  NodeChart chart{q, change, drop_variable(parts[1], 0), drop_variable(parts[0], 0)};
  if (quadric_rank(chart.a2) != 4) throw VerificationError("node_chart: a2 is degenerate (not a node)");
  if (chart.chart_equation() != g) throw std::logic_error("node_chart: chart equation mismatch");
  return chart;
}

struct CurvePointReport {
  bool on_curve = false;
  bool curve_singular = false;
};

/// Points of P^3 against the associated curve V(a2) n V(a3).
inline std::vector<CurvePointReport> associated_curve_singularities(const NodeChart& chart,
                                                                    std::span<const ProjPoint> points) {
  std::vector<CurvePointReport> out;
  for (const auto& p : points) {
    CurvePointReport r;
    r.on_curve = chart.a2(p.coords()) == 0 && chart.a3(p.coords()) == 0;
    if (r.on_curve) {
      const ScalarMatrix jac =
          ScalarMatrix::from_rows({gradient_at(chart.a2, p.coords()), gradient_at(chart.a3, p.coords())});
      r.curve_singular = exact_rank(jac) <= 1;
    }
    out.push_back(r);
  }
  return out;
}

struct CollinearTriple {
  std::array<std::size_t, 3> indices;
  LinearSubspace line;
};

/// Every triple of the points spanning only a line, by exhaustive search.
inline std::vector<CollinearTriple> collinear_triples(std::span<const ProjPoint> points) {
  std::vector<CollinearTriple> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        const std::vector<ProjPoint> t{points[i], points[j], points[k]};
        if (span_rank(t) == 2) out.push_back({{i, j, k}, span(t)});
      }
  return out;
}

inline bool lies_on(const Poly& form, const LinearSubspace& s) {
  return substitute_linear(form, s.parametrization()).is_zero();
}

/// Map P^3 --> P^4 by the quadrics through the reference points
/// [1,0,0,0], ..., [0,0,0,1], [1,1,1,1].
struct CastelnuovoMap {
  std::vector<Poly> quadrics;
  std::vector<ProjPoint> base_points;

  ProjPoint operator()(const ProjPoint& u) const {
    Vector y;
    for (const auto& q : quadrics) y.push_back(q(u.coords()));
    if (nodal::is_zero(y)) throw VerificationError("castelnuovo map: evaluation at a base point");
    return ProjPoint(y);
  }
};

/// Basis of the quadrics sum_{i<j} a_ij u_i u_j with sum a_ij = 0.
inline CastelnuovoMap castelnuovo_map() {
  std::vector<Poly> products;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) products.push_back(Poly::variable(4, i) * Poly::variable(4, j));
  const ScalarMatrix sum_condition(1, products.size(), Scalar(1));
  CastelnuovoMap f;
  for (const auto& a : exact_nullspace(sum_condition)) {
    Poly q(4);
    for (std::size_t k = 0; k < products.size(); ++k) q += a[k] * products[k];
    f.quadrics.push_back(std::move(q));
  }
  f.base_points = {ProjPoint{1, 0, 0, 0}, ProjPoint{0, 1, 0, 0}, ProjPoint{0, 0, 1, 0}, ProjPoint{0, 0, 0, 1},
                   ProjPoint{1, 1, 1, 1}};
  return f;
}

struct CastelnuovoImage {
  std::vector<Vector> samples;
  std::size_t nullity3 = 0;
  Poly cubic = Poly(5);
  std::vector<ProjPoint> line_images;  // one per line through two base points
  bool images_well_defined = false;
  bool images_singular = false;
};

/// Interpolates the image cubic from seeded samples and checks that each line
/// through two base points is contracted to a singular point of it.
inline CastelnuovoImage castelnuovo_image(const CastelnuovoMap& f, std::uint64_t seed, std::size_t samples = 40) {
  Rng rng(seed);
  CastelnuovoImage out;
  while (out.samples.size() < samples) {
    const ProjPoint u = random_point(3, rng);
    if (std::find(f.base_points.begin(), f.base_points.end(), u) != f.base_points.end()) continue;
    out.samples.push_back(f(u).coords());
  }
  const auto cubics = interpolate_hypersurface(out.samples, 3);
  out.nullity3 = cubics.size();
  if (cubics.size() == 1) out.cubic = cubics.front();
  out.images_well_defined = true;
  out.images_singular = out.nullity3 == 1;
  const auto& b = f.base_points;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      std::optional<ProjPoint> image;
      for (int k = 0; k < 3;) {
        const Scalar s = rng.nonzero(kSampleBound), t = rng.nonzero(kSampleBound);
        Vector u(4);
        for (std::size_t c = 0; c < 4; ++c) u[c] = s * b[i].coords()[c] + t * b[j].coords()[c];
        const ProjPoint pu(u);
        if (pu == b[i] || pu == b[j]) continue;
        ++k;
        const ProjPoint y = f(pu);
        if (!image) image = y;
        else if (!(*image == y)) out.images_well_defined = false;
      }
      out.line_images.push_back(*image);
      if (out.nullity3 == 1) out.images_singular = out.images_singular && nodal::is_zero(gradient_at(out.cubic, image->coords()));
    }
  return out;
}

struct KummerProjection {
  ProjPoint center;
  ScalarMatrix projection;             // 4 x 6, kernel on the hyperplane is the center
  std::vector<Vector> samples;         // projected ramification points used for interpolation
  std::vector<Vector> held_out;        // further projected ramification points
  std::size_t nullity3 = 0;
  std::size_t nullity4 = 0;
  Poly quartic = Poly(4);              // the interpolated quartic (when nullity4 == 1)
  Poly discriminant = Poly(4);         // branch quartic computed from the restricted cubic
  bool held_out_vanish = false;
  bool matches_discriminant = false;
  std::size_t generic_nullity4 = 0;    // projected generic points of the threefold
};

/// Projection of the Segre cubic from a smooth point p to P^3. The
/// projection is a double cover; its branch surface is the Kummer quartic.
/// Points of that surface are sampled as images of ramification points
/// (points x with p on the tangent hyperplane at x). The ramification locus
/// meets each of the 15 planes of the cubic in a conic through the plane's
/// nodes, which makes those conics rationally parametrizable from a node.
inline KummerProjection kummer_projection(const CubicThreefold& x, const ProjPoint& p, std::uint64_t seed,
                                          std::size_t samples_per_plane = 4) {
  if (!x.constraint) throw std::invalid_argument("kummer_projection: expects the Segre model in P^5");
  const PointReport rep = check_point(x, p);
  if (!rep.on_variety || rep.singular) throw VerificationError("kummer_projection: center must be a smooth point");
  Rng rng(seed);
  const std::size_t n = x.coords();
  const Vector lin = x.constraint_coefficients();

  // four linear forms vanishing at p, independent modulo the constraint
  std::vector<Vector> forms;
  for (const auto& f : exact_nullspace(ScalarMatrix::from_rows({p.coords()}))) {
    auto trial = forms;
    trial.push_back(f);
    auto with_lin = trial;
    with_lin.push_back(lin);
    if (exact_rank(ScalarMatrix::from_rows(with_lin)) == with_lin.size()) forms = std::move(trial);
    if (forms.size() == 4) break;
  }
  KummerProjection out{p, ScalarMatrix::from_rows(forms)};

  // polar quadric of p: sum p_i d_i f
  Poly polar(n);
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != 0) polar += p[i] * partial_derivative(x.equation, i);

  auto project = [&](const Vector& v) -> std::optional<Vector> {
    Vector y = out.projection * v;
    if (nodal::is_zero(y)) return std::nullopt;
    return primitive(y);
  };

  const auto planes = segre_planes();
  const auto nodes = segre_nodes();
  for (std::size_t round = 0; round <= samples_per_plane; ++round) {
    for (const auto& plane : planes) {
      const ProjPoint* base = nullptr;
      for (const auto& nd : nodes)
        if (plane.contains(nd)) {
          base = &nd;
          break;
        }
      for (int attempt = 0; attempt < 100; ++attempt) {
        const Vector w = random_point(plane, rng).coords();
        const Scalar pw = polar(w);
        if (pw == 0) continue;
        Vector nw(n);
        for (std::size_t i = 0; i < n; ++i) nw[i] = base->coords()[i] + w[i];
        const Scalar cross = polar(nw) - pw;  // 2 B(node, w); B(node, node) = 0
        Vector pt(n);
        for (std::size_t i = 0; i < n; ++i) pt[i] = pw * base->coords()[i] - cross * w[i];
        if (nodal::is_zero(pt) || !x.contains(pt) || polar(pt) != 0) continue;
        auto y = project(pt);
        if (!y) continue;
        (round < samples_per_plane ? out.samples : out.held_out).push_back(std::move(*y));
        break;
      }
    }
  }

  out.nullity3 = interpolate_hypersurface(out.samples, 3).size();
  const auto quartics = interpolate_hypersurface(out.samples, 4);
  out.nullity4 = quartics.size();
  if (quartics.size() == 1) {
    out.quartic = quartics.front();
    out.held_out_vanish = std::all_of(out.held_out.begin(), out.held_out.end(),
                                      [&](const Vector& y) { return out.quartic(y) == 0; });
  }

  // section of the projection: lifts y in Q^4 to the constraint hyperplane
  auto rows = forms;
  rows.push_back(lin);
  const ScalarMatrix lift_system = ScalarMatrix::from_rows(rows);
  std::vector<Vector> lift_cols;
  for (std::size_t k = 0; k < 4; ++k) {
    Vector rhs(5, Scalar(0));
    rhs[k] = 1;
    lift_cols.push_back(*solve(lift_system, rhs));
  }
  const ScalarMatrix lift = ScalarMatrix::from_columns(lift_cols);  // n x 4
  std::vector<Poly> v;  // coordinates of the lifted direction, linear in y
  for (std::size_t i = 0; i < n; ++i) v.push_back(Poly::linear_form(lift.row(i)));
  const Vector grad = gradient_at(x.equation, p.coords());
  const ScalarMatrix hess = hessian_at(x.equation, p.coords());
  Poly c1(4), c2(4);
  for (std::size_t i = 0; i < n; ++i) {
    c1 += grad[i] * v[i];
    for (std::size_t j = 0; j < n; ++j)
      if (hess(i, j) != 0) c2 += (hess(i, j) / 2) * v[i] * v[j];
  }
  const Poly c3 = compose(x.equation, v);
  out.discriminant = c2 * c2 - Scalar(4) * c1 * c3;
  out.matches_discriminant = out.nullity4 == 1 && proportional(out.quartic, out.discriminant);

  std::vector<Vector> generic;
  const ProjPoint node = nodes.front();
  while (generic.size() < out.samples.size()) {
    if (auto y = project(sample_via_node(x, node, rng).coords())) generic.push_back(std::move(*y));
  }
  out.generic_nullity4 = interpolate_hypersurface(generic, 4).size();
  return out;
}

/// Quartic locus of the nodes of the quadrics through 6 points of P^3: the
/// determinant of the 4x4 matrix of gradients of a basis of those quadrics.
inline Poly weddle_surface(std::span<const ProjPoint> points) {
  if (points.size() != 6) throw std::invalid_argument("weddle_surface: need 6 points");
  for (const auto& p : points)
    if (p.size() != 4) throw std::invalid_argument("weddle_surface: points must lie in P^3");
  if (!every_subset_independent(points, 4)) throw VerificationError("weddle_surface: four points are coplanar");
  const auto pts = coordinates(points);
  const auto quadrics = interpolate_hypersurface(pts, 2);
  if (quadrics.size() != 4) throw VerificationError("weddle_surface: quadric space is not 4-dimensional");
  PolyMatrix grads(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto g = gradient(quadrics[j]);
    for (std::size_t i = 0; i < 4; ++i) grads(i, j) = g[i];
  }
  return poly_det(grads);
}

struct CobleDimension {
  unsigned genus = 0;
  std::size_t monomial_count = 0;
  std::size_t condition_count = 0;
  std::size_t computed_dim = 0;
  long formula_value = 0;  // binom(2g, g) - binom(2g, 2g - 2)
};

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Dimension of the degree-g forms on P^{2g-1} vanishing to order g-1 at
/// 2g+1 seeded general points (all partials of order <= g-2 vanish there).
inline CobleDimension coble_dimension(unsigned g, std::uint64_t seed) {
  if (g < 2 || g > 4) throw std::invalid_argument("coble_dimension: genus must be 2, 3 or 4");
  const std::size_t n = 2 * g;
  Rng rng(seed);
  std::vector<Vector> points;
  for (std::size_t i = 0; i < 2 * g + 1; ++i) points.push_back(random_point(n - 1, rng).coords());

  const auto mons = monomials(n, g);
  std::vector<Exponents> orders;
  for (unsigned k = 0; k + 2 <= g; ++k)
    for (auto& e : monomials(n, k)) orders.push_back(std::move(e));

  // derivative of each monomial along each multi-index, as polynomials
  std::vector<std::vector<Poly>> derivs(orders.size());
  for (std::size_t a = 0; a < orders.size(); ++a)
    for (const auto& m : mons) {
      Poly d = Poly::monomial(m);
      for (std::size_t v = 0; v < n; ++v)
        for (unsigned k = 0; k < orders[a][v]; ++k) d = partial_derivative(d, v);
      derivs[a].push_back(std::move(d));
    }

  ScalarMatrix conditions(points.size() * orders.size(), mons.size());
  std::size_t row = 0;
  for (const auto& pt : points)
    for (std::size_t a = 0; a < orders.size(); ++a, ++row)
      for (std::size_t j = 0; j < mons.size(); ++j) conditions(row, j) = derivs[a][j](pt);

  CobleDimension out;
  out.genus = g;
  out.monomial_count = mons.size();
  out.condition_count = conditions.rows();
  out.computed_dim = mons.size() - exact_rank(conditions);
  out.formula_value = binomial(2 * g, g) - binomial(2 * g, 2 * g - 2);
  return out;
}

}  // namespace nodal
