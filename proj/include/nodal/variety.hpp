#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"
#include "nodal/projspace.hpp"

namespace nodal {

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cubic threefold: either a cubic in P^4, or a cubic in P^5 together with
/// a linear form whose zero hyperplane it lives in.
struct CubicThreefold {
  Poly equation;
  std::optional<Poly> constraint;

  CubicThreefold(Poly eq, std::optional<Poly> lin = std::nullopt)
      : equation(std::move(eq)), constraint(std::move(lin)) {
    if (equation.is_zero() || !equation.is_homogeneous(3))
      throw std::invalid_argument("CubicThreefold: equation must be a nonzero cubic form");
    if (constraint && (constraint->nvars() != equation.nvars() || constraint->is_zero() ||
                       !constraint->is_homogeneous(1)))
      throw std::invalid_argument("CubicThreefold: constraint must be a nonzero linear form");
    if (ambient_dim() != 4) throw std::invalid_argument("CubicThreefold: not a threefold");
  }

  std::size_t coords() const { return equation.nvars(); }
  /// Dimension of the projective space the threefold is a hypersurface in.
  std::size_t ambient_dim() const { return coords() - 1 - (constraint ? 1 : 0); }

  Vector constraint_coefficients() const {
    Vector c(coords(), Scalar(0));
    if (!constraint) return c;
    for (std::size_t i = 0; i < coords(); ++i) {
      Exponents e(coords(), 0);
      e[i] = 1;
      c[i] = constraint->coefficient(e);
    }
    return c;
  }

  /// Basis of the linear space the threefold's P^4 is the projectivization of.
  std::vector<Vector> ambient_basis() const {
    if (!constraint) {
      std::vector<Vector> out;
      for (std::size_t i = 0; i < coords(); ++i) {
        Vector v(coords(), Scalar(0));
        v[i] = 1;
        out.push_back(std::move(v));
      }
      return out;
    }
    return exact_nullspace(ScalarMatrix::from_rows({constraint_coefficients()}));
  }

  bool contains(std::span<const Scalar> x) const {
    return equation(x) == 0 && (!constraint || (*constraint)(x) == 0);
  }
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }
};

struct PointReport {
  bool on_variety = false;
  bool singular = false;
  bool ordinary_double_point = false;
  /// Rank of the local quadratic part (meaningful for singular points).
  std::size_t quadratic_rank = 0;
};

/// Classifies a point of the threefold. A point is singular when the cubic's
/// gradient is proportional to the constraint's (or zero, unconstrained); it
/// is a node when the Hessian restricted to the ambient hyperplane has rank
/// one less than that hyperplane's dimension, i.e. the quadratic part in an
/// affine chart is nondegenerate in the 4 local variables. Points off the
/// variety come back with every flag false.
inline PointReport check_point(const CubicThreefold& x, const ProjPoint& p) {
  if (p.size() != x.coords()) throw std::invalid_argument("check_point: ambient mismatch");
  PointReport r;
  r.on_variety = x.contains(p);
  if (!r.on_variety) return r;
  const Vector grad = gradient_at(x.equation, p.coords());
  if (x.constraint) {
    r.singular = exact_rank(ScalarMatrix::from_rows({grad, x.constraint_coefficients()})) <= 1;
  } else {
    r.singular = nodal::is_zero(grad);
  }
  if (!r.singular) return r;
  const auto basis = x.ambient_basis();
  const ScalarMatrix b = ScalarMatrix::from_columns(basis);
  const ScalarMatrix local = b.transpose() * hessian_at(x.equation, p.coords()) * b;
  r.quadratic_rank = exact_rank(local);
  r.ordinary_double_point = r.quadratic_rank + 1 == basis.size();
  return r;
}

inline std::vector<PointReport> singular_points_check(const CubicThreefold& x,
                                                      std::span<const ProjPoint> candidates) {
  std::vector<PointReport> out;
  out.reserve(candidates.size());
  for (const auto& p : candidates) out.push_back(check_point(x, p));
  return out;
}

/// Random point of a cubic threefold via a line through one of its nodes: the
/// line meets the cubic twice at the node, so the third intersection is
/// rational. Every point outside the node's tangent cone arises this way.
inline ProjPoint sample_via_node(const CubicThreefold& x, const ProjPoint& node, Rng& rng) {
  const auto basis = x.ambient_basis();
  const Vector& q = node.coords();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vector v(x.coords(), Scalar(0));
    for (const auto& b : basis) {
      const Scalar c = rng.uniform(-kSampleBound, kSampleBound);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    const Scalar cubic = x.equation(v);
    if (cubic == 0) continue;
    Vector qv(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) qv[i] = q[i] + v[i];
    const Scalar quad = x.equation(qv) - cubic;
    Vector pt(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) pt[i] = cubic * q[i] - quad * v[i];
    if (nodal::is_zero(pt)) continue;
    ProjPoint res(pt);
    if (!x.contains(res)) throw std::logic_error("sample_via_node: point is not a node");
    return res;
  }
  throw SamplingError("sample_via_node: no usable direction found");
}

/// True when every `k`-subset of the points spans a space of rank k.
inline bool every_subset_independent(std::span<const ProjPoint> points, std::size_t k) {
  const std::size_t n = points.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<ProjPoint> sub;
    for (auto i : idx) sub.push_back(points[i]);
    if (span_rank(sub) != k) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace nodal
