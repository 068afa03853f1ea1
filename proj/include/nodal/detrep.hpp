#pragma once

// 3x3 matrices of linear forms in t0..t4 and the cubics they cut out.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"
#include "nodal/projspace.hpp"
#include "nodal/variety.hpp"

namespace nodal {

struct DetRep {
  PolyMatrix matrix;
  Scalar scale;
  CubicThreefold target;
};

inline void require_linear_3x3(const PolyMatrix& m, const char* who) {
  if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument(std::string(who) + ": matrix must be 3x3");
  for (const auto& e : m.entries())
    if (!e.is_homogeneous(1) && !e.is_zero())
      throw std::invalid_argument(std::string(who) + ": entries must be linear forms");
}

/// Finds scale with det(m) = scale * X.equation.
inline DetRep verify_detrep(const PolyMatrix& m, const CubicThreefold& x) {
  require_linear_3x3(m, "verify_detrep");
  if (m(0, 0).nvars() != x.coords()) throw std::invalid_argument("verify_detrep: variable count mismatch");
  Scalar scale;
  if (!proportional(poly_det(m), x.equation, &scale))
    throw VerificationError("verify_detrep: determinant is not proportional to the cubic");
  return {m, scale, x};
}

struct DetExpansion {
  std::array<Poly, 4> pieces;  // pieces[k]: t0^(3-k) times the dets with k columns from B
  Poly direct;                 // det(t0 A + B)
};

/// Expands det(t0 A + B) by column multilinearity into its four t0-graded
/// pieces and checks their sum against the directly computed determinant.
inline DetExpansion det_sum_expansion(const ScalarMatrix& a, const PolyMatrix& b) {
  if (a.rows() != 3 || a.cols() != 3 || b.rows() != 3 || b.cols() != 3)
    throw std::invalid_argument("det_sum_expansion: expected 3x3 matrices");
  const std::size_t nv = b(0, 0).nvars();
  if (nv == 0) throw std::invalid_argument("det_sum_expansion: B needs the variable t0");
  const Poly t0 = Poly::variable(nv, 0);
  DetExpansion out{{Poly(nv), Poly(nv), Poly(nv), Poly(nv)}, Poly(nv)};
  for (unsigned mask = 0; mask < 8; ++mask) {
    PolyMatrix m(3, 3, Poly(nv));
    unsigned from_b = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      const bool use_b = (mask >> j) & 1u;
      from_b += use_b;
      for (std::size_t i = 0; i < 3; ++i) m(i, j) = use_b ? b(i, j) : Poly::constant(nv, a(i, j));
    }
    Poly term = poly_det(m);
    for (unsigned k = from_b; k < 3; ++k) term *= t0;
    out.pieces[from_b] += term;
  }
  PolyMatrix sum(3, 3, Poly(nv));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) sum(i, j) = Poly::constant(nv, a(i, j)) * t0 + b(i, j);
  out.direct = poly_det(sum);
  Poly total(nv);
  for (const auto& p : out.pieces) total += p;
  if (total != out.direct) throw std::logic_error("det_sum_expansion: graded pieces do not sum to the determinant");
  return out;
}

struct Rank1Lift {
  ScalarMatrix a;    // every column equal to v
  PolyMatrix matrix; // t0 A + B
  Poly qv = Poly(5);
  Poly cubic = Poly(5);  // t0 q_v + det B
};

/// With every column of A equal to v, det(t0 A + B) loses its t0^3 and t0^2
/// terms, leaving t0 q_v + det B where
/// q_v = det[v B2 B3] + det[B1 v B3] + det[B1 B2 v].
inline Rank1Lift rank1_lift(const PolyMatrix& b, const Vector& v) {
  require_linear_3x3(b, "rank1_lift");
  if (v.size() != 3 || nodal::is_zero(v)) throw std::invalid_argument("rank1_lift: v must be a nonzero 3-vector");
  const std::size_t nv = b(0, 0).nvars();
  if (nv != 5) throw std::invalid_argument("rank1_lift: expected forms in t0..t4");
  for (const auto& e : b.entries())
    if (coefficients_in(e, 0).size() > 1) throw std::invalid_argument("rank1_lift: B must not involve t0");
  Rank1Lift out;
  out.a = ScalarMatrix(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.a(i, j) = v[i];
  out.qv = Poly(nv);
  for (std::size_t j = 0; j < 3; ++j) {
    PolyMatrix m = b;
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = Poly::constant(nv, v[i]);
    out.qv += poly_det(m);
  }
  out.cubic = Poly::variable(nv, 0) * out.qv + poly_det(b);
  out.matrix = PolyMatrix(3, 3, Poly(nv));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.matrix(i, j) = Poly::variable(nv, 0) * Scalar(v[i]) + b(i, j);
  return out;
}

inline std::size_t rank_at(const PolyMatrix& m, const ProjPoint& p) {
  if (m.rows() == 0 || m(0, 0).nvars() != p.size()) throw std::invalid_argument("rank_at: ambient mismatch");
  return exact_rank(evaluate(m, p.coords()));
}

enum class KernelSide { left, right };

/// The kernel of the matrix at a rank-2 point, as a point of P^2.
inline ProjPoint kernel_point(const PolyMatrix& m, const ProjPoint& p, KernelSide side) {
  ScalarMatrix e = evaluate(m, p.coords());
  if (side == KernelSide::left) e = e.transpose();
  const auto ker = exact_nullspace(e);
  if (e.rows() != 3 || ker.size() != 1) throw std::invalid_argument("kernel_point: matrix rank is not 2 here");
  return ProjPoint(ker.front());
}

/// Sets t0 = 0 and drops it.
inline Poly restrict_t0(const Poly& p) {
  if (p.is_zero()) return Poly(p.nvars() - 1);
  return drop_variable(coefficients_in(p, 0).front(), 0);
}

inline PolyMatrix restrict_t0(const PolyMatrix& m) {
  PolyMatrix out(m.rows(), m.cols(), Poly(m(0, 0).nvars() - 1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = restrict_t0(m(i, j));
  return out;
}

struct RestrictionCheck {
  PolyMatrix matrix;  // the representation with t0 = 0, in t1..t4
  Poly surface = Poly(4);
  bool holds = false;
};

/// For X = V(t0 a2 + a3): det of the restricted matrix equals scale * a3.
inline RestrictionCheck restriction_check(const DetRep& rep) {
  RestrictionCheck out;
  out.matrix = restrict_t0(rep.matrix);
  out.surface = restrict_t0(rep.target.equation);
  out.holds = !out.surface.is_zero() && poly_det(out.matrix) == rep.scale * out.surface;
  return out;
}

inline Poly random_linear_form(std::size_t nvars, std::size_t first_var, Rng& rng, long bound = 9) {
  Poly f(nvars);
  for (std::size_t i = first_var; i < nvars; ++i) f += Scalar(rng.uniform(-bound, bound)) * Poly::variable(nvars, i);
  return f;
}

/// 3x3 matrix of random linear forms in t_first..t_(nvars-1).
inline PolyMatrix random_linear_matrix(std::size_t nvars, std::size_t first_var, Rng& rng, long bound = 9) {
  PolyMatrix m(3, 3, Poly(nvars));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = random_linear_form(nvars, first_var, rng, bound);
  return m;
}

}  // namespace nodal
