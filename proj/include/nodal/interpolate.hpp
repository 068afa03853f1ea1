#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"

namespace nodal {

/// All exponent vectors of total degree d in n variables, in decreasing
/// lexicographic order (t0^d first).
inline std::vector<Exponents> monomials(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  return out;
}

inline Scalar monomial_value(const Exponents& e, std::span<const Scalar> x) {
  Scalar v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) v *= x[i];
  return v;
}

/// Rows: points; columns: degree-d monomials evaluated at the point.
inline ScalarMatrix monomial_evaluation_matrix(std::span<const Vector> points, unsigned d) {
  if (points.empty()) throw std::invalid_argument("monomial_evaluation_matrix: no points");
  const std::size_t n = points.front().size();
  const auto mons = monomials(n, d);
  ScalarMatrix m(points.size(), mons.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) throw std::invalid_argument("interpolation points disagree on dimension");
    for (std::size_t j = 0; j < mons.size(); ++j) m(i, j) = monomial_value(mons[j], points[i]);
  }
  return m;
}

inline Poly poly_from_coefficients(std::size_t nvars, unsigned d, std::span<const Scalar> coeffs) {
  const auto mons = monomials(nvars, d);
  if (coeffs.size() != mons.size()) throw std::invalid_argument("coefficient count mismatch");
  Poly p(nvars);
  for (std::size_t j = 0; j < mons.size(); ++j) p.add_term(mons[j], coeffs[j]);
  return p;
}

/// Basis of the degree-d forms vanishing at every point (given by homogeneous
/// coordinates). An empty result means no such nonzero form exists.
inline std::vector<Poly> interpolate_hypersurface(std::span<const Vector> points, unsigned d) {
  const std::size_t n = points.front().size();
  std::vector<Poly> basis;
  for (const auto& v : exact_nullspace(monomial_evaluation_matrix(points, d)))
    basis.push_back(poly_from_coefficients(n, d, v));
  return basis;
}

}  // namespace nodal
