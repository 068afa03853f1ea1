#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nodal/matrix.hpp"
#include "nodal/poly.hpp"
#include "nodal/scalar.hpp"

namespace nodal {

/// Row echelon form over the integers produced by fraction-free (Bareiss)
/// elimination. Each row of the input is first scaled to a primitive integer
/// row; pivoting takes the first nonzero entry in the current column.
struct IntegerEchelon {
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> rows;  // only the nonzero rows, in order
  std::vector<std::size_t> pivots;         // pivot column of each row
  int swap_parity = 1;                     // sign of the row permutation
  Integer denominator_product = 1;         // product of the row scalings

  std::size_t rank() const { return pivots.size(); }
};

inline IntegerEchelon integer_echelon(const ScalarMatrix& m) {
  IntegerEchelon out;
  out.cols = m.cols();
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm_den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j).get_num() * (lcm_den / m(i, j).get_den());
    out.denominator_product *= lcm_den;
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.swap_parity = -out.swap_parity;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = piv * a[i][j] - lead * a[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("integer_echelon: inexact Bareiss division");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

inline std::size_t exact_rank(const ScalarMatrix& m) { return integer_echelon(m).rank(); }

/// Basis of {x : m x = 0}. Each vector is primitive integral with positive
/// leading entry; the basis has one vector per non-pivot column.
inline std::vector<Vector> exact_nullspace(const ScalarMatrix& m) {
  const IntegerEchelon ech = integer_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols(), Scalar(0));
    x[f] = 1;
    for (std::size_t k = ech.rank(); k-- > 0;) {
      const std::size_t pc = ech.pivots[k];
      Scalar s = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (x[j] != 0 && ech.rows[k][j] != 0) s += Scalar(ech.rows[k][j]) * x[j];
      x[pc] = -s / Scalar(ech.rows[k][pc]);
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

/// Reduced row echelon form over the rationals; unique, so usable as a
/// canonical form for row spaces. Zero rows are dropped.
inline std::pair<ScalarMatrix, std::vector<std::size_t>> rref(const ScalarMatrix& m) {
  std::vector<Vector> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.emplace_back(m.row(i).begin(), m.row(i).end());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  ScalarMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = a[i][j];
  return {out, pivots};
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const ScalarMatrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  ScalarMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [red, pivots] = rref(aug);
  Vector x(m.cols(), Scalar(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == m.cols()) return std::nullopt;
    x[pivots[k]] = red(k, m.cols());
  }
  return x;
}

/// Determinant of a square rational matrix by fraction-free elimination.
inline Scalar determinant(const ScalarMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  const IntegerEchelon ech = integer_echelon(m);
  if (ech.rank() < m.rows()) return 0;
  return Scalar(ech.rows.back().back() * ech.swap_parity) / Scalar(ech.denominator_product);
}

namespace detail {

inline Poly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Poly d(m(0, 0).nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Poly term = m(0, j) * cofactor_det(m.minor_matrix(0, j));
    if (j % 2 == 0)
      d += term;
    else
      d -= term;
  }
  return d;
}

// Berkowitz's division-free characteristic polynomial; the determinant is
// (-1)^n times its constant coefficient.
inline Poly berkowitz_det(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t nv = a(0, 0).nvars();
  const Poly zero(nv);
  const Poly one = Poly::constant(nv, 1);
  std::vector<Poly> v{one, -a(0, 0)};  // char poly coefficients of the leading 1x1 block
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column for the (r+1)x(r+1) leading block
    std::vector<Poly> col;
    col.push_back(one);
    col.push_back(-a(r, r));
    std::vector<Poly> vec(r, zero);  // current a(r, 0..r-1) * M^k
    for (std::size_t j = 0; j < r; ++j) vec[j] = a(r, j);
    for (std::size_t k = 0; k < r; ++k) {
      Poly s = zero;
      for (std::size_t j = 0; j < r; ++j) s += vec[j] * a(j, r);
      col.push_back(-s);
      if (k + 1 == r) break;
      std::vector<Poly> next(r, zero);
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) next[j] += vec[i] * a(i, j);
      vec = std::move(next);
    }
    std::vector<Poly> w(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j)
        if (i - j < col.size()) w[i] += col[i - j] * v[j];
    v = std::move(w);
  }
  Poly d = v.back();
  return n % 2 == 0 ? d : -d;
}

}  // namespace detail

/// Determinant of a square polynomial matrix: cofactor expansion up to 4x4,
/// division-free Berkowitz recursion above.
inline Poly poly_det(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("poly_det: matrix is not square");
  if (m.rows() == 0) throw std::invalid_argument("poly_det: empty matrix");
  const std::size_t nv = m(0, 0).nvars();
  for (const auto& e : m.entries())
    if (e.nvars() != nv) throw std::invalid_argument("poly_det: entries disagree on variable count");
  return m.rows() <= 4 ? detail::cofactor_det(m) : detail::berkowitz_det(m);
}

inline ScalarMatrix evaluate(const PolyMatrix& m, std::span<const Scalar> point) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(point);
  return out;
}

}  // namespace nodal
