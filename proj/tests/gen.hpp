#pragma once

// Seeded generators for the property tests.

#include "nodal/interpolate.hpp"
#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"
#include "nodal/projspace.hpp"

namespace gen {

using namespace nodal;

inline Scalar rational(Rng& rng, long bound = 20) {
  return make_scalar(rng.uniform(-bound, bound), rng.uniform(1, bound));
}

inline ScalarMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 20) {
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(rng, bound);
  return m;
}

/// A rows x cols matrix of rank at most k, as a product of random factors.
inline ScalarMatrix low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  return matrix(rng, rows, k, 6) * matrix(rng, k, cols, 6);
}

inline Poly poly(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms = 6) {
  Poly p(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(nvars);
    unsigned left = static_cast<unsigned>(rng.uniform(0, max_degree));
    for (std::size_t i = 0; i < nvars; ++i) {
      const unsigned k = i + 1 == nvars ? left : static_cast<unsigned>(rng.uniform(0, left));
      e[i] = k;
      left -= k;
    }
    p.add_term(e, rational(rng, 9));
  }
  return p;
}

inline Poly form(Rng& rng, std::size_t nvars, unsigned degree) {
  const auto mons = monomials(nvars, degree);
  Poly p(nvars);
  for (const auto& m : mons) p.add_term(m, Scalar(rng.uniform(-5, 5)));
  return p;
}

inline PolyMatrix poly_matrix(Rng& rng, std::size_t n, std::size_t nvars, unsigned degree) {
  PolyMatrix m(n, n, Poly(nvars));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = form(rng, nvars, degree);
  return m;
}

}  // namespace gen
