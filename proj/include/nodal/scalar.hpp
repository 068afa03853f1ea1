#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodal {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Exact rational in canonical form (reduced, positive denominator).
/// GMP keeps every arithmetic result canonical; values built from strings
/// go through make_scalar() which canonicalizes explicitly.
using Scalar = mpq_class;

using Vector = std::vector<Scalar>;

inline Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Scalar make_scalar(long num, long den = 1) {
  return make_scalar(Integer(num), Integer(den));
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Scales v to a primitive integer vector whose first nonzero entry is
/// positive. The zero vector is returned unchanged.
inline Vector primitive(std::span<const Scalar> v) {
  Integer lcm_den = 1;
  for (const auto& x : v)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  Vector out(v.size());
  if (g == 0) return out;
  int sign = 0;
  for (const auto& n : ints) {
    if (n != 0) {
      sign = sgn(n);
      break;
    }
  }
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = Scalar(ints[i] / g * sign);
  return out;
}

inline Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

}  // namespace nodal
