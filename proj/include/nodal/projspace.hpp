#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal/interpolate.hpp"
#include "nodal/linalg.hpp"
#include "nodal/poly.hpp"
#include "nodal/scalar.hpp"

namespace nodal {

/// Seeded source of small integers. Draws use the raw mt19937_64 stream
/// (whose output the standard fixes) rather than a std distribution, so a
/// seed reproduces the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  /// Small nonzero integer in [-bound, bound].
  long nonzero(long bound) {
    long v;
    do v = uniform(-bound, bound);
    while (v == 0);
    return v;
  }

  Vector vector(std::size_t n, long bound) {
    Vector v(n);
    for (auto& x : v) x = uniform(-bound, bound);
    return v;
  }

  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Sampled coordinates stay in [-100, 100] to keep exact elimination cheap.
inline constexpr long kSampleBound = 100;

/// A point of projective space. Coordinates are stored as the primitive
/// integer vector with positive first nonzero entry, so equality of points is
/// equality of stored coordinates.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(std::span<const Scalar> coords) : coords_(primitive(coords)) {
    if (nodal::is_zero(coords_)) throw std::invalid_argument("ProjPoint: zero vector");
  }
  ProjPoint(std::initializer_list<long> coords) {
    Vector v(coords.begin(), coords.end());
    *this = ProjPoint(v);
  }

  const Vector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  /// Dimension of the ambient projective space.
  std::size_t ambient_dim() const { return coords_.size() - 1; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

 private:
  Vector coords_;
};

inline std::string to_string(const ProjPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + "]";
}

inline std::vector<Vector> coordinates(std::span<const ProjPoint> pts) {
  std::vector<Vector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

/// Linear subspace of P^n carried in both presentations: a spanning basis
/// (in reduced row echelon form, which makes it canonical) and a basis of
/// the linear equations cutting it out.
class LinearSubspace {
 public:
  LinearSubspace() = default;

  static LinearSubspace span(std::span<const Vector> vectors) {
    if (vectors.empty()) throw std::invalid_argument("span: no vectors");
    return LinearSubspace(vectors.front().size(), ScalarMatrix::from_rows({vectors.begin(), vectors.end()}));
  }

  static LinearSubspace span(std::span<const ProjPoint> points) {
    const auto v = coordinates(points);
    return span(std::span<const Vector>(v));
  }

  static LinearSubspace from_equations(std::size_t ambient_dim, std::span<const Vector> equations) {
    if (equations.empty()) {
      return LinearSubspace(ambient_dim + 1, identity_matrix<Scalar>(ambient_dim + 1));
    }
    const auto vecs = exact_nullspace(ScalarMatrix::from_rows({equations.begin(), equations.end()}));
    if (vecs.empty()) throw std::invalid_argument("from_equations: equations cut out the empty set");
    return span(std::span<const Vector>(vecs));
  }

  std::size_t ambient_dim() const { return n_ - 1; }
  /// Projective dimension (-1 never occurs: subspaces are nonempty).
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }
  std::size_t rank() const { return basis_.rows(); }

  const ScalarMatrix& span_basis() const { return basis_; }
  const std::vector<Vector>& dual_equations() const { return equations_; }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
    return out;
  }

  bool contains(std::span<const Scalar> v) const {
    if (v.size() != n_) throw std::invalid_argument("contains: ambient mismatch");
    for (const auto& eq : equations_)
      if (dot(eq, v) != 0) return false;
    return true;
  }
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }
  bool contains(const LinearSubspace& s) const {
    for (const auto& v : s.basis_vectors())
      if (!contains(v)) return false;
    return true;
  }

  /// Substitution matrix mapping plane coordinates to ambient coordinates:
  /// column j is the j-th spanning vector.
  ScalarMatrix parametrization() const { return basis_.transpose(); }

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const LinearSubspace& a, const LinearSubspace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.basis_.rows() != b.basis_.rows()) return a.basis_.rows() < b.basis_.rows();
    const auto x = a.basis_.entries();
    const auto y = b.basis_.entries();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  LinearSubspace(std::size_t n, const ScalarMatrix& generators) : n_(n) {
    if (generators.cols() != n) throw std::invalid_argument("LinearSubspace: vectors disagree on length");
    basis_ = rref(generators).first;
    if (basis_.rows() == 0) throw std::invalid_argument("LinearSubspace: zero span");
    equations_ = basis_.rows() == n ? std::vector<Vector>{} : exact_nullspace(basis_);
  }

  std::size_t n_ = 0;
  ScalarMatrix basis_;
  std::vector<Vector> equations_;
};

inline LinearSubspace span(std::span<const ProjPoint> points) { return LinearSubspace::span(points); }

inline bool contains(const LinearSubspace& s, const ProjPoint& p) { return s.contains(p); }

using Permutation = std::vector<std::size_t>;

/// A permutation group acting on coordinates, given by generators. The
/// permutation g sends coordinate i to position g[i].
class PermGroupAction {
 public:
  PermGroupAction(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (g.size() != degree_) throw std::invalid_argument("PermGroupAction: generator has wrong degree");
      std::vector<bool> seen(degree_, false);
      for (auto x : g) {
        if (x >= degree_ || seen[x]) throw std::invalid_argument("PermGroupAction: generator is not a bijection");
        seen[x] = true;
      }
    }
  }

  /// The full symmetric group, generated by (0 1) and (0 1 ... n-1).
  static PermGroupAction symmetric(std::size_t n) {
    Permutation swap(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      swap[i] = i;
      cycle[i] = (i + 1) % n;
    }
    if (n > 1) std::swap(swap[0], swap[1]);
    return PermGroupAction(n, {swap, cycle});
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
};

inline Vector permute(const Permutation& g, std::span<const Scalar> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[g[i]] = v[i];
  return out;
}

inline ProjPoint act(const Permutation& g, const ProjPoint& p) { return ProjPoint(permute(g, p.coords())); }

inline LinearSubspace act(const Permutation& g, const LinearSubspace& s) {
  std::vector<Vector> moved;
  for (const auto& v : s.basis_vectors()) moved.push_back(permute(g, v));
  return LinearSubspace::span(std::span<const Vector>(moved));
}

/// Orbit of `seed` by breadth-first closure under the generators. Elements
/// come back in discovery order and are pairwise distinct.
template <class T>
std::vector<T> orbit(const T& seed, const PermGroupAction& action) {
  if (seed.ambient_dim() + 1 != action.degree()) throw std::invalid_argument("orbit: degree mismatch");
  std::set<T> seen{seed};
  std::vector<T> out{seed};
  std::deque<T> queue{seed};
  while (!queue.empty()) {
    T cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : action.generators()) {
      T next = act(g, cur);
      if (seen.insert(next).second) {
        out.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random point of P^n with coordinates in [-100, 100].
inline ProjPoint random_point(std::size_t ambient_dim, Rng& rng) {
  for (;;) {
    Vector v = rng.vector(ambient_dim + 1, kSampleBound);
    if (!nodal::is_zero(v)) return ProjPoint(v);
  }
}

/// Random point of a linear subspace (a random combination of its basis).
inline ProjPoint random_point(const LinearSubspace& s, Rng& rng) {
  const auto basis = s.basis_vectors();
  for (;;) {
    Vector v(s.ambient_dim() + 1, Scalar(0));
    for (const auto& b : basis) {
      const Scalar c = rng.uniform(-kSampleBound, kSampleBound);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    if (!nodal::is_zero(v)) return ProjPoint(v);
  }
}

/// Random point on the image of a polynomial map P^k --> P^n given by its
/// coordinate forms; parameters hitting the base locus are redrawn.
inline ProjPoint random_point_on_image(std::span<const Poly> map, Rng& rng) {
  if (map.empty()) throw std::invalid_argument("random_point_on_image: empty map");
  const std::size_t k = map.front().nvars();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Vector x = rng.vector(k, kSampleBound);
    Vector y;
    for (const auto& f : map) y.push_back(f(x));
    if (!nodal::is_zero(y)) return ProjPoint(y);
  }
  throw SamplingError("random_point_on_image: parameters keep hitting the base locus");
}

/// Seeded point satisfying the given constraints. Supported shapes: no
/// constraints (a random point of P^n) and linear forms (a random point of
/// the subspace they cut out). Anything else is rejected.
inline ProjPoint sample_point(std::size_t ambient_dim, std::span<const Poly> constraints, std::uint64_t seed) {
  Rng rng(seed);
  if (constraints.empty()) return random_point(ambient_dim, rng);
  std::vector<Vector> eqs;
  for (const auto& c : constraints) {
    if (c.nvars() != ambient_dim + 1) throw std::invalid_argument("sample_point: constraint ambient mismatch");
    if (!c.is_homogeneous(1)) throw SamplingError("sample_point: unsupported constraint shape (nonlinear)");
    Vector row(ambient_dim + 1);
    for (std::size_t i = 0; i <= ambient_dim; ++i) {
      Exponents e(ambient_dim + 1, 0);
      e[i] = 1;
      row[i] = c.coefficient(e);
    }
    eqs.push_back(std::move(row));
  }
  return random_point(LinearSubspace::from_equations(ambient_dim, eqs), rng);
}

/// Seeded point on the image of a parametrization.
inline ProjPoint sample_point_on_image(std::span<const Poly> map, std::uint64_t seed) {
  Rng rng(seed);
  return random_point_on_image(map, rng);
}

inline std::vector<Poly> linear_forms_of(const LinearSubspace& s) {
  std::vector<Poly> out;
  for (const auto& eq : s.dual_equations()) out.push_back(Poly::linear_form(eq));
  return out;
}

/// Rank of the vectors, i.e. 1 + projective dimension of their span.
inline std::size_t span_rank(std::span<const ProjPoint> points) {
  const auto v = coordinates(points);
  return exact_rank(ScalarMatrix::from_rows(v));
}

}  // namespace nodal
