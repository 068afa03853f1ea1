#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nodal/matrix.hpp"
#include "nodal/scalar.hpp"

namespace nodal {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over the rationals in variables t0..t{n-1}.
///
/// Terms are kept in an ordered map keyed by exponent vector, so iteration
/// order (and therefore every printed form) is deterministic. No stored
/// coefficient is ever zero.
class Poly {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Scalar& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("Poly::variable: index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    Poly p(nvars);
    p.add_term(std::move(e), 1);
    return p;
  }

  static Poly monomial(Exponents e, const Scalar& c = 1) {
    Poly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  /// The linear form sum_i coeffs[i] * t_i.
  static Poly linear_form(std::span<const Scalar> coeffs) {
    Poly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(std::move(e), coeffs[i]);
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
    return d;
  }

  /// True iff every term has total degree d. The zero polynomial is
  /// homogeneous of every degree.
  bool is_homogeneous(unsigned d) const {
    for (const auto& [e, c] : terms_)
      if (total(e) != d) return false;
    return true;
  }

  bool is_homogeneous() const { return is_zero() || is_homogeneous(static_cast<unsigned>(degree())); }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Adds c * t^e, dropping the term if it cancels.
  void add_term(Exponents e, const Scalar& c) {
    if (e.size() != nvars_) throw std::invalid_argument("Poly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& q) {
    check_compatible(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& q) {
    check_compatible(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  Poly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator-(Poly p) { return p *= Scalar(-1); }
  friend Poly operator*(Poly p, const Scalar& s) { return p *= s; }
  friend Poly operator*(const Scalar& s, Poly p) { return p *= s; }

  friend Poly operator*(const Poly& p, const Poly& q) {
    p.check_compatible(q);
    Poly r(p.nvars_);
    Exponents e(p.nvars_);
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
        r.add_term(e, cp * cq);
      }
    return r;
  }

  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Exact value at a point.
  Scalar operator()(std::span<const Scalar> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly: evaluation point length mismatch");
    // powers[i][k] = point[i]^k, built lazily up to the largest exponent
    std::vector<std::vector<Scalar>> powers(nvars_, std::vector<Scalar>{Scalar(1)});
    Scalar sum = 0;
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
        term *= pw[e[i]];
      }
      sum += term;
    }
    return sum;
  }

  Scalar operator()(std::initializer_list<Scalar> point) const {
    return (*this)(std::span<const Scalar>(point.begin(), point.size()));
  }

 private:
  static unsigned total(const Exponents& e) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    return s;
  }

  void check_compatible(const Poly& q) const {
    if (q.nvars_ != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  }

  std::size_t nvars_;
  TermMap terms_;
};

using PolyMatrix = Matrix<Poly>;

inline Poly partial_derivative(const Poly& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("partial_derivative: variable index out of range");
  Poly d(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    d.add_term(std::move(f), c * e[var]);
  }
  return d;
}

inline std::vector<Poly> gradient(const Poly& p) {
  std::vector<Poly> g;
  g.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(partial_derivative(p, i));
  return g;
}

inline Vector gradient_at(const Poly& p, std::span<const Scalar> point) {
  Vector g(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g[i] = partial_derivative(p, i)(point);
  return g;
}

inline ScalarMatrix hessian_at(const Poly& p, std::span<const Scalar> point) {
  const std::size_t n = p.nvars();
  ScalarMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly di = partial_derivative(p, i);
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = partial_derivative(di, j)(point);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

/// Replaces variable i of p by images[i]. All images share one variable count.
inline Poly compose(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("compose: need one image per variable");
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  for (const auto& q : images)
    if (q.nvars() != m) throw std::invalid_argument("compose: images disagree on variable count");
  Poly out(m);
  std::vector<std::vector<Poly>> powers(p.nvars(), std::vector<Poly>{Poly::constant(m, 1)});
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      term *= pw[e[i]];
    }
    out += term;
  }
  return out;
}

/// Linear change of variables: old variable i becomes sum_j map(i, j) * s_j.
/// The map has one row per variable of p; its column count is the number of
/// new variables. Satisfies substitute_linear(p, M)(x) == p(M x).
inline Poly substitute_linear(const Poly& p, const ScalarMatrix& map) {
  if (map.rows() != p.nvars())
    throw std::invalid_argument("substitute_linear: map must have one row per variable");
  std::vector<Poly> images;
  images.reserve(map.rows());
  for (std::size_t i = 0; i < map.rows(); ++i) images.push_back(Poly::linear_form(map.row(i)));
  return compose(p, images);
}

/// Appends `extra` unused variables (or prepends when `front` is set).
inline Poly extend_variables(const Poly& p, std::size_t extra, bool front = false) {
  Poly out(p.nvars() + extra);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(p.nvars() + extra, 0);
    std::copy(e.begin(), e.end(), f.begin() + (front ? extra : 0));
    out.add_term(std::move(f), c);
  }
  return out;
}

/// Collects p as a polynomial in variable `var`: result[k] is the
/// coefficient of t_var^k (still in all variables, with t_var absent).
inline std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::vector<Poly> out;
  for (const auto& [e, c] : p.terms()) {
    if (out.size() <= e[var]) out.resize(e[var] + 1, Poly(p.nvars()));
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(std::move(f), c);
  }
  return out;
}

/// Drops variable `var`, which must not occur in p.
inline Poly drop_variable(const Poly& p, std::size_t var) {
  Poly out(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != 0) throw std::invalid_argument("drop_variable: variable occurs");
    Exponents f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(var));
    out.add_term(std::move(f), c);
  }
  return out;
}

/// True iff a == c * b for some nonzero scalar c; on success stores c.
inline bool proportional(const Poly& a, const Poly& b, Scalar* factor = nullptr) {
  if (a.nvars() != b.nvars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.term_count() != b.term_count()) return false;
  const Scalar c = a.terms().begin()->second / b.terms().begin()->second;
  for (auto ia = a.terms().begin(), ib = b.terms().begin(); ia != a.terms().end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != c * ib->second) return false;
  if (factor) *factor = c;
  return true;
}

/// Human-readable form, e.g. "t0^3 - 1/2*t1*t2".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest terms first reads more naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Scalar mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = true;
    for (unsigned x : e) constant = constant && x == 0;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant)
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

}  // namespace nodal
