#pragma once

// Picard lattice of a cubic surface, Z^7 with basis e0..e6, e0^2 = 1,
// ei^2 = -1, K = -3e0 + e1 + ... + e6. A class is stored by its coordinates
// (a, c1, ..., c6), meaning a e0 + sum ci ei.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nodal {

using PicClass = std::array<int, 7>;

inline int pic_dot(const PicClass& x, const PicClass& y) {
  int s = x[0] * y[0];
  for (std::size_t i = 1; i < 7; ++i) s -= x[i] * y[i];
  return s;
}

inline PicClass operator+(PicClass x, const PicClass& y) {
  for (std::size_t i = 0; i < 7; ++i) x[i] += y[i];
  return x;
}
inline PicClass operator-(PicClass x, const PicClass& y) {
  for (std::size_t i = 0; i < 7; ++i) x[i] -= y[i];
  return x;
}
inline PicClass operator*(int k, PicClass x) {
  for (auto& c : x) c *= k;
  return x;
}

inline PicClass basis_class(std::size_t i) {
  PicClass c{};
  c.at(i) = 1;
  return c;
}

inline const PicClass kCanonical{-3, 1, 1, 1, 1, 1, 1};
inline const PicClass kGamma1{1, 0, 0, 0, 0, 0, 0};
inline const PicClass kGamma2{5, -2, -2, -2, -2, -2, -2};

inline bool is_line_class(const PicClass& c) { return pic_dot(c, c) == -1 && pic_dot(c, kCanonical) == -1; }

/// Exceptional classes with e0-coefficient in [a_lo, a_hi] and every other
/// coordinate in [-c_max, c_max].
inline std::vector<PicClass> enumerate_lines_in_box(int a_lo, int a_hi, int c_max) {
  std::vector<PicClass> out;
  PicClass c{};
  for (int a = a_lo; a <= a_hi; ++a) {
    c[0] = a;
    std::array<int, 6> odo;
    odo.fill(-c_max);
    for (;;) {
      std::copy(odo.begin(), odo.end(), c.begin() + 1);
      if (is_line_class(c)) out.push_back(c);
      std::size_t i = 0;
      while (i < 6 && odo[i] == c_max) odo[i++] = -c_max;
      if (i == 6) break;
      ++odo[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The 27 line classes. For c = a e0 + sum ci ei, c.K = -1 and c.c = -1 give
/// sum ci = 1 - 3a and sum ci^2 = a^2 + 1; Cauchy-Schwarz then forces
/// 3a^2 - 6a - 5 <= 0, so 0 <= a <= 2, and |ci| <= sqrt(5) < 3.
inline std::vector<PicClass> enumerate_lines() {
  auto lines = enumerate_lines_in_box(0, 2, 2);
  if (lines.size() != 27) throw std::logic_error("enumerate_lines: expected 27 classes");
  return lines;
}

/// The classes e_i, e0 - e_i - e_j and 2e0 - sum e + e_i written down directly.
inline std::vector<PicClass> closed_form_lines() {
  std::vector<PicClass> out;
  for (std::size_t i = 1; i <= 6; ++i) out.push_back(basis_class(i));
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = i + 1; j <= 6; ++j) out.push_back(basis_class(0) - basis_class(i) - basis_class(j));
  for (std::size_t i = 1; i <= 6; ++i) out.push_back(PicClass{2, -1, -1, -1, -1, -1, -1} + basis_class(i));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string class_label(const PicClass& c) {
  if (c[0] == 0) {
    for (std::size_t i = 1; i < 7; ++i)
      if (c[i] == 1) return "e" + std::to_string(i);
  }
  if (c[0] == 1) {
    std::string s = "e0";
    for (std::size_t i = 1; i < 7; ++i)
      if (c[i] == -1) s += "-e" + std::to_string(i);
    return s;
  }
  if (c[0] == 2) {
    for (std::size_t i = 1; i < 7; ++i)
      if (c[i] == 0) return "2e0-E+e" + std::to_string(i);
  }
  std::string s = "(";
  for (std::size_t i = 0; i < 7; ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

using LineType = std::pair<int, int>;

struct TypePartition {
  std::map<LineType, std::vector<PicClass>> classes;
  std::size_t count(LineType t) const {
    auto it = classes.find(t);
    return it == classes.end() ? 0 : it->second.size();
  }
};

inline LineType line_type(const PicClass& c, const PicClass& g1 = kGamma1, const PicClass& g2 = kGamma2) {
  return {pic_dot(c, g1), pic_dot(c, g2)};
}

/// Splits the lines by their intersections with g1 and g2, where g1 + g2 = -2K.
inline TypePartition classify_types(const PicClass& g1 = kGamma1, const PicClass& g2 = kGamma2) {
  if (g1 + g2 != -2 * kCanonical) throw std::invalid_argument("classify_types: g1 + g2 must equal -2K");
  TypePartition p;
  for (const auto& c : enumerate_lines()) {
    const LineType t = line_type(c, g1, g2);
    if (t != LineType{0, 2} && t != LineType{2, 0} && t != LineType{1, 1})
      throw std::logic_error("classify_types: line outside the three types");
    p.classes[t].push_back(c);
  }
  return p;
}

inline bool pairwise_disjoint(const std::vector<PicClass>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (pic_dot(cs[i], cs[j]) != 0) return false;
  return true;
}

/// The 10 lines meeting l, paired so that l, c, c' lie in a plane
/// (c + c' = -K - l).
inline std::vector<std::pair<PicClass, PicClass>> coplanar_pairs(const PicClass& l) {
  if (!is_line_class(l)) throw std::invalid_argument("coplanar_pairs: not a line class");
  std::set<PicClass> meets;
  for (const auto& c : enumerate_lines())
    if (pic_dot(c, l) == 1) meets.insert(c);
  std::vector<std::pair<PicClass, PicClass>> pairs;
  const PicClass rest = (-1 * kCanonical) - l;
  while (!meets.empty()) {
    const PicClass c = *meets.begin();
    meets.erase(meets.begin());
    auto it = meets.find(rest - c);
    if (it == meets.end()) throw std::logic_error("coplanar_pairs: unpaired line");
    pairs.emplace_back(c, *it);
    meets.erase(it);
  }
  return pairs;
}

/// Lines of the given type, other than the pins, meeting every pin once.
inline std::size_t meet_profile(const std::vector<PicClass>& pins, LineType type) {
  std::size_t n = 0;
  for (const auto& c : enumerate_lines()) {
    if (line_type(c) != type || std::find(pins.begin(), pins.end(), c) != pins.end()) continue;
    bool all = true;
    for (const auto& p : pins) all = all && pic_dot(c, p) == 1;
    n += all;
  }
  return n;
}

struct DoubleSix {
  std::array<PicClass, 6> first;   // e_i
  std::array<PicClass, 6> second;  // 2e0 - sum e + e_i
};

inline DoubleSix double_six() {
  DoubleSix d;
  for (std::size_t i = 0; i < 6; ++i) {
    d.first[i] = basis_class(i + 1);
    d.second[i] = PicClass{2, -1, -1, -1, -1, -1, -1} + basis_class(i + 1);
  }
  return d;
}

inline bool is_double_six(const DoubleSix& d) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (!is_line_class(d.first[i]) || !is_line_class(d.second[i])) return false;
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j && (pic_dot(d.first[i], d.first[j]) != 0 || pic_dot(d.second[i], d.second[j]) != 0)) return false;
      if (pic_dot(d.first[i], d.second[j]) != (i == j ? 0 : 1)) return false;
    }
  }
  return true;
}

/// Two disjoint lines of the given type, for the meet profiles.
inline std::pair<PicClass, PicClass> disjoint_pair_of_type(LineType t) {
  const auto part = classify_types();
  const auto& cs = part.classes.at(t);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (pic_dot(cs[i], cs[j]) == 0) return {cs[i], cs[j]};
  throw std::logic_error("disjoint_pair_of_type: none found");
}

struct Identity {
  std::string name;
  long lhs = 0;
  long rhs = 0;
  bool holds() const { return lhs == rhs; }
};

struct FanoBookkeeping {
  std::vector<Identity> identities;
  // Intersection matrices of the components of the curve of lines meeting a
  // general line: diagonals from meet profiles, off-diagonals as printed.
  std::vector<std::vector<long>> matrix20, matrix11;
  std::vector<long> diag20_computed, diag11_computed;
  bool ok() const {
    for (const auto& i : identities)
      if (!i.holds()) return false;
    return true;
  }
};

inline FanoBookkeeping fano_bookkeeping() {
  FanoBookkeeping f;
  const auto part = classify_types();
  f.identities.push_back({"bidegree first entry 3+3+12", 3 + 3 + 12, 18});
  f.identities.push_back({"bidegree second entry 6+6+15", 6 + 6 + 15, 27});
  f.identities.push_back({"type counts (0,2)+(2,0)+(1,1)",
                          long(part.count({0, 2}) + part.count({2, 0}) + part.count({1, 1})), 27});
  f.identities.push_back({"degree 6*5+15*1", 6 * 5 + 15 * 1, 45});

  const auto [a, b] = disjoint_pair_of_type({2, 0});
  f.diag20_computed = {long(meet_profile({a, b}, {0, 2})), long(meet_profile({a, b}, {1, 1}))};
  f.matrix20 = {{4, 2}, {2, 1}};
  const auto [c, d] = disjoint_pair_of_type({1, 1});
  f.diag11_computed = {long(meet_profile({c, d}, {0, 2})), long(meet_profile({c, d}, {2, 0})),
                       long(meet_profile({c, d}, {1, 1}))};
  f.matrix11 = {{1, 5, 3}, {5, 1, 3}, {3, 3, 3}};
  for (std::size_t i = 0; i < 2; ++i)
    f.identities.push_back({"(2,0) matrix diagonal " + std::to_string(i), f.diag20_computed[i], f.matrix20[i][i]});
  for (std::size_t i = 0; i < 3; ++i)
    f.identities.push_back({"(1,1) matrix diagonal " + std::to_string(i), f.diag11_computed[i], f.matrix11[i][i]});
  return f;
}

/// Lines on the blown-up quadric: 5 exceptional curves, 10 ruling lines
/// through a base point, 10 conics through 3 base points, the curves C1, C2.
inline std::vector<Identity> line_tally() {
  const long exceptional = 5, rulings = 2 * 5, conics = 5 * 4 * 3 / 6, curves = 2;
  return {{"5+10+10+2", exceptional + rulings + conics + curves, long(enumerate_lines().size())}};
}

struct MeetTable {
  std::vector<PicClass> classes;
  std::vector<std::string> labels;
  std::vector<std::string> types;
  std::vector<std::vector<int>> matrix;
};

inline MeetTable meet_table() {
  MeetTable t;
  t.classes = enumerate_lines();
  for (const auto& c : t.classes) {
    t.labels.push_back(class_label(c));
    const auto ty = line_type(c);
    t.types.push_back("(" + std::to_string(ty.first) + "," + std::to_string(ty.second) + ")");
    std::vector<int> row;
    for (const auto& d : t.classes) row.push_back(pic_dot(c, d));
    t.matrix.push_back(std::move(row));
  }
  return t;
}

}  // namespace nodal
