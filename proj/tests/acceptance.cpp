// Runs the acceptance criteria with exact arithmetic and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nodal/suites.hpp"

using namespace nodal;

namespace {

constexpr std::uint64_t kSeed = 1;

bool segre_configuration() {
  const auto x = build_segre();
  const auto nodes = segre_nodes();
  const auto planes = segre_planes();
  if (nodes.size() != 10 || planes.size() != 15) return false;
  for (const auto& r : singular_points_check(x, nodes))
    if (!r.ordinary_double_point || r.quadratic_rank != 4) return false;
  for (const auto& p : planes)
    if (!lies_on(x, p)) return false;
  // incidence counted directly: a node lies on a plane iff it is in its span
  std::size_t total = 0;
  std::vector<std::size_t> per_node(nodes.size(), 0);
  for (const auto& p : planes) {
    std::size_t on = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (p.contains(nodes[i])) {
        ++on;
        ++per_node[i];
      }
    if (on != 4) return false;
    total += on;
  }
  for (auto k : per_node)
    if (k != 6) return false;
  const auto r = planes_check(x);
  return total == 60 && r.incidences == 60 && r.is_configuration(4, 6);
}

bool segre_node_chart() {
  const auto x = build_segre();
  const auto nodes = segre_nodes();
  const auto chart = node_chart(x, nodes.front());
  std::vector<ProjPoint> projected;
  for (std::size_t i = 1; i < nodes.size(); ++i) projected.push_back(chart.project(nodes[i]));
  if (std::set<ProjPoint>(projected.begin(), projected.end()).size() != 9) return false;
  std::size_t singular = 0;
  for (const auto& r : associated_curve_singularities(chart, projected)) singular += r.on_curve && r.curve_singular;
  const auto triples = collinear_triples(projected);
  std::size_t lines = 0;
  for (const auto& t : triples) lines += lies_on(chart.a2, t.line) && lies_on(chart.a3, t.line);
  return singular == 9 && triples.size() == 6 && lines == 6;
}

bool castelnuovo() {
  const auto img = castelnuovo_image(castelnuovo_map(), kSeed, 40);
  const std::set<ProjPoint> distinct(img.line_images.begin(), img.line_images.end());
  return img.samples.size() >= 40 && img.nullity3 == 1 && img.line_images.size() == 10 && distinct.size() == 10 &&
         img.images_well_defined && img.images_singular;
}

bool kummer() {
  const auto k = kummer_projection(build_segre(), ProjPoint{1, -1, 2, -2, 3, -3}, kSeed);
  return k.samples.size() >= 50 && k.nullity4 == 1 && k.nullity3 == 0;
}

bool weddle() {
  Rng rng(kSeed);
  int sets = 0;
  while (sets < 5) {
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(random_point(3, rng));
    if (!every_subset_independent(pts, 4)) continue;
    ++sets;
    const Poly w = weddle_surface(pts);
    if (w.is_zero() || w.degree() != 4 || !w.is_homogeneous(4)) return false;
    for (const auto& p : pts)
      if (w(p.coords()) != 0) return false;
  }
  return true;
}

bool reference_family_ok() {
  if (reference_family().projective_dim() != 4) return false;
  for (auto s : derived_seeds(kSeed, 10)) {
    const auto m = sample_reference_member(s);
    if (m.nodes != reference_nodes()) return false;
    Rng rng(s);
    const auto c = certify(m.cubic, m.nodes, rng);
    if (!c.ok() || c.node_reports.size() != 6) return false;
  }
  return true;
}

bool synthesis() {
  for (auto s : derived_seeds(kSeed, 10)) {
    const auto syn = quadric_synthesis(s);
    if (compose(syn.a3, quadric_param_forms()) != syn.chart.g1 * syn.chart.g2) return false;
    if (syn.instance.nodes.size() != 6) return false;
    for (const auto& r : singular_points_check(syn.instance.cubic, syn.instance.nodes))
      if (!r.ordinary_double_point) return false;
    if (!every_subset_independent(syn.instance.nodes, 5)) return false;
    const auto p = prop31_checks(syn.instance, syn.chart);
    if (p.nullity21 != 1 || p.nullity12 != 1 || !p.ok()) return false;
  }
  return true;
}

bool blowup() {
  for (auto s : derived_seeds(kSeed, 3)) {
    const auto b = blowup_cubic_surface(quadric_synthesis(s).chart, s);
    if (b.system.size() != 4 || b.image_nullity != 1 || b.collinear_rulings != 10 || !b.curve_images_are_lines ||
        !b.curve_lines_disjoint || !b.lines_on_surface)
      return false;
  }
  return true;
}

bool detrep() {
  Rng rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    const auto e = det_sum_expansion(random_scalar_matrix(rng), random_linear_matrix(5, 1, rng));
    if (e.pieces[0] + e.pieces[1] + e.pieces[2] + e.pieces[3] != e.direct) return false;
  }
  const ProjPoint apex{1, 0, 0, 0, 0};
  for (int i = 0; i < 5; ++i) {
    const auto lift = random_rank1_lift(rng);
    const CubicThreefold x(lift.cubic);
    if (rank_at(lift.matrix, apex) != 1 || !check_point(x, apex).ordinary_double_point) return false;
    const auto rep = verify_detrep(lift.matrix, x);
    if (!restriction_check(rep).holds) return false;
  }
  return true;
}

bool lattice() {
  const auto lines = enumerate_lines();
  if (lines.size() != 27) return false;
  const auto p = classify_types();
  if (p.count({0, 2}) != 6 || p.count({2, 0}) != 6 || p.count({1, 1}) != 15) return false;
  for (const auto& l : lines) {
    std::size_t meets = 0;
    for (const auto& c : lines) meets += pic_dot(c, l) == 1;
    if (meets != 10 || coplanar_pairs(l).size() != 5) return false;
  }
  const auto [a, b] = disjoint_pair_of_type({2, 0});
  const auto [c, d] = disjoint_pair_of_type({1, 1});
  if (meet_profile({a, b}, {0, 2}) != 4 || meet_profile({a, b}, {1, 1}) != 1) return false;
  if (meet_profile({c, d}, {0, 2}) != 1 || meet_profile({c, d}, {2, 0}) != 1 || meet_profile({c, d}, {1, 1}) != 3)
    return false;
  const std::size_t pairs = coplanar_pairs(lines.front()).size();
  return p.count({0, 2}) + p.count({2, 0}) + p.count({1, 1}) == 27 &&
         p.count({0, 2}) * pairs + p.count({1, 1}) * 1 == 45 && fano_bookkeeping().ok();
}

bool hk() {
  const Mat2 m{-1, -2, 6, 11}, g{6, 6, 6, 2};
  if (m.transpose() * g * m != g || m.det() != 1 || m.trace() != 10 || !infinite_order_check(m).infinite) return false;
  if (bb_value(g, {7, -3}, {7, -3}) != 60 || bb_value(g, {1, 3}, {1, 3}) != 60) return false;
  for (const auto& r : dual_cone(g, {7, -3}, {1, 3}))
    if (bb_value(g, r, {7, -3}) < 0 || bb_value(g, r, {1, 3}) < 0) return false;
  return pairwise_nonproportional(flop_orbit(m, {1, 0}, 20));
}

bool determinism() {
  const std::vector<std::function<Report(const RunOptions&)>> suites{
      [](const RunOptions& o) { return verify_segre(o); }, [](const RunOptions& o) { return verify_sixnodal(o); },
      [](const RunOptions& o) { return verify_detrep(o); }, [](const RunOptions& o) { return verify_lattice(o); },
      [](const RunOptions& o) { return verify_hk(o); }};
  for (const auto& run : suites) {
    const std::string first = to_json(run({kSeed, 1, false})).dump();
    const std::string second = to_json(run({kSeed, 4, false})).dump();
    if (first != second) return false;
    if (to_json(run({7, 1, false})).dump() != to_json(run({7, 1, false})).dump()) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"1 segre configuration", segre_configuration},
      {"2 segre node chart", segre_node_chart},
      {"3 castelnuovo image", castelnuovo},
      {"4 kummer projection", kummer},
      {"5 weddle surface", weddle},
      {"6 six-nodal reference family", reference_family_ok},
      {"7 quadric synthesis", synthesis},
      {"8 blow-up cubic surface", blowup},
      {"9 determinantal representations", detrep},
      {"10 lattice suite", lattice},
      {"11 hyperkahler suite", hk},
      {"12 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::printf("%s  %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), error.empty() ? "" : ("  (" + error + ")").c_str());
    failures += !ok;
  }
  return failures == 0 ? 0 : 1;
}
