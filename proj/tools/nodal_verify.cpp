// Command-line driver for the verification suites.
//
//   nodal_verify verify-segre [--seed N] [--format json|text] [--out PATH]
//   nodal_verify synth-sixnodal --seed 42 --out fixture.json
//   nodal_verify report --in fixture.json
//
// Exit status: 0 when no claim fails, 1 when some claim fails, 2 for usage
// errors (including an unknown subcommand), 3 when a fixture cannot be read
// or written.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nodal/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const nodal::Report& r, const std::string& format) {
  return format == "text" ? nodal::to_text(r) : nodal::to_json(r).dump(2) + "\n";
}

nodal::Json detrep_fixture(std::uint64_t seed) {
  nodal::Rng rng(seed);
  const auto lift = nodal::random_rank1_lift(rng);
  const auto rep = nodal::verify_detrep(lift.matrix, nodal::CubicThreefold(lift.cubic));
  nodal::Json forms = nodal::Json::array();
  for (const auto& e : rep.matrix.entries()) forms.push_back(nodal::serialize(e));
  return {{"seed", seed},
          {"matrix", forms},
          {"scale", nodal::to_string(rep.scale)},
          {"target", nodal::serialize(rep.target.equation)}};
}

}  // namespace

int main(int argc, char** argv) {
  static const std::set<std::string> kCommands{"verify-segre",   "verify-sixnodal", "verify-detrep", "verify-lattice",
                                               "verify-hk",      "synth-sixnodal",  "report"};
  if (argc > 1 && argv[1][0] != '-' && !kCommands.count(argv[1])) {
    std::cerr << "unknown subcommand: " << argv[1] << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact verification of nodal cubic threefold constructions"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  std::string in_path;
  std::string family = "quadric";
  unsigned jobs = 1;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for all randomness");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "write a fixture to PATH");
    sub->add_option("--jobs", jobs, "worker threads for independent claims")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", timing, "record wall time per claim (reports are then not reproducible)");
  };
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    if (name == "report") sub->add_option("--in", in_path, "fixture to replay")->required();
    if (name == "synth-sixnodal")
      sub->add_option("--family", family, "construction")->check(CLI::IsMember({"quadric", "reference"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const nodal::RunOptions opt{seed, jobs, timing};
  nodal::Report report;
  try {
    if (cmd == "verify-segre") {
      report = nodal::verify_segre(opt);
      if (!out_path.empty()) write_file(out_path, nodal::segre_fixture().dump(2) + "\n");
    } else if (cmd == "verify-sixnodal") {
      report = nodal::verify_sixnodal(opt);
      if (!out_path.empty()) {
        const auto syn = nodal::quadric_synthesis(nodal::derived_seeds(seed, 1).front());
        write_file(out_path, nodal::sixnodal_fixture(syn.instance, &syn.chart).dump(2) + "\n");
      }
    } else if (cmd == "verify-detrep") {
      report = nodal::verify_detrep(opt);
      if (!out_path.empty()) write_file(out_path, detrep_fixture(seed).dump(2) + "\n");
    } else if (cmd == "verify-lattice") {
      report = nodal::verify_lattice(opt);
      if (!out_path.empty())
        write_file(out_path, format == "text" ? nodal::meet_table_text() : nodal::meet_table_json().dump(2) + "\n");
    } else if (cmd == "verify-hk") {
      report = nodal::verify_hk(opt);
      if (!out_path.empty()) write_file(out_path, nodal::to_json(report).dump(2) + "\n");
    } else if (cmd == "synth-sixnodal") {
      nodal::Json fixture;
      if (family == "reference") {
        fixture = nodal::sixnodal_fixture(nodal::sample_reference_member(seed), nullptr);
      } else {
        const auto syn = nodal::quadric_synthesis(seed);
        fixture = nodal::sixnodal_fixture(syn.instance, &syn.chart);
      }
      if (!out_path.empty()) write_file(out_path, fixture.dump(2) + "\n");
      report = nodal::run_suite("synth-sixnodal", nodal::fixture_claims(fixture), opt);
    } else if (cmd == "report") {
      nodal::Json fixture;
      try {
        fixture = nodal::Json::parse(read_file(in_path));
        nodal::RunOptions replay = opt;
        replay.seed = fixture.at("seed").get<std::uint64_t>();
        report = nodal::run_suite("report", nodal::fixture_claims(fixture), replay);
      } catch (const IoError&) {
        throw;
      } catch (const std::exception& e) {
        throw IoError("malformed fixture " + in_path + ": " + e.what());
      }
    }
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << cmd << ": " << e.what() << "\n";
    return kExitFail;
  }

  std::cout << render(report, format);
  return report.any_fail() ? kExitFail : 0;
}
