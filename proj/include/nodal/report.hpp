#pragma once

// Claim-by-claim verification reports, serialized as JSON or text.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "nodal/poly.hpp"
#include "nodal/projspace.hpp"
#include "nodal/scalar.hpp"

namespace nodal {

using Json = nlohmann::json;

enum class Status { pass, fail, report_only };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report-only";
  }
  return "fail";
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "report-only") return Status::report_only;
  if (s == "fail") return Status::fail;
  throw std::invalid_argument("unknown status: " + s);
}

struct Outcome {
  Status status = Status::fail;
  Json witness = Json::object();
};

inline Outcome verdict(bool ok, Json witness) { return {ok ? Status::pass : Status::fail, std::move(witness)}; }

struct ClaimEntry {
  std::string claim_id;
  Status status = Status::fail;
  Json witness = Json::object();
  std::uint64_t seed = 0;
  std::optional<double> ms;  // only filled when timing is requested
};

struct Claim {
  std::string id;
  std::function<Outcome(std::uint64_t seed)> check;
};

struct RunOptions {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ClaimEntry> entries;

  bool any_fail() const {
    return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == Status::fail; });
  }
};

inline ClaimEntry run_claim(const Claim& c, std::uint64_t seed, bool timing) {
  ClaimEntry e{c.id, Status::fail, Json::object(), seed, std::nullopt};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = c.check(seed);
    e.status = o.status;
    e.witness = std::move(o.witness);
  } catch (const std::exception& ex) {
    e.status = Status::fail;
    e.witness = Json{{"error", ex.what()}};
  }
  if (timing)
    e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

/// Runs the claims, on `jobs` worker threads when jobs > 1; entries come back
/// sorted by claim id whatever the scheduling.
inline Report run_suite(const std::string& name, const std::vector<Claim>& claims, const RunOptions& opt) {
  Report r{name, opt.seed, std::vector<ClaimEntry>(claims.size())};
  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < claims.size(); ++i) r.entries[i] = run_claim(claims[i], opt.seed, opt.timing);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < opt.jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < claims.size();)
          r.entries[i] = run_claim(claims[i], opt.seed, opt.timing);
      });
    for (auto& t : workers) t.join();
  }
  std::sort(r.entries.begin(), r.entries.end(),
            [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; });
  return r;
}

inline Json to_json(const ClaimEntry& e) {
  return Json{{"claim_id", e.claim_id},
              {"status", to_string(e.status)},
              {"witness", e.witness},
              {"seed", e.seed},
              {"ms", e.ms ? Json(*e.ms) : Json(nullptr)}};
}

inline Json to_json(const Report& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return Json{{"suite", r.suite}, {"seed", r.seed}, {"entries", entries}};
}

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " seed " << r.seed << "\n";
  for (const auto& e : r.entries) {
    out << to_string(e.status) << "  " << e.claim_id;
    if (e.ms) out << "  " << *e.ms << "ms";
    out << "  " << e.witness.dump() << "\n";
  }
  return out.str();
}

inline Report report_from_json(const Json& j) {
  Report r{j.at("suite").get<std::string>(), j.at("seed").get<std::uint64_t>(), {}};
  for (const auto& e : j.at("entries")) {
    ClaimEntry c{e.at("claim_id").get<std::string>(), status_from_string(e.at("status").get<std::string>()),
                 e.at("witness"), e.at("seed").get<std::uint64_t>(), std::nullopt};
    if (!e.at("ms").is_null()) c.ms = e.at("ms").get<double>();
    r.entries.push_back(std::move(c));
  }
  return r;
}

// Exact values travel as strings so nothing is rounded.
inline Json json_of(const Scalar& s) { return to_string(s); }
inline Json json_of(const Integer& s) { return s.get_str(); }
inline Json json_of(const Poly& p) { return to_string(p); }
inline Json json_of(const ProjPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(to_string(c));
  return a;
}
inline Json json_of(std::span<const Scalar> v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}
template <class T>
Json json_list(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(json_of(x));
  return a;
}

inline Scalar scalar_of(const Json& j) {
  const std::string s = j.get<std::string>();
  Scalar q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline Vector vector_of(const Json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(scalar_of(x));
  return v;
}

}  // namespace nodal
