#pragma once

// JSON serialization of results and the on-disk family cache.  Counts that
// may exceed 64 bits always serialize as decimal strings.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "schurlab/atom_search.hpp"
#include "schurlab/coloring.hpp"
#include "schurlab/sumfree.hpp"
#include "schurlab/verify.hpp"
#include "schurlab/version.hpp"

namespace schurlab {

using json = nlohmann::json;

inline json subset_json(const GroupSubset& s) {
  return json{{"group", s.group().str()}, {"hex", s.hex()}, {"size", s.size()}};
}

inline json family_json(const std::vector<GroupSubset>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(subset_json(s));
  return arr;
}

inline json classification_json(const GroupSpec& g, const GroupClassification& c) {
  json j{{"group", g.str()},      {"order", g.order()},
         {"type", c.kind_str()},  {"mu_formula", c.mu_formula.str()},
         {"mu_printed_variant", c.mu_printed.str()}};
  if (c.kind == GroupType::I) j["q"] = c.q;
  if (c.kind == GroupType::III) {
    j["exponent"] = c.exponent_m;
    j["printed_formula_differs"] = c.printed_formula_differs;
  }
  return j;
}

inline json search_report_json(const SearchReport& r) {
  json maxers = json::array();
  for (const auto& m : r.maximizers) {
    json e = subset_json(m.rep);
    e["orbit_size"] = m.orbit_size;
    maxers.push_back(e);
  }
  return json{{"group", r.group.str()}, {"r", r.r},          {"max", r.max_kappa.str()},
              {"maximizers", maxers},   {"exhaustive", r.exhaustive}, {"nodes", r.nodes},
              {"seconds", r.seconds}};
}

inline json config_record_json(const ConfigRecord& rec) {
  json vecs = json::array();
  for (auto v : rec.config.vectors) vecs.push_back(ParityConfig::vector_str(v, rec.config.t));
  json profile = json::array();
  for (auto a : rec.profile.histogram) profile.push_back(a);
  json bases = json::array();
  for (auto b : rec.weight.bases) bases.push_back(b);
  return json{{"t", rec.config.t},
              {"profile", profile},
              {"vectors", vecs},
              {"weight", json{{"bases", bases}, {"atom_exponent", "n/2^" + std::to_string(rec.config.t)}}}};
}

inline json substantial_json(const SubstantialReport& rep) {
  const char* kind = rep.kind == SubstantialCase::R4Pair ? "r4-pair"
                     : rep.kind == SubstantialCase::R5Dependent ? "r5-dependent"
                                                                : "r5-independent";
  json by_mult = json::array();
  for (const auto& [mult, cnt] : rep.by_multiplicity) {
    json m = json::array();
    for (auto x : mult) m.push_back(x);
    by_mult.push_back(json{{"multiplicities", m}, {"tuples", cnt}});
  }
  json j{{"case", kind},
         {"r", rep.r},
         {"family_size", rep.family.size()},
         {"count", rep.headline()},
         {"tuple_count", rep.tuple_count},
         {"by_multiplicity", by_mult}};
  if (rep.kind == SubstantialCase::R5Independent) {
    j["anchored_count"] = rep.anchored_count;
    j["anchored_distinct_part"] = rep.anchored_distinct_part;
    j["anchored_repeat_part"] = rep.anchored_repeat_part;
    j["repeat_profile_matches"] = rep.repeat_profile_matches;
  }
  return j;
}

inline json suites_json(const std::vector<verify::SuiteResult>& suites) {
  json arr = json::array();
  for (const auto& s : suites) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    arr.push_back(json{{"suite", s.suite}, {"pass", s.all_pass()}, {"checks", checks}});
  }
  return arr;
}

/// Envelope for every CLI result.  The anchor names the mathematical claim
/// the command exercises, or "plumbing" for pure infrastructure.
inline json result_record(const std::string& command, json inputs, json result, const std::string& anchor,
                          double seconds) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"provenance", json{{"version", kVersion}, {"deterministic", true}, {"seconds", seconds}}},
              {"anchor", anchor}};
}

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[v & 15];
    v >>= 4;
  }
  return out;
}

}  // namespace detail

/// Content-addressed cache of largest sum-free families, keyed by
/// (normalized group spec, method, artifact version).  A version mismatch
/// recomputes rather than migrating.
class FamilyCache {
 public:
  FamilyCache() = default;
  explicit FamilyCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }

  std::optional<LsfFamily> load(const GroupSpec& g, const std::string& method) const {
    if (!enabled()) return std::nullopt;
    auto p = path_for(g, method);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    json j;
    try {
      in >> j;
    } catch (...) {
      return std::nullopt;
    }
    if (j.value("version", "") != kVersion || j.value("group", "") != g.str() || j.value("method", "") != method)
      return std::nullopt;
    LsfFamily fam;
    fam.mu = j.at("mu").get<std::uint64_t>();
    for (const auto& hex : j.at("sets")) fam.sets.push_back(GroupSubset::from_hex(g, hex.get<std::string>()));
    return fam;
  }

  void store(const GroupSpec& g, const std::string& method, const LsfFamily& fam) const {
    if (!enabled()) return;
    json sets = json::array();
    for (const auto& s : fam.sets) sets.push_back(s.hex());
    json j{{"version", kVersion}, {"group", g.str()}, {"method", method}, {"mu", fam.mu}, {"sets", sets}};
    std::ofstream out(path_for(g, method));
    out << j.dump(2) << "\n";
  }

  std::filesystem::path path_for(const GroupSpec& g, const std::string& method) const {
    std::string key = g.str() + "|" + method + "|" + kVersion;
    std::string safe;
    for (char c : g.str()) safe += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return dir_ / ("lsf_" + safe + "_" + method + "_" + detail::hex64(detail::fnv1a64(key)) + ".json");
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace schurlab
