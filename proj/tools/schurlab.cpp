// schurlab: exact enumeration of sum-free structure and sum-free coloring
// counts in finite abelian groups.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
//             2 usage error, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schurlab/reportio.hpp"

namespace {

using namespace schurlab;

struct CommonOpts {
  std::uint64_t max_n = 0;  // 0 = command default
  std::uint64_t budget = 0;
  unsigned workers = 0;
  std::string cache_dir;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--max-n", c.max_n, "brute-force order bound (command-specific default)");
  cmd->add_option("--budget", c.budget, "search budget (nodes or work units)");
  cmd->add_option("--workers", c.workers, "worker threads for the extremal search");
  cmd->add_option("--cache", c.cache_dir, "family cache directory");
  cmd->add_option("--out", c.out_path, "write the JSON result to this file");
}

void emit(const json& record, const CommonOpts& c) {
  if (c.out_path.empty()) {
    std::cout << record.dump(2) << "\n";
  } else {
    std::ofstream f(c.out_path);
    if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
    f << record.dump(2) << "\n";
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LsfFamily cached_family(const GroupSpec& g, LsfMethod method, const CommonOpts& c, std::uint64_t brute_max) {
  std::string mname = method == LsfMethod::Brute ? "brute" : method == LsfMethod::Structured ? "structured" : "auto";
  FamilyCache cache(c.cache_dir.empty() ? std::filesystem::path{} : std::filesystem::path(c.cache_dir));
  if (auto hit = cache.load(g, mname)) return *hit;
  auto fam = lsf_family(g, method, brute_max);
  cache.store(g, mname, fam);
  return fam;
}

GroupSubset resolve_subset(const GroupSpec& g, const std::string& text, const CommonOpts& c) {
  auto colon = text.find(':');
  std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto parse_indices = [&](const std::string& s) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(std::stoull(s.substr(pos, next - pos)));
      pos = next + 1;
    }
    return out;
  };
  if (kind == "lsf" || kind == "union") {
    auto fam = cached_family(g, LsfMethod::Auto, c, c.max_n ? c.max_n : 20);
    auto idx = parse_indices(arg);
    if (idx.empty()) throw CLI::ValidationError("subset", "no family indices given");
    GroupSubset a(g);
    for (auto i : idx) {
      if (i >= fam.sets.size()) throw CLI::ValidationError("subset", "family index out of range");
      a = a | fam.sets[i];
    }
    if (kind == "lsf" && idx.size() != 1) throw CLI::ValidationError("subset", "lsf: takes one index");
    return a;
  }
  if (kind == "hex") return GroupSubset::from_hex(g, arg);
  if (kind == "elems") {
    GroupSubset a(g);
    for (auto e : parse_indices(arg)) a.insert(e);
    return a;
  }
  throw CLI::ValidationError("subset", "expected lsf:i, union:i,j[,k], hex:<digits> or elems:a,b,c");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sum-free structure and coloring counts in finite abelian groups"};
  app.require_subcommand(1);

  std::string spec_text, subset_text, suite_name = "all", method_name = "auto";
  unsigned r = 2;

  CommonOpts c_classify, c_lsf, c_kappa, c_argmax, c_opt, c_verify;

  auto* cmd_classify = app.add_subcommand("classify", "group type and mu");
  cmd_classify->add_option("spec", spec_text, "group spec, e.g. Z2xZ4")->required();
  add_common(cmd_classify, c_classify);

  auto* cmd_lsf = app.add_subcommand("lsf", "largest sum-free family");
  cmd_lsf->add_option("spec", spec_text)->required();
  cmd_lsf->add_option("--method", method_name, "auto|brute|structured")
      ->check(CLI::IsMember({"auto", "brute", "structured"}));
  add_common(cmd_lsf, c_lsf);

  auto* cmd_kappa = app.add_subcommand("kappa", "exact number of sum-free r-colorings");
  cmd_kappa->add_option("spec", spec_text)->required();
  cmd_kappa->add_option("subset", subset_text, "lsf:i | union:i,j[,k] | hex:<digits> | elems:a,b,c")->required();
  cmd_kappa->add_option("r", r)->required();
  add_common(cmd_kappa, c_kappa);

  auto* cmd_argmax = app.add_subcommand("argmax", "subsets maximizing kappa_r");
  cmd_argmax->add_option("spec", spec_text)->required();
  cmd_argmax->add_option("r", r)->required();
  add_common(cmd_argmax, c_argmax);

  auto* cmd_opt = app.add_subcommand("optimal-structure", "Phi-optimal atom structure per r");
  cmd_opt->add_option("r", r)->required();
  add_common(cmd_opt, c_opt);

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("suite", suite_name,
                   "mu|lsf-oracle|atoms|matching|two-fifths|pairs|constants|lowerbounds|all")
      ->required();
  add_common(cmd_verify, c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    if (cmd_classify->parsed()) {
      auto g = GroupSpec::parse(spec_text);
      auto cls = classify_group(g);
      json result = classification_json(g, cls);
      std::uint64_t brute_bound = c_classify.max_n ? c_classify.max_n : 20;
      if (g.order() <= brute_bound) {
        auto fam = largest_sum_free_bruteforce(g, brute_bound);
        result["mu_bruteforce"] = fam.mu;
        result["mu_matches_formula"] = (Rational(fam.mu) == cls.mu_formula);
        result["maximizer_count"] = fam.sets.size();
      }
      emit(result_record("classify", json{{"spec", spec_text}}, result, "mu-table", seconds_since(t0)), c_classify);
      return 0;
    }
    if (cmd_lsf->parsed()) {
      auto g = GroupSpec::parse(spec_text);
      LsfMethod method = method_name == "brute" ? LsfMethod::Brute
                         : method_name == "structured" ? LsfMethod::Structured
                                                       : LsfMethod::Auto;
      std::uint64_t brute_bound = c_lsf.max_n ? c_lsf.max_n : 20;
      auto fam = cached_family(g, method, c_lsf, brute_bound);
      json result{{"group", g.str()}, {"mu", fam.mu}, {"count", fam.sets.size()}, {"sets", family_json(fam.sets)}};
      if (method == LsfMethod::Auto && g.even_order() && g.order() <= brute_bound) {
        auto brute = largest_sum_free_bruteforce(g, brute_bound);
        bool agree = brute.sets.size() == fam.sets.size();
        for (std::size_t i = 0; agree && i < brute.sets.size(); ++i) agree = brute.sets[i] == fam.sets[i];
        result["methods_agree"] = agree;
      }
      emit(result_record("lsf", json{{"spec", spec_text}, {"method", method_name}}, result, "lsf-structure",
                         seconds_since(t0)),
           c_lsf);
      return 0;
    }
    if (cmd_kappa->parsed()) {
      auto g = GroupSpec::parse(spec_text);
      auto a = resolve_subset(g, subset_text, c_kappa);
      KappaBudget budget;
      if (c_kappa.budget) budget.max_nodes = c_kappa.budget;
      auto res = kappa_exact_traced(a, r, budget);
      json result{{"group", g.str()},       {"subset", subset_json(a)}, {"r", r},
                  {"kappa", res.value.str()}, {"nodes", res.nodes}};
      emit(result_record("kappa", json{{"spec", spec_text}, {"subset", subset_text}, {"r", r}}, result,
                         "coloring-count", seconds_since(t0)),
           c_kappa);
      return 0;
    }
    if (cmd_argmax->parsed()) {
      auto g = GroupSpec::parse(spec_text);
      ArgmaxOptions opts;
      if (c_argmax.max_n) opts.max_n = c_argmax.max_n;
      if (c_argmax.workers) opts.workers = c_argmax.workers;
      if (c_argmax.budget) opts.kappa.max_nodes = c_argmax.budget;
      auto rep = argmax_kappa(g, r, opts);
      json result = search_report_json(rep);
      // theorem-shape comparison at desk scale: is every maximizer a union
      // of at most three largest sum-free sets (one for r <= 3)?
      if (g.order() <= 20) {
        auto fam = lsf_family(g, LsfMethod::Auto, 20);
        std::size_t m = fam.sets.size();
        auto is_union = [&](const GroupSubset& a, unsigned parts) {
          if (parts >= 1)
            for (std::size_t i = 0; i < m; ++i)
              if (fam.sets[i] == a) return true;
          if (parts >= 2)
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t j = i + 1; j < m; ++j)
                if ((fam.sets[i] | fam.sets[j]) == a) return true;
          if (parts >= 3)
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k)
                  if ((fam.sets[i] | fam.sets[j] | fam.sets[k]) == a) return true;
          return false;
        };
        unsigned parts = r <= 3 ? 1 : (r == 4 ? 2 : 3);
        bool agree = !rep.maximizers.empty();
        for (const auto& mx : rep.maximizers) agree = agree && is_union(mx.rep, parts);
        result["shape_agreement"] = agree ? "AGREE" : "DISAGREE";
        result["shape"] = r <= 3 ? "largest sum-free set" : "union of largest sum-free sets";
      }
      emit(result_record("argmax", json{{"spec", spec_text}, {"r", r}}, result, "extremal-colorings",
                         seconds_since(t0)),
           c_argmax);
      return 0;
    }
    if (cmd_opt->parsed()) {
      EnumBudget budget;
      if (c_opt.budget) budget.max_work = c_opt.budget;
      auto opt = optimal_structure(r, budget);
      json optima = json::array();
      for (const auto& rec : opt.optimal) optima.push_back(config_record_json(rec));
      json result{{"r", r}, {"optima", optima}};
      emit(result_record("optimal-structure", json{{"r", r}}, result, "optimal-atom-structure", seconds_since(t0)),
           c_opt);
      return 0;
    }
    if (cmd_verify->parsed()) {
      std::uint64_t mu_n = 30, small_n = 16, lb_n = 12;
      if (c_verify.max_n) {
        mu_n = std::min<std::uint64_t>(c_verify.max_n, 30);
        small_n = std::min<std::uint64_t>(c_verify.max_n, 16);
        lb_n = std::min<std::uint64_t>(c_verify.max_n, 12);
      }
      auto suites = verify::run_suites(suite_name, mu_n, small_n, lb_n);
      bool all = true;
      for (const auto& s : suites) all = all && s.all_pass();
      json result{{"pass", all}, {"suites", suites_json(suites)}};
      emit(result_record("verify", json{{"suite", suite_name}}, result,
                         suite_name == "constants" ? "substantial-tuple-constants" : "lemma-consequences",
                         seconds_since(t0)),
           c_verify);
      return all ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
