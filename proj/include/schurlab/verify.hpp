#pragma once

// Named verification suites over desk-scale groups.  Each check is an exact
// identity or an oracle equivalence; suites report per-check pass/fail.

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schurlab/atom_search.hpp"
#include "schurlab/coloring.hpp"
#include "schurlab/sumfree.hpp"

namespace schurlab::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Formula mu versus brute force on every abelian group of order <= max_n.
/// Type III groups must match the corrected (1/3 - 1/(3m))n, and the
/// printed-variant discrepancy must be flagged on Z7.
inline SuiteResult mu_suite(std::uint64_t max_n = 30) {
  SuiteResult out{"mu", {}};
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    for (const auto& g : all_abelian_groups(n)) {
      auto cls = classify_group(g);
      auto fam = largest_sum_free_bruteforce(g, max_n);
      Check c;
      c.name = "mu " + g.str();
      c.pass = (Rational(fam.mu) == cls.mu_formula);
      std::ostringstream d;
      d << "type " << cls.kind_str() << " formula " << cls.mu_formula << " brute " << fam.mu;
      if (cls.kind == GroupType::III && cls.printed_formula_differs)
        d << " (printed variant " << cls.mu_printed << " differs)";
      c.detail = d.str();
      out.checks.push_back(std::move(c));
    }
  }
  if (max_n >= 7) {
    auto cls7 = classify_group(GroupSpec::parse("Z7"));
    out.checks.push_back(
        {"Z7 printed-formula discrepancy flagged", cls7.printed_formula_differs,
         "printed evaluates to 4/3 while exhaustive search gives 2"});
  }
  return out;
}

/// Structured family (index-two subgroup cosets) equals the brute-force
/// family on every even-order group of order <= max_n; counts match 2^s - 1.
inline SuiteResult lsf_oracle_suite(std::uint64_t max_n = 16) {
  SuiteResult out{"lsf-oracle", {}};
  for (std::uint64_t n = 2; n <= max_n; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto structured = largest_sum_free_structured(g);
      auto brute = largest_sum_free_bruteforce(g, max_n);
      bool same = structured.size() == brute.sets.size();
      for (std::size_t i = 0; same && i < structured.size(); ++i) same = structured[i] == brute.sets[i];
      std::uint64_t s = 0;
      for (auto f : g.factors()) s += (f % 2 == 0);
      bool count_ok = structured.size() == (std::uint64_t(1) << s) - 1;
      bool no_identity = true;
      for (const auto& b : brute.sets) no_identity = no_identity && !b.contains(0);
      out.checks.push_back({"lsf " + g.str(), same && count_ok && no_identity,
                            std::to_string(structured.size()) + " sets, brute mu " + std::to_string(brute.mu)});
    }
  }
  return out;
}

/// Atom identities for independent tuples of up to three largest sum-free
/// sets in even-order groups: atom sizes n/2^t, the spanned correspondence
/// yields 2^t - 1 distinct largest sum-free sets, and the parity law holds.
inline SuiteResult atoms_suite(std::uint64_t max_n = 16) {
  SuiteResult out{"atoms", {}};
  for (std::uint64_t n = 2; n <= max_n; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto family = largest_sum_free_structured(g);
      std::size_t m = family.size();
      std::uint64_t tuples_checked = 0;
      bool ok = true;
      std::string why;
      auto consider = [&](const std::vector<GroupSubset>& sets) {
        if (!tuple_is_independent(sets)) return;
        ++tuples_checked;
        std::size_t t = sets.size();
        auto atoms = atom_structure(sets);
        for (const auto& atom : atoms.atoms)
          if (atom.size() != (n >> t)) {
            ok = false;
            why = "atom size != n/2^t";
            return;
          }
        auto tuple = make_lsf_tuple(sets);
        auto spanned = spanned_lsf(tuple);
        std::set<std::string> distinct;
        for (const auto& b : spanned) distinct.insert(b.hex());
        if (spanned.size() != (std::size_t(1) << t) - 1 || distinct.size() != spanned.size()) {
          ok = false;
          why = "spanned family not 2^t-1 distinct sets";
          return;
        }
        // canonical correspondence: singleton I returns the member itself
        for (std::size_t i = 0; i < t; ++i)
          if (!(spanned[(std::size_t(1) << i) - 1] == sets[i])) {
            ok = false;
            why = "I={i} does not return B_i";
            return;
          }
        // parity law: atom(eps) inside spanned[I] iff eps odd on I
        for (std::uint64_t is = 1; is < (std::uint64_t(1) << t); ++is)
          for (std::uint64_t eps = 0; eps < (std::uint64_t(1) << t); ++eps) {
            bool odd = __builtin_popcountll(eps & is) & 1;
            if (atoms.atom(eps).subset_of(spanned[is - 1]) != odd) {
              ok = false;
              why = "parity law violated";
              return;
            }
          }
      };
      for (std::size_t i = 0; i < m && ok; ++i) {
        consider({family[i]});
        for (std::size_t j = i + 1; j < m && ok; ++j) {
          consider({family[i], family[j]});
          for (std::size_t k = j + 1; k < m && ok; ++k) consider({family[i], family[j], family[k]});
        }
      }
      out.checks.push_back({"atoms " + g.str(), ok,
                            ok ? std::to_string(tuples_checked) + " independent tuples" : why});
    }
  }
  return out;
}

/// The matching property x - b stays in the atom of b, for all tuples of up
/// to three largest sum-free sets (independent or not) and all x in the
/// zero atom.
inline SuiteResult matching_suite(std::uint64_t max_n = 16) {
  SuiteResult out{"matching", {}};
  for (std::uint64_t n = 2; n <= max_n; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto family = largest_sum_free_structured(g);
      std::size_t m = family.size();
      bool ok = true;
      std::uint64_t checked = 0;
      auto consider = [&](const std::vector<GroupSubset>& sets) {
        auto atoms = atom_structure(sets);
        for (auto x : atoms.atom(0).members()) {
          ++checked;
          if (!verify_matching(sets, x)) ok = false;
        }
      };
      for (std::size_t i = 0; i < m && ok; ++i) {
        consider({family[i]});
        for (std::size_t j = i; j < m && ok; ++j) {
          consider({family[i], family[j]});
          for (std::size_t k = j; k < m && ok; ++k) consider({family[i], family[j], family[k]});
        }
      }
      out.checks.push_back({"matching " + g.str(), ok, std::to_string(checked) + " (tuple, x) pairs"});
    }
  }
  return out;
}

/// Maximal sum-free sets larger than 2n/5 are largest, for every even-order
/// group of order <= max_n.
inline SuiteResult two_fifths_suite(std::uint64_t max_n = 16) {
  SuiteResult out{"two-fifths", {}};
  for (std::uint64_t n = 2; n <= max_n; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto rep = verify_two_fifths(g, max_n);
      out.checks.push_back({"two-fifths " + g.str(), rep.pass,
                            rep.pass ? "no maximal set in (2n/5, n/2)"
                                     : std::to_string(rep.counterexamples.size()) + " counterexamples"});
    }
  }
  return out;
}

/// Pair representation bound on the named odd type I groups, every largest
/// sum-free set.
inline SuiteResult pairs_suite() {
  SuiteResult out{"pairs", {}};
  for (const char* name : {"Z5", "Z25", "Z5xZ5"}) {
    auto g = GroupSpec::parse(name);
    auto fam = largest_sum_free_bruteforce(g, 25);
    for (const auto& b : fam.sets) {
      auto rep = verify_pair_representation(g, b);
      std::ostringstream d;
      d << "bound " << rep.bound << " min " << rep.min_distinct_pairs << " at x=" << rep.argmin_x
        << " (a=a reps there: " << rep.min_equal_pairs << ")";
      out.checks.push_back({std::string("pairs ") + name + " B=" + b.hex(),
                            rep.preconditions_ok && rep.pass, d.str()});
    }
  }
  return out;
}

/// The two exact constants of the 5-coloring theorem.
inline SuiteResult constants_suite() {
  SuiteResult out{"constants", {}};
  {
    auto g = GroupSpec::parse("Z2xZ4");
    auto fam = largest_sum_free_structured(g);
    GroupSubset a(g);
    bool found = false;
    for (std::size_t i = 0; i < fam.size() && !found; ++i)
      for (std::size_t j = i + 1; j < fam.size() && !found; ++j)
        if (tuple_is_independent({fam[i], fam[j]})) {
          a = fam[i] | fam[j];
          found = true;
        }
    auto rep = count_substantial_tuples(a, 5);
    out.checks.push_back({"dependent constant 90", rep.headline() == 90 && rep.kind == SubstantialCase::R5Dependent,
                          "tuple count " + std::to_string(rep.tuple_count)});
  }
  {
    auto g = GroupSpec::parse("Z2^3");
    auto fam = largest_sum_free_structured(g);
    GroupSubset a(g);
    bool found = false;
    for (std::size_t i = 0; i < fam.size() && !found; ++i)
      for (std::size_t j = i + 1; j < fam.size() && !found; ++j)
        for (std::size_t k = j + 1; k < fam.size() && !found; ++k)
          if (tuple_is_independent({fam[i], fam[j], fam[k]})) {
            a = fam[i] | fam[j] | fam[k];
            found = true;
          }
    auto rep = count_substantial_tuples(a, 5);
    std::ostringstream d;
    d << "anchored " << rep.anchored_count << " = " << rep.anchored_distinct_part << " + "
      << rep.anchored_repeat_part << "; plain tuple count " << rep.tuple_count
      << "; repeat-pattern selections attaining the shape: " << rep.repeat_profile_matches;
    out.checks.push_back({"independent constant 181440",
                          rep.headline() == 181440 && rep.kind == SubstantialCase::R5Independent, d.str()});
  }
  return out;
}

/// kappa_4(B1 u B2)^2 >= 18^(n/2) and kappa_5(B1 u B2 u B3)^2 >= 6^n as
/// exact integer comparisons, on every even-order group of order <= max_n
/// with at least two largest sum-free sets.
inline SuiteResult lowerbounds_suite(std::uint64_t max_n = 12) {
  SuiteResult out{"lowerbounds", {}};
  for (std::uint64_t n = 2; n <= max_n; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto fam = largest_sum_free_structured(g);
      std::size_t m = fam.size();
      if (m < 2) continue;
      bool ok4 = true, ok5 = true;
      Count bound4 = pow_count(18, n / 2);
      Count bound5 = pow_count(6, n);
      for (std::size_t i = 0; i < m && ok4; ++i)
        for (std::size_t j = i + 1; j < m && ok4; ++j) {
          Count k4 = kappa_exact(fam[i] | fam[j], 4);
          ok4 = k4 * k4 >= bound4;
        }
      for (std::size_t i = 0; i < m && ok5; ++i)
        for (std::size_t j = i; j < m && ok5; ++j)
          for (std::size_t k = j; k < m && ok5; ++k) {
            if (i == j && j == k) continue;  // proposition needs at least two distinct sets
            Count k5 = kappa_exact(fam[i] | fam[j] | fam[k], 5);
            ok5 = k5 * k5 >= bound5;
          }
      out.checks.push_back({"lowerbounds " + g.str(), ok4 && ok5,
                            std::string(ok4 ? "kappa4 ok" : "kappa4 FAILS") + ", " + (ok5 ? "kappa5 ok" : "kappa5 FAILS")});
    }
  }
  return out;
}

inline std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t max_n_mu = 30,
                                           std::uint64_t max_n_small = 16, std::uint64_t max_n_lb = 12) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  if (want("mu")) out.push_back(mu_suite(max_n_mu));
  if (want("lsf-oracle")) out.push_back(lsf_oracle_suite(max_n_small));
  if (want("atoms")) out.push_back(atoms_suite(max_n_small));
  if (want("matching")) out.push_back(matching_suite(max_n_small));
  if (want("two-fifths")) out.push_back(two_fifths_suite(max_n_small));
  if (want("pairs")) out.push_back(pairs_suite());
  if (want("constants")) out.push_back(constants_suite());
  if (want("lowerbounds")) out.push_back(lowerbounds_suite(max_n_lb));
  if (out.empty()) throw std::invalid_argument("unknown verify suite: " + which);
  return out;
}

}  // namespace schurlab::verify
