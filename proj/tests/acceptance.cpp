// Acceptance suite: one exact criterion per test case, each printing a
// single PASS/FAIL line.  Every tolerance is zero; every expected value is
// pinned in code.

#include <catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <set>

#include "schurlab/atom_search.hpp"
#include "schurlab/coloring.hpp"
#include "schurlab/sumfree.hpp"

using namespace schurlab;

namespace {

struct Criterion {
  const char* name;
  bool pass = true;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void require(bool ok) { pass = pass && ok; }
  ~Criterion() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "ACCEPTANCE " << name << ": " << (pass ? "PASS" : "FAIL") << "  (" << secs << "s)\n";
  }
};

std::uint64_t lcg(std::uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return state >> 33;
}

GroupSubset independent_union(const GroupSpec& g, std::size_t t) {
  auto fam = largest_sum_free_structured(g);
  std::vector<GroupSubset> picked;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (picked.size() == t) return tuple_is_independent(picked);
    for (std::size_t i = start; i < fam.size(); ++i) {
      picked.push_back(fam[i]);
      if (self(self, i + 1)) return true;
      picked.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::runtime_error("no independent tuple found");
  GroupSubset a(g);
  for (const auto& b : picked) a = a | b;
  return a;
}

}  // namespace

TEST_CASE("criterion 1: mu oracle, all abelian groups n <= 30") {
  Criterion c{"1 mu-oracle"};
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (const auto& g : all_abelian_groups(n)) {
      auto cls = classify_group(g);
      auto fam = largest_sum_free_bruteforce(g, 30);
      c.require(Rational(fam.mu) == cls.mu_formula);
      if (cls.kind == GroupType::III) {
        // corrected expression (1/3 - 1/(3m))n matches brute force
        c.require(cls.mu_formula == Rational(n) / 3 - Rational(n) / (3 * cls.exponent_m));
      }
    }
  }
  auto z7 = classify_group(GroupSpec::parse("Z7"));
  c.require(z7.printed_formula_differs);
  c.require(z7.mu_printed == Rational(4, 3));
  CHECK(c.pass);
}

TEST_CASE("criterion 2: structured family equals brute force, even n <= 16") {
  Criterion c{"2 lsf-oracle"};
  for (std::uint64_t n = 2; n <= 16; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto structured = largest_sum_free_structured(g);
      auto brute = largest_sum_free_bruteforce(g, 16);
      std::uint64_t s = 0;
      for (auto f : g.factors()) s += (f % 2 == 0);
      c.require(structured.size() == (std::uint64_t(1) << s) - 1);
      c.require(structured.size() == brute.sets.size());
      for (std::size_t i = 0; i < structured.size() && c.pass; ++i) c.require(structured[i] == brute.sets[i]);
    }
  }
  CHECK(c.pass);
}

TEST_CASE("criterion 3: atom identities, independent tuples t <= 3, even n <= 16") {
  Criterion c{"3 atom-identities"};
  for (std::uint64_t n = 2; n <= 16; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto fam = largest_sum_free_structured(g);
      std::size_t m = fam.size();
      auto consider = [&](const std::vector<GroupSubset>& sets) {
        if (!tuple_is_independent(sets)) return;
        std::size_t t = sets.size();
        auto atoms = atom_structure(sets);
        for (const auto& atom : atoms.atoms) c.require(atom.size() == (n >> t));
        auto spanned = spanned_lsf(make_lsf_tuple(sets));
        c.require(spanned.size() == (std::size_t(1) << t) - 1);
        std::set<std::string> distinct;
        for (const auto& b : spanned) {
          c.require(b.size() == n / 2);
          c.require(is_sum_free(b));
          distinct.insert(b.hex());
        }
        c.require(distinct.size() == spanned.size());
        for (std::uint64_t is = 1; is < (std::uint64_t(1) << t); ++is)
          for (std::uint64_t eps = 0; eps < (std::uint64_t(1) << t); ++eps) {
            bool odd = __builtin_popcountll(eps & is) & 1;
            c.require(atoms.atom(eps).subset_of(spanned[is - 1]) == odd);
          }
        for (auto x : atoms.atom(0).members()) c.require(verify_matching(sets, x));
      };
      for (std::size_t i = 0; i < m; ++i) {
        consider({fam[i]});
        for (std::size_t j = i + 1; j < m; ++j) {
          consider({fam[i], fam[j]});
          for (std::size_t k = j + 1; k < m; ++k) consider({fam[i], fam[j], fam[k]});
        }
      }
    }
  }
  CHECK(c.pass);
}

TEST_CASE("criterion 4: counting identities") {
  Criterion c{"4 counting-identities"};
  // kappa_2(B) = 2^mu on every largest sum-free set, n <= 16
  for (std::uint64_t n = 1; n <= 16; ++n) {
    for (const auto& g : all_abelian_groups(n)) {
      auto fam = largest_sum_free_bruteforce(g, 16);
      for (const auto& b : fam.sets) c.require(kappa_exact(b, 2) == pow_count(2, b.size()));
    }
  }
  // the Z2xZ2 constants by two independent methods
  auto z22 = GroupSpec::parse("Z2xZ2");
  auto nonzero = GroupSubset::of(z22, {1, 2, 3});
  {
    Group ops(z22);
    auto elems = nonzero.members();
    for (unsigned r : {4u, 5u}) {
      // direct r^3 enumeration
      Count direct = 0;
      std::vector<unsigned> color(elems.size(), 0);
      while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < elems.size() && ok; ++i)
          for (std::size_t j = i; j < elems.size() && ok; ++j) {
            if (color[i] != color[j]) continue;
            auto sum = ops.add(elems[i], elems[j]);
            for (std::size_t k = 0; k < elems.size(); ++k)
              if (elems[k] == sum && color[k] == color[i]) ok = false;
          }
        if (ok) ++direct;
        std::size_t pos = 0;
        for (; pos < elems.size(); ++pos) {
          if (++color[pos] < r) break;
          color[pos] = 0;
        }
        if (pos == elems.size()) break;
      }
      Count expected = (r == 4) ? 60 : 120;
      c.require(direct == expected);
      c.require(kappa_exact(nonzero, r) == expected);
    }
  }
  // phi product law on 1000 random sum-free families
  std::uint64_t seed = 20240817;
  for (int rep = 0; rep < 1000; ++rep) {
    std::uint64_t n = 4 + lcg(seed) % 13;
    auto groups = all_abelian_groups(n);
    auto g = groups[lcg(seed) % groups.size()];
    unsigned r = 1 + lcg(seed) % 5;
    std::vector<GroupSubset> f;
    for (unsigned i = 0; i < r; ++i) {
      GroupSubset s(g);
      for (std::uint64_t e = 1; e < g.order(); ++e) {
        if (lcg(seed) % 3 != 0) continue;
        s.insert(e);
        if (!is_sum_free(s)) s.erase(e);
      }
      f.push_back(std::move(s));
    }
    c.require(phi_count(f, PhiMode::Bound) == phi_count(f, PhiMode::ExactIfSumFree));
  }
  CHECK(c.pass);
}

TEST_CASE("criterion 5: the constants 90 and 181440") {
  Criterion c{"5 main45-constants"};
  {
    auto g = GroupSpec::parse("Z2xZ4");
    auto rep = count_substantial_tuples(independent_union(g, 2), 5);
    c.require(rep.kind == SubstantialCase::R5Dependent);
    c.require(rep.headline() == 90);
  }
  {
    auto g = GroupSpec::parse("Z2^3");
    auto rep = count_substantial_tuples(independent_union(g, 3), 5);
    c.require(rep.kind == SubstantialCase::R5Independent);
    c.require(rep.headline() == 181440);
    c.require(rep.anchored_distinct_part == 120960);
    c.require(rep.anchored_repeat_part == 60480);
  }
  CHECK(c.pass);
}

TEST_CASE("criterion 6: lower-bound constructions as exact integer comparisons") {
  Criterion c{"6 lowerbounds"};
  for (std::uint64_t n = 2; n <= 12; n += 2) {
    for (const auto& g : all_abelian_groups(n)) {
      auto fam = largest_sum_free_structured(g);
      std::size_t m = fam.size();
      if (m < 2) continue;
      Count bound4 = pow_count(18, n / 2);  // (3*sqrt2)^n
      Count bound5 = pow_count(6, n);       // (6^(n/2))^2
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          Count k4 = kappa_exact(fam[i] | fam[j], 4);
          c.require(k4 * k4 >= bound4);
        }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
          for (std::size_t k = j; k < m; ++k) {
            if (i == j && j == k) continue;
            Count k5 = kappa_exact(fam[i] | fam[j] | fam[k], 5);
            c.require(k5 * k5 >= bound5);
          }
    }
  }
  CHECK(c.pass);
}

TEST_CASE("criterion 7: optimal-structure search") {
  Criterion c{"7 opt-structure"};
  auto s42 = solve_profile_equations(4, 2);
  c.require(std::set<std::vector<unsigned>>(s42.begin(), s42.end()) ==
            std::set<std::vector<unsigned>>{{0, 1, 2, 0}, {0, 2, 0, 1}});
  auto s52 = solve_profile_equations(5, 2);
  c.require(std::set<std::vector<unsigned>>(s52.begin(), s52.end()) ==
            std::set<std::vector<unsigned>>{{0, 0, 2, 1, 0}, {0, 1, 0, 2, 0}, {0, 1, 1, 0, 1}});
  auto s53 = solve_profile_equations(5, 3);
  c.require(std::set<std::vector<unsigned>>(s53.begin(), s53.end()) ==
            std::set<std::vector<unsigned>>{{0, 1, 6, 0, 0},
                                            {0, 2, 4, 1, 0},
                                            {0, 3, 2, 2, 0},
                                            {0, 3, 3, 0, 1},
                                            {0, 4, 0, 3, 0},
                                            {0, 4, 1, 1, 1},
                                            {0, 5, 0, 0, 2}});

  c.require(!realizable({0, 1, 6, 0, 0}, 5, 3).realizable);
  c.require(realizable({0, 2, 4, 1, 0}, 5, 3).realizable);
  c.require(realizable({0, 1, 2, 0}, 4, 2).realizable);

  auto o4 = optimal_structure(4);
  c.require(o4.weight.t == 2 && o4.weight.bases == std::vector<unsigned>{2, 3, 3});
  auto o5 = optimal_structure(5);
  c.require(o5.optimal.size() == 2);
  {
    std::set<unsigned> ts;
    for (const auto& rec : o5.optimal) ts.insert(rec.config.t);
    c.require(ts == std::set<unsigned>{2, 3});
    c.require(o5.weight.bases == std::vector<unsigned>{3, 3, 4} ||
              o5.weight.bases == std::vector<unsigned>{2, 2, 3, 3, 3, 3, 4});
  }
  auto o6 = optimal_structure(6);
  c.require(o6.optimal.size() == 1 && o6.optimal[0].config.t == 3 &&
            o6.weight.bases == std::vector<unsigned>{3, 3, 3, 3, 4, 4, 4});
  auto o7 = optimal_structure(7);
  c.require(o7.optimal.size() == 1 && o7.optimal[0].config.t == 3 &&
            o7.weight.bases == std::vector<unsigned>{4, 4, 4, 4, 4, 4, 4});
  CHECK(c.pass);
}

TEST_CASE("criterion 8: extremal agreement at desk scale") {
  Criterion c{"8 extremal-agreement"};
  {
    auto g = GroupSpec::parse("Z5");
    auto rep = argmax_kappa(g, 2);
    c.require(rep.exhaustive && rep.max_kappa == 4);
    std::uint64_t expanded = 0;
    for (const auto& mx : rep.maximizers) expanded += mx.orbit_size;
    c.require(expanded == 2);
    auto fam = largest_sum_free_bruteforce(g);
    for (const auto& mx : rep.maximizers) {
      bool is_lsf = false;
      for (const auto& b : fam.sets) is_lsf = is_lsf || b == mx.rep;
      c.require(is_lsf);  // AGREE: maximizers are largest sum-free sets
    }
  }
  {
    auto g = GroupSpec::parse("Z6");
    auto b = GroupSubset::of(g, {1, 3, 5});
    auto rep2 = argmax_kappa(g, 2);
    c.require(rep2.exhaustive);
    c.require(rep2.max_kappa == 8);
    c.require(rep2.maximizers.size() == 1 && rep2.maximizers[0].rep == b);  // AGREE

    // r = 3: the asymptotic shape does NOT hold at n = 6; the exhaustive
    // maximum is 48, attained by {1,2,3,5} (orbit of 2) and {1,2,3,4,5},
    // none of them sum-free.  Shape agreement is reported, not asserted:
    // this leg reports DISAGREE.
    auto rep3 = argmax_kappa(g, 3);
    c.require(rep3.exhaustive);
    c.require(rep3.max_kappa == 48);
    c.require(rep3.maximizers.size() == 2);
    std::uint64_t expanded3 = 0;
    for (const auto& mx : rep3.maximizers) expanded3 += mx.orbit_size;
    c.require(expanded3 == 3);
    bool shape3 = true;
    for (const auto& mx : rep3.maximizers) shape3 = shape3 && (mx.rep == b);
    c.require(!shape3);
    std::cout << "  note: (Z6, r=3) exhaustive max is 48 at non-sum-free sets; theorem shape "
                 "reports DISAGREE at this order\n";
  }
  {
    auto g = GroupSpec::parse("Z2xZ2");
    auto rep = argmax_kappa(g, 4);
    c.require(rep.exhaustive && rep.max_kappa == 60);
    c.require(rep.maximizers.size() == 1);
    auto fam = largest_sum_free_structured(g);
    bool is_pair_union = false;
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        if ((fam[i] | fam[j]) == rep.maximizers[0].rep) is_pair_union = true;
    c.require(is_pair_union);  // AGREE: union of two largest sum-free sets
  }
  CHECK(c.pass);
}

TEST_CASE("criterion 9: lemma-consequence suites") {
  Criterion c{"9 lemma-consequences"};
  for (std::uint64_t n = 2; n <= 16; n += 2)
    for (const auto& g : all_abelian_groups(n)) c.require(verify_two_fifths(g, 16).pass);

  for (const char* name : {"Z25", "Z5xZ5"}) {
    auto g = GroupSpec::parse(name);
    auto fam = largest_sum_free_bruteforce(g, 25);
    c.require(!fam.sets.empty());
    for (const auto& b : fam.sets) {
      auto rep = verify_pair_representation(g, b);
      c.require(rep.preconditions_ok);
      c.require(rep.bound == 2);  // ceil(25/10 - 1)
      c.require(rep.pass);
    }
  }
  CHECK(c.pass);
}
