#include <catch_amalgamated.hpp>

#include <set>

#include "schurlab/atom_search.hpp"
#include "schurlab/coloring.hpp"

using namespace schurlab;

namespace {

std::uint64_t lcg(std::uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return state >> 33;
}

std::vector<unsigned> tail(const std::vector<std::uint64_t>& hist) {
  // histogram a_1..a_r from the profile's a_0..a_r
  std::vector<unsigned> out;
  for (std::size_t k = 1; k < hist.size(); ++k) out.push_back(static_cast<unsigned>(hist[k]));
  return out;
}

}  // namespace

TEST_CASE("rank and profile invariants") {
  auto c = make_parity_config(3, {0b001, 0b010, 0b100, 0b110, 0b101});
  CHECK(c.rank == 3);
  auto p = atom_profile(c);
  // sum of coverages is r * 2^(t-1)
  unsigned total = 0;
  for (auto cov : p.coverage) total += cov;
  CHECK(total == 5 * 4);
  CHECK(p.histogram == std::vector<std::uint64_t>{0, 0, 2, 4, 1, 0});

  CHECK(make_parity_config(2, {1, 1}).rank == 1);
  CHECK_THROWS_AS(make_parity_config(2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_parity_config(2, {4}), std::invalid_argument);
}

TEST_CASE("canonical forms") {
  // two bases of F_2^2 are in the same orbit
  auto a = canonicalize_config(make_parity_config(2, {0b01, 0b10}));
  auto b = canonicalize_config(make_parity_config(2, {0b10, 0b11}));
  CHECK(a.vectors == b.vectors);

  // rank-1 pairs collapse to the same representative
  auto r1 = canonicalize_config(make_parity_config(2, {0b01, 0b01}));
  auto r2 = canonicalize_config(make_parity_config(2, {0b11, 0b11}));
  CHECK(r1.vectors == r2.vectors);
  CHECK(r1.vectors == std::vector<std::uint16_t>{1, 1});

  // idempotence and profile invariance on random configs
  std::uint64_t seed = 7;
  for (int rep = 0; rep < 200; ++rep) {
    unsigned t = 2 + lcg(seed) % 3;
    unsigned r = t + lcg(seed) % 4;
    std::vector<std::uint16_t> vecs;
    for (unsigned i = 0; i < r; ++i) vecs.push_back(static_cast<std::uint16_t>(1 + lcg(seed) % ((1u << t) - 1)));
    auto c = make_parity_config(t, vecs);
    auto canon = canonicalize_config(c);
    CHECK(canonicalize_config(canon).vectors == canon.vectors);
    CHECK(atom_profile(canon).histogram == atom_profile(c).histogram);
    CHECK(canon.rank == c.rank);
  }
}

TEST_CASE("profile equation solution sets match the known systems") {
  auto s42 = solve_profile_equations(4, 2);
  REQUIRE(s42.size() == 2);
  CHECK(s42[0] == std::vector<unsigned>{0, 1, 2, 0});  // (a2,a3,a4) = (1,2,0)
  CHECK(s42[1] == std::vector<unsigned>{0, 2, 0, 1});  // (a2,a3,a4) = (2,0,1)

  auto s52 = solve_profile_equations(5, 2);
  std::set<std::vector<unsigned>> got52(s52.begin(), s52.end());
  std::set<std::vector<unsigned>> want52{
      {0, 0, 2, 1, 0}, {0, 1, 0, 2, 0}, {0, 1, 1, 0, 1}};
  CHECK(got52 == want52);

  auto s53 = solve_profile_equations(5, 3);
  std::set<std::vector<unsigned>> got53(s53.begin(), s53.end());
  std::set<std::vector<unsigned>> want53{
      {0, 1, 6, 0, 0}, {0, 2, 4, 1, 0}, {0, 3, 2, 2, 0}, {0, 3, 3, 0, 1},
      {0, 4, 0, 3, 0}, {0, 4, 1, 1, 1}, {0, 5, 0, 0, 2}};
  CHECK(got53 == want53);
}

TEST_CASE("config enumeration is orbit-complete for small cases") {
  // rank-2 multisets of two vectors: a single orbit (any basis)
  auto r22 = enumerate_configs(2, 2);
  REQUIRE(r22.size() == 1);
  CHECK(r22[0].config.vectors == std::vector<std::uint16_t>{1, 2});

  // r=4, t=2 contains the (1,2,0) profile, e.g. {10,01,11,11}
  bool found = false;
  for (const auto& rec : enumerate_configs(4, 2))
    if (rec.profile.histogram == std::vector<std::uint64_t>{0, 0, 1, 2, 0}) found = true;
  CHECK(found);

  // r=5, t=3 contains the (2,4,1,0) profile with the canonical witness
  bool found53 = false;
  for (const auto& rec : enumerate_configs(5, 3))
    if (rec.profile.histogram == std::vector<std::uint64_t>{0, 0, 2, 4, 1, 0}) found53 = true;
  CHECK(found53);

  // exhaustive cross-check at t=2: orbits of multisets enumerated directly
  for (unsigned r = 2; r <= 5; ++r) {
    std::set<std::vector<std::uint16_t>> direct;
    std::vector<std::uint16_t> ms(r, 1);
    auto rec_ms = [&](auto&& self, unsigned pos, std::uint16_t lo) -> void {
      if (pos == r) {
        auto c = make_parity_config(2, ms);
        if (c.rank == 2) direct.insert(canonicalize_config(c).vectors);
        return;
      }
      for (std::uint16_t v = lo; v <= 3; ++v) {
        ms[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec_ms(rec_ms, 0, 1);
    auto enumerated = enumerate_configs(r, 2);
    CHECK(enumerated.size() == direct.size());
    for (const auto& rec : enumerated) CHECK(direct.count(rec.config.vectors) == 1);
  }
}

TEST_CASE("full-rank coverage sums") {
  for (unsigned r = 2; r <= 6; ++r)
    for (unsigned t = 1; t <= std::min(r, 4u); ++t)
      for (const auto& rec : enumerate_configs(r, t)) {
        unsigned total = 0;
        for (auto c : rec.profile.coverage) total += c;
        CHECK(total == r << (t - 1));
      }
}

TEST_CASE("realizability") {
  auto bad = realizable({0, 1, 6, 0, 0}, 5, 3);
  CHECK(!bad.realizable);
  CHECK(bad.orbits_checked > 0);

  auto ok = realizable({0, 2, 4, 1, 0}, 5, 3);
  CHECK(ok.realizable);
  REQUIRE(ok.witness.has_value());
  CHECK(atom_profile(*ok.witness).histogram == std::vector<std::uint64_t>{0, 0, 2, 4, 1, 0});

  CHECK(realizable({0, 1, 2, 0}, 4, 2).realizable);
  CHECK(realizable({0, 2, 0, 1}, 4, 2).realizable);
  CHECK_THROWS_AS(realizable({1, 1, 1, 1}, 4, 2), std::invalid_argument);
}

TEST_CASE("weight comparison is exact and total") {
  ExactWeight w42{2, {2, 3, 3}};   // (3*sqrt2)^(n/2) as 18^(n/4)
  ExactWeight w52{2, {3, 3, 4}};   // 36^(n/4) = 6^(n/2)
  ExactWeight w53{3, {2, 2, 3, 3, 3, 3, 4}};  // 1296^(n/8) = 6^(n/2)
  CHECK(compare_weights(w52, w53) == 0);
  CHECK(compare_weights(w42, w52) < 0);
  CHECK(compare_weights(w52, w42) > 0);

  // transitivity on random weights
  std::uint64_t seed = 31337;
  for (int rep = 0; rep < 300; ++rep) {
    auto rand_weight = [&]() {
      ExactWeight w;
      w.t = 1 + lcg(seed) % 4;
      unsigned count = 1 + lcg(seed) % 6;
      for (unsigned i = 0; i < count; ++i) w.bases.push_back(1 + lcg(seed) % 6);
      std::sort(w.bases.begin(), w.bases.end());
      return w;
    };
    auto a = rand_weight(), b = rand_weight(), c = rand_weight();
    int ab = compare_weights(a, b), bc = compare_weights(b, c), ac = compare_weights(a, c);
    if (ab <= 0 && bc <= 0) CHECK(ac <= 0);
    if (ab >= 0 && bc >= 0) CHECK(ac >= 0);
    CHECK(compare_weights(b, a) == -ab);
  }
}

TEST_CASE("optimal structures for r = 4..7") {
  auto o4 = optimal_structure(4);
  CHECK(o4.weight.t == 2);
  CHECK(o4.weight.bases == std::vector<unsigned>{2, 3, 3});
  REQUIRE(o4.optimal.size() == 1);
  CHECK(o4.optimal[0].profile.histogram == std::vector<std::uint64_t>{0, 0, 1, 2, 0});

  auto o5 = optimal_structure(5);
  REQUIRE(o5.optimal.size() == 2);  // exact tie between t=2 and t=3
  std::set<unsigned> ts;
  for (const auto& rec : o5.optimal) ts.insert(rec.config.t);
  CHECK(ts == std::set<unsigned>{2, 3});
  for (const auto& rec : o5.optimal) {
    if (rec.config.t == 2) CHECK(rec.profile.histogram == std::vector<std::uint64_t>{0, 0, 0, 2, 1, 0});
    if (rec.config.t == 3) CHECK(rec.profile.histogram == std::vector<std::uint64_t>{0, 0, 2, 4, 1, 0});
  }

  auto o6 = optimal_structure(6);
  REQUIRE(o6.optimal.size() == 1);
  CHECK(o6.optimal[0].config.t == 3);
  CHECK(o6.weight.bases == std::vector<unsigned>{3, 3, 3, 3, 4, 4, 4});  // 2^(3n/4) 3^(n/2)

  auto o7 = optimal_structure(7);
  REQUIRE(o7.optimal.size() == 1);
  CHECK(o7.optimal[0].config.t == 3);
  CHECK(o7.weight.bases == std::vector<unsigned>{4, 4, 4, 4, 4, 4, 4});  // 4^(7n/8)
}

TEST_CASE("witness configs instantiate on concrete groups") {
  // spanned sets indexed by I-bitmask realize a config's coverage profile
  // with atoms of size n/2^t, and phi matches prod c^(n/2^t)
  struct CaseDef {
    const char* group;
    unsigned t;
  };
  for (auto [name, t] : {CaseDef{"Z2xZ4", 2}, CaseDef{"Z2^3", 3}}) {
    auto g = GroupSpec::parse(name);
    std::uint64_t n = g.order();
    auto fam = largest_sum_free_structured(g);
    // an independent t-tuple from the family
    std::vector<GroupSubset> base;
    auto pick = [&](auto&& self, std::size_t start) -> bool {
      if (base.size() == t) return tuple_is_independent(base);
      for (std::size_t i = start; i < fam.size(); ++i) {
        base.push_back(fam[i]);
        if (self(self, i + 1)) return true;
        base.pop_back();
      }
      return false;
    };
    REQUIRE(pick(pick, 0));
    auto spanned = spanned_lsf(make_lsf_tuple(base));

    unsigned r = t == 2 ? 4 : 5;
    for (const auto& rec : enumerate_configs(r, t)) {
      std::vector<GroupSubset> tuple;
      for (auto v : rec.config.vectors) tuple.push_back(spanned[v - 1]);
      auto atoms = atom_structure(tuple);
      // nonempty atoms have size n/2^t and their coverage histogram matches
      std::vector<std::uint64_t> hist(r + 1, 0);
      for (std::uint64_t eps = 1; eps < (std::uint64_t(1) << r); ++eps) {
        if (atoms.atom(eps).empty()) continue;
        CHECK(atoms.atom(eps).size() == n >> t);
        ++hist[static_cast<std::size_t>(__builtin_popcountll(eps))];
      }
      std::vector<std::uint64_t> expected = rec.profile.histogram;
      expected[0] = 0;  // uncovered atoms correspond to elements outside the union
      CHECK(hist == expected);
      Count phi = phi_count(tuple, PhiMode::ExactIfSumFree);
      Count predicted = 1;
      for (auto c : rec.weight.bases) predicted *= pow_count(c, n >> t);
      CHECK(phi == predicted);
    }
  }
}
