#pragma once

// Exact counting of sum-free r-colorings, container-product counts, the
// extremal search over subsets, and the substantial-tuple machinery.
//
// Colorings are labeled throughout: colors are distinguishable and classes
// may be empty.  That convention is forced by kappa_r(B) = r^|B| for
// sum-free B.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "schurlab/common.hpp"
#include "schurlab/sumfree.hpp"

namespace schurlab {

struct KappaBudget {
  std::size_t max_elements = 24;
  std::uint64_t max_nodes = 200'000'000;
};

namespace detail {

/// Backtracking enumeration of sum-free r-colorings of A.  Elements are
/// assigned in descending Schur-degree order; each color class keeps an
/// incremental mask of sums already landing inside A, so the per-assignment
/// feasibility test only scans the class itself.
class ColoringDfs {
 public:
  ColoringDfs(const GroupSubset& a, unsigned r, KappaBudget budget)
      : r_(r), budget_(budget) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    elems_ = a.members();
    m_ = elems_.size();
    if (m_ > 64 || m_ > budget.max_elements)
      throw BudgetExceeded("coloring budget allows at most " + std::to_string(budget.max_elements) + " elements");
    Group g(a.group());
    // descending Schur degree within A
    std::vector<std::uint64_t> deg(m_, 0);
    std::vector<std::int64_t> local(a.group().order(), -1);
    for (std::size_t i = 0; i < m_; ++i) local[elems_[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = i; j < m_; ++j) {
        std::int64_t c = local[g.add(elems_[i], elems_[j])];
        if (c >= 0) {
          ++deg[i];
          ++deg[j];
          ++deg[static_cast<std::size_t>(c)];
        }
      }
    std::vector<std::size_t> order(m_);
    for (std::size_t i = 0; i < m_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
    std::vector<std::uint64_t> reordered(m_);
    for (std::size_t i = 0; i < m_; ++i) reordered[i] = elems_[order[i]];
    elems_ = std::move(reordered);
    sum_idx_.assign(m_ * m_, -1);
    std::fill(local.begin(), local.end(), -1);
    for (std::size_t i = 0; i < m_; ++i) local[elems_[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        sum_idx_[i * m_ + j] = local[g.add(elems_[i], elems_[j])];
  }

  const std::vector<std::uint64_t>& elements() const { return elems_; }
  std::uint64_t nodes() const { return nodes_; }

  /// Calls leaf(class_masks) for every sum-free coloring; masks are over
  /// local element positions (elements() gives the global ids).
  template <typename Leaf>
  void run(Leaf&& leaf) {
    classes_.assign(r_, 0);
    sums_in_.assign(r_, 0);
    nodes_ = 0;
    rec(0, leaf);
  }

 private:
  bool feasible(unsigned c, std::size_t x) const {
    if (sums_in_[c] >> x & 1) return false;  // some a+b inside the class equals x
    std::uint64_t with_x = classes_[c] | (std::uint64_t(1) << x);
    std::uint64_t m = with_x;
    while (m) {
      std::size_t s = static_cast<std::size_t>(__builtin_ctzll(m));
      m &= m - 1;
      std::int64_t t = sum_idx_[x * m_ + s];
      if (t >= 0 && (with_x >> t & 1)) return false;
    }
    return true;
  }

  template <typename Leaf>
  void rec(std::size_t i, Leaf&& leaf) {
    if (i == m_) {
      leaf(classes_);
      return;
    }
    for (unsigned c = 0; c < r_; ++c) {
      if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("coloring node budget exceeded");
      if (!feasible(c, i)) continue;
      std::uint64_t saved_sums = sums_in_[c];
      std::uint64_t with_x = classes_[c] | (std::uint64_t(1) << i);
      std::uint64_t m = with_x;
      while (m) {
        std::size_t s = static_cast<std::size_t>(__builtin_ctzll(m));
        m &= m - 1;
        std::int64_t t = sum_idx_[i * m_ + s];
        if (t >= 0) sums_in_[c] |= std::uint64_t(1) << t;
      }
      classes_[c] = with_x;
      rec(i + 1, leaf);
      classes_[c] = with_x & ~(std::uint64_t(1) << i);
      sums_in_[c] = saved_sums;
    }
  }

  unsigned r_;
  KappaBudget budget_;
  std::vector<std::uint64_t> elems_;
  std::size_t m_ = 0;
  std::vector<std::int64_t> sum_idx_;
  std::vector<std::uint64_t> classes_;
  std::vector<std::uint64_t> sums_in_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

struct KappaResult {
  Count value;
  std::uint64_t nodes = 0;
};

/// Exact number of sum-free r-colorings of A.
inline KappaResult kappa_exact_traced(const GroupSubset& a, unsigned r, KappaBudget budget = {}) {
  detail::ColoringDfs dfs(a, r, budget);
  Count count = 0;
  dfs.run([&](const std::vector<std::uint64_t>&) { ++count; });
  return KappaResult{std::move(count), dfs.nodes()};
}

inline Count kappa_exact(const GroupSubset& a, unsigned r, KappaBudget budget = {}) {
  return kappa_exact_traced(a, r, budget).value;
}

enum class PhiMode { Bound, ExactIfSumFree };

struct ColorProfile {
  unsigned r = 0;
  std::vector<std::uint64_t> n_k;  // k = 0..r; elements covered by exactly k container sets
};

/// Coverage profile of a container tuple over an ambient set (default: the
/// union of the containers).
inline ColorProfile color_profile(const std::vector<GroupSubset>& f, std::optional<GroupSubset> ambient = {}) {
  if (f.empty()) throw std::invalid_argument("empty container tuple");
  const GroupSpec& spec = f[0].group();
  for (const auto& s : f)
    if (!(s.group() == spec)) throw std::invalid_argument("mixed groups in container tuple");
  GroupSubset amb = ambient.value_or(GroupSubset(spec));
  if (!ambient) {
    for (const auto& s : f) amb = amb | s;
  }
  ColorProfile p;
  p.r = static_cast<unsigned>(f.size());
  p.n_k.assign(p.r + 1, 0);
  for (auto x : amb.members()) {
    unsigned c = 0;
    for (const auto& s : f) c += s.contains(x);
    ++p.n_k[c];
  }
  return p;
}

/// |Phi(F_1,...,F_r)|.  Bound mode evaluates prod_k k^{n_k} from the
/// profile; exact mode evaluates prod_x c(x) directly and requires every
/// container to be sum-free (then the bound is attained).  An ambient
/// element covered by no container contributes factor 0.
inline Count phi_count(const std::vector<GroupSubset>& f, PhiMode mode, std::optional<GroupSubset> ambient = {}) {
  if (mode == PhiMode::ExactIfSumFree)
    for (const auto& s : f)
      if (!is_sum_free(s)) throw std::invalid_argument("exact mode requires sum-free containers");
  if (mode == PhiMode::Bound) {
    auto p = color_profile(f, std::move(ambient));
    if (p.n_k[0] > 0) return 0;
    Count out = 1;
    for (unsigned k = 1; k <= p.r; ++k) out *= pow_count(k, p.n_k[k]);
    return out;
  }
  const GroupSpec& spec = f[0].group();
  GroupSubset amb = ambient.value_or(GroupSubset(spec));
  if (!ambient) {
    for (const auto& s : f) amb = amb | s;
  }
  Count out = 1;
  for (auto x : amb.members()) {
    unsigned c = 0;
    for (const auto& s : f) c += s.contains(x);
    out *= c;
    if (out == 0) return out;
  }
  return out;
}

struct ArgmaxOptions {
  std::uint64_t max_n = 12;
  unsigned workers = 1;
  KappaBudget kappa;
  std::uint64_t aut_max_n = 16;
  bool allow_fallback = true;
  std::uint64_t fallback_brute_max_n = 20;
};

struct SearchReport {
  GroupSpec group;
  unsigned r = 0;
  Count max_kappa;
  struct Maximizer {
    GroupSubset rep;  // canonical orbit representative
    std::uint64_t orbit_size = 1;
  };
  std::vector<Maximizer> maximizers;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

namespace detail {

inline std::uint64_t apply_perm_mask(const std::vector<std::uint64_t>& sigma, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    std::uint64_t i = static_cast<std::uint64_t>(__builtin_ctzll(mask));
    mask &= mask - 1;
    out |= std::uint64_t(1) << sigma[i];
  }
  return out;
}

}  // namespace detail

/// Exhaustive search for kappa_{r,G}: evaluates kappa_r over one
/// representative per Aut(G)-orbit of subsets, skipping identity-containing
/// subsets and pruning with kappa_r(A) <= r^|A|.  All maximizers are
/// retained.  Above max_n a restricted search over unions of largest
/// sum-free sets runs instead and the report says so.
inline SearchReport argmax_kappa(const GroupSpec& spec, unsigned r, ArgmaxOptions opts = {}) {
  auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.group = spec;
  rep.r = r;
  std::uint64_t n = spec.order();

  if (n <= opts.max_n && n <= 24) {
    auto perms = automorphisms_or_identity(spec, opts.aut_max_n);
    std::vector<Count> rpow(n + 1);
    rpow[0] = 1;
    for (std::uint64_t k = 1; k <= n; ++k) rpow[k] = rpow[k - 1] * r;

    unsigned workers = std::max(1u, opts.workers);
    std::uint64_t total = std::uint64_t(1) << n;
    struct Local {
      Count best = -1;
      std::vector<std::uint64_t> argmasks;
      std::uint64_t nodes = 0;
    };
    std::vector<Local> locals(workers);
    auto scan = [&](unsigned w) {
      Local& loc = locals[w];
      for (std::uint64_t mask = w; mask < total; mask += workers) {
        if (mask & 1) continue;  // identity in A forces kappa = 0
        bool canonical = true;
        for (const auto& sigma : perms)
          if (detail::apply_perm_mask(sigma, mask) < mask) {
            canonical = false;
            break;
          }
        if (!canonical) continue;
        auto sz = static_cast<std::uint64_t>(__builtin_popcountll(mask));
        if (loc.best >= 0 && rpow[sz] < loc.best) continue;
        auto res = kappa_exact_traced(GroupSubset::from_mask(spec, mask), r, opts.kappa);
        loc.nodes += res.nodes;
        if (res.value > loc.best) {
          loc.best = res.value;
          loc.argmasks.clear();
        }
        if (res.value == loc.best) loc.argmasks.push_back(mask);
      }
    };
    if (workers == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
      for (auto& th : pool) th.join();
    }
    Count best = -1;
    for (auto& loc : locals) {
      rep.nodes += loc.nodes;
      if (loc.best > best) best = loc.best;
    }
    std::vector<std::uint64_t> argmasks;
    for (auto& loc : locals)
      if (loc.best == best) argmasks.insert(argmasks.end(), loc.argmasks.begin(), loc.argmasks.end());
    std::sort(argmasks.begin(), argmasks.end());
    rep.max_kappa = best;
    for (auto mask : argmasks) {
      // re-verify, then attach the orbit size |Aut| / |stabilizer|
      if (kappa_exact(GroupSubset::from_mask(spec, mask), r, opts.kappa) != best)
        throw std::logic_error("maximizer failed post-hoc verification");
      std::uint64_t stab = 0;
      for (const auto& sigma : perms) stab += detail::apply_perm_mask(sigma, mask) == mask;
      rep.maximizers.push_back({GroupSubset::from_mask(spec, mask), perms.size() / stab});
    }
    rep.exhaustive = true;
  } else {
    if (!opts.allow_fallback) throw BudgetExceeded("argmax exhaustive search limited to order <= " + std::to_string(opts.max_n));
    auto fam = lsf_family(spec, LsfMethod::Auto, opts.fallback_brute_max_n);
    Count best = -1;
    std::vector<GroupSubset> arg;
    std::size_t m = fam.sets.size();
    auto consider = [&](const GroupSubset& a) {
      auto res = kappa_exact_traced(a, r, opts.kappa);
      rep.nodes += res.nodes;
      if (res.value > best) {
        best = res.value;
        arg.clear();
      }
      if (res.value == best) arg.push_back(a);
    };
    for (std::size_t i = 0; i < m; ++i) {
      consider(fam.sets[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        consider(fam.sets[i] | fam.sets[j]);
        for (std::size_t k = j + 1; k < m; ++k) consider(fam.sets[i] | fam.sets[j] | fam.sets[k]);
      }
    }
    std::sort(arg.begin(), arg.end(), canonical_subset_less);
    arg.erase(std::unique(arg.begin(), arg.end()), arg.end());
    rep.max_kappa = best;
    for (auto& a : arg) rep.maximizers.push_back({a, 1});
    rep.exhaustive = false;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

enum class SubstantialCase { R4Pair, R5Dependent, R5Independent };

struct SubstantialReport {
  SubstantialCase kind = SubstantialCase::R4Pair;
  unsigned r = 0;
  std::vector<GroupSubset> family;  // largest sum-free sets inside A, canonical order
  std::vector<std::uint64_t> target_profile;  // a_k for k = 0..r over nonempty atoms
  /// Ordered tuples over the family whose nonempty-atom histogram equals the
  /// target shape.
  std::uint64_t tuple_count = 0;
  /// Independent case only: the anchored selection count.  Every selection
  /// (independent anchor triple as unordered pair + third, extension by two
  /// further members, arrangement) is counted: distinct-extension tuples are
  /// counted when they attain the shape (all of them do), repeat-extension
  /// selections are counted by schema.  This is the quantity the exact
  /// 5-coloring theorem's leading constant measures.
  std::uint64_t anchored_count = 0;
  std::uint64_t anchored_distinct_part = 0;
  std::uint64_t anchored_repeat_part = 0;
  std::uint64_t repeat_profile_matches = 0;  // repeat-extension selections that attain the shape
  std::map<std::vector<std::uint64_t>, std::uint64_t> by_multiplicity;  // member multiplicity pattern -> ordered tuples

  std::uint64_t headline() const {
    return kind == SubstantialCase::R5Independent ? anchored_count : tuple_count;
  }
};

namespace detail {

/// Histogram (a_0..a_r) over the nonempty atoms of an ordered tuple of
/// family members, computed from element membership patterns.
inline std::vector<std::uint64_t> tuple_atom_histogram(const std::vector<std::uint64_t>& member_masks,
                                                       const std::vector<std::size_t>& tuple,
                                                       std::uint64_t ambient_mask, unsigned r) {
  std::uint64_t seen = 0;  // bitset over membership patterns
  std::uint64_t amb = ambient_mask;
  while (amb) {
    std::uint64_t x = static_cast<std::uint64_t>(__builtin_ctzll(amb));
    amb &= amb - 1;
    std::uint64_t pat = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      if (member_masks[tuple[i]] >> x & 1) pat |= std::uint64_t(1) << i;
    if (pat) seen |= std::uint64_t(1) << pat;
  }
  std::vector<std::uint64_t> hist(r + 1, 0);
  while (seen) {
    std::uint64_t pat = static_cast<std::uint64_t>(__builtin_ctzll(seen));
    seen &= seen - 1;
    ++hist[static_cast<std::size_t>(__builtin_popcountll(pat))];
  }
  return hist;
}

}  // namespace detail

/// Counts r-tuples of largest sum-free sets inside A matching the extremal
/// atom shape for the applicable case.  Requires A to be a union of largest
/// sum-free sets of an even-order group with n <= 64.
inline SubstantialReport count_substantial_tuples(const GroupSubset& a, unsigned r) {
  if (r != 4 && r != 5) throw std::invalid_argument("substantial tuples are defined for r in {4,5}");
  const GroupSpec& spec = a.group();
  if (!spec.even_order()) throw std::invalid_argument("substantial-tuple counting requires even order");
  if (spec.order() > 64) throw BudgetExceeded("substantial-tuple counting limited to order <= 64");

  SubstantialReport rep;
  rep.r = r;
  GroupSubset uni(spec);
  for (const auto& b : largest_sum_free_structured(spec))
    if (b.subset_of(a)) {
      rep.family.push_back(b);
      uni = uni | b;
    }
  if (!(uni == a)) throw std::invalid_argument("A is not a union of largest sum-free sets");
  std::size_t m = rep.family.size();

  // applicable case and target nonempty-atom histogram
  auto covered_by_pair = [&]() {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if ((rep.family[i] | rep.family[j]) == a) return true;
    return false;
  };
  std::optional<std::array<std::size_t, 3>> indep_triple;
  for (std::size_t i = 0; i < m && !indep_triple; ++i)
    for (std::size_t j = i + 1; j < m && !indep_triple; ++j)
      for (std::size_t k = j + 1; k < m && !indep_triple; ++k)
        if ((rep.family[i] | rep.family[j] | rep.family[k]) == a &&
            tuple_is_independent({rep.family[i], rep.family[j], rep.family[k]}))
          indep_triple = {i, j, k};

  rep.target_profile.assign(r + 1, 0);
  if (r == 4) {
    if (!covered_by_pair()) throw std::invalid_argument("r=4 shape requires A to be a union of two largest sum-free sets");
    rep.kind = SubstantialCase::R4Pair;
    rep.target_profile[2] = 1;
    rep.target_profile[3] = 2;
  } else if (covered_by_pair()) {
    rep.kind = SubstantialCase::R5Dependent;
    rep.target_profile[3] = 2;
    rep.target_profile[4] = 1;
  } else if (indep_triple) {
    rep.kind = SubstantialCase::R5Independent;
    rep.target_profile[2] = 2;
    rep.target_profile[3] = 4;
    rep.target_profile[4] = 1;
  } else {
    throw std::invalid_argument("A matches neither the two-set nor the independent three-set shape");
  }

  std::vector<std::uint64_t> masks;
  for (const auto& b : rep.family) masks.push_back(b.mask64());
  std::uint64_t amask = a.mask64();

  // plain ordered-tuple count
  std::vector<std::size_t> tuple(r, 0);
  auto advance = [&]() {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < m) return true;
      tuple[i] = 0;
    }
    return false;
  };
  if (m > 0) {
    do {
      auto hist = detail::tuple_atom_histogram(masks, tuple, amask, r);
      if (hist == rep.target_profile) {
        ++rep.tuple_count;
        std::vector<std::uint64_t> mult(m, 0);
        for (auto ix : tuple) ++mult[ix];
        std::sort(mult.begin(), mult.end(), std::greater<>());
        while (!mult.empty() && mult.back() == 0) mult.pop_back();
        ++rep.by_multiplicity[mult];
      }
    } while (advance());
  }

  if (rep.kind == SubstantialCase::R5Independent) {
    constexpr std::uint64_t kFact5 = 120, kFact5Half = 60;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q)
        for (std::size_t s = 0; s < m; ++s) {
          if (s == p || s == q) continue;
          if (!tuple_is_independent({rep.family[p], rep.family[q], rep.family[s]})) continue;
          for (std::size_t x = 0; x < m; ++x) {
            if (x == p || x == q || x == s) continue;
            for (std::size_t y = 0; y < m; ++y) {
              if (y == x || y == p || y == q || y == s) continue;
              std::vector<std::size_t> ms{p, q, s, x, y};
              if (detail::tuple_atom_histogram(masks, ms, amask, r) == rep.target_profile)
                rep.anchored_distinct_part += kFact5;
            }
          }
          for (std::size_t w : {p, q, s})
            for (std::size_t e = 0; e < m; ++e) {
              if (e == p || e == q || e == s) continue;
              rep.anchored_repeat_part += kFact5Half;
              std::vector<std::size_t> ms{p, q, s, w, e};
              if (detail::tuple_atom_histogram(masks, ms, amask, r) == rep.target_profile)
                rep.repeat_profile_matches += kFact5Half;
            }
        }
    rep.anchored_count = rep.anchored_distinct_part + rep.anchored_repeat_part;
  }
  return rep;
}

struct GoodBadCounts {
  Count good;
  Count bad;
  bool r4_shape_extrapolated = false;  // the r=4 target shape extends the r=5 definition
  Count total() const { return good + bad; }
};

/// Splits the sum-free r-colorings of A into good ones (classes embed into
/// some tuple of largest sum-free sets with the extremal atom shape) and bad
/// ones.  good + bad = kappa_r(A) by construction.
inline GoodBadCounts count_good_colorings(const GroupSubset& a, unsigned r, KappaBudget budget = {}) {
  if (r != 4 && r != 5) throw std::invalid_argument("good/bad classification is defined for r in {4,5}");
  const GroupSpec& spec = a.group();
  if (!spec.even_order()) throw std::invalid_argument("good/bad classification requires even order");
  if (spec.order() > 64) throw BudgetExceeded("good/bad classification limited to order <= 64");

  auto family = largest_sum_free_structured(spec);
  std::size_t m = family.size();
  std::vector<std::uint64_t> fmasks;
  for (const auto& b : family) fmasks.push_back(b.mask64());

  std::vector<std::vector<std::uint64_t>> targets;
  if (r == 4) {
    targets.push_back({0, 0, 1, 2, 0});
  } else {
    targets.push_back({0, 0, 0, 2, 1, 0});
    targets.push_back({0, 0, 2, 4, 1, 0});
  }

  // all shape-attaining ordered tuples over the family (atoms taken over the
  // whole group, i.e. over the union of the tuple members)
  std::uint64_t universe = (spec.order() == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << spec.order()) - 1;
  std::vector<std::vector<std::size_t>> shape_tuples;
  if (m > 0) {
    std::vector<std::size_t> tuple(r, 0);
    while (true) {
      auto hist = detail::tuple_atom_histogram(fmasks, tuple, universe, r);
      for (const auto& target : targets)
        if (hist == target) {
          shape_tuples.push_back(tuple);
          break;
        }
      std::size_t i = 0;
      for (; i < tuple.size(); ++i) {
        if (++tuple[i] < m) break;
        tuple[i] = 0;
      }
      if (i == tuple.size()) break;
    }
  }

  GoodBadCounts out{0, 0, r == 4};
  detail::ColoringDfs dfs(a, r, budget);
  const auto& elems = dfs.elements();
  std::map<std::array<std::uint64_t, 5>, bool> memo;  // per-class family-containment masks -> goodness
  dfs.run([&](const std::vector<std::uint64_t>& classes) {
    std::array<std::uint64_t, 5> cont{};
    for (unsigned c = 0; c < r; ++c) {
      std::uint64_t gmask = 0, cls = classes[c];
      while (cls) {
        std::size_t i = static_cast<std::size_t>(__builtin_ctzll(cls));
        cls &= cls - 1;
        gmask |= std::uint64_t(1) << elems[i];
      }
      std::uint64_t cm = 0;
      for (std::size_t j = 0; j < m; ++j)
        if ((gmask & ~fmasks[j]) == 0) cm |= std::uint64_t(1) << j;
      cont[c] = cm;
    }
    auto it = memo.find(cont);
    bool good;
    if (it != memo.end()) {
      good = it->second;
    } else {
      good = false;
      for (const auto& tup : shape_tuples) {
        bool ok = true;
        for (unsigned c = 0; c < r && ok; ++c) ok = (cont[c] >> tup[c]) & 1;
        if (ok) {
          good = true;
          break;
        }
      }
      memo.emplace(cont, good);
    }
    if (good) ++out.good;
    else ++out.bad;
  });
  return out;
}

}  // namespace schurlab
