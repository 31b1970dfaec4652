#pragma once

// Parity-configuration search over F_2^t: multisets of r nonzero vectors,
// each encoding a largest sum-free set of F_2^t by the odd-parity rule.
// Canonical forms under GL(t,2), atom-coverage profiles, the profile
// equation systems, realizability, and the Phi-optimal structure per r.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schurlab/common.hpp"

namespace schurlab {

inline unsigned gf2_rank(const std::vector<std::uint16_t>& vecs) {
  // fully reduced basis indexed by leading bit
  std::uint16_t pivot[16] = {};
  unsigned rank = 0;
  for (std::uint16_t v : vecs) {
    std::uint16_t w = v;
    while (w) {
      unsigned lead = static_cast<unsigned>(31 - __builtin_clz(static_cast<unsigned>(w)));
      if (!pivot[lead]) {
        pivot[lead] = w;
        ++rank;
        break;
      }
      w ^= pivot[lead];
    }
  }
  return rank;
}

/// A multiset of r nonzero parity vectors in F_2^t.
struct ParityConfig {
  unsigned t = 0;
  std::vector<std::uint16_t> vectors;  // sorted ascending
  unsigned rank = 0;

  bool operator==(const ParityConfig&) const = default;
  bool operator<(const ParityConfig& o) const {
    if (t != o.t) return t < o.t;
    return vectors < o.vectors;
  }

  /// Vector as a parity string, leftmost character = coordinate 1.
  static std::string vector_str(std::uint16_t v, unsigned t) {
    std::string s(t, '0');
    for (unsigned i = 0; i < t; ++i)
      if (v >> i & 1) s[i] = '1';
    return s;
  }
};

inline ParityConfig make_parity_config(unsigned t, std::vector<std::uint16_t> vectors) {
  if (t == 0 || t > 14) throw std::invalid_argument("arity t out of range");
  for (auto v : vectors)
    if (v == 0 || v >= (std::uint16_t(1) << t)) throw std::invalid_argument("parity vector out of range");
  std::sort(vectors.begin(), vectors.end());
  ParityConfig c;
  c.t = t;
  c.rank = gf2_rank(vectors);
  c.vectors = std::move(vectors);
  return c;
}

struct AtomProfile {
  std::vector<unsigned> coverage;        // c(eps) for eps = 1..2^t-1
  std::vector<std::uint64_t> histogram;  // a_k = #{eps : c(eps) = k}, k = 0..r
};

inline AtomProfile atom_profile(const ParityConfig& c) {
  AtomProfile p;
  std::size_t r = c.vectors.size();
  p.histogram.assign(r + 1, 0);
  for (std::uint32_t eps = 1; eps < (std::uint32_t(1) << c.t); ++eps) {
    unsigned cov = 0;
    for (auto v : c.vectors) cov += __builtin_popcount(eps & v) & 1;
    p.coverage.push_back(cov);
    ++p.histogram[cov];
  }
  return p;
}

/// Minimum GL(t,2)-orbit representative.  Every minimal image contains the
/// standard basis of the span (vectors outside the span of {e_1..e_i} are
/// >= 2^i as integers, so a map fixing the processed prefix and sending the
/// first outside vector to e_{i+1} can only decrease the sorted multiset);
/// hence the minimum is attained over the maps sending some independent
/// tuple of config vectors onto the standard basis.
inline ParityConfig canonicalize_config(const ParityConfig& c) {
  std::vector<std::uint16_t> distinct(c.vectors.begin(), c.vectors.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  unsigned s = c.rank;
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> w;
  std::vector<char> in_span(std::size_t(1) << c.t, 0);
  std::vector<std::uint16_t> span_list{0};
  in_span[0] = 1;

  auto apply = [&]() {
    // coordinates of every span element in basis w
    std::vector<std::int32_t> coord(std::size_t(1) << c.t, -1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << s); ++mask) {
      std::uint16_t x = 0;
      for (unsigned i = 0; i < s; ++i)
        if (mask >> i & 1) x ^= w[i];
      coord[x] = static_cast<std::int32_t>(mask);
    }
    std::vector<std::uint16_t> img;
    img.reserve(c.vectors.size());
    for (auto v : c.vectors) img.push_back(static_cast<std::uint16_t>(coord[v]));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  };

  auto rec = [&](auto&& self) -> void {
    if (w.size() == s) {
      apply();
      return;
    }
    for (auto v : distinct) {
      if (in_span[v]) continue;
      w.push_back(v);
      std::size_t old_size = span_list.size();
      for (std::size_t i = 0; i < old_size; ++i) {
        std::uint16_t x = span_list[i] ^ v;
        in_span[x] = 1;
        span_list.push_back(x);
      }
      self(self);
      while (span_list.size() > old_size) {
        in_span[span_list.back()] = 0;
        span_list.pop_back();
      }
      w.pop_back();
    }
  };
  rec(rec);
  ParityConfig out;
  out.t = c.t;
  out.vectors = std::move(best);
  out.rank = s;
  return out;
}

/// All nonnegative integer histograms (a_1,...,a_r) with
/// sum a_k = 2^t - 1 and sum k*a_k = r*2^(t-1); a_1 = 0 when forced.
/// Returned in ascending lexicographic order on (a_1, a_2, ...).
inline std::vector<std::vector<unsigned>> solve_profile_equations(unsigned r, unsigned t, bool force_a1_zero = true) {
  if (r < 2 || t < 1 || t > r) throw std::invalid_argument("need r >= 2 and 1 <= t <= r");
  std::uint64_t total = (std::uint64_t(1) << t) - 1;
  std::uint64_t wsum = std::uint64_t(r) << (t - 1);
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> acc(r, 0);
  auto rec = [&](auto&& self, unsigned k, std::uint64_t left, std::uint64_t wleft) -> void {
    if (k == r) {
      if (wleft == left * r) {  // place the remainder in a_r
        acc[r - 1] = static_cast<unsigned>(left);
        out.push_back(acc);
      }
      return;
    }
    unsigned lo = (k == 1 && force_a1_zero) ? 0 : 0;
    unsigned hi = (k == 1 && force_a1_zero) ? 0 : static_cast<unsigned>(left);
    for (unsigned a = lo; a <= hi; ++a) {
      if (std::uint64_t(k) * a > wleft) break;
      acc[k - 1] = a;
      self(self, k + 1, left - a, wleft - std::uint64_t(k) * a);
    }
  };
  rec(rec, 1, total, wsum);
  return out;
}

/// Exact cross-arity weight: a configuration of arity t with coverage
/// multiset C has per-n value prod(C)^(n/2^t).  Comparison clears the
/// denominators, so ties (r = 5) are detected exactly.
struct ExactWeight {
  unsigned t = 0;
  std::vector<unsigned> bases;  // coverage values >= 1, ascending

  bool operator==(const ExactWeight&) const = default;
};

inline int compare_weights(const ExactWeight& x, const ExactWeight& y) {
  Count lhs = 1, rhs = 1;
  for (unsigned c : x.bases) lhs *= pow_count(c, std::uint64_t(1) << y.t);
  for (unsigned c : y.bases) rhs *= pow_count(c, std::uint64_t(1) << x.t);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline ExactWeight weight_of(unsigned t, const AtomProfile& p) {
  ExactWeight w;
  w.t = t;
  for (unsigned c : p.coverage)
    if (c >= 1) w.bases.push_back(c);
  std::sort(w.bases.begin(), w.bases.end());
  return w;
}

struct ConfigRecord {
  ParityConfig config;  // canonical representative
  AtomProfile profile;
  ExactWeight weight;
};

struct EnumBudget {
  std::uint64_t max_work = 400'000'000;
};

namespace detail {

inline std::uint64_t multiset_count(std::uint64_t values, std::uint64_t picks) {
  // C(values + picks - 1, picks), saturating
  Count c = 1;
  for (std::uint64_t i = 0; i < picks; ++i) {
    c *= values + picks - 1 - i;
    c /= i + 1;
  }
  if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return c.convert_to<std::uint64_t>();
}

}  // namespace detail

/// One canonical representative per GL(t,2)-orbit of full-rank multisets of
/// r nonzero vectors.  Generation is anchored: every full-rank orbit has a
/// member containing the standard basis, so candidates are basis + (r-t)
/// further vectors, deduplicated by canonical form.
inline std::vector<ConfigRecord> enumerate_configs(unsigned r, unsigned t, EnumBudget budget = {}) {
  if (t < 1 || t > r) throw std::invalid_argument("need 1 <= t <= r");
  if (t > 14) throw BudgetExceeded("arity too large");
  std::uint64_t nonzero = (std::uint64_t(1) << t) - 1;
  std::uint64_t candidates = detail::multiset_count(nonzero, r - t);
  std::uint64_t d = std::min<std::uint64_t>(r, nonzero);
  std::uint64_t perm_bound = 1;
  for (std::uint64_t i = 0; i < t && i < d; ++i) perm_bound *= d - i;
  std::uint64_t per_canon = perm_bound * ((std::uint64_t(1) << t) + r);
  if (candidates > budget.max_work / std::max<std::uint64_t>(per_canon, 1))
    throw BudgetExceeded("configuration enumeration budget exceeded");

  std::vector<std::uint16_t> base;
  for (unsigned i = 0; i < t; ++i) base.push_back(std::uint16_t(1) << i);
  std::set<std::vector<std::uint16_t>> seen;
  std::vector<ConfigRecord> out;
  std::vector<std::uint16_t> extra(r - t, 1);
  auto emit = [&]() {
    std::vector<std::uint16_t> vecs = base;
    vecs.insert(vecs.end(), extra.begin(), extra.end());
    auto canon = canonicalize_config(make_parity_config(t, std::move(vecs)));
    if (seen.insert(canon.vectors).second) {
      ConfigRecord rec;
      rec.profile = atom_profile(canon);
      rec.weight = weight_of(t, rec.profile);
      rec.config = std::move(canon);
      out.push_back(std::move(rec));
    }
  };
  auto rec_extra = [&](auto&& self, std::size_t pos, std::uint16_t lo) -> void {
    if (pos == extra.size()) {
      emit();
      return;
    }
    for (std::uint16_t v = lo; v <= nonzero; ++v) {
      extra[pos] = v;
      self(self, pos + 1, v);
    }
  };
  if (extra.empty()) emit();
  else rec_extra(rec_extra, 0, 1);
  std::sort(out.begin(), out.end(), [](const ConfigRecord& a, const ConfigRecord& b) { return a.config < b.config; });
  return out;
}

struct RealizabilityResult {
  bool realizable = false;
  std::optional<ParityConfig> witness;
  std::uint64_t orbits_checked = 0;  // exhausted full-rank orbits proving exclusion
};

/// Decides whether a histogram (a_1..a_r) solving the profile equations is
/// attained by some full-rank configuration.
inline RealizabilityResult realizable(const std::vector<unsigned>& histogram, unsigned r, unsigned t,
                                      EnumBudget budget = {}) {
  if (histogram.size() != r) throw std::invalid_argument("histogram must list a_1..a_r");
  std::uint64_t total = 0, wsum = 0;
  for (unsigned k = 1; k <= r; ++k) {
    total += histogram[k - 1];
    wsum += std::uint64_t(k) * histogram[k - 1];
  }
  if (total != (std::uint64_t(1) << t) - 1 || wsum != (std::uint64_t(r) << (t - 1)))
    throw std::invalid_argument("histogram does not solve the profile equations");
  RealizabilityResult res;
  for (const auto& rec : enumerate_configs(r, t, budget)) {
    ++res.orbits_checked;
    bool match = rec.profile.histogram[0] == 0;
    for (unsigned k = 1; k <= r && match; ++k) match = rec.profile.histogram[k] == histogram[k - 1];
    if (match) {
      res.realizable = true;
      res.witness = rec.config;
      return res;
    }
  }
  return res;
}

struct OptimalStructure {
  unsigned r = 0;
  ExactWeight weight;                 // of the optimum (any optimal config compares equal)
  std::vector<ConfigRecord> optimal;  // all optimal canonical configs across t in [1, r]
};

/// Scans every arity t in [1, r] and returns all configurations maximizing
/// the exact weight.  t = 1 (a single largest sum-free set, weight r^(n/2))
/// is included so the scan degrades gracefully.
inline OptimalStructure optimal_structure(unsigned r, EnumBudget budget = {}) {
  if (r < 2) throw std::invalid_argument("need r >= 2");
  OptimalStructure best;
  best.r = r;
  for (unsigned t = 1; t <= r; ++t) {
    for (auto& rec : enumerate_configs(r, t, budget)) {
      if (best.optimal.empty()) {
        best.weight = rec.weight;
        best.optimal.push_back(std::move(rec));
        continue;
      }
      int cmp = compare_weights(rec.weight, best.weight);
      if (cmp > 0) {
        best.weight = rec.weight;
        best.optimal.clear();
        best.optimal.push_back(std::move(rec));
      } else if (cmp == 0) {
        best.optimal.push_back(std::move(rec));
      }
    }
  }
  return best;
}

}  // namespace schurlab
