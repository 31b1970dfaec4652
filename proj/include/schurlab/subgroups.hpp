#pragma once

// Subgroup enumeration, quotients, and automorphism groups at desk scale.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "schurlab/group.hpp"
#include "schurlab/subset.hpp"

namespace schurlab {

struct Subgroup {
  GroupSubset members;
  std::uint64_t order = 0;
  std::uint64_t index = 0;  // n / order
};

inline bool is_subgroup(const Group& g, const GroupSubset& h) {
  if (!h.contains(0)) return false;
  auto elems = h.members();
  for (auto a : elems) {
    if (!h.contains(g.neg(a))) return false;
    for (auto b : elems)
      if (!h.contains(g.add(a, b))) return false;
  }
  return true;
}

/// All subgroups of index exactly 2, as kernels of the nontrivial
/// homomorphisms onto Z2.  There are 2^s - 1 of them, where s counts the
/// even invariant factors.
inline std::vector<Subgroup> index_two_subgroups(const GroupSpec& spec) {
  std::vector<Subgroup> out;
  const auto& factors = spec.factors();
  std::vector<std::size_t> even_pos;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] % 2 == 0) even_pos.push_back(i);
  std::uint64_t n = spec.order();
  for (std::uint64_t b = 1; b < (std::uint64_t(1) << even_pos.size()); ++b) {
    GroupSubset kernel(spec);
    for (std::uint64_t e = 0; e < n; ++e) {
      auto c = spec.coords(e);
      std::uint64_t parity = 0;
      for (std::size_t j = 0; j < even_pos.size(); ++j)
        if (b >> j & 1) parity ^= c[even_pos[j]] & 1;
      if (parity == 0) kernel.insert(e);
    }
    out.push_back(Subgroup{kernel, n / 2, 2});
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members.canonical_less(b.members); });
  return out;
}

/// All subgroups, by closure-based breadth-first generation.  Bounded
/// because every subgroup mask must fit in one machine word.
inline std::vector<Subgroup> enumerate_subgroups(const GroupSpec& spec, std::uint64_t max_n = 64) {
  std::uint64_t n = spec.order();
  if (n > max_n || n > 64) throw BudgetExceeded("subgroup enumeration limited to order <= " + std::to_string(std::min<std::uint64_t>(max_n, 64)));
  Group g(spec);

  auto translate = [&](std::uint64_t mask, std::uint64_t x) {
    std::uint64_t out = 0;
    while (mask) {
      std::uint64_t i = static_cast<std::uint64_t>(__builtin_ctzll(mask));
      mask &= mask - 1;
      out |= std::uint64_t(1) << g.add(i, x);
    }
    return out;
  };
  // closure of subgroup H extended by x: union of the cosets H + k*x
  auto extend = [&](std::uint64_t h, std::uint64_t x) {
    std::uint64_t c = h, t = h;
    do {
      t = translate(t, x);
      c |= t;
    } while (t != h);
    return c;
  };

  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  seen.insert(1);  // trivial subgroup {0}
  queue.push_back(1);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint64_t h = queue[qi];
    for (std::uint64_t x = 1; x < n; ++x) {
      if (h >> x & 1) continue;
      std::uint64_t c = extend(h, x);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (std::uint64_t mask : seen) {
    auto members = GroupSubset::from_mask(spec, mask);
    std::uint64_t ord = members.size();
    out.push_back(Subgroup{std::move(members), ord, n / ord});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members.canonical_less(b.members);
  });
  return out;
}

struct QuotientProjection {
  std::vector<std::uint64_t> coset_of;  // element index -> quotient element index; coset 0 is H itself
  GroupSpec quotient;                   // invariant-factor form of G/H
  std::vector<std::uint64_t> coset_rep; // one representative per quotient element index
};

/// The canonical projection G -> G/H, labeled so that coset_of is a genuine
/// homomorphism onto the quotient spec's mixed-radix element encoding.  An
/// invariant-factor basis of the coset group is found by descending-order
/// generator search with backtracking (a basis always exists, so the search
/// terminates).
inline QuotientProjection quotient_projection(const GroupSpec& spec, const Subgroup& h) {
  Group g(spec);
  if (!is_subgroup(g, h.members)) throw std::invalid_argument("H is not closed");
  std::uint64_t n = spec.order();
  std::uint64_t k = n / h.order;

  // raw coset labels by first-unseen representative
  std::vector<std::uint64_t> raw(n, UINT64_MAX);
  std::vector<std::uint64_t> rep;
  for (auto e : h.members.members()) raw[e] = 0;
  rep.push_back(0);
  for (std::uint64_t e = 0; e < n; ++e) {
    if (raw[e] != UINT64_MAX) continue;
    std::uint64_t id = rep.size();
    rep.push_back(e);
    for (auto x : h.members.members()) raw[g.add(e, x)] = id;
  }

  auto qadd = [&](std::uint64_t a, std::uint64_t b) { return raw[g.add(rep[a], rep[b])]; };
  auto qorder = [&](std::uint64_t a) {
    std::uint64_t acc = a, ord = 1;
    while (acc != 0) {
      acc = qadd(acc, a);
      ++ord;
    }
    return ord;
  };

  // invariant factors via the order-divisibility profile, which separates
  // abelian isomorphism classes
  auto divisors = [](std::uint64_t m) {
    std::vector<std::uint64_t> ds;
    for (std::uint64_t d = 1; d * d <= m; ++d)
      if (m % d == 0) {
        ds.push_back(d);
        if (d * d != m) ds.push_back(m / d);
      }
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  auto ds = divisors(k);
  std::vector<std::uint64_t> ordv(k);
  for (std::uint64_t c = 0; c < k; ++c) ordv[c] = qorder(c);
  std::vector<std::uint64_t> profile;
  for (auto d : ds) {
    std::uint64_t cnt = 0;
    for (std::uint64_t c = 0; c < k; ++c)
      if (d % ordv[c] == 0) ++cnt;
    profile.push_back(cnt);
  }
  QuotientProjection out;
  bool identified = false;
  for (const auto& cand : all_abelian_groups(k)) {
    std::vector<std::uint64_t> cp;
    for (auto d : ds) {
      std::uint64_t cnt = 1;
      for (auto f : cand.factors()) cnt *= std::gcd(f, d);
      cp.push_back(cnt);
    }
    if (cp == profile) {
      out.quotient = cand;
      identified = true;
      break;
    }
  }
  if (!identified) throw std::logic_error("quotient structure not identified");

  // basis (g_1..g_m) of the coset group with ord(g_i) = factors[i] and
  // pairwise trivially intersecting spans; searched largest factor first
  const auto& factors = out.quotient.factors();
  std::size_t m = factors.size();
  std::vector<std::uint64_t> basis(m, 0);
  std::vector<char> in_span(k, 0);
  in_span[0] = 1;
  std::vector<std::uint64_t> span_list{0};
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == m) return span_list.size() == k;
    std::size_t fi = m - 1 - pos;  // descending factor order
    for (std::uint64_t cand = 1; cand < k; ++cand) {
      if (ordv[cand] != factors[fi]) continue;
      // candidate's cyclic span must meet the current span only in 0
      bool clean = true;
      std::uint64_t acc = cand;
      for (std::uint64_t l = 1; l < factors[fi] && clean; ++l) {
        if (in_span[acc]) clean = false;
        acc = qadd(acc, cand);
      }
      if (!clean) continue;
      std::size_t old_size = span_list.size();
      acc = cand;
      for (std::uint64_t l = 1; l < factors[fi]; ++l) {
        for (std::size_t i = 0; i < old_size; ++i) {
          std::uint64_t x = qadd(span_list[i], acc);
          if (!in_span[x]) {
            in_span[x] = 1;
            span_list.push_back(x);
          }
        }
        acc = qadd(acc, cand);
      }
      basis[fi] = cand;
      if (self(self, pos + 1)) return true;
      while (span_list.size() > old_size) {
        in_span[span_list.back()] = 0;
        span_list.pop_back();
      }
    }
    return false;
  };
  if (m > 0 && !search(search, 0)) throw std::logic_error("no quotient basis found");

  // relabel: quotient element index of each raw coset via basis coordinates
  std::vector<std::uint64_t> relabel(k, UINT64_MAX);
  std::vector<std::uint64_t> coords(m, 0);
  while (true) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t term = 0;
      for (std::uint64_t l = 0; l < coords[i]; ++l) term = qadd(term, basis[i]);
      c = qadd(c, term);
    }
    relabel[c] = out.quotient.index(coords);
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (++coords[i] < factors[i]) break;
      coords[i] = 0;
    }
    if (i == m) break;
  }
  out.coset_of.assign(n, 0);
  for (std::uint64_t e = 0; e < n; ++e) out.coset_of[e] = relabel[raw[e]];
  out.coset_rep.assign(k, 0);
  for (std::uint64_t e = n; e-- > 0;) out.coset_rep[out.coset_of[e]] = e;
  return out;
}

/// Full automorphism group as permutations of element indices, by trying all
/// generator-image tuples.  sigma(0) = 0 and sigma(a+b) = sigma(a)+sigma(b)
/// hold for every returned permutation.
inline std::vector<std::vector<std::uint64_t>> automorphisms(const GroupSpec& spec, std::uint64_t max_n = 16) {
  std::uint64_t n = spec.order();
  if (n > max_n) throw BudgetExceeded("automorphism enumeration limited to order <= " + std::to_string(max_n));
  Group g(spec);
  const auto& factors = spec.factors();
  std::size_t k = factors.size();
  std::vector<std::uint64_t> gens(k);
  {
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      gens[i] = scale;  // coordinate vector e_i
      scale *= factors[i];
    }
  }
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> img(k, 0);
  std::vector<char> seen(n);
  auto try_images = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      // sigma(x) = sum x_i * img_i; well-defined iff f_i * img_i = 0
      std::vector<std::uint64_t> sigma(n);
      std::fill(seen.begin(), seen.end(), 0);
      for (std::uint64_t x = 0; x < n; ++x) {
        auto c = spec.coords(x);
        std::uint64_t y = 0;
        for (std::size_t j = 0; j < k; ++j) {
          std::uint64_t term = 0;
          for (std::uint64_t rep = 0; rep < c[j]; ++rep) term = g.add(term, img[j]);
          y = g.add(y, term);
        }
        sigma[x] = y;
      }
      for (std::uint64_t x = 0; x < n; ++x) {
        if (seen[sigma[x]]) return;
        seen[sigma[x]] = 1;
      }
      out.push_back(std::move(sigma));
      return;
    }
    for (std::uint64_t cand = 0; cand < n; ++cand) {
      // order of cand must divide f_i
      std::uint64_t acc = 0;
      for (std::uint64_t rep = 0; rep < factors[i]; ++rep) acc = g.add(acc, cand);
      if (acc != 0) continue;
      img[i] = cand;
      self(self, i + 1);
    }
  };
  try_images(try_images, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Automorphisms when affordable, otherwise just the identity.
inline std::vector<std::vector<std::uint64_t>> automorphisms_or_identity(const GroupSpec& spec,
                                                                         std::uint64_t max_n = 16) {
  if (spec.order() <= max_n) return automorphisms(spec, max_n);
  std::vector<std::uint64_t> id(spec.order());
  for (std::uint64_t i = 0; i < id.size(); ++i) id[i] = i;
  return {id};
}

}  // namespace schurlab
