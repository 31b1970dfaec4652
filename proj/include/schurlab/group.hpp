#pragma once

// Finite abelian groups in invariant-factor form, their elements, and the
// type I/II/III classification driving the mu() formulas.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/common.hpp"

namespace schurlab {

/// A finite abelian group as a normalized list of invariant factors
/// (ascending, each dividing the next).  The trivial group has no factors.
/// Element indices use mixed-radix encoding with the first factor least
/// significant, so index 0 is always the identity.
class GroupSpec {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 32;

  GroupSpec() : order_(1) {}

  /// Normalizes an arbitrary factor list (each entry >= 2) to invariant
  /// factors via the primary decomposition, e.g. {2,2,9} -> {2,18}.
  static GroupSpec from_factors(const std::vector<std::uint64_t>& raw) {
    GroupSpec g;
    std::map<std::uint64_t, std::vector<std::uint64_t>> primary;  // prime -> prime powers, descending
    for (std::uint64_t f : raw) {
      if (f < 2) throw std::invalid_argument("group factor must be >= 2");
      std::uint64_t m = f;
      for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        std::uint64_t pk = 1;
        while (m % p == 0) {
          pk *= p;
          m /= p;
        }
        primary[p].push_back(pk);
      }
      if (m > 1) primary[m].push_back(m);
    }
    std::size_t chain = 0;
    for (auto& [p, powers] : primary) {
      std::sort(powers.begin(), powers.end(), std::greater<>());
      chain = std::max(chain, powers.size());
    }
    std::vector<std::uint64_t> inv;
    for (std::size_t j = 0; j < chain; ++j) {
      std::uint64_t d = 1;
      for (const auto& [p, powers] : primary) {
        if (j < powers.size()) {
          if (d > kMaxOrder / powers[j]) throw std::overflow_error("group order exceeds bound");
          d *= powers[j];
        }
      }
      inv.push_back(d);  // descending
    }
    std::reverse(inv.begin(), inv.end());
    g.factors_ = std::move(inv);
    g.order_ = 1;
    for (std::uint64_t f : g.factors_) {
      if (g.order_ > kMaxOrder / f) throw std::overflow_error("group order exceeds bound");
      g.order_ *= f;
    }
    return g;
  }

  /// Parses "Z<k>" terms joined by 'x', with optional "^e" repetition,
  /// case-insensitive.  "Z1" alone denotes the trivial group.
  static GroupSpec parse(std::string_view text) {
    std::vector<std::uint64_t> raw;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("bad group spec '" + std::string(text) + "': " + msg);
    };
    bool trivial_literal = false;
    while (i < text.size()) {
      char c = text[i];
      if (c != 'Z' && c != 'z') fail("expected 'Z'");
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected digits after 'Z'");
      std::uint64_t k = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        k = k * 10 + (text[i] - '0');
        if (k > kMaxOrder) fail("factor too large");
        ++i;
      }
      std::uint64_t reps = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected digits after '^'");
        reps = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          reps = reps * 10 + (text[i] - '0');
          if (reps > 64) fail("repetition too large");
          ++i;
        }
        if (reps < 1) fail("repetition must be >= 1");
      }
      if (k == 1) {
        if (!raw.empty() || reps != 1 || i != text.size()) fail("Z1 only valid as the whole spec");
        trivial_literal = true;
        break;
      }
      if (k < 2) fail("factor must be >= 2");
      for (std::uint64_t r = 0; r < reps; ++r) raw.push_back(k);
      if (i < text.size()) {
        if (text[i] != 'x' && text[i] != 'X') fail("expected 'x' between terms");
        ++i;
        if (i >= text.size()) fail("trailing 'x'");
      }
    }
    if (raw.empty() && !trivial_literal) fail("empty spec");
    return from_factors(raw);
  }

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  bool trivial() const { return factors_.empty(); }
  bool even_order() const { return order_ % 2 == 0; }

  /// Exponent of the group: the largest order of an element (last invariant
  /// factor, or 1 for the trivial group).
  std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  /// Normalized string form, e.g. "Z2xZ18"; "Z1" for the trivial group.
  std::string str() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += 'x';
      s += 'Z';
      s += std::to_string(factors_[i]);
    }
    return s;
  }

  std::vector<std::uint64_t> coords(std::uint64_t index) const {
    if (index >= order_) throw std::out_of_range("element index out of range");
    std::vector<std::uint64_t> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      c[i] = index % factors_[i];
      index /= factors_[i];
    }
    return c;
  }

  std::uint64_t index(const std::vector<std::uint64_t>& coords) const {
    if (coords.size() != factors_.size()) throw std::invalid_argument("coordinate arity mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      if (coords[i] >= factors_[i]) throw std::out_of_range("coordinate out of range");
      idx = idx * factors_[i] + coords[i];
    }
    return idx;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (a >= order_ || b >= order_) throw std::out_of_range("element index out of range");
    std::uint64_t result = 0, scale = 1;
    for (std::uint64_t f : factors_) {
      std::uint64_t ca = a % f, cb = b % f;
      a /= f;
      b /= f;
      result += ((ca + cb) % f) * scale;
      scale *= f;
    }
    return result;
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (a >= order_) throw std::out_of_range("element index out of range");
    std::uint64_t result = 0, scale = 1;
    for (std::uint64_t f : factors_) {
      std::uint64_t ca = a % f;
      a /= f;
      result += ((f - ca) % f) * scale;
      scale *= f;
    }
    return result;
  }

  std::uint64_t dbl(std::uint64_t a) const { return add(a, a); }

  bool operator==(const GroupSpec& other) const = default;

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t order_;
};

/// An element paired with both representations.
struct Element {
  std::vector<std::uint64_t> coords;
  std::uint64_t index = 0;
};

inline Element make_element(const GroupSpec& g, std::uint64_t index) {
  return Element{g.coords(index), index};
}

/// Bound operation tables for desk-scale searches.  Precomputes addition and
/// negation when the order is small enough; falls back to direct arithmetic.
class Group {
 public:
  static constexpr std::uint64_t kTableLimit = 2048;

  explicit Group(GroupSpec spec) : spec_(std::move(spec)), n_(spec_.order()) {
    if (n_ <= kTableLimit) {
      add_.resize(n_ * n_);
      neg_.resize(n_);
      for (std::uint64_t a = 0; a < n_; ++a) {
        neg_[a] = static_cast<std::uint32_t>(spec_.neg(a));
        for (std::uint64_t b = a; b < n_; ++b) {
          auto s = static_cast<std::uint32_t>(spec_.add(a, b));
          add_[a * n_ + b] = s;
          add_[b * n_ + a] = s;
        }
      }
    }
  }

  const GroupSpec& spec() const { return spec_; }
  std::uint64_t n() const { return n_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    return add_.empty() ? spec_.add(a, b) : add_[a * n_ + b];
  }
  std::uint64_t neg(std::uint64_t a) const { return add_.empty() ? spec_.neg(a) : neg_[a]; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t dbl(std::uint64_t a) const { return add(a, a); }

 private:
  GroupSpec spec_;
  std::uint64_t n_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

enum class GroupType { I, II, III };

/// Classification by the prime divisors of the order.  mu_formula is the
/// exact size of a largest sum-free set for types I and II.  For type III
/// the corrected expression (1/3 - 1/(3m))n is stored as mu_formula (it
/// matches exhaustive search on every tested group) and the widely printed
/// variant (1/3 - 1/m)n is kept alongside for comparison; the two disagree,
/// e.g. on Z7 where the printed form evaluates to 4/3.
struct GroupClassification {
  GroupType kind = GroupType::III;
  std::uint64_t q = 0;           // type I: smallest prime divisor == 2 (mod 3)
  std::uint64_t exponent_m = 1;  // type III: exponent of the group
  Rational mu_formula;
  Rational mu_printed;  // type III only; equals mu_formula otherwise
  bool printed_formula_differs = false;

  std::string kind_str() const {
    switch (kind) {
      case GroupType::I: return "I(" + std::to_string(q) + ")";
      case GroupType::II: return "II";
      default: return "III(m=" + std::to_string(exponent_m) + ")";
    }
  }
};

inline GroupClassification classify_group(const GroupSpec& g) {
  GroupClassification c;
  std::uint64_t n = g.order();
  std::uint64_t m = n;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t p : primes) {
    if (p % 3 == 2) {
      c.kind = GroupType::I;
      c.q = p;
      c.mu_formula = Rational(n) / 3 + Rational(n) / (3 * p);
      c.mu_printed = c.mu_formula;
      return c;
    }
  }
  if (n % 3 == 0) {
    c.kind = GroupType::II;
    c.mu_formula = Rational(n) / 3;
    c.mu_printed = c.mu_formula;
    return c;
  }
  c.kind = GroupType::III;
  c.exponent_m = g.exponent();
  c.mu_formula = Rational(n) / 3 - Rational(n) / (3 * c.exponent_m);
  c.mu_printed = Rational(n) / 3 - Rational(n) / c.exponent_m;
  c.printed_formula_differs = (c.mu_printed != c.mu_formula);
  return c;
}

/// All abelian groups of order n, one GroupSpec per isomorphism class.
inline std::vector<GroupSpec> all_abelian_groups(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  if (n == 1) return {GroupSpec{}};
  std::map<std::uint64_t, std::uint64_t> fact;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++fact[p];
      m /= p;
    }
  if (m > 1) ++fact[m];

  // partitions of each prime exponent, descending parts
  auto partitions = [](std::uint64_t k) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t left, std::uint64_t maxpart) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (std::uint64_t first = std::min(left, maxpart); first >= 1; --first) {
        cur.push_back(first);
        self(self, left - first, first);
        cur.pop_back();
      }
    };
    rec(rec, k, k);
    return out;
  };

  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::vector<std::uint64_t>>> parts;
  for (auto& [p, e] : fact) {
    primes.push_back(p);
    parts.push_back(partitions(e));
  }
  std::vector<GroupSpec> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::size_t chain = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) chain = std::max(chain, parts[i][pick[i]].size());
    std::vector<std::uint64_t> raw;
    for (std::size_t j = 0; j < chain; ++j) {
      std::uint64_t d = 1;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& part = parts[i][pick[i]];
        if (j < part.size()) {
          std::uint64_t pk = 1;
          for (std::uint64_t e = 0; e < part[j]; ++e) pk *= primes[i];
          d *= pk;
        }
      }
      raw.push_back(d);
    }
    out.push_back(GroupSpec::from_factors(raw));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < parts[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) { return a.factors() < b.factors(); });
  return out;
}

}  // namespace schurlab
