#pragma once

// GroupSubset: a subset of group elements as a fixed-width bit-vector with
// cached cardinality.  Serializes to lowercase hex (bit i = element i, most
// significant nibble first, zero-padded to ceil(n/4) digits).

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "schurlab/group.hpp"

namespace schurlab {

class GroupSubset {
 public:
  explicit GroupSubset(GroupSpec group) : group_(std::move(group)), words_((group_.order() + 63) / 64, 0) {}

  static GroupSubset of(const GroupSpec& g, std::initializer_list<std::uint64_t> elems) {
    GroupSubset s(g);
    for (auto e : elems) s.insert(e);
    return s;
  }

  static GroupSubset of(const GroupSpec& g, const std::vector<std::uint64_t>& elems) {
    GroupSubset s(g);
    for (auto e : elems) s.insert(e);
    return s;
  }

  /// Full group.
  static GroupSubset universe(const GroupSpec& g) {
    GroupSubset s(g);
    for (std::uint64_t e = 0; e < g.order(); ++e) s.insert(e);
    return s;
  }

  static GroupSubset from_mask(const GroupSpec& g, std::uint64_t mask) {
    if (g.order() > 64) throw std::invalid_argument("mask constructor requires order <= 64");
    GroupSubset s(g);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.size_ = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (g.order() < 64 && (mask >> g.order()) != 0) throw std::out_of_range("mask has bits beyond group order");
    return s;
  }

  static GroupSubset from_hex(const GroupSpec& g, std::string_view hex) {
    GroupSubset s(g);
    std::size_t digits = (g.order() + 3) / 4;
    if (hex.size() != digits) throw std::invalid_argument("hex subset has wrong width");
    for (std::size_t d = 0; d < hex.size(); ++d) {
      char c = hex[hex.size() - 1 - d];  // least significant digit last
      std::uint64_t v;
      if (c >= '0' && c <= '9') v = static_cast<std::uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v = static_cast<std::uint64_t>(c - 'a' + 10);
      else throw std::invalid_argument("hex subset has invalid digit");
      for (int b = 0; b < 4; ++b)
        if (v >> b & 1) s.insert(4 * d + b);
    }
    return s;
  }

  const GroupSpec& group() const { return group_; }
  std::uint64_t n() const { return group_.order(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(std::uint64_t e) const {
    check(e);
    return words_[e >> 6] >> (e & 63) & 1;
  }

  void insert(std::uint64_t e) {
    check(e);
    std::uint64_t& w = words_[e >> 6];
    std::uint64_t bit = std::uint64_t(1) << (e & 63);
    if (!(w & bit)) {
      w |= bit;
      ++size_;
    }
  }

  void erase(std::uint64_t e) {
    check(e);
    std::uint64_t& w = words_[e >> 6];
    std::uint64_t bit = std::uint64_t(1) << (e & 63);
    if (w & bit) {
      w &= ~bit;
      --size_;
    }
  }

  std::vector<std::uint64_t> members() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(64 * w + static_cast<std::uint64_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool subset_of(const GroupSubset& other) const {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  std::uint64_t mask64() const {
    if (n() > 64) throw std::invalid_argument("mask64 requires order <= 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::string hex() const {
    std::size_t digits = (n() + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (std::size_t d = 0; d < digits; ++d) {
      std::uint64_t nib = 0;
      for (int b = 0; b < 4; ++b) {
        std::uint64_t e = 4 * d + b;
        if (e < n() && (words_[e >> 6] >> (e & 63) & 1)) nib |= std::uint64_t(1) << b;
      }
      out[digits - 1 - d] = kHex[nib];
    }
    return out;
  }

  friend GroupSubset operator|(GroupSubset a, const GroupSubset& b) {
    a.require_same_group(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] |= b.words_[w];
    a.recount();
    return a;
  }
  friend GroupSubset operator&(GroupSubset a, const GroupSubset& b) {
    a.require_same_group(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] &= b.words_[w];
    a.recount();
    return a;
  }
  friend GroupSubset operator^(GroupSubset a, const GroupSubset& b) {
    a.require_same_group(b);
    for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] ^= b.words_[w];
    a.recount();
    return a;
  }
  friend GroupSubset operator~(GroupSubset a) {
    for (std::size_t w = 0; w < a.words_.size(); ++w) a.words_[w] = ~a.words_[w];
    if (a.n() & 63) a.words_.back() &= (std::uint64_t(1) << (a.n() & 63)) - 1;
    a.recount();
    return a;
  }

  bool operator==(const GroupSubset& other) const {
    return group_ == other.group_ && words_ == other.words_;
  }

  /// Canonical order: lexicographic on sorted member lists, so the set whose
  /// smallest differing element is present comes first.
  bool canonical_less(const GroupSubset& other) const {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t diff = words_[w] ^ other.words_[w];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return words_[w] & low;  // we contain the smallest differing element
      }
    }
    return false;
  }

 private:
  void check(std::uint64_t e) const {
    if (e >= n()) throw std::out_of_range("element index out of range");
  }
  void require_same_group(const GroupSubset& other) const {
    if (!(group_ == other.group_)) throw std::invalid_argument("subsets belong to different groups");
  }
  void recount() {
    size_ = 0;
    for (std::uint64_t w : words_) size_ += static_cast<std::size_t>(__builtin_popcountll(w));
  }

  GroupSpec group_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

inline bool canonical_subset_less(const GroupSubset& a, const GroupSubset& b) { return a.canonical_less(b); }

}  // namespace schurlab
