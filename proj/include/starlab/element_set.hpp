#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace starlab {

/// Canonical index of a ring element. 0 is always the additive zero.
using Elem = std::uint32_t;

/// Subset of {0, ..., universe-1}, iterated in increasing order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  bool contains(Elem x) const noexcept {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Elem>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  /// First element satisfying `pred`, or `universe()` if none.
  template <class P>
  Elem find_first(P&& pred) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        const auto x = static_cast<Elem>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        if (pred(x)) return x;
        w &= w - 1;
      }
    }
    return static_cast<Elem>(universe_);
  }

  template <class P>
  bool any_of(P&& pred) const {
    return find_first(pred) != universe_;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace starlab
