#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace synlat {

/// Fixed-width bit set whose width is chosen at run time.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  static Bitset full(std::size_t width) {
    Bitset b(width);
    for (std::size_t i = 0; i < width; ++i) b.set(i);
    return b;
  }

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    else words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < width_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = width_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull + (h >> 29);
    return h;
  }

  bool operator==(const Bitset&) const = default;
  auto operator<=>(const Bitset&) const = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace synlat

template <>
struct std::hash<synlat::Bitset> {
  std::size_t operator()(const synlat::Bitset& b) const noexcept { return b.hash(); }
};
