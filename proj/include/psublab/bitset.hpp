#ifndef PSUBLAB_BITSET_HPP
#define PSUBLAB_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace psublab {

// Fixed-universe bitset used for element sets over a group's canonical
// enumeration. Word layout is part of the canonical node ordering, so the
// comparison operators below are stable across runs.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return size_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int n = 0;
    for (std::uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset operator&(const Bitset& other) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & other.words_[k];
    return r;
  }

  Bitset operator|(const Bitset& other) const {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | other.words_[k];
    return r;
  }

  bool operator==(const Bitset& other) const { return words_ == other.words_; }
  bool operator!=(const Bitset& other) const { return words_ != other.words_; }
  bool operator<(const Bitset& other) const { return words_ < other.words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words_) {
      h ^= std::hash<std::uint64_t>{}(w);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace psublab

#endif
