#ifndef PSUBLAB_PERM_HPP
#define PSUBLAB_PERM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psublab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct BuildError : Error {
  using Error::Error;
};

// Bijection on {0..degree-1}, stored as the image array: images[i] is the
// image of point i.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);                  // identity
  explicit Perm(std::vector<int> images);     // validates bijectivity

  // Cycles use 0-indexed points here; the DSL layer converts from 1-indexed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return int(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;  // lcm of cycle lengths

  // Disjoint cycle decomposition, fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> images_;
};

// Product "a then b": the returned permutation maps i to b(a(i)).
// This is the convention every worked value in the test suite is frozen
// against; conjugation h^g below means g^{-1}·h·g in the same reading.
Perm compose(const Perm& a, const Perm& b);

Perm conjugate(const Perm& h, const Perm& g);  // g^{-1}·h·g = "g, then h, then g^{-1}" reversed

// 1-indexed cycle notation, e.g. "(1 2 3)(4 5)"; identity prints "()".
std::string cycle_string(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = p.degree();
    for (int v : p.images()) h = h * 1000003u + std::size_t(v);
    return h;
  }
};

}  // namespace psublab

#endif
