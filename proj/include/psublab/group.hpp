#ifndef PSUBLAB_GROUP_HPP
#define PSUBLAB_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "psublab/bitset.hpp"
#include "psublab/perm.hpp"

namespace psublab {

// Subgroup of a fixed parent group, as a bitset over the parent's canonical
// element enumeration. The identity bit is always set and the set is closed
// under products; order is the popcount.
struct SubgroupRef {
  Bitset bits;
  int order = 0;
};

// Permutation group with a fully materialized element list in canonical
// order: breadth-first from the identity over the generator list, each layer
// sorted lexicographically by image array. All subgroup-level machinery
// indexes into this order, so it must be reproducible run to run.
class Group {
public:
  Group() = default;
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  Group(Group&& other) noexcept { *this = std::move(other); }
  Group& operator=(Group&& other) noexcept {
    degree_ = other.degree_;
    gens_ = std::move(other.gens_);
    elements_ = std::move(other.elements_);
    gen_elt_idx_ = std::move(other.gen_elt_idx_);
    parent_ = std::move(other.parent_);
    via_gen_ = std::move(other.via_gen_);
    elt_order_ = std::move(other.elt_order_);
    index_ = std::move(other.index_);
    tables_ = std::move(other.tables_);  // once_flag stays fresh; builder re-checks
    return *this;
  }

  // Breadth-first closure of the generators. Throws CapExceeded when the
  // element count would pass `cap`.
  static Group closure(int degree, std::vector<Perm> gens, int cap);

  int degree() const { return degree_; }
  int order() const { return int(elements_.size()); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<int>& generator_indices() const { return gen_elt_idx_; }

  int index_of(const Perm& p) const;  // -1 when p is not an element
  bool is_abelian() const;

  // Element arithmetic on canonical indices. mul(i, j) is "i then j".
  int mul(int i, int j) const;
  int inv(int i) const;
  int conj(int h, int g) const;  // g^{-1} h g
  int element_order(int i) const { return elt_order_[i]; }

  // Indices of elements whose order is a power of p.
  std::vector<int> p_power_elements(long long p) const;

private:
  struct Tables {
    std::vector<std::uint16_t> mul;  // column-major: mul[j*n + i] = i*j
    std::vector<int> inv;
  };
  const Tables& tables() const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<int> gen_elt_idx_;
  std::vector<int> parent_;   // BFS predecessor (element index), -1 for identity
  std::vector<int> via_gen_;  // generator list index used from the predecessor
  std::vector<int> elt_order_;
  std::unordered_map<Perm, int, PermHash> index_;

  mutable std::once_flag tables_once_;
  mutable std::unique_ptr<Tables> tables_;
};

// Smallest subgroup of G containing the given elements.
Bitset closure_of(const Group& G, std::span<const int> seed);

// Closure of a subgroup (given as a closed bitset, its element list, and a
// small generating set) together with one extra element. Coset-based: only
// the new cosets are filled, one product per new element.
Bitset extend_subgroup(const Group& G, const Bitset& sub,
                       std::span<const int> sub_elements,
                       std::span<const int> sub_gens, int extra);

SubgroupRef subgroup_from_elements(const Group& G, std::span<const Perm> seed);
SubgroupRef trivial_subgroup(const Group& G);
SubgroupRef full_subgroup(const Group& G);

SubgroupRef conjugate_subgroup(const Group& G, const SubgroupRef& H, int g);
bool is_normal(const Group& G, const Bitset& H);
SubgroupRef normalizer(const Group& G, const SubgroupRef& H);
SubgroupRef core(const Group& G, const SubgroupRef& H);
SubgroupRef intersection(const Group& G, const SubgroupRef& A, const SubgroupRef& B);

// Permutation action of G on the cosets of a normal subgroup N, plus the
// induced map on elements and subgroup bitsets.
struct Quotient {
  Group group;
  std::vector<int> point_of;  // element index in G -> coset point
  std::vector<int> image;     // element index in G -> element index in quotient

  Bitset image_of(const Bitset& sub) const {
    Bitset out(group.order());
    sub.for_each([&](int e) { out.set(image[e]); });
    return out;
  }
};

Quotient quotient(const Group& G, const SubgroupRef& N);

}  // namespace psublab

#endif
