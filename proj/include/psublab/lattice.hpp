#ifndef PSUBLAB_LATTICE_HPP
#define PSUBLAB_LATTICE_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "psublab/group.hpp"

namespace psublab {

// Chain-length statistics of one lattice node: shortest and longest maximal
// chains from the node up to the full group.
struct DepthProfile {
  int min_depth = 0;
  int max_depth = 0;
};

// The complete subgroup lattice of a group: every subgroup as a bitset node,
// covering (maximality) edges, conjugacy classes, and normality flags.
// Nodes are sorted by (order, bitset) so ids are stable across runs.
class Lattice {
public:
  const Group* parent = nullptr;
  std::vector<SubgroupRef> nodes;
  std::vector<std::vector<int>> node_gens;    // small generating sets
  std::vector<std::vector<int>> maximal_in;   // H -> {K : H maximal in K}
  std::vector<std::vector<int>> maximals_of;  // K -> {H : H maximal in K}
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;      // conjugacy classes of nodes
  std::vector<bool> normal_flag;
  int trivial_node = -1;
  int full_node = -1;

  int node_index(const Bitset& bits) const {
    auto it = index_.find(bits);
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(int sup, int sub) const {
    return nodes[sub].bits.is_subset_of(nodes[sup].bits);
  }
  long long index_in(int sup, int sub) const {
    return nodes[sup].order / nodes[sub].order;
  }

  std::vector<int> maximal_subgroups() const { return maximals_of[full_node]; }
  std::vector<int> two_maximal_subgroups() const;
  std::vector<int> normal_subgroups() const;
  DepthProfile depth_profile(int node) const;

  // Ids of all subgroups of `top`, ascending. Because the filter is downward
  // closed, global covering edges restricted to this set are exactly the
  // covering edges of top's own lattice.
  std::vector<int> nodes_under(int top) const;

  // A Group built from the node's stored generators (same degree as parent).
  Group node_group(int node) const;

  void rebuild_index();

private:
  std::unordered_map<Bitset, int, BitsetHash> index_;
};

// Complete enumeration by join saturation: seed with all cyclic subgroups,
// then repeatedly join nodes with cyclic subgroups not contained in them.
// Joining with every cyclic subgroup (not only prime-order ones) is what
// makes this exhaustive: any subgroup <g1,...,gm> is reached along the chain
// of joins with <g1>, <g2>, ...
Lattice enumerate(const Group& G, int cap);

// Multiset of node orders plus per-order normal-node counts; equal strings
// are a necessary condition for isomorphism, distinct strings certify
// non-isomorphism.
std::string lattice_fingerprint(const Lattice& L);

// Hasse diagram in DOT format; node label = order, doubled border = normal,
// filled = member of `marked` (when given).
std::string to_dot(const Lattice& L, const std::vector<bool>* marked = nullptr);

}  // namespace psublab

#endif
