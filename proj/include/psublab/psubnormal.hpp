#ifndef PSUBLAB_PSUBNORMAL_HPP
#define PSUBLAB_PSUBNORMAL_HPP

#include <vector>

#include "psublab/lattice.hpp"

namespace psublab {

// Witness chain H = H_0 < H_1 < ... < H_n = top with every index prime.
struct ChainCertificate {
  std::vector<int> nodes;            // lattice node ids, bottom to top
  std::vector<long long> indexes;    // |H_i : H_{i-1}|, all prime
};

// Marking of every lattice node as P-subnormal or not, relative to `top`,
// with back-pointers giving shortest certificates (ties: lowest parent id).
struct PSubnormalMap {
  int top = -1;
  std::vector<char> marked;   // by node id; nodes outside top's filter stay 0
  std::vector<int> parent;    // next chain node upward, -1 at top / unmarked
};

// Fixpoint propagation downward from `top` along prime-index containments
// (direct containment, not only covering pairs).
PSubnormalMap psubnormal_map(const Lattice& L);
PSubnormalMap psubnormal_map(const Lattice& L, int top);

bool is_psubnormal(const PSubnormalMap& m, int node);
ChainCertificate certificate(const Lattice& L, const PSubnormalMap& m, int node);

// Re-verification of a certificate against the lattice only: containments,
// primality, endpoints.
bool verify_certificate(const Lattice& L, const ChainCertificate& c, int bottom, int top);

struct LhsResult {
  bool holds = false;
  std::vector<int> violators;  // 2-maximal nodes that are not marked
};

// Left-hand side of the main biconditional: every 2-maximal subgroup is
// P-subnormal.
LhsResult lhs_theorem(const Lattice& L, const PSubnormalMap& m);

}  // namespace psublab

#endif
