#ifndef PSUBLAB_STRUCTURE_HPP
#define PSUBLAB_STRUCTURE_HPP

#include <optional>
#include <span>
#include <vector>

#include "psublab/lattice.hpp"

namespace psublab {

struct StructureSummary {
  long long order = 0;
  std::vector<std::pair<long long, int>> factorization;
  std::vector<long long> pi;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  bool supersolvable = false;
  bool schmidt = false;
  bool minimal_non_supersolvable = false;
  bool has_susolv_sylow_tower = false;
  bool primitive = false;
  int frattini_node = -1;
  int residual_node = -1;
  bool residual_frattini_trivial = false;
  std::optional<int> primitivator;
};

// --- Lattice-free predicates, usable on quotients and subgroup groups -----

// Smallest subgroup containing `seed` that is invariant under conjugation by
// `under`; when `under` generates G this is the normal closure in G.
Bitset normal_closure(const Group& G, std::span<const int> seed,
                      std::span<const int> under);

// A minimal normal subgroup, located by shrinking the normal closure of a
// prime-order element; requires |G| > 1.
Bitset minimal_normal_subgroup(const Group& G);

bool group_is_abelian(const Group& G);
bool group_is_cyclic(const Group& G);
bool group_is_nilpotent(const Group& G);       // every Sylow subgroup normal
bool group_is_solvable(const Group& G);        // derived series reaches 1
bool group_is_supersolvable(const Group& G);   // chief factors all prime
bool group_has_susolv_sylow_tower(const Group& G);

// Nilpotency / commutativity of a subgroup given as an element set.
bool subset_is_nilpotent(const Group& G, const Bitset& H, long long order);
bool subset_is_abelian(const Group& G, const Bitset& H);

// --- Lattice-based operations ---------------------------------------------

int sylow(const Group& G, const Lattice& L, long long p);
int frattini(const Group& G, const Lattice& L);

// Frattini subgroup of a node, computed in its own (filtered) lattice.
int frattini_of_node(const Lattice& L, int node);

bool is_supersolvable_chief(const Group& G, const Lattice& L);
bool is_supersolvable_huppert(const Group& G, const Lattice& L);
int supersolvable_residual(const Group& G, const Lattice& L);
bool has_susolv_sylow_tower(const Group& G, const Lattice& L);
bool is_schmidt(const Group& G, const Lattice& L);
bool is_min_non_supersolvable(const Group& G, const Lattice& L);
std::pair<bool, std::optional<int>> is_primitive(const Group& G, const Lattice& L);
bool is_nilpotent(const Group& G, const Lattice& L);
bool is_solvable(const Group& G, const Lattice& L);
bool is_abelian(const Group& G, const Lattice& L);

StructureSummary summarize(const Group& G, const Lattice& L);

}  // namespace psublab

#endif
