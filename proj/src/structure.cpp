#include "psublab/structure.hpp"

#include <algorithm>

#include "psublab/numtheory.hpp"

namespace psublab {

namespace {

long long p_part(long long n, long long p) {
  long long pp = 1;
  while (n % p == 0) {
    n /= p;
    pp *= p;
  }
  return pp;
}

std::vector<int> commutators(const Group& G, std::span<const int> gens) {
  std::vector<int> out;
  for (int x : gens)
    for (int y : gens) {
      int c = G.mul(G.mul(G.mul(G.inv(x), G.inv(y)), x), y);
      if (c != 0) out.push_back(c);
    }
  return out;
}

}  // namespace

Bitset normal_closure(const Group& G, std::span<const int> seed,
                      std::span<const int> under) {
  std::vector<int> gens(seed.begin(), seed.end());
  Bitset bits = closure_of(G, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> add;
    for (int s : gens)
      for (int g : under) {
        int c = G.conj(s, g);
        if (!bits.test(c)) add.push_back(c);
      }
    if (!add.empty()) {
      gens.insert(gens.end(), add.begin(), add.end());
      bits = closure_of(G, gens);
      grew = true;
    }
  }
  return bits;
}

Bitset minimal_normal_subgroup(const Group& G) {
  if (G.order() <= 1) throw Error("trivial group has no minimal normal subgroup");
  const auto& ggens = G.generator_indices();

  auto first_prime_order_in = [&](const Bitset& bits) {
    int found = -1;
    bits.for_each([&](int e) {
      if (found >= 0 || e == 0) return;
      if (is_prime(G.element_order(e))) found = e;
    });
    return found;
  };

  Bitset full(G.order());
  for (int i = 0; i < G.order(); ++i) full.set(i);
  int x = first_prime_order_in(full);
  std::vector<int> seed{x};
  Bitset N = normal_closure(G, seed, ggens);

  // Any proper normal subgroup inside N contains the normal closure of one
  // of N's prime-order elements, so refine until no element shrinks N.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::vector<int> candidates;
    N.for_each([&](int e) {
      if (e != 0 && is_prime(G.element_order(e))) candidates.push_back(e);
    });
    for (int y : candidates) {
      std::vector<int> s{y};
      Bitset M = normal_closure(G, s, ggens);
      if (M.count() < N.count()) {
        N = std::move(M);
        shrunk = true;
        break;
      }
    }
  }
  return N;
}

bool group_is_abelian(const Group& G) { return G.is_abelian(); }

bool group_is_cyclic(const Group& G) {
  for (int i = 0; i < G.order(); ++i)
    if (G.element_order(i) == G.order()) return true;
  return false;
}

bool group_is_nilpotent(const Group& G) {
  for (long long p : prime_divisors(G.order()))
    if ((long long)G.p_power_elements(p).size() != p_part(G.order(), p))
      return false;
  return true;
}

bool group_is_solvable(const Group& G) {
  std::vector<int> gens = G.generator_indices();
  Bitset cur(G.order());
  for (int i = 0; i < G.order(); ++i) cur.set(i);
  while (true) {
    std::vector<int> comms = commutators(G, gens);
    if (comms.empty()) return true;  // derived subgroup trivial
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Bitset next = normal_closure(G, comms, gens);
    if (next == cur) return false;  // derived series stalled above 1
    cur = next;
    gens = cur.to_indices();
    if (gens.size() == 1) return true;
    // Trim the generating set: the full element list works but is wasteful.
    if (gens.size() > 8) {
      std::vector<int> small;
      Bitset span(G.order());
      span.set(0);
      for (int e : gens) {
        if (span.test(e)) continue;
        small.push_back(e);
        span = closure_of(G, small);
        if (span == cur) break;
      }
      gens = std::move(small);
    }
  }
}

bool group_is_supersolvable(const Group& G) {
  if (G.order() == 1) return true;
  Bitset N = minimal_normal_subgroup(G);
  int n = N.count();
  if (!is_prime(n)) return false;
  Quotient Q = quotient(G, SubgroupRef{N, n});
  return group_is_supersolvable(Q.group);
}

bool group_has_susolv_sylow_tower(const Group& G) {
  if (G.order() == 1) return true;
  auto primes = prime_divisors(G.order());
  long long p = primes.back();
  auto pelems = G.p_power_elements(p);
  if ((long long)pelems.size() != p_part(G.order(), p)) return false;
  Bitset bits(G.order());
  for (int e : pelems) bits.set(e);
  Quotient Q = quotient(G, SubgroupRef{bits, int(pelems.size())});
  return group_has_susolv_sylow_tower(Q.group);
}

bool subset_is_nilpotent(const Group& G, const Bitset& H, long long order) {
  for (long long p : prime_divisors(order)) {
    long long count = 0;
    H.for_each([&](int e) {
      int o = G.element_order(e);
      while (o % p == 0) o = int(o / p);
      if (o == 1) ++count;
    });
    if (count != p_part(order, p)) return false;
  }
  return true;
}

bool subset_is_abelian(const Group& G, const Bitset& H) {
  auto elems = H.to_indices();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (G.mul(elems[i], elems[j]) != G.mul(elems[j], elems[i])) return false;
  return true;
}

int sylow(const Group& G, const Lattice& L, long long p) {
  if (G.order() % p != 0) throw Error("prime does not divide the group order");
  long long pp = p_part(G.order(), p);
  for (std::size_t i = 0; i < L.nodes.size(); ++i)
    if (L.nodes[i].order == pp) return int(i);
  throw Error("no Sylow subgroup found (lattice incomplete?)");
}

int frattini(const Group& G, const Lattice& L) {
  (void)G;
  return frattini_of_node(L, L.full_node);
}

int frattini_of_node(const Lattice& L, int node) {
  const auto& maxes = L.maximals_of[node];
  if (maxes.empty()) return node;  // no maximal subgroups: Frattini is the group
  Bitset acc = L.nodes[maxes[0]].bits;
  for (std::size_t i = 1; i < maxes.size(); ++i) acc = acc & L.nodes[maxes[i]].bits;
  int id = L.node_index(acc);
  if (id < 0) throw Error("Frattini subgroup missing from lattice");
  return id;
}

bool is_supersolvable_chief(const Group& G, const Lattice& L) {
  (void)L;
  return group_is_supersolvable(G);
}

bool is_supersolvable_huppert(const Group& G, const Lattice& L) {
  (void)G;
  for (int m : L.maximal_subgroups())
    if (!is_prime(L.index_in(L.full_node, m))) return false;
  return true;
}

int supersolvable_residual(const Group& G, const Lattice& L) {
  Bitset acc = L.nodes[L.full_node].bits;
  for (int n : L.normal_subgroups()) {
    bool qualifies;
    if (n == L.trivial_node)
      qualifies = group_is_supersolvable(G);
    else if (n == L.full_node)
      qualifies = true;
    else
      qualifies = group_is_supersolvable(quotient(G, L.nodes[n]).group);
    if (qualifies) acc = acc & L.nodes[n].bits;
  }
  int id = L.node_index(acc);
  if (id < 0) throw Error("supersolvable residual missing from lattice");
  return id;
}

bool has_susolv_sylow_tower(const Group& G, const Lattice& L) {
  (void)L;
  return group_has_susolv_sylow_tower(G);
}

bool is_schmidt(const Group& G, const Lattice& L) {
  if (group_is_nilpotent(G)) return false;
  for (int m : L.maximal_subgroups())
    if (!subset_is_nilpotent(G, L.nodes[m].bits, L.nodes[m].order)) return false;
  return true;
}

bool is_min_non_supersolvable(const Group& G, const Lattice& L) {
  if (group_is_supersolvable(G)) return false;
  for (int m : L.maximal_subgroups())
    if (!group_is_supersolvable(L.node_group(m))) return false;
  return true;
}

std::pair<bool, std::optional<int>> is_primitive(const Group& G, const Lattice& L) {
  (void)G;
  for (int m : L.maximal_subgroups()) {
    // The core is the intersection of the conjugacy class.
    Bitset acc = L.nodes[m].bits;
    for (int c : L.classes[L.class_of[m]]) acc = acc & L.nodes[c].bits;
    if (acc.count() == 1) return {true, m};
  }
  return {false, std::nullopt};
}

bool is_nilpotent(const Group& G, const Lattice& L) {
  for (long long p : prime_divisors(G.order()))
    if (!L.normal_flag[sylow(G, L, p)]) return false;
  return true;
}

bool is_solvable(const Group& G, const Lattice& L) {
  (void)L;
  return group_is_solvable(G);
}

bool is_abelian(const Group& G, const Lattice& L) {
  (void)L;
  return G.is_abelian();
}

StructureSummary summarize(const Group& G, const Lattice& L) {
  StructureSummary s;
  s.order = G.order();
  s.factorization = factorize(s.order);
  for (auto& [p, e] : s.factorization) s.pi.push_back(p);
  s.abelian = is_abelian(G, L);
  s.nilpotent = is_nilpotent(G, L);
  s.solvable = is_solvable(G, L);
  s.supersolvable = is_supersolvable_chief(G, L);
  s.schmidt = is_schmidt(G, L);
  s.minimal_non_supersolvable = is_min_non_supersolvable(G, L);
  s.has_susolv_sylow_tower = has_susolv_sylow_tower(G, L);
  auto [prim, primitivator] = is_primitive(G, L);
  s.primitive = prim;
  s.primitivator = primitivator;
  s.frattini_node = frattini(G, L);
  s.residual_node = supersolvable_residual(G, L);
  s.residual_frattini_trivial =
      L.nodes[frattini_of_node(L, s.residual_node)].order == 1;
  return s;
}

}  // namespace psublab
