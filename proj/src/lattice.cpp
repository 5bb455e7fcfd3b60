#include "psublab/lattice.hpp"

#include <algorithm>
#include <map>

namespace psublab {

void Lattice::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < nodes.size(); ++i) index_.emplace(nodes[i].bits, int(i));
}

Lattice enumerate(const Group& G, int cap) {
  if (G.order() > cap)
    throw CapExceeded("group order " + std::to_string(G.order()) +
                      " exceeds lattice cap " + std::to_string(cap));

  Lattice L;
  L.parent = &G;

  std::unordered_map<Bitset, int, BitsetHash> seen;
  std::vector<SubgroupRef> nodes;
  std::vector<std::vector<int>> gens;

  auto add_node = [&](Bitset bits, std::vector<int> g) {
    auto [it, fresh] = seen.emplace(bits, int(nodes.size()));
    if (!fresh) return it->second;
    int order = bits.count();
    nodes.push_back(SubgroupRef{std::move(bits), order});
    gens.push_back(std::move(g));
    return int(nodes.size()) - 1;
  };

  // Seed: the trivial subgroup and every cyclic subgroup.
  {
    Bitset triv(G.order());
    triv.set(0);
    add_node(std::move(triv), {});
  }
  struct Cyclic {
    int node;
    int gen;
  };
  std::vector<Cyclic> cyclics;
  for (int e = 1; e < G.order(); ++e) {
    Bitset bits(G.order());
    int x = 0;
    do {
      bits.set(x);
      x = G.mul(x, e);
    } while (x != 0);
    int before = int(nodes.size());
    int id = add_node(std::move(bits), {e});
    if (id == before) cyclics.push_back(Cyclic{id, e});
  }

  // Saturation: join every node with every cyclic subgroup not inside it.
  for (std::size_t w = 0; w < nodes.size(); ++w) {
    const std::vector<int> members = nodes[w].bits.to_indices();
    const std::vector<int> wgens = gens[w];
    for (const Cyclic& c : cyclics) {
      if (nodes[w].bits.test(c.gen)) continue;
      Bitset joined = extend_subgroup(G, nodes[w].bits, members, wgens, c.gen);
      std::vector<int> jg = wgens;
      jg.push_back(c.gen);
      add_node(std::move(joined), std::move(jg));
    }
  }

  // Canonical node order.
  std::vector<int> perm(nodes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (nodes[a].order != nodes[b].order) return nodes[a].order < nodes[b].order;
    return nodes[a].bits < nodes[b].bits;
  });
  for (int i : perm) {
    L.nodes.push_back(std::move(nodes[i]));
    L.node_gens.push_back(std::move(gens[i]));
  }
  L.rebuild_index();
  L.trivial_node = 0;
  L.full_node = int(L.nodes.size()) - 1;

  const int n = int(L.nodes.size());

  // Covering edges. subs_of[k] lists all proper subgroups of node k; H is
  // maximal in K exactly when no listed L lies strictly between.
  std::vector<std::vector<int>> subs_of(n);
  for (int k = 0; k < n; ++k) {
    for (int h = 0; h < k; ++h) {
      if (L.nodes[k].order % L.nodes[h].order != 0) continue;
      if (L.nodes[h].order == L.nodes[k].order) continue;
      if (L.nodes[h].bits.is_subset_of(L.nodes[k].bits)) subs_of[k].push_back(h);
    }
  }
  L.maximal_in.assign(n, {});
  L.maximals_of.assign(n, {});
  for (int k = 0; k < n; ++k) {
    for (int h : subs_of[k]) {
      bool covered = true;
      for (int l : subs_of[k]) {
        if (L.nodes[l].order <= L.nodes[h].order) continue;
        if (L.nodes[l].order % L.nodes[h].order != 0) continue;
        if (L.nodes[h].bits.is_subset_of(L.nodes[l].bits)) {
          covered = false;
          break;
        }
      }
      if (covered) {
        L.maximal_in[h].push_back(k);
        L.maximals_of[k].push_back(h);
      }
    }
  }

  // Conjugacy classes as orbits under conjugation by the generators.
  L.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (L.class_of[i] >= 0) continue;
    int cls = int(L.classes.size());
    L.classes.push_back({});
    std::vector<int> queue{i};
    L.class_of[i] = cls;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      L.classes[cls].push_back(cur);
      for (int g : G.generator_indices()) {
        Bitset img(G.order());
        L.nodes[cur].bits.for_each([&](int h) { img.set(G.conj(h, g)); });
        int j = L.node_index(img);
        if (j < 0) throw Error("conjugate of a subgroup missing from lattice");
        if (L.class_of[j] < 0) {
          L.class_of[j] = cls;
          queue.push_back(j);
        }
      }
    }
    std::sort(L.classes[cls].begin(), L.classes[cls].end());
  }
  L.normal_flag.assign(n, false);
  for (int i = 0; i < n; ++i)
    L.normal_flag[i] = L.classes[L.class_of[i]].size() == 1;

  return L;
}

std::vector<int> Lattice::two_maximal_subgroups() const {
  std::vector<bool> is_max(nodes.size(), false);
  for (int m : maximals_of[full_node]) is_max[m] = true;
  std::vector<int> out;
  for (std::size_t h = 0; h < nodes.size(); ++h) {
    for (int k : maximal_in[h]) {
      if (is_max[k]) {
        out.push_back(int(h));
        break;
      }
    }
  }
  return out;
}

std::vector<int> Lattice::normal_subgroups() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (normal_flag[i]) out.push_back(int(i));
  return out;
}

DepthProfile Lattice::depth_profile(int node) const {
  // Nodes are sorted by order, so descending id order is a valid topological
  // order for the upward covering DAG.
  const int n = int(nodes.size());
  std::vector<int> mind(n, -1), maxd(n, -1);
  mind[full_node] = maxd[full_node] = 0;
  for (int h = n - 1; h >= 0; --h) {
    if (h == full_node) continue;
    for (int k : maximal_in[h]) {
      if (mind[k] < 0) continue;
      if (mind[h] < 0 || mind[k] + 1 < mind[h]) mind[h] = mind[k] + 1;
      if (maxd[k] + 1 > maxd[h]) maxd[h] = maxd[k] + 1;
    }
  }
  if (mind[node] < 0) throw Error("node has no chain to the full group");
  return DepthProfile{mind[node], maxd[node]};
}

std::vector<int> Lattice::nodes_under(int top) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[top].order % nodes[i].order != 0) continue;
    if (nodes[i].bits.is_subset_of(nodes[top].bits)) out.push_back(int(i));
  }
  return out;
}

Group Lattice::node_group(int node) const {
  std::vector<Perm> gens;
  for (int e : node_gens[node]) gens.push_back(parent->elements()[e]);
  if (gens.empty()) gens.push_back(Perm(parent->degree()));
  return Group::closure(parent->degree(), std::move(gens), nodes[node].order + 1);
}

std::string lattice_fingerprint(const Lattice& L) {
  std::map<int, std::pair<int, int>> profile;  // order -> (count, normal count)
  for (std::size_t i = 0; i < L.nodes.size(); ++i) {
    auto& slot = profile[L.nodes[i].order];
    slot.first++;
    if (L.normal_flag[i]) slot.second++;
  }
  std::string out;
  for (auto& [order, counts] : profile) {
    out += std::to_string(order) + ":" + std::to_string(counts.first) + "n" +
           std::to_string(counts.second) + ";";
  }
  out += "classes=" + std::to_string(L.classes.size());
  return out;
}

std::string to_dot(const Lattice& L, const std::vector<bool>* marked) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < L.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           std::to_string(L.nodes[i].order) + "\"";
    if (L.normal_flag[i]) out += ", peripheries=2";
    if (marked && (*marked)[i]) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  for (std::size_t h = 0; h < L.nodes.size(); ++h)
    for (int k : L.maximal_in[h])
      out += "  n" + std::to_string(h) + " -> n" + std::to_string(k) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace psublab
