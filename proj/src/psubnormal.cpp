#include "psublab/psubnormal.hpp"

#include <algorithm>
#include <map>

#include "psublab/numtheory.hpp"

namespace psublab {

PSubnormalMap psubnormal_map(const Lattice& L) {
  return psubnormal_map(L, L.full_node);
}

PSubnormalMap psubnormal_map(const Lattice& L, int top) {
  const int n = int(L.nodes.size());
  PSubnormalMap m;
  m.top = top;
  m.marked.assign(n, 0);
  m.parent.assign(n, -1);

  std::vector<char> member(n, 0);
  for (int i : L.nodes_under(top)) member[i] = 1;

  std::map<int, std::vector<int>> by_order;
  for (int i = 0; i < n; ++i)
    if (member[i]) by_order[L.nodes[i].order].push_back(i);

  // Breadth-first from the top so certificates are shortest; within a layer
  // nodes are processed in ascending id order, which makes the recorded
  // parent the lowest eligible id.
  m.marked[top] = 1;
  std::vector<int> layer{top};
  while (!layer.empty()) {
    std::vector<int> next;
    std::sort(layer.begin(), layer.end());
    for (int k : layer) {
      long long ko = L.nodes[k].order;
      for (auto& [p, e] : factorize(ko)) {
        if (ko / p <= 0) continue;
        auto it = by_order.find(int(ko / p));
        if (it == by_order.end()) continue;
        for (int h : it->second) {
          if (m.marked[h]) continue;
          if (!L.nodes[h].bits.is_subset_of(L.nodes[k].bits)) continue;
          m.marked[h] = 1;
          m.parent[h] = k;
          next.push_back(h);
        }
      }
    }
    layer = std::move(next);
  }
  return m;
}

bool is_psubnormal(const PSubnormalMap& m, int node) { return m.marked[node] != 0; }

ChainCertificate certificate(const Lattice& L, const PSubnormalMap& m, int node) {
  if (!m.marked[node]) throw Error("no certificate: node is not P-subnormal");
  ChainCertificate c;
  int cur = node;
  c.nodes.push_back(cur);
  while (cur != m.top) {
    int up = m.parent[cur];
    c.indexes.push_back(L.nodes[up].order / L.nodes[cur].order);
    c.nodes.push_back(up);
    cur = up;
  }
  return c;
}

bool verify_certificate(const Lattice& L, const ChainCertificate& c, int bottom, int top) {
  if (c.nodes.empty() || c.nodes.front() != bottom || c.nodes.back() != top)
    return false;
  if (c.indexes.size() + 1 != c.nodes.size()) return false;
  for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
    int lo = c.nodes[i], hi = c.nodes[i + 1];
    if (!L.nodes[lo].bits.is_subset_of(L.nodes[hi].bits)) return false;
    if (L.nodes[lo].order == L.nodes[hi].order) return false;
    long long idx = L.nodes[hi].order / L.nodes[lo].order;
    if (idx != c.indexes[i] || !is_prime(idx)) return false;
    if ((long long)L.nodes[lo].order * idx != L.nodes[hi].order) return false;
  }
  return true;
}

LhsResult lhs_theorem(const Lattice& L, const PSubnormalMap& m) {
  LhsResult r;
  r.holds = true;
  for (int h : L.two_maximal_subgroups()) {
    if (!m.marked[h]) {
      r.holds = false;
      r.violators.push_back(h);
    }
  }
  return r;
}

}  // namespace psublab
