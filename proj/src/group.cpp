#include "psublab/group.hpp"

#include <algorithm>
#include <map>

namespace psublab {

Group Group::closure(int degree, std::vector<Perm> gens, int cap) {
  if (gens.empty()) throw Error("generator list is empty");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw Error("generator degree mismatch");

  Group G;
  G.degree_ = degree;
  G.gens_ = std::move(gens);

  G.elements_.emplace_back(degree);
  G.index_.emplace(G.elements_[0], 0);
  G.parent_.push_back(-1);
  G.via_gen_.push_back(-1);

  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    // Candidates of the next layer, keyed by image array so the layer comes
    // out in lexicographic order.
    std::map<Perm, std::pair<int, int>> layer;
    for (int x : frontier) {
      for (std::size_t gi = 0; gi < G.gens_.size(); ++gi) {
        Perm y = compose(G.elements_[x], G.gens_[gi]);
        if (G.index_.count(y) || layer.count(y)) continue;
        layer.emplace(std::move(y), std::make_pair(x, int(gi)));
      }
    }
    frontier.clear();
    for (auto& [perm, from] : layer) {
      if (int(G.elements_.size()) >= cap)
        throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      int idx = int(G.elements_.size());
      G.elements_.push_back(perm);
      G.index_.emplace(perm, idx);
      G.parent_.push_back(from.first);
      G.via_gen_.push_back(from.second);
      frontier.push_back(idx);
    }
  }

  for (const Perm& g : G.gens_) G.gen_elt_idx_.push_back(G.index_.at(g));
  G.elt_order_.reserve(G.elements_.size());
  for (const Perm& e : G.elements_) G.elt_order_.push_back(e.order());
  return G;
}

int Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i]))
        return false;
  return true;
}

const Group::Tables& Group::tables() const {
  std::call_once(tables_once_, [this] {
    if (tables_) return;  // moved-from-and-rebuilt case
    const int n = order();
    if (n > 0xFFFF) throw Error("order too large for multiplication table");
    auto t = std::make_unique<Tables>();
    t->mul.resize(std::size_t(n) * n);

    // Column j holds i -> i*j. Columns are filled in canonical (BFS) order:
    // an element j of layer >= 2 decomposes as j = parent * generator with
    // both referenced columns already complete, so each entry costs two
    // lookups. Layer-1 columns are computed by direct composition.
    auto col = [&](int j) { return t->mul.data() + std::size_t(j) * n; };
    for (int i = 0; i < n; ++i) col(0)[i] = std::uint16_t(i);
    for (int j = 1; j < n; ++j) {
      if (parent_[j] == 0) {
        for (int i = 0; i < n; ++i)
          col(j)[i] = std::uint16_t(index_.at(compose(elements_[i], elements_[j])));
      } else {
        const std::uint16_t* p = col(parent_[j]);
        const std::uint16_t* g = col(gen_elt_idx_[via_gen_[j]]);
        std::uint16_t* out = col(j);
        for (int i = 0; i < n; ++i) out[i] = g[p[i]];
      }
    }

    t->inv.resize(n);
    for (int i = 0; i < n; ++i) t->inv[i] = index_.at(elements_[i].inverse());
    tables_ = std::move(t);
  });
  return *tables_;
}

int Group::mul(int i, int j) const { return tables().mul[std::size_t(j) * order() + i]; }
int Group::inv(int i) const { return tables().inv[i]; }
int Group::conj(int h, int g) const { return mul(mul(inv(g), h), g); }

std::vector<int> Group::p_power_elements(long long p) const {
  std::vector<int> out;
  for (int i = 0; i < order(); ++i) {
    int o = elt_order_[i];
    while (o % p == 0) o = int(o / p);
    if (o == 1) out.push_back(i);
  }
  return out;
}

Bitset closure_of(const Group& G, std::span<const int> seed) {
  Bitset bits(G.order());
  bits.set(0);
  std::vector<int> queue{0};
  for (int s : seed)
    if (!bits.test(s)) {
      bits.set(s);
      queue.push_back(s);
    }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int s : seed) {
      int y = G.mul(queue[k], s);
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  }
  return bits;
}

Bitset extend_subgroup(const Group& G, const Bitset& sub,
                       std::span<const int> sub_elements,
                       std::span<const int> sub_gens, int extra) {
  Bitset bits = sub;
  if (bits.test(extra)) return bits;

  // Right cosets of `sub` absorb left factors from `sub`, so rep discovery
  // only ever multiplies reps by the small generating set; each element of a
  // new coset costs a single product.
  std::vector<int> gens(sub_gens.begin(), sub_gens.end());
  gens.push_back(extra);
  std::vector<int> reps{0};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (int s : gens) {
      int t = G.mul(reps[k], s);
      if (bits.test(t)) continue;
      for (int u : sub_elements) bits.set(G.mul(u, t));
      reps.push_back(t);
    }
  }
  return bits;
}

SubgroupRef subgroup_from_elements(const Group& G, std::span<const Perm> seed) {
  std::vector<int> idxs;
  for (const Perm& p : seed) {
    int i = G.index_of(p);
    if (i < 0) throw Error("seed element does not belong to the group");
    idxs.push_back(i);
  }
  Bitset bits = closure_of(G, idxs);
  return SubgroupRef{bits, bits.count()};
}

SubgroupRef trivial_subgroup(const Group& G) {
  Bitset b(G.order());
  b.set(0);
  return SubgroupRef{b, 1};
}

SubgroupRef full_subgroup(const Group& G) {
  Bitset b(G.order());
  for (int i = 0; i < G.order(); ++i) b.set(i);
  return SubgroupRef{b, G.order()};
}

SubgroupRef conjugate_subgroup(const Group& G, const SubgroupRef& H, int g) {
  Bitset bits(G.order());
  H.bits.for_each([&](int h) { bits.set(G.conj(h, g)); });
  return SubgroupRef{bits, H.order};
}

bool is_normal(const Group& G, const Bitset& H) {
  for (int g : G.generator_indices()) {
    bool ok = true;
    H.for_each([&](int h) {
      if (!H.test(G.conj(h, g))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

SubgroupRef normalizer(const Group& G, const SubgroupRef& H) {
  Bitset bits(G.order());
  std::vector<int> members = H.bits.to_indices();
  for (int g = 0; g < G.order(); ++g) {
    bool fixes = true;
    for (int h : members)
      if (!H.bits.test(G.conj(h, g))) {
        fixes = false;
        break;
      }
    if (fixes) bits.set(g);
  }
  return SubgroupRef{bits, bits.count()};
}

SubgroupRef core(const Group& G, const SubgroupRef& H) {
  // Intersection of the conjugation orbit of H.
  std::vector<Bitset> orbit{H.bits};
  std::unordered_map<Bitset, char, BitsetHash> seen;
  seen.emplace(H.bits, 1);
  Bitset acc = H.bits;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int g : G.generator_indices()) {
      Bitset img(G.order());
      orbit[k].for_each([&](int h) { img.set(G.conj(h, g)); });
      if (seen.emplace(img, 1).second) {
        acc = acc & img;
        orbit.push_back(std::move(img));
      }
    }
  }
  return SubgroupRef{acc, acc.count()};
}

SubgroupRef intersection(const Group& G, const SubgroupRef& A, const SubgroupRef& B) {
  (void)G;
  Bitset bits = A.bits & B.bits;
  return SubgroupRef{bits, bits.count()};
}

Quotient quotient(const Group& G, const SubgroupRef& N) {
  if (!is_normal(G, N.bits)) throw Error("subgroup is not normal");

  const int n = G.order();
  const int index = n / N.order;
  std::vector<int> members = N.bits.to_indices();

  Quotient Q;
  Q.point_of.assign(n, -1);
  std::vector<int> rep_of_point;

  auto add_coset = [&](int rep) {
    int c = int(rep_of_point.size());
    rep_of_point.push_back(rep);
    for (int u : members) Q.point_of[G.mul(u, rep)] = c;
    return c;
  };
  add_coset(0);
  for (std::size_t k = 0; k < rep_of_point.size(); ++k) {
    for (int g : G.generator_indices()) {
      int t = G.mul(rep_of_point[k], g);
      if (Q.point_of[t] < 0) add_coset(t);
    }
  }

  std::vector<Perm> qgens;
  for (int g : G.generator_indices()) {
    std::vector<int> img(index);
    for (int c = 0; c < index; ++c) img[c] = Q.point_of[G.mul(rep_of_point[c], g)];
    qgens.emplace_back(std::move(img));
  }
  Q.group = Group::closure(index, std::move(qgens), n + 1);

  Q.image.resize(n);
  for (int e = 0; e < n; ++e) {
    std::vector<int> img(index);
    for (int c = 0; c < index; ++c) img[c] = Q.point_of[G.mul(rep_of_point[c], e)];
    Q.image[e] = Q.group.index_of(Perm(std::move(img)));
  }
  return Q;
}

}  // namespace psublab
