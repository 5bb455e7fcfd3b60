#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "psublab/groupdef.hpp"
#include "psublab/lattice.hpp"

using namespace psublab;

namespace {

Group from(const char* text, int cap = 5000) { return build(parse(text), cap); }

// Brute-force subgroup enumeration: closures of all element subsets up to
// the given size. Groups of order <= 24 need at most 4 generators, A5 needs
// at most 3 for its proper subgroups and 2 for itself.
std::set<Bitset> oracle_subgroups(const Group& G, int max_seed) {
  std::set<Bitset> out;
  std::vector<int> seed;
  auto rec = [&](auto&& self, int from, int depth) -> void {
    out.insert(closure_of(G, seed));
    if (depth == max_seed) return;
    for (int e = from; e < G.order(); ++e) {
      seed.push_back(e);
      self(self, e + 1, depth + 1);
      seed.pop_back();
    }
  };
  rec(rec, 1, 0);
  return out;
}

void check_against_oracle(const char* text, int max_seed, int expected) {
  CAPTURE(text);
  Group g = from(text);
  Lattice L = enumerate(g, 2000);
  auto oracle = oracle_subgroups(g, max_seed);
  CHECK(int(L.nodes.size()) == expected);
  CHECK(oracle.size() == L.nodes.size());
  for (const auto& n : L.nodes) CHECK(oracle.count(n.bits) == 1);
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle") {
  check_against_oracle("Sym(3)", 2, 6);
  check_against_oracle("Sym(4)", 4, 30);
  check_against_oracle("Dihedral(4)", 3, 10);
  check_against_oracle("Cyclic(12)", 2, 6);
  check_against_oracle("Alt(4)", 3, 10);
  check_against_oracle("Perm(8; (1 3 2 4)(5 7 6 8), (1 5 2 6)(3 8 4 7))", 3, 6);  // Q8
  check_against_oracle("ElemAbelian(3, 2)", 2, 6);
}

TEST_CASE("A5 has 59 subgroups") {
  Group g = from("Alt(5)");
  Lattice L = enumerate(g, 2000);
  CHECK(L.nodes.size() == 59);
  auto oracle = oracle_subgroups(g, 3);
  CHECK(oracle.size() == 59);
}

TEST_CASE("lattice caps") {
  Group g = from("Sym(5)");
  CHECK_THROWS_AS(enumerate(g, 100), CapExceeded);
}

TEST_CASE("nodes always include trivial and full, sorted by order") {
  Group g = from("Sym(4)");
  Lattice L = enumerate(g, 2000);
  CHECK(L.nodes[L.trivial_node].order == 1);
  CHECK(L.nodes[L.full_node].order == 24);
  for (std::size_t i = 1; i < L.nodes.size(); ++i)
    CHECK(L.nodes[i - 1].order <= L.nodes[i].order);
  // deterministic: re-enumeration gives identical node order
  Lattice L2 = enumerate(g, 2000);
  for (std::size_t i = 0; i < L.nodes.size(); ++i)
    CHECK(L.nodes[i].bits == L2.nodes[i].bits);
}

TEST_CASE("maximal subgroup classes") {
  Group s4 = from("Sym(4)");
  Lattice L = enumerate(s4, 2000);
  std::multiset<int> orders;
  for (int m : L.maximal_subgroups()) orders.insert(L.nodes[m].order);
  CHECK(orders == std::multiset<int>{6, 6, 6, 6, 8, 8, 8, 12});

  Group c7 = from("Cyclic(7)");
  Lattice L7 = enumerate(c7, 2000);
  auto maxes = L7.maximal_subgroups();
  REQUIRE(maxes.size() == 1);
  CHECK(L7.nodes[maxes[0]].order == 1);

  Group a5 = from("Alt(5)");
  Lattice L5 = enumerate(a5, 2000);
  std::set<int> max_orders;
  for (int m : L5.maximal_subgroups()) max_orders.insert(L5.nodes[m].order);
  CHECK(max_orders == std::set<int>{6, 10, 12});
}

TEST_CASE("two-maximal subgroups") {
  Group s4 = from("Sym(4)");
  Lattice L = enumerate(s4, 2000);
  // the order-2 subgroup generated by a transposition is 2-maximal (inside
  // a point stabilizer S3)
  int t01 = L.node_index(subgroup_from_elements(
                             s4, std::vector<Perm>{Perm::from_cycles(4, {{0, 1}})})
                             .bits);
  auto two_max = L.two_maximal_subgroups();
  CHECK(std::count(two_max.begin(), two_max.end(), t01) == 1);

  Group c9 = from("Cyclic(9)");
  Lattice L9 = enumerate(c9, 2000);
  CHECK(L9.two_maximal_subgroups() == std::vector<int>{L9.trivial_node});

  Group a5 = from("Alt(5)");
  Lattice L5 = enumerate(a5, 2000);
  auto tm = L5.two_maximal_subgroups();
  for (std::size_t i = 0; i < L5.nodes.size(); ++i)
    if (L5.nodes[i].order == 3)
      CHECK(std::count(tm.begin(), tm.end(), int(i)) == 1);
}

TEST_CASE("covering edges are exactly the covering pairs") {
  for (const char* text : {"Sym(4)", "Dihedral(6)"}) {
    CAPTURE(text);
    Group g = from(text);
    Lattice L = enumerate(g, 2000);
    const int n = int(L.nodes.size());
    for (int h = 0; h < n; ++h) {
      std::set<int> covers(L.maximal_in[h].begin(), L.maximal_in[h].end());
      for (int k = 0; k < n; ++k) {
        if (h == k || L.nodes[k].order % L.nodes[h].order != 0 ||
            L.nodes[k].order == L.nodes[h].order)
          continue;
        if (!L.nodes[h].bits.is_subset_of(L.nodes[k].bits)) {
          CHECK(covers.count(k) == 0);
          continue;
        }
        bool between = false;
        for (int l = 0; l < n && !between; ++l) {
          if (l == h || l == k) continue;
          between = L.nodes[h].bits.is_subset_of(L.nodes[l].bits) &&
                    L.nodes[l].bits.is_subset_of(L.nodes[k].bits);
        }
        CHECK(covers.count(k) == (between ? 0u : 1u));
      }
    }
  }
}

TEST_CASE("conjugation closure and class arithmetic") {
  Group a5 = from("Alt(5)");
  Lattice L = enumerate(a5, 2000);
  for (std::size_t i = 0; i < L.nodes.size(); ++i) {
    for (int g : a5.generator_indices()) {
      Bitset img(a5.order());
      L.nodes[i].bits.for_each([&](int h) { img.set(a5.conj(h, g)); });
      CHECK(L.node_index(img) >= 0);
    }
  }
  for (const auto& cls : L.classes) {
    CHECK(a5.order() % int(cls.size()) == 0);  // orbit-stabilizer
    for (int i : cls) CHECK(L.nodes[i].order == L.nodes[cls[0]].order);
  }
}

TEST_CASE("normal subgroups") {
  Group s4 = from("Sym(4)");
  Lattice L = enumerate(s4, 2000);
  std::multiset<int> norm_orders;
  for (int i : L.normal_subgroups()) norm_orders.insert(L.nodes[i].order);
  CHECK(norm_orders == std::multiset<int>{1, 4, 12, 24});

  Group c12 = from("Cyclic(12)");
  Lattice L12 = enumerate(c12, 2000);
  CHECK(L12.normal_subgroups().size() == L12.nodes.size());

  Group a5 = from("Alt(5)");
  Lattice L5 = enumerate(a5, 2000);
  CHECK(L5.normal_subgroups().size() == 2);  // simplicity
}

TEST_CASE("depth profiles") {
  Group s4 = from("Sym(4)");
  Lattice L = enumerate(s4, 2000);
  CHECK(L.depth_profile(L.full_node).min_depth == 0);
  CHECK(L.depth_profile(L.full_node).max_depth == 0);

  int t01 = L.node_index(subgroup_from_elements(
                             s4, std::vector<Perm>{Perm::from_cycles(4, {{0, 1}})})
                             .bits);
  DepthProfile dp = L.depth_profile(t01);
  CHECK(dp.min_depth == 2);  // <(0 1)> < S3 < S4
  CHECK(dp.max_depth == 3);  // <(0 1)> < E4 < D8 < S4

  // a double transposition only reaches the top in three steps
  int dt = L.node_index(subgroup_from_elements(
                            s4, std::vector<Perm>{Perm::from_cycles(4, {{0, 1}, {2, 3}})})
                            .bits);
  CHECK(L.depth_profile(dt).min_depth == 2);
  CHECK(L.depth_profile(dt).max_depth == 3);

  Group c4 = from("Cyclic(4)");
  Lattice L4 = enumerate(c4, 2000);
  CHECK(L4.depth_profile(L4.trivial_node).min_depth == 2);
  CHECK(L4.depth_profile(L4.trivial_node).max_depth == 2);
}

TEST_CASE("duality with quotient lattices above a normal subgroup") {
  Group s4 = from("Sym(4)");
  Lattice L = enumerate(s4, 2000);
  SubgroupRef v4 = subgroup_from_elements(
      s4, std::vector<Perm>{Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                            Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  int v4node = L.node_index(v4.bits);
  REQUIRE(L.normal_flag[v4node]);

  Quotient q = quotient(s4, v4);
  Lattice QL = enumerate(q.group, 2000);

  std::vector<int> above;
  for (std::size_t i = 0; i < L.nodes.size(); ++i)
    if (L.contains(int(i), v4node)) above.push_back(int(i));
  REQUIRE(above.size() == QL.nodes.size());

  std::map<int, int> image_node;  // node above V4 -> quotient node
  for (int i : above) {
    int qi = QL.node_index(q.image_of(L.nodes[i].bits));
    REQUIRE(qi >= 0);
    CHECK(QL.nodes[qi].order * v4.order == L.nodes[i].order);
    image_node[i] = qi;
  }
  // bijective and order-preserving
  std::set<int> images;
  for (auto& [i, qi] : image_node) images.insert(qi);
  CHECK(images.size() == QL.nodes.size());
  for (int i : above)
    for (int j : above)
      if (L.contains(i, j))
        CHECK(QL.contains(image_node[i], image_node[j]));
}

TEST_CASE("node groups rebuild the node") {
  Group s4 = from("Sym(4)");
  Lattice L = enumerate(s4, 2000);
  for (std::size_t i = 0; i < L.nodes.size(); ++i) {
    Group h = L.node_group(int(i));
    CHECK(h.order() == L.nodes[i].order);
    for (const Perm& e : h.elements()) CHECK(L.nodes[i].bits.test(s4.index_of(e)));
  }
}

TEST_CASE("sub-lattice filters are downward closed") {
  Group a5 = from("Alt(5)");
  Lattice L = enumerate(a5, 2000);
  // pick an A4 node
  int a4 = -1;
  for (std::size_t i = 0; i < L.nodes.size(); ++i)
    if (L.nodes[i].order == 12) {
      a4 = int(i);
      break;
    }
  REQUIRE(a4 >= 0);
  auto under = L.nodes_under(a4);
  CHECK(under.size() == 10);  // A4 has 10 subgroups
  for (int i : under)
    for (int j : L.nodes_under(i)) {
      CHECK(L.contains(a4, j));
      CHECK(std::count(under.begin(), under.end(), j) == 1);
    }
}

TEST_CASE("DOT output mentions every node") {
  Group g = from("Sym(3)");
  Lattice L = enumerate(g, 2000);
  std::string dot = to_dot(L);
  CHECK(dot.find("digraph") != std::string::npos);
  for (std::size_t i = 0; i < L.nodes.size(); ++i)
    CHECK(dot.find("n" + std::to_string(i) + " ") != std::string::npos);
}
