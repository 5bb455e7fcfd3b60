#include <random>
#include <set>

#include "doctest.h"
#include "psublab/group.hpp"

using namespace psublab;

namespace {

Perm cyc(int degree, std::vector<std::vector<int>> cycles) {
  return Perm::from_cycles(degree, cycles);
}

Group sym4() {
  return Group::closure(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 100);
}

Group alt5() {
  return Group::closure(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{1, 2, 3}}), cyc(5, {{2, 3, 4}})},
                        100);
}

SubgroupRef gen_subgroup(const Group& G, std::vector<Perm> seeds) {
  return subgroup_from_elements(G, seeds);
}

// independent closure over raw permutations, for cross-checking
std::set<Perm> naive_closure(std::vector<Perm> gens) {
  std::set<Perm> all(gens.begin(), gens.end());
  all.insert(Perm(gens[0].degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const Perm& a : snapshot)
      for (const Perm& g : gens)
        if (all.insert(compose(a, g)).second) grew = true;
  }
  return all;
}

}  // namespace

TEST_CASE("closure orders and canonical determinism") {
  Group s4 = sym4();
  CHECK(s4.order() == 24);
  CHECK(s4.elements()[0].is_identity());

  Group a5 = alt5();
  CHECK(a5.order() == 60);

  Group triv = Group::closure(3, {Perm(3)}, 10);
  CHECK(triv.order() == 1);

  Group s4b = sym4();
  CHECK(s4.elements() == s4b.elements());

  CHECK_THROWS_AS(Group::closure(4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 23),
                  CapExceeded);
}

TEST_CASE("multiplication table agrees with composition") {
  Group s4 = sym4();
  for (int i = 0; i < s4.order(); ++i) {
    CHECK(s4.elements()[s4.inv(i)] == s4.elements()[i].inverse());
    for (int j = 0; j < s4.order(); ++j)
      CHECK(s4.elements()[s4.mul(i, j)] ==
            compose(s4.elements()[i], s4.elements()[j]));
  }
}

TEST_CASE("subgroup generation") {
  Group s4 = sym4();
  CHECK(gen_subgroup(s4, {cyc(4, {{0, 1, 2}})}).order == 3);
  CHECK(gen_subgroup(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}).order == 4);

  Group a5 = alt5();
  auto seeds = std::vector<Perm>{cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}, {3, 4}})};
  SubgroupRef H = gen_subgroup(a5, seeds);
  CHECK(H.order == int(naive_closure(seeds).size()));
}

TEST_CASE("membership violations are rejected") {
  Group a4 = Group::closure(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}, 100);
  CHECK(a4.order() == 12);
  std::vector<Perm> odd{cyc(4, {{0, 1}})};
  CHECK_THROWS_AS(subgroup_from_elements(a4, odd), Error);
}

TEST_CASE("conjugation of subgroups") {
  Group s3 = Group::closure(3, {cyc(3, {{0, 1}}), cyc(3, {{1, 2}})}, 100);
  SubgroupRef H = gen_subgroup(s3, {cyc(3, {{0, 1}})});
  int g = s3.index_of(cyc(3, {{0, 1, 2}}));
  SubgroupRef Hg = conjugate_subgroup(s3, H, g);
  CHECK(Hg.order == 2);
  CHECK(Hg.bits.test(s3.index_of(cyc(3, {{1, 2}}))));

  SubgroupRef same = conjugate_subgroup(s3, H, 0);
  CHECK(same.bits == H.bits);
}

TEST_CASE("normalizer") {
  Group s4 = sym4();
  SubgroupRef syl3 = gen_subgroup(s4, {cyc(4, {{0, 1, 2}})});
  CHECK(normalizer(s4, syl3).order == 6);

  SubgroupRef v4 = gen_subgroup(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK(normalizer(s4, v4).order == 24);

  Group a5 = alt5();
  SubgroupRef syl5 = gen_subgroup(a5, {cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(normalizer(a5, syl5).order == 10);
}

TEST_CASE("core") {
  Group s4 = sym4();
  SubgroupRef v4 = gen_subgroup(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK(core(s4, v4).bits == v4.bits);

  SubgroupRef s3 = gen_subgroup(s4, {cyc(4, {{0, 1}}), cyc(4, {{1, 2}})});
  CHECK(core(s4, s3).order == 1);

  SubgroupRef d8 = gen_subgroup(s4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})});
  SubgroupRef c = core(s4, d8);
  CHECK(c.order == 4);
  CHECK(c.bits == v4.bits);
}

TEST_CASE("intersection") {
  Group a5 = alt5();
  SubgroupRef a = gen_subgroup(a5, {cyc(5, {{0, 1, 2}}), cyc(5, {{1, 2, 3}})});
  CHECK(a.order == 12);
  int x = a5.index_of(cyc(5, {{0, 1, 2, 3, 4}}));
  SubgroupRef b = conjugate_subgroup(a5, a, x);
  SubgroupRef meet = intersection(a5, a, b);
  CHECK(meet.order == 3);  // two point stabilizers meet in a Sylow 3-subgroup

  CHECK(intersection(a5, a, a).bits == a.bits);
  CHECK(intersection(a5, full_subgroup(a5), b).bits == b.bits);
}

TEST_CASE("quotients") {
  Group s4 = sym4();
  SubgroupRef v4 = gen_subgroup(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  Quotient q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(q.group.degree() == 6);
  CHECK_FALSE(q.group.is_abelian());  // S4/V4 is S3
  // kernel is exactly V4
  for (int e = 0; e < s4.order(); ++e)
    CHECK((q.image[e] == 0) == v4.bits.test(e));

  SubgroupRef a4 = gen_subgroup(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  CHECK(quotient(s4, a4).group.order() == 2);

  CHECK(quotient(s4, full_subgroup(s4)).group.order() == 1);

  SubgroupRef s3 = gen_subgroup(s4, {cyc(4, {{0, 1}}), cyc(4, {{1, 2}})});
  CHECK_THROWS_AS(quotient(s4, s3), Error);
}

TEST_CASE("subgroup invariants hold for randomly generated subgroups") {
  Group a5 = alt5();
  std::mt19937 rng(0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Perm> seeds;
    for (int i = 0; i < 2; ++i)
      seeds.push_back(a5.elements()[rng() % a5.order()]);
    SubgroupRef H = subgroup_from_elements(a5, seeds);
    CHECK(a5.order() % H.order == 0);  // Lagrange
    CHECK(H.bits.test(0));
    // closure of the bitset equals itself after conjugation by any element
    int g = int(rng() % a5.order());
    SubgroupRef Hg = conjugate_subgroup(a5, H, g);
    CHECK(Hg.order == H.order);
    CHECK(closure_of(a5, Hg.bits.to_indices()) == Hg.bits);
    // normalizer contains H
    CHECK(H.bits.is_subset_of(normalizer(a5, H).bits));
  }
}
