#include <random>
#include <set>

#include "doctest.h"
#include "psublab/groupdef.hpp"
#include "psublab/lattice.hpp"
#include "psublab/numtheory.hpp"
#include "psublab/structure.hpp"

using namespace psublab;

// --------------------------------------------------------------------------
// Zsigmondy primes

namespace {

// Oracle: factor a^n - 1 by plain trial division, then test the three
// clauses directly on every prime factor.
std::optional<long long> zsigmondy_naive(long long a, long long n) {
  long long m = 1;
  for (long long i = 0; i < n; ++i) m *= a;
  m -= 1;
  std::vector<long long> primes;
  long long rest = m;
  for (long long d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    primes.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) primes.push_back(rest);
  for (long long q : primes) {
    if (n % q == 0) continue;
    bool early = false;
    long long ai = 1;
    for (long long i = 1; i < n; ++i) {
      ai = (ai * (a % q)) % q;
      if (ai == 1 % q) {
        early = true;
        break;
      }
    }
    if (!early) return q;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("zsigmondy worked values") {
  CHECK(!zsigmondy(2, 6).has_value());  // the (a, n) = (2, 6) exception
  CHECK(zsigmondy(2, 4) == 5);          // 2^4-1 = 15, and 5 divides neither 1, 3, 7 nor 4
  CHECK(zsigmondy(5, 3) == 31);         // 5^3-1 = 124 = 4*31
  CHECK(!zsigmondy(3, 2).has_value());  // a = 2^2-1, n = 2
  CHECK(!zsigmondy(7, 2).has_value());  // a = 2^3-1, n = 2
  CHECK_THROWS_AS(zsigmondy(1, 5), Error);
  CHECK_THROWS_AS(zsigmondy(5, 1), Error);
}

TEST_CASE("zsigmondy clauses hold and agree with the naive oracle") {
  for (long long a = 2; a <= 12; ++a) {
    for (long long n = 2; n <= 12; ++n) {
      auto got = zsigmondy(a, n);
      auto want = zsigmondy_naive(a, n);
      CHECK(got == want);
      bool mersenne_case = (n == 2) && ((a & (a + 1)) == 0);  // a = 2^b - 1
      bool excluded = mersenne_case || (a == 2 && n == 6);
      if (excluded) CHECK(!got.has_value());
      if (got) {
        long long q = *got;
        CHECK(is_prime(q));
        long long pw = 1;
        for (int i = 0; i < n; ++i) pw *= a;
        CHECK((pw - 1) % q == 0);
        long long ai = 1;
        for (long long i = 1; i < n; ++i) {
          ai = (ai * (a % q)) % q;
          CHECK(ai != 1 % q);
        }
        CHECK(n % q != 0);
      }
    }
  }
}

// --------------------------------------------------------------------------
// Matrices and irreducible cyclic actions

TEST_CASE("matrix arithmetic over GF(p)") {
  MatGFp m{5, 2, {2, 0, 0, 3}};
  CHECK(m.invertible());
  CHECK(m.order() == 4);
  CHECK(m.pow(4).is_identity());
  CHECK(m.mul(m.pow(3)).is_identity());

  MatGFp singular{5, 2, {1, 2, 2, 4}};
  CHECK_FALSE(singular.invertible());

  MatGFp swap{7, 2, {0, 1, 1, 0}};
  CHECK(swap.order() == 2);
  CHECK(swap.apply({3, 5}) == std::vector<int>{5, 3});

  // the S3 inside GL(2,7) used by the order-294 example
  MatGFp rot{7, 2, {2, 0, 0, 4}};
  CHECK(rot.order() == 3);
  CHECK(matrix_group_closure({rot, swap}, 100).size() == 6);
}

TEST_CASE("irreducible cyclic actions") {
  MatGFp a = irreducible_cyclic_action(5, 2, 3);
  CHECK(a.order() == 3);
  // no invariant line: check all nonzero vectors of GF(5)^2
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      if (x == 0 && y == 0) continue;
      auto img = a.apply({x, y});
      bool proportional = (img[0] * y - img[1] * x) % 5 == 0;
      CHECK_FALSE(proportional);
    }

  MatGFp b = irreducible_cyclic_action(2, 2, 3);
  CHECK(b == MatGFp{2, 2, {0, 1, 1, 1}});  // companion of x^2+x+1

  MatGFp c = irreducible_cyclic_action(5, 3, 31);
  CHECK(c.order() == 31);
  CHECK_THROWS_AS(irreducible_cyclic_action(5, 2, 7), Error);  // 7 does not divide 24
}

// --------------------------------------------------------------------------
// Parser and printer

TEST_CASE("parsing the constructors") {
  GroupSpec s = parse("Sym(4)");
  CHECK(s.kind == GroupSpec::Kind::Sym);
  CHECK(s.n == 4);

  s = parse("  Perm( 5 ;\n (1 2 3), (3 4 5) ) # trailing comment");
  CHECK(s.kind == GroupSpec::Kind::PermLiteral);
  CHECK(s.n == 5);
  REQUIRE(s.perm_gens.size() == 2);
  CHECK(s.perm_gens[0] == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(s.perm_gens[1] == std::vector<std::vector<int>>{{2, 3, 4}});

  s = parse("Direct(Cyclic(2), Cyclic(3))");
  CHECK(s.kind == GroupSpec::Kind::Direct);
  Group g = build(s, 100);
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());

  s = parse("AffineSD(5, 2; [0 4; 1 4], [2 0; 0 3])");
  CHECK(s.matrices.size() == 2);
  CHECK(s.matrices[0].at(0, 1) == 4);

  // one generator built from two juxtaposed cycles
  s = parse("Perm(4; (1 2)(3 4))");
  CHECK(s.perm_gens.size() == 1);
  CHECK(s.perm_gens[0].size() == 2);
}

TEST_CASE("parse errors carry position and reject bad input") {
  CHECK_THROWS_AS(parse("Foo(3)"), ParseError);
  CHECK_THROWS_AS(parse("Sym(0)"), ParseError);
  CHECK_THROWS_AS(parse("Sym(4) Sym(4)"), ParseError);
  CHECK_THROWS_AS(parse("ElemAbelian(4, 2)"), ParseError);  // 4 is not prime
  CHECK_THROWS_AS(parse("Perm(3; (1 5))"), ParseError);     // point out of range
  CHECK_THROWS_AS(parse("Perm(3; (1 1 2))"), ParseError);   // repeated point
  CHECK_THROWS_AS(parse("AffineSD(5, 2; [1 2; 3])"), ParseError);  // ragged rows
  CHECK_THROWS_AS(parse("Sym(4"), ParseError);

  try {
    parse("Perm(3;\n  (1 9))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
}

namespace {

GroupSpec random_spec(std::mt19937& rng, int depth) {
  GroupSpec s;
  int kind = int(rng() % (depth > 0 ? 7 : 6));
  switch (kind) {
    case 0: s.kind = GroupSpec::Kind::Sym; s.n = 1 + rng() % 5; break;
    case 1: s.kind = GroupSpec::Kind::Alt; s.n = 1 + rng() % 5; break;
    case 2: s.kind = GroupSpec::Kind::Cyclic; s.n = 1 + rng() % 30; break;
    case 3: s.kind = GroupSpec::Kind::Dihedral; s.n = 1 + rng() % 10; break;
    case 4: {
      s.kind = GroupSpec::Kind::ElemAbelian;
      long long ps[] = {2, 3, 5, 7};
      s.n = ps[rng() % 4];
      s.k = 1 + rng() % 3;
      break;
    }
    case 5: {
      s.kind = GroupSpec::Kind::PermLiteral;
      s.n = 4 + rng() % 5;
      int gens = 1 + int(rng() % 2);
      for (int i = 0; i < gens; ++i) {
        std::vector<int> pts(s.n);
        for (int j = 0; j < int(s.n); ++j) pts[j] = j;
        std::shuffle(pts.begin(), pts.end(), rng);
        int len = 2 + int(rng() % (s.n - 1));
        s.perm_gens.push_back({std::vector<int>(pts.begin(), pts.begin() + len)});
      }
      break;
    }
    default:
      s.kind = GroupSpec::Kind::Direct;
      s.children.push_back(random_spec(rng, depth - 1));
      s.children.push_back(random_spec(rng, depth - 1));
  }
  return s;
}

}  // namespace

TEST_CASE("print then parse is the identity on syntax trees") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    GroupSpec s = random_spec(rng, 2);
    CAPTURE(print(s));
    CHECK(parse(print(s)) == s);
  }
  // affine specs, which the random generator does not cover
  for (const char* text :
       {"AffineSD(5, 2; [0 4; 1 4])", "AffineSD(7, 2; [2 0; 0 4], [0 1; 1 0])",
        "AffineSD(5, 3; [0 0 1; 1 0 4; 0 1 0])"}) {
    GroupSpec s = parse(text);
    CHECK(parse(print(s)) == s);
    CHECK(print(s) == text);
  }
}

// --------------------------------------------------------------------------
// Builders

TEST_CASE("constructor orders") {
  for (int n = 1; n <= 5; ++n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    GroupSpec s;
    s.kind = GroupSpec::Kind::Sym;
    s.n = n;
    CHECK(build(s, 5000).order() == fact);
    s.kind = GroupSpec::Kind::Alt;
    CHECK(build(s, 5000).order() == (n <= 2 ? 1 : fact / 2));
  }
  for (int n = 1; n <= 8; ++n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Dihedral;
    s.n = n;
    CHECK(build(s, 5000).order() == 2 * n);
    s.kind = GroupSpec::Kind::Cyclic;
    CHECK(build(s, 5000).order() == n);
  }
  Group e25 = build(parse("ElemAbelian(5, 2)"), 100);
  CHECK(e25.order() == 25);
  CHECK(e25.degree() == 10);
  CHECK(e25.is_abelian());

  CHECK(build(parse("Perm(5; (1 2 3), (3 4 5))"), 100).order() == 60);  // A5
}

TEST_CASE("affine semidirect products") {
  Group g294 = build(parse("AffineSD(7, 2; [2 0; 0 4], [0 1; 1 0])"), 5000);
  CHECK(g294.order() == 294);
  CHECK(g294.degree() == 49);

  // order = p^k * |matrix group|; the zero-vector stabilizer complements the
  // translation subgroup
  for (const char* text : {"AffineSD(5, 2; [0 4; 1 4])", "AffineSD(3, 2; [0 2; 1 0])",
                           "AffineSD(2, 2; [0 1; 1 1])"}) {
    GroupSpec s = parse(text);
    Group g = build(s, 5000);
    long long pk = 1;
    for (int i = 0; i < s.k; ++i) pk *= s.n;
    std::vector<MatGFp> mg = matrix_group_closure(s.matrices, 10000);
    CHECK(g.order() == pk * (long long)mg.size());
    int stab = 0;
    for (const Perm& e : g.elements())
      if (e[0] == 0) ++stab;  // fixes the zero vector
    CHECK(stab == int(mg.size()));
  }

  CHECK_THROWS_AS(build(parse("AffineSD(5, 2; [1 2; 2 4])"), 5000), BuildError);
  CHECK_THROWS_AS(build(parse("AffineSD(5, 3; [0 0 1; 1 0 4; 0 1 0])"), 1000),
                  CapExceeded);
}

// --------------------------------------------------------------------------
// The order-400 fixtures

TEST_CASE("order 400 fixtures have the advertised shape") {
  std::set<std::string> fingerprints;
  for (char v : {'a', 'b', 'c'}) {
    CAPTURE(v);
    GroupSpec spec = fixture_order400(v);
    CHECK(spec.kind == GroupSpec::Kind::PermLiteral);
    Group g = build(spec, 5000);
    REQUIRE(g.order() == 400);

    Lattice L = enumerate(g, 2000);
    int syl2 = sylow(g, L, 2);
    const SubgroupRef& T = L.nodes[syl2];
    CHECK(T.order == 16);
    CHECK_FALSE(subset_is_abelian(g, T.bits));

    // T = <a><b> with |a| = |b| = 4 and trivial intersection, witnessed by a
    // pair of order-4 elements with distinct squares generating T
    bool witnessed = false;
    std::vector<int> quads;
    T.bits.for_each([&](int e) {
      if (g.element_order(e) == 4) quads.push_back(e);
    });
    for (std::size_t i = 0; i < quads.size() && !witnessed; ++i)
      for (std::size_t j = 0; j < quads.size() && !witnessed; ++j) {
        int u = quads[i], w = quads[j];
        if (g.mul(u, u) == g.mul(w, w)) continue;
        std::vector<int> seed{u, w};
        if (closure_of(g, seed) == T.bits) witnessed = true;
      }
    CHECK(witnessed);

    // Sylow-2 shape via involution count: (Z4xZ2):Z2 has 7, Z4:Z4 has 3
    int involutions = 0;
    T.bits.for_each([&](int e) {
      if (g.element_order(e) == 2) ++involutions;
    });
    if (v == 'a')
      CHECK(involutions == 7);
    else
      CHECK(involutions == 3);

    fingerprints.insert(lattice_fingerprint(L));
  }
  CHECK(fingerprints.size() == 3);  // pairwise non-isomorphic
  CHECK_THROWS_AS(fixture_order400('x'), Error);
}

TEST_CASE("no faithful two-generator point group of order 16 exists in GL(2,5)") {
  // Bounded search: pairs of order-4 matrices whose cyclic groups intersect
  // trivially never generate a nonabelian irreducible subgroup of order 16.
  // This is why the order-400 fixtures act through an order-8 quotient
  // rather than embedding their Sylow 2-subgroup in GL(2,5).
  std::vector<MatGFp> gl;
  for (int code = 0; code < 625; ++code) {
    MatGFp m{5, 2, {code % 5, (code / 5) % 5, (code / 25) % 5, code / 125}};
    if (m.invertible()) gl.push_back(m);
  }
  CHECK(gl.size() == 480);

  std::vector<MatGFp> quads;
  for (const MatGFp& m : gl)
    if (m.pow(4).is_identity() && !m.pow(2).is_identity()) quads.push_back(m);

  auto irreducible = [](const MatGFp& a, const MatGFp& b) {
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        if (x == 0 && y == 0) continue;
        auto ia = a.apply({x, y});
        auto ib = b.apply({x, y});
        if ((ia[0] * y - ia[1] * x) % 5 == 0 && (ib[0] * y - ib[1] * x) % 5 == 0)
          return false;  // common invariant line
      }
    return true;
  };

  int qualifying = 0;
  for (const MatGFp& a : quads)
    for (const MatGFp& b : quads) {
      if (a.pow(2) == b.pow(2)) continue;  // the cyclic parts would intersect
      if (a.mul(b) == b.mul(a)) continue;
      auto closure = matrix_group_closure({a, b}, 17);
      if (closure.size() != 16) continue;
      if (!irreducible(a, b)) continue;
      ++qualifying;
    }
  CHECK(qualifying == 0);
}
