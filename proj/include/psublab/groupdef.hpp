#ifndef PSUBLAB_GROUPDEF_HPP
#define PSUBLAB_GROUPDEF_HPP

#include <optional>
#include <string>
#include <vector>

#include "psublab/group.hpp"

namespace psublab {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Square matrix over GF(p), row-major entries in [0, p).
struct MatGFp {
  long long p = 0;
  int k = 0;
  std::vector<int> entries;

  static MatGFp identity(long long p, int k);

  int at(int r, int c) const { return entries[r * k + c]; }
  int& at(int r, int c) { return entries[r * k + c]; }

  MatGFp mul(const MatGFp& other) const;  // standard matrix product
  MatGFp pow(long long e) const;
  bool is_identity() const;
  bool invertible() const;
  MatGFp transpose() const;
  long long order(long long cap = 1 << 20) const;
  std::vector<int> apply(const std::vector<int>& v) const;  // column vector M*v

  bool operator==(const MatGFp&) const = default;
};

// Abstract syntax of the group-definition DSL. Cycles of Perm literals are
// stored 0-indexed; the surface syntax is 1-indexed.
struct GroupSpec {
  enum class Kind { Sym, Alt, Cyclic, Dihedral, ElemAbelian, Direct, AffineSD, PermLiteral };

  Kind kind = Kind::Sym;
  long long n = 0;  // Sym/Alt/Cyclic/Dihedral n; ElemAbelian/AffineSD p; PermLiteral degree
  long long k = 0;  // ElemAbelian/AffineSD dimension
  std::vector<GroupSpec> children;                        // Direct
  std::vector<MatGFp> matrices;                           // AffineSD
  std::vector<std::vector<std::vector<int>>> perm_gens;   // PermLiteral

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec parse(const std::string& text);
std::string print(const GroupSpec& spec);

Group build(const GroupSpec& spec, int cap);

// Multiplicative closure of a set of invertible matrices.
std::vector<MatGFp> matrix_group_closure(const std::vector<MatGFp>& gens, int cap);

// Least prime q with q | a^n - 1, q not dividing a^i - 1 for 0 < i < n, and
// q not dividing n; nullopt when no such prime exists.
std::optional<long long> zsigmondy(long long a, long long n);

// A dim x dim matrix over GF(p) of multiplicative order q acting without
// proper nonzero invariant subspace, found by scanning companion matrices of
// monic polynomials in ascending coefficient order.
MatGFp irreducible_cyclic_action(long long p, int dim, long long q);

// The three pairwise non-isomorphic minimal non-supersolvable groups of
// order 400, as frozen degree-41 permutation literals. Variants 'a', 'b',
// 'c'; see the builder for the underlying construction.
GroupSpec fixture_order400(char variant);

}  // namespace psublab

#endif
