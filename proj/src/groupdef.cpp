#include "psublab/groupdef.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "psublab/numtheory.hpp"

namespace psublab {

// ---------------------------------------------------------------------------
// Matrices over GF(p)

MatGFp MatGFp::identity(long long p, int k) {
  MatGFp m{p, k, std::vector<int>(k * k, 0)};
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

MatGFp MatGFp::mul(const MatGFp& other) const {
  MatGFp r{p, k, std::vector<int>(k * k, 0)};
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      if (at(i, l) == 0) continue;
      for (int j = 0; j < k; ++j)
        r.at(i, j) = int((r.at(i, j) + (long long)at(i, l) * other.at(l, j)) % p);
    }
  return r;
}

MatGFp MatGFp::pow(long long e) const {
  MatGFp base = *this;
  MatGFp r = identity(p, k);
  while (e > 0) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

bool MatGFp::is_identity() const { return *this == identity(p, k); }

bool MatGFp::invertible() const {
  // Gaussian elimination mod p.
  MatGFp m = *this;
  int rank = 0;
  for (int col = 0; col < k && rank < k; ++col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < k; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    long long inv = powmod(m.at(rank, col), p - 2, p);
    for (int j = 0; j < k; ++j) m.at(rank, j) = int(m.at(rank, j) * inv % p);
    for (int r = 0; r < k; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      long long f = m.at(r, col);
      for (int j = 0; j < k; ++j)
        m.at(r, j) = int(((m.at(r, j) - f * m.at(rank, j)) % p + p) % p);
    }
    ++rank;
  }
  return rank == k;
}

MatGFp MatGFp::transpose() const {
  MatGFp r{p, k, std::vector<int>(k * k)};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r.at(j, i) = at(i, j);
  return r;
}

long long MatGFp::order(long long cap) const {
  MatGFp m = *this;
  long long o = 1;
  while (!m.is_identity()) {
    m = m.mul(*this);
    if (++o > cap) throw Error("matrix order exceeds cap");
  }
  return o;
}

std::vector<int> MatGFp::apply(const std::vector<int>& v) const {
  std::vector<int> out(k, 0);
  for (int i = 0; i < k; ++i) {
    long long s = 0;
    for (int j = 0; j < k; ++j) s += (long long)at(i, j) * v[j];
    out[i] = int(s % p);
  }
  return out;
}

std::vector<MatGFp> matrix_group_closure(const std::vector<MatGFp>& gens, int cap) {
  if (gens.empty()) throw Error("empty matrix generating set");
  std::map<std::vector<int>, int> seen;
  std::vector<MatGFp> elems{MatGFp::identity(gens[0].p, gens[0].k)};
  seen.emplace(elems[0].entries, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const MatGFp& g : gens) {
      MatGFp m = elems[i].mul(g);
      if (seen.emplace(m.entries, int(elems.size())).second) {
        if (int(elems.size()) >= cap) throw CapExceeded("matrix group exceeds cap");
        elems.push_back(std::move(m));
      }
    }
  }
  return elems;
}

// ---------------------------------------------------------------------------
// DSL lexer and parser

namespace {

struct Token {
  enum Type { Int, Ident, LParen, RParen, LBracket, RBracket, Comma, Semi, End };
  Type type;
  long long value = 0;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= text_.size()) {
        t.type = Token::End;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isdigit((unsigned char)c)) {
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
          v = v * 10 + (text_[pos_] - '0');
          if (v > (1LL << 60)) throw ParseError("integer literal too large", t.line, t.col);
          advance();
        }
        t.type = Token::Int;
        t.value = v;
      } else if (std::isalpha((unsigned char)c)) {
        while (pos_ < text_.size() && std::isalnum((unsigned char)text_[pos_])) {
          t.text += text_[pos_];
          advance();
        }
        t.type = Token::Ident;
      } else {
        switch (c) {
          case '(': t.type = Token::LParen; break;
          case ')': t.type = Token::RParen; break;
          case '[': t.type = Token::LBracket; break;
          case ']': t.type = Token::RBracket; break;
          case ',': t.type = Token::Comma; break;
          case ';': t.type = Token::Semi; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        advance();
      }
      out.push_back(std::move(t));
    }
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace((unsigned char)c)) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  GroupSpec run() {
    GroupSpec spec = parse_spec();
    expect(Token::End, "end of input");
    return spec;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

  Token expect(Token::Type t, const std::string& what) {
    if (peek().type != t) fail("expected " + what);
    return next();
  }

  long long expect_int(const std::string& what) {
    return expect(Token::Int, what).value;
  }

  GroupSpec parse_spec() {
    Token head = expect(Token::Ident, "constructor name");
    expect(Token::LParen, "'('");
    GroupSpec spec;
    if (head.text == "Sym" || head.text == "Alt" || head.text == "Cyclic" ||
        head.text == "Dihedral") {
      spec.kind = head.text == "Sym"      ? GroupSpec::Kind::Sym
                  : head.text == "Alt"    ? GroupSpec::Kind::Alt
                  : head.text == "Cyclic" ? GroupSpec::Kind::Cyclic
                                          : GroupSpec::Kind::Dihedral;
      spec.n = expect_int("point count");
      if (spec.n < 1) fail("argument must be at least 1");
    } else if (head.text == "ElemAbelian") {
      spec.kind = GroupSpec::Kind::ElemAbelian;
      spec.n = expect_int("prime");
      expect(Token::Comma, "','");
      spec.k = expect_int("rank");
      if (!is_prime(spec.n)) fail("modulus is not prime");
      if (spec.k < 1) fail("rank must be at least 1");
    } else if (head.text == "Direct") {
      spec.kind = GroupSpec::Kind::Direct;
      spec.children.push_back(parse_spec());
      expect(Token::Comma, "','");
      spec.children.push_back(parse_spec());
    } else if (head.text == "AffineSD") {
      spec.kind = GroupSpec::Kind::AffineSD;
      spec.n = expect_int("prime");
      expect(Token::Comma, "','");
      spec.k = expect_int("dimension");
      if (!is_prime(spec.n)) fail("modulus is not prime");
      if (spec.k < 1) fail("dimension must be at least 1");
      expect(Token::Semi, "';'");
      spec.matrices.push_back(parse_matrix(spec.n, int(spec.k)));
      while (peek().type == Token::Comma) {
        next();
        spec.matrices.push_back(parse_matrix(spec.n, int(spec.k)));
      }
    } else if (head.text == "Perm") {
      spec.kind = GroupSpec::Kind::PermLiteral;
      spec.n = expect_int("degree");
      if (spec.n < 1) fail("degree must be at least 1");
      expect(Token::Semi, "';'");
      spec.perm_gens.push_back(parse_gen(spec.n));
      while (peek().type == Token::Comma) {
        next();
        spec.perm_gens.push_back(parse_gen(spec.n));
      }
    } else {
      fail("unknown constructor '" + head.text + "'");
    }
    expect(Token::RParen, "')'");
    return spec;
  }

  MatGFp parse_matrix(long long p, int k) {
    expect(Token::LBracket, "'['");
    std::vector<std::vector<int>> rows;
    rows.push_back(parse_row(p));
    while (peek().type == Token::Semi) {
      next();
      rows.push_back(parse_row(p));
    }
    expect(Token::RBracket, "']'");
    if (int(rows.size()) != k) fail("matrix must have " + std::to_string(k) + " rows");
    for (auto& r : rows)
      if (int(r.size()) != k) fail("matrix rows must have " + std::to_string(k) + " entries");
    MatGFp m{p, k, {}};
    for (auto& r : rows) m.entries.insert(m.entries.end(), r.begin(), r.end());
    return m;
  }

  std::vector<int> parse_row(long long p) {
    std::vector<int> row;
    if (peek().type != Token::Int) fail("expected matrix entry");
    while (peek().type == Token::Int) row.push_back(int(next().value % p));
    return row;
  }

  // One generator: juxtaposed cycles over 1-indexed points. Singleton cycles
  // are identity factors and are dropped, so "(1)" is the identity.
  std::vector<std::vector<int>> parse_gen(long long degree) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> used(degree, 0);
    if (peek().type != Token::LParen) fail("expected cycle");
    while (peek().type == Token::LParen) {
      next();
      std::vector<int> cyc;
      if (peek().type != Token::Int) fail("expected point");
      while (peek().type == Token::Int) {
        Token t = next();
        if (t.value < 1 || t.value > degree)
          throw ParseError("cycle point out of range", t.line, t.col);
        int pt = int(t.value - 1);
        if (used[pt]) throw ParseError("repeated point in generator", t.line, t.col);
        used[pt] = 1;
        cyc.push_back(pt);
      }
      expect(Token::RParen, "')'");
      if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    }
    return cycles;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse(const std::string& text) { return Parser(Lexer(text).run()).run(); }

namespace {

void print_rec(const GroupSpec& s, std::string& out) {
  using Kind = GroupSpec::Kind;
  switch (s.kind) {
    case Kind::Sym: out += "Sym(" + std::to_string(s.n) + ")"; break;
    case Kind::Alt: out += "Alt(" + std::to_string(s.n) + ")"; break;
    case Kind::Cyclic: out += "Cyclic(" + std::to_string(s.n) + ")"; break;
    case Kind::Dihedral: out += "Dihedral(" + std::to_string(s.n) + ")"; break;
    case Kind::ElemAbelian:
      out += "ElemAbelian(" + std::to_string(s.n) + ", " + std::to_string(s.k) + ")";
      break;
    case Kind::Direct:
      out += "Direct(";
      print_rec(s.children[0], out);
      out += ", ";
      print_rec(s.children[1], out);
      out += ")";
      break;
    case Kind::AffineSD: {
      out += "AffineSD(" + std::to_string(s.n) + ", " + std::to_string(s.k) + "; ";
      for (std::size_t m = 0; m < s.matrices.size(); ++m) {
        if (m) out += ", ";
        out += "[";
        for (int r = 0; r < s.matrices[m].k; ++r) {
          if (r) out += "; ";
          for (int c = 0; c < s.matrices[m].k; ++c) {
            if (c) out += " ";
            out += std::to_string(s.matrices[m].at(r, c));
          }
        }
        out += "]";
      }
      out += ")";
      break;
    }
    case Kind::PermLiteral: {
      out += "Perm(" + std::to_string(s.n) + "; ";
      for (std::size_t g = 0; g < s.perm_gens.size(); ++g) {
        if (g) out += ", ";
        if (s.perm_gens[g].empty()) {
          out += "(1)";
          continue;
        }
        for (const auto& cyc : s.perm_gens[g]) {
          out += "(";
          for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(cyc[i] + 1);
          }
          out += ")";
        }
      }
      out += ")";
      break;
    }
  }
}

}  // namespace

std::string print(const GroupSpec& spec) {
  std::string out;
  print_rec(spec, out);
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

std::vector<Perm> sym_generators(int n) {
  if (n == 1) return {Perm(1)};
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n > 2) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i;
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  return gens;
}

std::vector<Perm> alt_generators(int n) {
  if (n <= 2) return {Perm(n)};
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{i, i + 1, i + 2}}));
  return gens;
}

std::vector<Perm> dihedral_generators(int n) {
  if (n == 1) return {Perm::from_cycles(2, {{0, 1}})};
  if (n == 2) return {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})};
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return {Perm(std::move(rot)), Perm(std::move(refl))};
}

// Vectors of GF(p)^k indexed by base-p digit strings, least significant
// digit = coordinate 0.
std::vector<int> vector_of_point(long long point, long long p, int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) {
    v[i] = int(point % p);
    point /= p;
  }
  return v;
}

long long point_of_vector(const std::vector<int>& v, long long p) {
  long long point = 0;
  for (int i = int(v.size()) - 1; i >= 0; --i) point = point * p + v[i];
  return point;
}

Group build_affine(const GroupSpec& spec, int cap) {
  const long long p = spec.n;
  const int k = int(spec.k);
  long long deg = 1;
  for (int i = 0; i < k; ++i) {
    deg *= p;
    if (deg > cap) throw CapExceeded("translation subgroup alone exceeds cap");
  }
  const int degree = int(deg);

  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(degree);
    for (int pt = 0; pt < degree; ++pt) {
      auto v = vector_of_point(pt, p, k);
      v[i] = int((v[i] + 1) % p);
      img[pt] = int(point_of_vector(v, p));
    }
    gens.emplace_back(std::move(img));
  }
  for (const MatGFp& m : spec.matrices) {
    if (m.p != p || m.k != k) throw BuildError("matrix has wrong shape or modulus");
    if (!m.invertible()) throw BuildError("matrix is not invertible");
    std::vector<int> img(degree);
    for (int pt = 0; pt < degree; ++pt)
      img[pt] = int(point_of_vector(m.apply(vector_of_point(pt, p, k)), p));
    gens.emplace_back(std::move(img));
  }
  return Group::closure(degree, std::move(gens), cap);
}

}  // namespace

Group build(const GroupSpec& spec, int cap) {
  using Kind = GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::Sym:
      return Group::closure(int(spec.n), sym_generators(int(spec.n)), cap);
    case Kind::Alt:
      return Group::closure(int(spec.n), alt_generators(int(spec.n)), cap);
    case Kind::Cyclic: {
      int n = int(spec.n);
      if (n == 1) return Group::closure(1, {Perm(1)}, cap);
      std::vector<int> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = i;
      return Group::closure(n, {Perm::from_cycles(n, {cyc})}, cap);
    }
    case Kind::Dihedral: {
      auto gens = dihedral_generators(int(spec.n));
      int degree = gens[0].degree();
      return Group::closure(degree, std::move(gens), cap);
    }
    case Kind::ElemAbelian: {
      if (!is_prime(spec.n)) throw BuildError("modulus is not prime");
      const int p = int(spec.n), k = int(spec.k);
      const int degree = p * k;
      std::vector<Perm> gens;
      for (int i = 0; i < k; ++i) {
        std::vector<int> cyc(p);
        for (int j = 0; j < p; ++j) cyc[j] = i * p + j;
        gens.push_back(Perm::from_cycles(degree, {cyc}));
      }
      return Group::closure(degree, std::move(gens), cap);
    }
    case Kind::Direct: {
      Group a = build(spec.children[0], cap);
      Group b = build(spec.children[1], cap);
      const int da = a.degree(), db = b.degree();
      std::vector<Perm> gens;
      for (const Perm& g : a.generators()) {
        std::vector<int> img(da + db);
        for (int i = 0; i < da; ++i) img[i] = g[i];
        for (int i = 0; i < db; ++i) img[da + i] = da + i;
        gens.emplace_back(std::move(img));
      }
      for (const Perm& g : b.generators()) {
        std::vector<int> img(da + db);
        for (int i = 0; i < da; ++i) img[i] = i;
        for (int i = 0; i < db; ++i) img[da + i] = da + g[i];
        gens.emplace_back(std::move(img));
      }
      return Group::closure(da + db, std::move(gens), cap);
    }
    case Kind::AffineSD:
      if (!is_prime(spec.n)) throw BuildError("modulus is not prime");
      return build_affine(spec, cap);
    case Kind::PermLiteral: {
      const int degree = int(spec.n);
      std::vector<Perm> gens;
      for (const auto& cycles : spec.perm_gens)
        gens.push_back(Perm::from_cycles(degree, cycles));
      return Group::closure(degree, std::move(gens), cap);
    }
  }
  throw BuildError("unreachable");
}

// ---------------------------------------------------------------------------
// Zsigmondy primes (Lemma 1 machinery)

std::optional<long long> zsigmondy(long long a, long long n) {
  if (a < 2 || n < 2) throw Error("zsigmondy requires a, n > 1");
  __int128 pw = 1;
  for (long long i = 0; i < n; ++i) {
    pw *= a;
    if (pw > (__int128(1) << 62)) throw Error("a^n too large");
  }
  const long long m = (long long)(pw - 1);

  for (auto& [q, e] : factorize(m)) {
    if (n % q == 0) continue;
    bool divides_earlier = false;
    long long ai = 1;
    for (long long i = 1; i < n; ++i) {
      ai = mulmod(ai, a % q, q);
      if (ai == 1 % q) {
        divides_earlier = true;
        break;
      }
    }
    if (!divides_earlier) return q;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Irreducible cyclic actions (Example 1 machinery)

namespace {

// Rank of the span of the orbit {v, Mv, M^2 v, ...} via echelon reduction.
int cyclic_span_rank(const MatGFp& M, std::vector<int> v) {
  const long long p = M.p;
  const int k = M.k;
  std::vector<std::vector<int>> basis(k);  // basis[i]: pivot at column i
  int rank = 0;
  std::vector<int> cur = std::move(v);
  for (int step = 0; step <= k; ++step) {
    std::vector<int> w = cur;
    for (int i = 0; i < k && rank < k; ++i) {
      if (w[i] == 0) continue;
      if (basis[i].empty()) {
        long long inv = powmod(w[i], p - 2, p);
        for (int& x : w) x = int(x * inv % p);
        basis[i] = w;
        ++rank;
        break;
      }
      long long f = w[i];
      for (int j = 0; j < k; ++j)
        w[j] = int(((w[j] - f * basis[i][j]) % p + p) % p);
    }
    if (rank == k) return rank;
    cur = M.apply(cur);
  }
  return rank;
}

bool acts_irreducibly(const MatGFp& M) {
  long long total = 1;
  for (int i = 0; i < M.k; ++i) total *= M.p;
  for (long long pt = 1; pt < total; ++pt) {
    if (cyclic_span_rank(M, vector_of_point(pt, M.p, M.k)) < M.k) return false;
  }
  return true;
}

}  // namespace

MatGFp irreducible_cyclic_action(long long p, int dim, long long q) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (!is_prime(q)) throw Error("q must be prime");
  long long npolys = 1;
  for (int i = 0; i < dim; ++i) npolys *= p;

  // Companion matrices of monic degree-dim polynomials, ascending
  // coefficient code; constant term zero gives a singular matrix, skip.
  for (long long code = 0; code < npolys; ++code) {
    auto coeffs = vector_of_point(code, p, dim);
    if (coeffs[0] == 0) continue;
    MatGFp C{p, dim, std::vector<int>(dim * dim, 0)};
    for (int j = 0; j + 1 < dim; ++j) C.at(j + 1, j) = 1;
    for (int i = 0; i < dim; ++i) C.at(i, dim - 1) = int((p - coeffs[i]) % p);
    if (C.is_identity() || !C.pow(q).is_identity()) continue;
    if (acts_irreducibly(C)) return C;
  }
  throw Error("no irreducible cyclic action found (precondition violated)");
}

// ---------------------------------------------------------------------------
// The order-400 fixtures (Example 4)
//
// These are E25 . T with |T| = 16, where T acts on E25 through an order-8
// irreducible quotient (D8 or Q8 inside GL(2,5)); no order-16 subgroup of
// GL(2,5) gives a faithful construction with the required properties. The
// permutation realization is the disjoint action on the 25 affine points
// plus the 16 points of T's regular action, which is faithful of degree 41.

namespace {

// T_b = T_c = <a, b | a^4 = b^4 = 1, b^-1 a b = a^-1>; code(a^i b^j) = 4i + j.
int mul_q4q4(int s, int t) {
  int i = s / 4, j = s % 4, k = t / 4, l = t % 4;
  int ii = ((j % 2 == 0 ? i + k : i - k) % 4 + 4) % 4;
  return 4 * ii + (j + l) % 4;
}

// T_a = <x, y, z | x^4 = y^2 = z^2 = 1, y central, z^-1 x z = x y>;
// code(x^i y^j z^m) = i + 4j + 8m.
int mul_16_3(int s, int t) {
  int i = s % 4, j = (s / 4) % 2, m = s / 8;
  int k = t % 4, l = (t / 4) % 2, n = t / 8;
  return (i + k) % 4 + 4 * ((j + l + k * m) % 2) + 8 * ((m + n) % 2);
}

struct FixtureData {
  int (*mul)(int, int);
  int gen1, gen2;         // codes of the two order-4 generators of T
  MatGFp act1, act2;      // their linear actions on GF(5)^2
};

FixtureData order400_data(char variant) {
  const long long p = 5;
  switch (variant) {
    case 'a':
      // T = (Z4 x Z2) : Z2 acting through D8 = <diag(1,4), swap>.
      return {mul_16_3, 1, 9, MatGFp{p, 2, {1, 0, 0, 4}}, MatGFp{p, 2, {0, 4, 1, 0}}};
    case 'b':
      // T = Z4 : Z4 acting through D8, kernel <b^2>.
      return {mul_q4q4, 4, 1, MatGFp{p, 2, {0, 1, 4, 0}}, MatGFp{p, 2, {1, 0, 0, 4}}};
    case 'c':
      // T = Z4 : Z4 acting through Q8, kernel <a^2 b^2>.
      return {mul_q4q4, 4, 1, MatGFp{p, 2, {2, 0, 0, 3}}, MatGFp{p, 2, {0, 1, 4, 0}}};
    default:
      throw Error("order-400 fixture variant must be 'a', 'b' or 'c'");
  }
}

std::vector<std::vector<int>> cycles_of_images(const std::vector<int>& img) {
  return Perm(img).cycles();
}

}  // namespace

GroupSpec fixture_order400(char variant) {
  FixtureData d = order400_data(variant);
  const int degree = 25 + 16;

  auto t_generator = [&](int gcode, const MatGFp& act) {
    std::vector<int> img(degree);
    for (int pt = 0; pt < 25; ++pt)
      img[pt] = int(point_of_vector(act.apply(vector_of_point(pt, 5, 2)), 5));
    for (int t = 0; t < 16; ++t) img[25 + t] = 25 + d.mul(t, gcode);
    return img;
  };

  std::vector<int> trans(degree);
  for (int pt = 0; pt < 25; ++pt) {
    auto v = vector_of_point(pt, 5, 2);
    v[0] = (v[0] + 1) % 5;
    trans[pt] = int(point_of_vector(v, 5));
  }
  for (int t = 0; t < 16; ++t) trans[25 + t] = 25 + t;

  GroupSpec spec;
  spec.kind = GroupSpec::Kind::PermLiteral;
  spec.n = degree;
  spec.perm_gens.push_back(cycles_of_images(t_generator(d.gen1, d.act1)));
  spec.perm_gens.push_back(cycles_of_images(t_generator(d.gen2, d.act2)));
  spec.perm_gens.push_back(cycles_of_images(trans));
  return spec;
}

}  // namespace psublab
