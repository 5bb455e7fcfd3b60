#include "psublab/perm.hpp"

#include <algorithm>
#include <numeric>

namespace psublab {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= int(images_.size()) || seen[v])
      throw Error("image array is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw Error("cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

int Perm::order() const {
  long long ord = 1;
  for (const auto& cyc : cycles())
    ord = std::lcm(ord, (long long)cyc.size());
  return int(ord);
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error("degree mismatch in composition");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b[a[i]];
  return Perm(std::move(img));
}

Perm conjugate(const Perm& h, const Perm& g) {
  return compose(compose(g.inverse(), h), g);
}

std::string cycle_string(const Perm& p) {
  auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace psublab
