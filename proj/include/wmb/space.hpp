#pragma once

// Finite dimensional spaces with labeled bases. Tensor products are
// row-major in the first factor: basis index of p⊗q is i(p)*dim(Q)+i(q).

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace wmb {

struct Space {
  int dim = 0;
  std::vector<std::string> labels;

  static Space make(std::vector<std::string> ls) {
    Space s;
    s.dim = static_cast<int>(ls.size());
    std::unordered_set<std::string> seen(ls.begin(), ls.end());
    if (static_cast<int>(seen.size()) != s.dim)
      throw std::invalid_argument("Space: duplicate basis labels");
    s.labels = std::move(ls);
    return s;
  }

  static Space unlabeled(int n, const std::string& prefix = "x") {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return make(std::move(ls));
  }

  const std::string& label(int i) const { return labels.at(i); }
};

inline Space tensor_space(const Space& p, const Space& q) {
  std::vector<std::string> ls;
  ls.reserve(static_cast<std::size_t>(p.dim) * q.dim);
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < q.dim; ++j)
      ls.push_back("(" + p.labels[i] + "," + q.labels[j] + ")");
  Space s;
  s.dim = p.dim * q.dim;
  s.labels = std::move(ls);
  return s;
}

inline Space unit_space() { return Space::make({"k"}); }

inline int pair_index(const Space& p, const Space& q, int i, int j) {
  return i * q.dim + j;
}

}  // namespace wmb
