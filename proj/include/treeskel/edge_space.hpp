#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treeskel {

/// Canonical linear indexing of the edges of K_n.
///
/// Edge (i,j) with i < j gets index i*n - i*(i+1)/2 + (j-i-1), i.e. edges are
/// ordered (0,1),(0,2),...,(0,n-1),(1,2),... The map is a bijection between
/// vertex pairs and {0,...,d-1} with d = n*(n-1)/2.
class EdgeSpace {
 public:
  explicit EdgeSpace(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("EdgeSpace requires n >= 2");
    endpoints_.reserve(static_cast<std::size_t>(dim()));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) endpoints_.emplace_back(i, j);
  }

  int n() const { return n_; }
  int dim() const { return n_ * (n_ - 1) / 2; }

  int index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_ || i == j) throw std::invalid_argument("edge endpoints out of range");
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::pair<int, int> endpoints(int idx) const {
    if (idx < 0 || idx >= dim()) throw std::invalid_argument("edge index out of range");
    return endpoints_[static_cast<std::size_t>(idx)];
  }

  const std::vector<std::pair<int, int>>& edges() const { return endpoints_; }

  std::string edge_label(int idx) const {
    auto [i, j] = endpoints(idx);
    if (n_ <= 10) return std::to_string(i) + std::to_string(j);
    return std::to_string(i) + "-" + std::to_string(j);
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> endpoints_;
};

}  // namespace treeskel
