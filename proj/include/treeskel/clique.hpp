#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "treeskel/skeleton.hpp"

namespace treeskel {

struct CliqueResult {
  int omega = 0;
  std::vector<int> witness;  // lexicographically smallest maximum clique, sorted
};

namespace detail {

// Branch-and-bound maximum clique with greedy-colouring bounds
// (Tomita-style). Candidate sets are bitsets over the skeleton vertices.
class CliqueSolver {
 public:
  explicit CliqueSolver(const SkeletonGraph& g) : g_(g), words_((static_cast<std::size_t>(g.nv) + 63) / 64) {}

  // Largest clique inside the candidate set, searching only until `stop_at`
  // is reached (pass g.nv+1 for an exact maximum).
  int solve(std::vector<std::uint64_t> cand, int stop_at) {
    best_ = 0;
    stop_at_ = stop_at;
    expand(0, std::move(cand));
    return best_;
  }

  std::vector<std::uint64_t> full_set() const {
    std::vector<std::uint64_t> s(words_, 0);
    for (int v = 0; v < g_.nv; ++v) s[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
    return s;
  }

 private:
  static bool test(const std::vector<std::uint64_t>& s, int v) {
    return s[static_cast<std::size_t>(v) / 64] >> (v % 64) & 1;
  }
  static void clear(std::vector<std::uint64_t>& s, int v) {
    s[static_cast<std::size_t>(v) / 64] &= ~(1ULL << (v % 64));
  }
  static bool empty(const std::vector<std::uint64_t>& s) {
    for (std::uint64_t w : s)
      if (w) return false;
    return true;
  }

  // Greedy colouring of the candidate set; returns vertices ordered by
  // colour class (colour 1 first), with their colour numbers.
  void colour(const std::vector<std::uint64_t>& cand, std::vector<int>& order,
              std::vector<int>& colors) const {
    order.clear();
    colors.clear();
    std::vector<std::vector<std::uint64_t>> classes;
    std::vector<std::vector<int>> members;
    for (int v = 0; v < g_.nv; ++v) {
      if (!test(cand, v)) continue;
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool conflict = false;
        const auto& row = g_.rows[static_cast<std::size_t>(v)];
        for (std::size_t w = 0; w < words_; ++w)
          if (classes[c][w] & row[w]) {
            conflict = true;
            break;
          }
        if (!conflict) break;
      }
      if (c == classes.size()) {
        classes.emplace_back(words_, 0);
        members.emplace_back();
      }
      classes[c][static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
      members[c].push_back(v);
    }
    for (std::size_t c = 0; c < members.size(); ++c)
      for (int v : members[c]) {
        order.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
  }

  void expand(int depth, std::vector<std::uint64_t> cand) {
    if (best_ >= stop_at_) return;
    std::vector<int> order, colors;
    colour(cand, order, colors);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (best_ >= stop_at_) return;
      const int v = order[static_cast<std::size_t>(idx)];
      if (depth + colors[static_cast<std::size_t>(idx)] <= best_) return;  // colours only shrink leftwards
      std::vector<std::uint64_t> next(words_);
      const auto& row = g_.rows[static_cast<std::size_t>(v)];
      for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & row[w];
      if (empty(next)) {
        if (depth + 1 > best_) best_ = depth + 1;
      } else {
        expand(depth + 1, std::move(next));
      }
      clear(cand, v);
    }
  }

  const SkeletonGraph& g_;
  std::size_t words_;
  int best_ = 0;
  int stop_at_ = 0;
};

}  // namespace detail

/// Clique number only.
inline int clique_number(const SkeletonGraph& g) {
  if (g.nv == 0) return 0;
  detail::CliqueSolver s(g);
  return s.solve(s.full_set(), g.nv + 1);
}

/// Clique number plus the lexicographically smallest maximum clique, found
/// by fixing vertices in ascending order and re-solving the decision
/// problem on the shrinking candidate set.
inline CliqueResult max_clique(const SkeletonGraph& g) {
  CliqueResult res;
  res.omega = clique_number(g);
  if (res.omega == 0) return res;
  detail::CliqueSolver s(g);
  std::vector<std::uint64_t> cand = s.full_set();
  int chosen = 0;
  for (int v = 0; v < g.nv && chosen < res.omega; ++v) {
    if (!(cand[static_cast<std::size_t>(v) / 64] >> (v % 64) & 1)) continue;
    // Candidates compatible with picking v: neighbours of v beyond v.
    std::vector<std::uint64_t> next(cand.size());
    const auto& row = g.rows[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < cand.size(); ++w) next[w] = cand[w] & row[w];
    for (int u = 0; u <= v; ++u) next[static_cast<std::size_t>(u) / 64] &= ~(1ULL << (u % 64));
    const int need = res.omega - chosen - 1;
    if (need == 0 || detail::CliqueSolver(g).solve(next, need) >= need) {
      res.witness.push_back(v);
      ++chosen;
      cand = std::move(next);
    }
  }
  return res;
}

}  // namespace treeskel
