#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "treeskel/char_vector.hpp"
#include "treeskel/edge_space.hpp"
#include "treeskel/enumeration.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/rational.hpp"

namespace treeskel {

/// One violated row of the spanning-tree polytope H-representation:
///   equation 1: sum of all coordinates != n-1
///   equation 2: sum over edges inside vertex subset S exceeds |S|-1
///   equation 3: a negative coordinate
struct HRepViolation {
  int equation = 0;
  std::uint64_t subset = 0;  // vertex bitmask, equation 2 only
  int edge = -1;             // edge index, equation 3 only

  std::string describe(int n) const {
    if (equation == 1) return "total coordinate sum differs from n-1";
    if (equation == 2) {
      std::string s = "subset {";
      bool first = true;
      for (int v = 0; v < n; ++v)
        if (subset & (1ULL << v)) {
          if (!first) s += ',';
          s += std::to_string(v);
          first = false;
        }
      return s + "} exceeds its rank bound";
    }
    return "negative coordinate at edge index " + std::to_string(edge);
  }
};

/// Checks membership of an arbitrary rational point in the spanning-tree
/// polytope of K_n by scanning the full H-representation. Violations are
/// reported in a fixed order: equation 1, then equation 2 with subsets in
/// increasing bitmask order (sizes 2..n-1), then equation 3 by edge index.
/// Exponential in n by design; guarded by the same cap as enumeration.
inline std::optional<HRepViolation> mst_hrep_violation(const RationalVec& x, int n,
                                                       int cap = kDefaultEnumerationCap) {
  if (n < 2) throw std::invalid_argument("mst_hrep_violation requires n >= 2");
  if (n > cap)
    throw resource_limit_error("H-representation scan over 2^n subsets exceeds cap " +
                               std::to_string(cap));
  EdgeSpace space(n);
  if (static_cast<int>(x.size()) != space.dim())
    throw std::invalid_argument("point dimension mismatch");

  Rational total = 0;
  for (const auto& c : x) total += c;
  if (total != n - 1) return HRepViolation{1, 0, -1};

  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size < 2 || size > n - 1) continue;
    Rational sum = 0;
    for (int e = 0; e < space.dim(); ++e) {
      auto [i, j] = space.endpoints(e);
      if ((s >> i & 1) && (s >> j & 1)) sum += x[static_cast<std::size_t>(e)];
    }
    if (sum > size - 1) return HRepViolation{2, s, -1};
  }

  for (int e = 0; e < space.dim(); ++e)
    if (x[static_cast<std::size_t>(e)] < 0) return HRepViolation{3, 0, e};

  return std::nullopt;
}

inline bool in_mst_polytope(const RationalVec& x, int n, int cap = kDefaultEnumerationCap) {
  return !mst_hrep_violation(x, n, cap).has_value();
}

/// Integrality cross-check: among all 0/1 points with exactly n-1 ones, the
/// H-representation accepts precisely the spanning trees. `exact_match` is
/// the conjunction over every candidate.
struct IntegralHullReport {
  std::uint64_t candidates = 0;
  std::uint64_t accepted = 0;
  std::uint64_t trees = 0;
  bool exact_match = false;
};

inline IntegralHullReport integral_hull_check(int n, int cap = 5) {
  if (n > cap)
    throw resource_limit_error("integral hull scan exceeds cap " + std::to_string(cap));
  EdgeSpace space(n);
  const int d = space.dim();
  IntegralHullReport rep;
  rep.exact_match = true;
  std::vector<int> comb(static_cast<std::size_t>(n - 1));
  // Enumerate all (n-1)-subsets of edge indices.
  for (int i = 0; i < n - 1; ++i) comb[static_cast<std::size_t>(i)] = i;
  for (;;) {
    ++rep.candidates;
    SpanningTree t{comb};
    RationalVec x = char_vector(t, space);  // comb is sorted, any edge set is fine
    const bool in_p = in_mst_polytope(x, n, n);
    const bool is_tree = is_spanning_tree(t, space);
    if (in_p) ++rep.accepted;
    if (is_tree) ++rep.trees;
    if (in_p != is_tree) rep.exact_match = false;

    // next combination
    int i = n - 2;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == d - (n - 1) + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n - 1; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return rep;
}

}  // namespace treeskel
