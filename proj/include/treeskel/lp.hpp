#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "treeskel/rational.hpp"

namespace treeskel {

/// An exact-rational linear program:
///   minimize objective . x   (objective optional)
///   subject to  equalities:   row . x == rhs
///               inequalities: row . x <= rhs
///               lower[j] <= x[j] <= upper[j]  (either side may be absent)
///
/// All data is exact; the solver never touches floating point.
struct LinearProgram {
  struct Row {
    RationalVec coeffs;
    Rational rhs;
  };

  int num_vars = 0;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  std::optional<RationalVec> objective;

  explicit LinearProgram(int vars = 0)
      : num_vars(vars),
        lower(static_cast<std::size_t>(vars)),
        upper(static_cast<std::size_t>(vars)) {}

  void add_equality(RationalVec coeffs, Rational rhs) {
    equalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  void add_inequality(RationalVec coeffs, Rational rhs) {
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  // row . x >= rhs, stored as the negated <= row.
  void add_ge_inequality(RationalVec coeffs, Rational rhs) {
    for (auto& c : coeffs) c = -c;
    inequalities.push_back({std::move(coeffs), -rhs});
  }
  void set_nonnegative() {
    for (auto& l : lower) l = Rational(0);
  }
};

struct FeasibilityResult {
  bool feasible = false;
  RationalVec witness;  // length num_vars when feasible
};

enum class OptStatus { Optimal, Infeasible, Unbounded };

struct OptResult {
  OptStatus status = OptStatus::Infeasible;
  Rational value;
  RationalVec point;
};

// Pivot selection. The default starts with Dantzig (most negative reduced
// cost, ties by lowest column) and switches permanently to Bland's rule once
// a run of degenerate pivots exceeds a threshold. Any cycle is degenerate, so
// the switch is always reached inside one, and Bland terminates; the whole
// rule is deterministic and anti-cycling. The leaving row is always chosen by
// minimum ratio with ties broken by the smallest basic variable index.
enum class PivotRule { Bland, Dantzig, DantzigThenBland };

struct SimplexOptions {
  PivotRule rule = PivotRule::DantzigThenBland;
  int degenerate_switch_after = 64;
};

namespace detail {

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SimplexOptions& opt) : opt_(opt) {
    build(lp);
  }

  // Phase 1. False means the constraint system is infeasible.
  bool find_feasible() {
    if (trivially_infeasible_) return false;
    if (art_begin_ == art_end_) return true;  // slack basis was already feasible
    if (!run(wrow_)) return false;            // phase-1 objective is bounded; run() only
                                              // returns false on an internal stall guard
    if (wrow_.back() != 0) return false;      // min sum of artificials > 0
    evict_artificials();
    return true;
  }

  // Phase 2 over the given internal objective. False means unbounded.
  bool minimize(const RationalVec& internal_cost) {
    zrow_.assign(total_cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < internal_cost.size(); ++j) zrow_[j] = internal_cost[j];
    // Reduce against the current basis.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int b = basis_[r];
      if (b >= 0 && b < static_cast<int>(internal_cost.size()) && internal_cost[static_cast<std::size_t>(b)] != 0)
        axpy(zrow_, -internal_cost[static_cast<std::size_t>(b)], rows_[r]);
    }
    degenerate_streak_ = 0;
    use_bland_ = opt_.rule == PivotRule::Bland;
    return run(zrow_);
  }

  int num_internal() const { return n_struct_; }

  RationalVec internal_point() const {
    RationalVec x(static_cast<std::size_t>(n_struct_), Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] >= 0 && basis_[r] < n_struct_)
        x[static_cast<std::size_t>(basis_[r])] = rows_[r].back();
    return x;
  }

  RationalVec original_point() const {
    const RationalVec x = internal_point();
    RationalVec out(vars_.size());
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      const VarMap& v = vars_[j];
      switch (v.kind) {
        case VarKind::Fixed: out[j] = v.base; break;
        case VarKind::Shifted: out[j] = v.base + x[static_cast<std::size_t>(v.col)]; break;
        case VarKind::Mirrored: out[j] = v.base - x[static_cast<std::size_t>(v.col)]; break;
        case VarKind::Split:
          out[j] = x[static_cast<std::size_t>(v.col)] - x[static_cast<std::size_t>(v.col2)];
          break;
      }
    }
    return out;
  }

  const RationalVec& internal_objective_row() const { return zrow_; }

  // Maps an original-space objective to internal columns (constant dropped).
  RationalVec map_objective(const RationalVec& c) const {
    RationalVec out(static_cast<std::size_t>(n_struct_), Rational(0));
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      if (j >= c.size() || c[j] == 0) continue;
      const VarMap& v = vars_[j];
      switch (v.kind) {
        case VarKind::Fixed: break;
        case VarKind::Shifted: out[static_cast<std::size_t>(v.col)] += c[j]; break;
        case VarKind::Mirrored: out[static_cast<std::size_t>(v.col)] -= c[j]; break;
        case VarKind::Split:
          out[static_cast<std::size_t>(v.col)] += c[j];
          out[static_cast<std::size_t>(v.col2)] -= c[j];
          break;
      }
    }
    return out;
  }

 private:
  enum class VarKind { Fixed, Shifted, Mirrored, Split };
  struct VarMap {
    VarKind kind = VarKind::Shifted;
    Rational base;  // fixed value, lower bound, or upper bound per kind
    int col = -1;
    int col2 = -1;
  };

  // y += f * x over all columns, skipping zero entries of x.
  static void axpy(RationalVec& y, const Rational& f, const RationalVec& x) {
    if (f == 0) return;
    for (std::size_t c = 0; c < x.size(); ++c)
      if (x[c] != 0) y[c] += f * x[c];
  }

  void build(const LinearProgram& lp) {
    const std::size_t nv = static_cast<std::size_t>(lp.num_vars);
    auto lb = lp.lower;
    auto ub = lp.upper;
    lb.resize(nv);
    ub.resize(nv);

    vars_.resize(nv);
    n_struct_ = 0;
    // Internal upper-bound rows collected as (var column, bound).
    std::vector<std::pair<std::size_t, Rational>> ub_rows;
    for (std::size_t j = 0; j < nv; ++j) {
      VarMap& v = vars_[j];
      if (lb[j] && ub[j] && *lb[j] > *ub[j]) {
        trivially_infeasible_ = true;
        return;
      }
      if (lb[j] && ub[j] && *lb[j] == *ub[j]) {
        v = {VarKind::Fixed, *lb[j], -1, -1};
      } else if (lb[j]) {
        v = {VarKind::Shifted, *lb[j], n_struct_++, -1};
        if (ub[j]) ub_rows.emplace_back(j, *ub[j] - *lb[j]);
      } else if (ub[j]) {
        v = {VarKind::Mirrored, *ub[j], n_struct_++, -1};
      } else {
        v = {VarKind::Split, Rational(0), n_struct_, n_struct_ + 1};
        n_struct_ += 2;
      }
    }

    // Internal rows: (coeffs over structural cols, rhs, is_equality).
    struct IRow {
      RationalVec a;
      Rational b;
      bool eq;
    };
    std::vector<IRow> irows;
    auto translate = [&](const LinearProgram::Row& row, bool eq) {
      IRow ir{RationalVec(static_cast<std::size_t>(n_struct_), Rational(0)), row.rhs, eq};
      for (std::size_t j = 0; j < nv && j < row.coeffs.size(); ++j) {
        const Rational& c = row.coeffs[j];
        if (c == 0) continue;
        const VarMap& v = vars_[j];
        switch (v.kind) {
          case VarKind::Fixed: ir.b -= c * v.base; break;
          case VarKind::Shifted:
            ir.a[static_cast<std::size_t>(v.col)] += c;
            ir.b -= c * v.base;
            break;
          case VarKind::Mirrored:
            ir.a[static_cast<std::size_t>(v.col)] -= c;
            ir.b -= c * v.base;
            break;
          case VarKind::Split:
            ir.a[static_cast<std::size_t>(v.col)] += c;
            ir.a[static_cast<std::size_t>(v.col2)] -= c;
            break;
        }
      }
      irows.push_back(std::move(ir));
    };
    for (const auto& r : lp.equalities) translate(r, true);
    for (const auto& r : lp.inequalities) translate(r, false);
    for (const auto& [j, bound] : ub_rows) {
      IRow ir{RationalVec(static_cast<std::size_t>(n_struct_), Rational(0)), bound, false};
      ir.a[static_cast<std::size_t>(vars_[j].col)] = 1;
      irows.push_back(std::move(ir));
    }

    // Drop constant rows and exact duplicates; detect trivial conflicts.
    std::map<std::tuple<bool, RationalVec, Rational>, bool> dedupe;
    std::vector<IRow> kept;
    for (auto& ir : irows) {
      const bool all_zero =
          std::all_of(ir.a.begin(), ir.a.end(), [](const Rational& c) { return c == 0; });
      if (all_zero) {
        if ((ir.eq && ir.b != 0) || (!ir.eq && ir.b < 0)) {
          trivially_infeasible_ = true;
          return;
        }
        continue;
      }
      auto key = std::make_tuple(ir.eq, ir.a, ir.b);
      if (dedupe.emplace(std::move(key), true).second) kept.push_back(std::move(ir));
    }

    // Tableau: structural cols, one slack per inequality, artificials last.
    const int n_slack = static_cast<int>(
        std::count_if(kept.begin(), kept.end(), [](const IRow& r) { return !r.eq; }));
    int next_slack = n_struct_;
    std::vector<int> art_rows;
    for (std::size_t r = 0; r < kept.size(); ++r) {
      IRow& ir = kept[r];
      int slack_col = -1;
      if (!ir.eq) slack_col = next_slack++;
      bool negate = ir.b < 0;
      if (negate) {
        for (auto& c : ir.a) c = -c;
        ir.b = -ir.b;
      }
      rows_.emplace_back();
      RationalVec& row = rows_.back();
      row.assign(static_cast<std::size_t>(n_struct_ + n_slack) + 1, Rational(0));
      for (int c = 0; c < n_struct_; ++c) row[static_cast<std::size_t>(c)] = ir.a[static_cast<std::size_t>(c)];
      if (slack_col >= 0) row[static_cast<std::size_t>(slack_col)] = negate ? -1 : 1;
      row.back() = ir.b;
      if (slack_col >= 0 && !negate) {
        basis_.push_back(slack_col);
      } else {
        basis_.push_back(-1);  // artificial assigned below
        art_rows.push_back(static_cast<int>(rows_.size()) - 1);
      }
    }

    art_begin_ = n_struct_ + n_slack;
    art_end_ = art_begin_ + static_cast<int>(art_rows.size());
    total_cols_ = art_end_;
    for (auto& row : rows_) {
      Rational rhs = row.back();
      row.pop_back();
      row.resize(static_cast<std::size_t>(total_cols_), Rational(0));
      row.push_back(std::move(rhs));
    }
    for (std::size_t i = 0; i < art_rows.size(); ++i) {
      const int r = art_rows[i];
      const int col = art_begin_ + static_cast<int>(i);
      rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 1;
      basis_[static_cast<std::size_t>(r)] = col;
    }

    // Phase-1 reduced-cost row: unit cost on artificials, reduced against the
    // artificial basis. Last entry carries -(current artificial sum).
    wrow_.assign(static_cast<std::size_t>(total_cols_) + 1, Rational(0));
    for (int c = art_begin_; c < art_end_; ++c) wrow_[static_cast<std::size_t>(c)] = 1;
    for (int r : art_rows) axpy(wrow_, Rational(-1), rows_[static_cast<std::size_t>(r)]);

    use_bland_ = opt_.rule == PivotRule::Bland;
  }

  int choose_entering(const RationalVec& cost) const {
    int best = -1;
    const Rational* best_rc = nullptr;
    for (int j = 0; j < art_begin_; ++j) {  // artificials never re-enter
      const Rational& rc = cost[static_cast<std::size_t>(j)];
      if (rc >= 0) continue;
      if (use_bland_) return j;
      if (best < 0 || rc < *best_rc) {
        best = j;
        best_rc = &rc;
      }
    }
    return best;
  }

  int choose_leaving(int enter) const {
    int best_row = -1;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& a = rows_[r][static_cast<std::size_t>(enter)];
      if (a <= 0) continue;
      Rational ratio = rows_[r].back() / a;
      if (best_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[static_cast<std::size_t>(best_row)])) {
        best_row = static_cast<int>(r);
        best_ratio = ratio;
      }
    }
    return best_row;
  }

  void pivot(int row, int col, RationalVec& cost) {
    RationalVec& pr = rows_[static_cast<std::size_t>(row)];
    const Rational p = pr[static_cast<std::size_t>(col)];
    if (p != 1)
      for (auto& c : pr)
        if (c != 0) c /= p;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<int>(r) == row) continue;
      const Rational f = rows_[r][static_cast<std::size_t>(col)];
      if (f != 0) axpy(rows_[r], -f, pr);
    }
    {
      const Rational f = cost[static_cast<std::size_t>(col)];
      if (f != 0) axpy(cost, -f, pr);
    }
    if (&cost != &wrow_ && art_begin_ != art_end_ && !wrow_.empty()) {
      // keep the phase-1 row consistent in case callers interleave phases
      const Rational f = wrow_[static_cast<std::size_t>(col)];
      if (f != 0) axpy(wrow_, -f, pr);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Runs the simplex loop on the given cost row. Returns false on
  // unboundedness (never happens in phase 1).
  bool run(RationalVec& cost) {
    for (;;) {
      const int enter = choose_entering(cost);
      if (enter < 0) return true;
      const int leave = choose_leaving(enter);
      if (leave < 0) return false;
      const bool degenerate = rows_[static_cast<std::size_t>(leave)].back() == 0;
      pivot(leave, enter, cost);
      if (opt_.rule == PivotRule::DantzigThenBland && !use_bland_) {
        degenerate_streak_ = degenerate ? degenerate_streak_ + 1 : 0;
        if (degenerate_streak_ >= opt_.degenerate_switch_after) use_bland_ = true;
      }
    }
  }

  // After phase 1, pivot still-basic artificials out where possible; rows
  // whose artificial cannot be replaced are redundant and stay inert (all
  // their structural and slack entries are zero).
  void evict_artificials() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < art_begin_) continue;
      for (int j = 0; j < art_begin_; ++j) {
        if (rows_[r][static_cast<std::size_t>(j)] != 0) {
          pivot(static_cast<int>(r), j, wrow_);
          break;
        }
      }
    }
  }

  SimplexOptions opt_;
  std::vector<VarMap> vars_;
  int n_struct_ = 0;
  int art_begin_ = 0;
  int art_end_ = 0;
  int total_cols_ = 0;
  bool trivially_infeasible_ = false;
  bool use_bland_ = false;
  int degenerate_streak_ = 0;
  std::vector<RationalVec> rows_;  // tableau rows, rhs in the last slot
  std::vector<int> basis_;
  RationalVec wrow_;
  RationalVec zrow_;
};

}  // namespace detail

/// Exact feasibility of the constraint system. On success the witness
/// satisfies every constraint exactly.
inline FeasibilityResult feasible(const LinearProgram& lp, const SimplexOptions& opt = {}) {
  detail::Simplex s(lp, opt);
  if (!s.find_feasible()) return {};
  return {true, s.original_point()};
}

/// Exact minimization. Requires lp.objective.
inline OptResult optimize(const LinearProgram& lp, const SimplexOptions& opt = {}) {
  if (!lp.objective) throw std::invalid_argument("optimize requires an objective");
  detail::Simplex s(lp, opt);
  OptResult res;
  if (!s.find_feasible()) {
    res.status = OptStatus::Infeasible;
    return res;
  }
  if (!s.minimize(s.map_objective(*lp.objective))) {
    res.status = OptStatus::Unbounded;
    return res;
  }
  res.status = OptStatus::Optimal;
  res.point = s.original_point();
  res.value = dot(*lp.objective, res.point);
  return res;
}

}  // namespace treeskel
