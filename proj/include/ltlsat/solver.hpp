#pragma once

// Small conflict-driven SAT solver: two-watched-literal propagation,
// first-UIP clause learning, activity-guided decisions and incremental
// assumptions with failed-assumption extraction. Fully deterministic:
// identical clause/assumption sequences produce identical results.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ltlsat::sat {

using Var = std::int32_t;

struct Lit {
  std::int32_t x = -2;  // 2*var + sign
  bool operator==(const Lit& o) const { return x == o.x; }
  bool operator!=(const Lit& o) const { return x != o.x; }
  bool operator<(const Lit& o) const { return x < o.x; }
};

inline Lit mk_lit(Var v, bool neg = false) { return Lit{2 * v + (neg ? 1 : 0)}; }
inline Lit operator~(Lit l) { return Lit{l.x ^ 1}; }
inline bool sign(Lit l) { return l.x & 1; }
inline Var var(Lit l) { return l.x >> 1; }

enum class SolveResult { Sat, Unsat, Budget };

class Solver {
 public:
  Var new_var() {
    Var v = static_cast<Var>(assign_.size());
    assign_.push_back(0);
    reason_.push_back(kNoClause);
    level_.push_back(0);
    activity_.push_back(0.0);
    seen_.push_back(0);
    phase_.push_back(false);  // default polarity: false
    watches_.emplace_back();
    watches_.emplace_back();
    return v;
  }

  int num_vars() const { return static_cast<int>(assign_.size()); }

  void ensure_vars(int n) {
    while (num_vars() < n) new_var();
  }

  // Returns false if the clause makes the problem unsatisfiable outright.
  bool add_clause(std::vector<Lit> c) {
    assert(decision_level() == 0);
    if (!ok_) return false;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::vector<Lit> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i + 1 < c.size() && c[i + 1] == ~c[i]) return true;  // tautology
      signed char v = value(c[i]);
      if (v == 1) return true;  // satisfied at top level
      if (v == -1) continue;    // falsified at top level
      out.push_back(c[i]);
    }
    if (out.empty()) {
      ok_ = false;
      return false;
    }
    if (out.size() == 1) {
      unchecked_enqueue(out[0], kNoClause);
      if (propagate() != kNoClause) {
        ok_ = false;
        return false;
      }
      return true;
    }
    attach(static_cast<std::uint32_t>(clauses_.size()));
    clauses_.push_back(std::move(out));
    return true;
  }

  void set_conflict_budget(std::int64_t b) { conflict_budget_ = b; }

  SolveResult solve(const std::vector<Lit>& assumptions) {
    failed_.clear();
    model_.clear();
    budget_exhausted_ = false;
    if (!ok_) return SolveResult::Unsat;
    assumptions_ = assumptions;
    cancel_until(0);
    if (propagate() != kNoClause) {
      ok_ = false;
      return SolveResult::Unsat;
    }

    std::int64_t conflicts_at_start = conflicts;
    int restart_idx = 0;
    for (;;) {
      std::int64_t limit = 64 * luby(restart_idx++);
      SolveResult r = search(limit, conflicts_at_start);
      if (r == SolveResult::Budget && !budget_exhausted_) {
        cancel_until(0);  // restart
        continue;
      }
      if (r == SolveResult::Sat) {
        model_.resize(assign_.size());
        for (std::size_t v = 0; v < assign_.size(); ++v) model_[v] = assign_[v] == 1;
      }
      cancel_until(0);
      return r;
    }
  }

  bool model_value(Var v) const { return model_[v]; }
  const std::vector<bool>& model() const { return model_; }

  // After Unsat under assumptions: a subset of the assumptions that is
  // already jointly unsatisfiable with the clause set. Empty when the
  // clause set alone is unsatisfiable.
  const std::vector<Lit>& failed_assumptions() const { return failed_; }

  std::int64_t conflicts = 0;
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;

 private:
  static constexpr std::uint32_t kNoClause = 0xffffffffu;

  signed char value(Lit l) const {
    signed char a = assign_[var(l)];
    return sign(l) ? static_cast<signed char>(-a) : a;
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void unchecked_enqueue(Lit l, std::uint32_t from) {
    assign_[var(l)] = sign(l) ? -1 : 1;
    reason_[var(l)] = from;
    level_[var(l)] = decision_level();
    trail_.push_back(l);
  }

  void attach(std::uint32_t ci) {
    const auto& c = clauses_[ci];
    watches_[(~c[0]).x].push_back(ci);
    watches_[(~c[1]).x].push_back(ci);
  }

  std::uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      Lit p = trail_[qhead_++];
      ++propagations;
      auto& ws = watches_[p.x];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        std::uint32_t ci = ws[i];
        auto& c = clauses_[ci];
        Lit false_lit = ~p;
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) == 1) {
          ws[j++] = ws[i++];
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != -1) {
            std::swap(c[1], c[k]);
            watches_[(~c[1]).x].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) {
          ++i;
          continue;
        }
        ws[j++] = ws[i++];
        if (value(c[0]) == -1) {  // conflict
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        unchecked_enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return kNoClause;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail_.size(); i-- > trail_lim_[lvl];) {
      Var v = var(trail_[i]);
      phase_[v] = assign_[v] == 1;
      assign_[v] = 0;
      reason_[v] = kNoClause;
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
  }

  void bump(Var v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
  }

  // First-UIP conflict analysis.
  void analyze(std::uint32_t confl, std::vector<Lit>& learnt, int& bt_level) {
    learnt.clear();
    learnt.push_back(Lit{});  // slot for the asserting literal
    int counter = 0;
    Lit p{-2};
    std::size_t idx = trail_.size();
    std::uint32_t reason_clause = confl;
    for (;;) {
      const auto& c = clauses_[reason_clause];
      for (std::size_t k = (p.x == -2 ? 0 : 1); k < c.size(); ++k) {
        Lit q = c[k];
        Var v = var(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = 1;
          bump(v);
          if (level_[v] >= decision_level())
            ++counter;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[var(trail_[idx - 1])]) --idx;
      p = trail_[--idx];
      seen_[var(p)] = 0;
      --counter;
      if (counter == 0) break;
      reason_clause = reason_[var(p)];
    }
    learnt[0] = ~p;

    if (learnt.size() == 1) {
      bt_level = 0;
    } else {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i)
        if (level_[var(learnt[i])] > level_[var(learnt[max_i])]) max_i = i;
      std::swap(learnt[1], learnt[max_i]);
      bt_level = level_[var(learnt[1])];
    }
    for (std::size_t i = 1; i < learnt.size(); ++i) seen_[var(learnt[i])] = 0;
  }

  // The assumption literal p cannot be placed; collect the assumption
  // subset responsible for its complement.
  void analyze_final(Lit p) {
    failed_.clear();
    failed_.push_back(p);
    Var pv = var(p);
    if (decision_level() == 0 || level_[pv] == 0) {
      std::sort(failed_.begin(), failed_.end());
      return;
    }
    seen_[pv] = 1;
    for (std::size_t i = trail_.size(); i-- > trail_lim_[0];) {
      Var v = var(trail_[i]);
      if (!seen_[v]) continue;
      if (reason_[v] == kNoClause) {
        if (v != pv) failed_.push_back(trail_[i]);
      } else {
        const auto& c = clauses_[reason_[v]];
        for (std::size_t k = 1; k < c.size(); ++k)
          if (level_[var(c[k])] > 0) seen_[var(c[k])] = 1;
      }
      seen_[v] = 0;
    }
    seen_[pv] = 0;
    std::sort(failed_.begin(), failed_.end());
    failed_.erase(std::unique(failed_.begin(), failed_.end()), failed_.end());
  }

  Var pick_branch_var() {
    Var best = -1;
    double best_act = -1.0;
    for (Var v = 0; v < num_vars(); ++v) {
      if (assign_[v] == 0 && activity_[v] > best_act) {
        best_act = activity_[v];
        best = v;
      }
    }
    return best;
  }

  SolveResult search(std::int64_t conflict_limit, std::int64_t conflicts_at_start) {
    std::int64_t local_conflicts = 0;
    for (;;) {
      std::uint32_t confl = propagate();
      if (confl != kNoClause) {
        ++conflicts;
        ++local_conflicts;
        if (decision_level() == 0) {
          ok_ = false;
          failed_.clear();
          return SolveResult::Unsat;
        }
        std::vector<Lit> learnt;
        int bt;
        analyze(confl, learnt, bt);
        cancel_until(bt);
        if (learnt.size() == 1) {
          unchecked_enqueue(learnt[0], kNoClause);
        } else {
          std::uint32_t ci = static_cast<std::uint32_t>(clauses_.size());
          clauses_.push_back(learnt);
          attach(ci);
          unchecked_enqueue(learnt[0], ci);
        }
        var_inc_ /= 0.95;
        if (conflict_budget_ >= 0 && conflicts - conflicts_at_start >= conflict_budget_) {
          budget_exhausted_ = true;
          return SolveResult::Budget;
        }
        if (local_conflicts >= conflict_limit) return SolveResult::Budget;  // restart
      } else {
        if (decision_level() < static_cast<int>(assumptions_.size())) {
          Lit a = assumptions_[decision_level()];
          if (value(a) == 1) {
            trail_lim_.push_back(trail_.size());  // already satisfied: dummy level
            continue;
          }
          if (value(a) == -1) {
            analyze_final(~a);
            return SolveResult::Unsat;
          }
          ++decisions;
          trail_lim_.push_back(trail_.size());
          unchecked_enqueue(a, kNoClause);
          continue;
        }
        Var v = pick_branch_var();
        if (v < 0) return SolveResult::Sat;
        ++decisions;
        trail_lim_.push_back(trail_.size());
        unchecked_enqueue(mk_lit(v, !phase_[v]), kNoClause);
      }
    }
  }

  static std::int64_t luby(int i) {
    // 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
    int size = 1, seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != i) {
      size = (size - 1) >> 1;
      --seq;
      i = i % size;
    }
    return 1ll << seq;
  }

  bool ok_ = true;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // indexed by lit.x
  std::vector<signed char> assign_;
  std::vector<std::uint32_t> reason_;
  std::vector<int> level_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<bool> phase_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Lit> assumptions_;
  std::vector<Lit> failed_;
  std::vector<bool> model_;
  double var_inc_ = 1.0;
  std::int64_t conflict_budget_ = -1;
  bool budget_exhausted_ = false;
};

}  // namespace ltlsat::sat
