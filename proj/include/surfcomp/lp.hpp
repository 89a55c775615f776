#pragma once

#include <optional>
#include <vector>

#include "surfcomp/numbers.hpp"

namespace surfcomp {

// maximize objective.x subject to eq.x = eq_rhs, le.x <= le_rhs,
// x_i >= 0 unless free_var[i].
struct LpProblem {
  size_t n = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> eq;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> le;
  std::vector<Rational> le_rhs;
  std::vector<bool> free_var;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

// Dense two-phase simplex over the rationals with Bland's rule.
LpResult lp_maximize(const LpProblem& p);

// Unique solution of a square system, nullopt if singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace surfcomp
