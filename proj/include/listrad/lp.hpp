#ifndef LISTRAD_LP_HPP
#define LISTRAD_LP_HPP

#include <vector>

#include "listrad/rational.hpp"

namespace listrad {

// Exact-rational linear program in the form
//   maximize c.x  subject to  A x <= b,  x >= 0.
// Right-hand sides may be negative; a two-phase dense-tableau simplex with
// Bland's rule is used throughout, so no cycling and no rounding ever.
struct LpProblem {
  std::vector<std::vector<Rational>> rows;  // A, one inner vector per row
  std::vector<Rational> rhs;                // b
  std::vector<Rational> objective;          // c
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;     // primal values, one per variable
  std::vector<Rational> dual;  // dual values, one per row (>= 0 at optimum)
};

LpSolution solve_lp(const LpProblem& problem);

}  // namespace listrad

#endif  // LISTRAD_LP_HPP
