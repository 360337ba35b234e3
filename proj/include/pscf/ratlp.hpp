#pragma once

#include <vector>

#include "pscf/lottery.hpp"
#include "pscf/prefs.hpp"
#include "pscf/rational.hpp"

namespace pscf {

enum class Relation { less_equal, equal, greater_equal };

/// maximize objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
    struct Constraint {
        std::vector<Rational> coeffs;
        Relation rel;
        Rational rhs;
    };
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Constraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational objective_value;          // meaningful when optimal
    std::vector<Rational> assignment;  // per variable, exact; vertex of the region
    std::vector<Rational> duals;       // per constraint, exact; meaningful when optimal
};

/// Two-phase simplex with Bland's anti-cycling rule, exact arithmetic
/// end-to-end. The dense tableau is kept fraction-free: integer entries with
/// one common denominator, updated by integer pivoting, so no per-entry gcd
/// work. verbosity >= 1 traces phases, >= 2 dumps tableaus to stderr.
LpOutcome solve_lp(const LinearProgram& lp, int verbosity = 0);

/// The SD-dominance LP for lottery p under the profile. Variables are
/// q(0..m-1) followed by one surplus e_{i,c} per agent i and non-last class
/// threshold c. Constraints: sum_a q(a) = 1 and, per (i,c), the q-prefix
/// mass minus e_{i,c} equals the p-prefix mass. Objective: maximize sum e.
/// p is SD-efficient iff the optimum is 0; otherwise the q-part of any
/// optimal assignment is a dominating witness.
LinearProgram build_sd_dominance_lp(const Lottery& p, const Profile& profile);

}  // namespace pscf
