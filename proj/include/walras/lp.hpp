#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walras/rational.hpp"

namespace walras {

enum class Sense { maximize, minimize };
enum class Relation { le, eq, ge };

struct LpRow {
    std::vector<Rational> coeffs;
    Relation rel = Relation::le;
    Rational rhs;
    std::string label;
};

/// Dense rational LP over nonnegative variables. Row and column labels are
/// carried for reporting only; solving ignores them.
struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<std::string> column_labels;  // empty or one per column

    int column_count() const { return static_cast<int>(objective.size()); }
    int row_count() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Exact solve result. `dual` holds one multiplier per original row in the
/// textbook convention: for a maximization, <= rows get y >= 0, >= rows get
/// y <= 0 and sum_r y_r A_rj >= c_j per column; for a minimization the
/// senses flip. On optimal results primal feasibility, dual feasibility and
/// the strong-duality equality are asserted internally before returning.
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
    Rational objective_value;
    Rational phase1_infeasibility;  // positive exactly when infeasible
};

/// Two-phase dense tableau simplex with Bland's rule throughout. The pivot
/// sequence is a pure function of the input, so results are deterministic
/// and anti-cycling is guaranteed.
LpSolution solve_lp(const LinearProgram& lp);

struct FeasiblePoint {
    std::optional<std::vector<Rational>> point;
    Rational phase1_infeasibility;  // positive exactly when infeasible
};

/// Phase-1 only: any exact feasible point of the constraint system (the
/// objective is ignored), or the positive phase-1 optimum as an
/// infeasibility certificate.
FeasiblePoint find_feasible_point(const LinearProgram& lp);

struct Vertex {
    std::vector<Rational> point;
    Rational objective_value;
};

/// Independent oracle: every basic feasible solution, obtained by
/// enumerating column bases of the slack-augmented system and solving each
/// square system exactly. Deduplicated, sorted lexicographically. Refuses
/// instances above 8 structural variables or 8 rows.
std::vector<Vertex> vertex_enumerate(const LinearProgram& lp);

}  // namespace walras
