#include "walras/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace walras {

namespace {

// Dense exact tableau over the slack/surplus/artificial-augmented system.
// Bland's rule everywhere: entering = lowest-index column with negative
// reduced cost, leaving = lowest basic index among minimum ratios. The
// pivot sequence is therefore a pure function of the input.
struct Tableau {
    int n_struct = 0;
    int n_cols = 0;  // structural + aux + artificial
    int first_artificial = 0;
    std::vector<std::vector<Rational>> a;  // rows x n_cols
    std::vector<Rational> rhs;
    std::vector<int> basis;         // basic column per row
    std::vector<int> identity_col;  // per row: its initial identity column

    int rows() const { return static_cast<int>(a.size()); }

    void pivot(int r, int j) {
        const Rational piv = a[r][j];
        for (auto& v : a[r]) v /= piv;
        rhs[r] /= piv;
        for (int k = 0; k < rows(); ++k) {
            if (k == r || a[k][j] == 0) continue;
            const Rational f = a[k][j];
            for (int c = 0; c < n_cols; ++c) a[k][c] -= f * a[r][c];
            rhs[k] -= f * rhs[r];
        }
        basis[r] = j;
    }

    // One simplex phase for minimize costs.x. Returns false when unbounded.
    bool run(const std::vector<Rational>& costs, bool allow_artificial_entering) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n_cols; ++j) {
                if (!allow_artificial_entering && j >= first_artificial) break;
                Rational red = costs[j];
                for (int r = 0; r < rows(); ++r) {
                    if (a[r][j] != 0 && costs[basis[r]] != 0) red -= costs[basis[r]] * a[r][j];
                }
                if (red < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;  // optimal
            int leave = -1;
            Rational best_ratio;
            for (int r = 0; r < rows(); ++r) {
                if (a[r][enter] <= 0) continue;
                Rational ratio = rhs[r] / a[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded direction
            pivot(leave, enter);
        }
    }

    Rational objective_of(const std::vector<Rational>& costs) const {
        Rational v = 0;
        for (int r = 0; r < rows(); ++r) {
            if (costs[basis[r]] != 0) v += costs[basis[r]] * rhs[r];
        }
        return v;
    }
};

struct Prepared {
    Tableau t;
    std::vector<int> flip;  // +1/-1 per original row
    bool has_artificials = false;
};

void check_shape(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    if (n == 0) throw std::invalid_argument("lp: no columns");
    for (const auto& row : lp.rows) {
        if (row.coeffs.size() != n) throw std::invalid_argument("lp: ragged row width");
    }
    if (!lp.column_labels.empty() && lp.column_labels.size() != n) {
        throw std::invalid_argument("lp: column label count mismatch");
    }
}

Prepared prepare(const LinearProgram& lp) {
    const int n = lp.column_count();
    const int m = lp.row_count();
    Prepared p;
    p.flip.assign(m, 1);

    std::vector<Relation> rel(m);
    for (int r = 0; r < m; ++r) {
        rel[r] = lp.rows[r].rel;
        if (lp.rows[r].rhs < 0) {
            p.flip[r] = -1;
            if (rel[r] == Relation::le) rel[r] = Relation::ge;
            else if (rel[r] == Relation::ge) rel[r] = Relation::le;
        }
    }
    int n_aux = 0;
    int n_art = 0;
    for (int r = 0; r < m; ++r) {
        if (rel[r] != Relation::eq) ++n_aux;
        if (rel[r] != Relation::le) ++n_art;
    }
    Tableau& t = p.t;
    t.n_struct = n;
    t.first_artificial = n + n_aux;
    t.n_cols = n + n_aux + n_art;
    t.a.assign(m, std::vector<Rational>(t.n_cols, Rational(0)));
    t.rhs.resize(m);
    t.basis.assign(m, -1);
    t.identity_col.assign(m, -1);
    p.has_artificials = n_art > 0;

    int aux = n;
    int art = n + n_aux;
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j) {
            t.a[r][j] = Rational(p.flip[r]) * lp.rows[r].coeffs[j];
        }
        t.rhs[r] = Rational(p.flip[r]) * lp.rows[r].rhs;
        if (rel[r] == Relation::le) {
            t.a[r][aux] = 1;
            t.basis[r] = aux;
            t.identity_col[r] = aux;
            ++aux;
        } else if (rel[r] == Relation::ge) {
            t.a[r][aux] = -1;
            ++aux;
            t.a[r][art] = 1;
            t.basis[r] = art;
            t.identity_col[r] = art;
            ++art;
        } else {
            t.a[r][art] = 1;
            t.basis[r] = art;
            t.identity_col[r] = art;
            ++art;
        }
    }
    return p;
}

// Phase 1. Returns the infeasibility (0 when feasible).
Rational run_phase1(Prepared& p) {
    if (!p.has_artificials) return Rational(0);
    Tableau& t = p.t;
    std::vector<Rational> costs(t.n_cols, Rational(0));
    for (int j = t.first_artificial; j < t.n_cols; ++j) costs[j] = 1;
    if (!t.run(costs, true)) throw std::logic_error("lp: phase 1 reported unbounded");
    return t.objective_of(costs);
}

// Degenerate pivots that remove artificials from the basis where possible.
// Rows that stay on an artificial are redundant (all zero over real
// columns) and remain inert for the rest of the solve.
void eliminate_artificials(Prepared& p) {
    Tableau& t = p.t;
    for (int r = 0; r < t.rows(); ++r) {
        if (t.basis[r] < t.first_artificial) continue;
        for (int j = 0; j < t.first_artificial; ++j) {
            if (t.a[r][j] != 0) {
                t.pivot(r, j);  // rhs is 0 here, so feasibility is kept
                break;
            }
        }
    }
}

std::vector<Rational> structural_point(const Tableau& t) {
    std::vector<Rational> x(static_cast<std::size_t>(t.n_struct), Rational(0));
    for (int r = 0; r < t.rows(); ++r) {
        if (t.basis[r] < t.n_struct) x[static_cast<std::size_t>(t.basis[r])] = t.rhs[r];
    }
    return x;
}

void assert_solution(const LinearProgram& lp, const LpSolution& sol) {
    const int n = lp.column_count();
    const bool maximize = lp.sense == Sense::maximize;
    for (const auto& x : sol.primal) {
        if (x < 0) throw std::logic_error("lp: negative primal variable");
    }
    Rational primal_obj = 0;
    for (int j = 0; j < n; ++j) primal_obj += lp.objective[j] * sol.primal[j];
    if (primal_obj != sol.objective_value) throw std::logic_error("lp: objective mismatch");

    Rational dual_obj = 0;
    for (int r = 0; r < lp.row_count(); ++r) {
        const LpRow& row = lp.rows[r];
        Rational lhs = 0;
        for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * sol.primal[j];
        bool ok = row.rel == Relation::le   ? lhs <= row.rhs
                  : row.rel == Relation::ge ? lhs >= row.rhs
                                            : lhs == row.rhs;
        if (!ok) throw std::logic_error("lp: primal infeasible at claimed optimum");
        const Rational& y = sol.dual[static_cast<std::size_t>(r)];
        if (row.rel == Relation::le && (maximize ? y < 0 : y > 0)) {
            throw std::logic_error("lp: dual sign violated");
        }
        if (row.rel == Relation::ge && (maximize ? y > 0 : y < 0)) {
            throw std::logic_error("lp: dual sign violated");
        }
        dual_obj += y * row.rhs;
    }
    for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int r = 0; r < lp.row_count(); ++r) {
            s += sol.dual[static_cast<std::size_t>(r)] * lp.rows[r].coeffs[j];
        }
        if (maximize ? s < lp.objective[j] : s > lp.objective[j]) {
            throw std::logic_error("lp: dual infeasible");
        }
    }
    if (dual_obj != sol.objective_value) {
        throw std::logic_error("lp: strong duality equality violated");
    }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    check_shape(lp);
    Prepared p = prepare(lp);
    LpSolution sol;

    sol.phase1_infeasibility = run_phase1(p);
    if (sol.phase1_infeasibility > 0) {
        sol.status = LpStatus::infeasible;
        sol.objective_value = 0;
        return sol;
    }
    eliminate_artificials(p);

    Tableau& t = p.t;
    const bool maximize = lp.sense == Sense::maximize;
    std::vector<Rational> costs(t.n_cols, Rational(0));
    for (int j = 0; j < t.n_struct; ++j) {
        costs[j] = maximize ? -lp.objective[j] : lp.objective[j];
    }
    if (!t.run(costs, false)) {
        sol.status = LpStatus::unbounded;
        sol.objective_value = 0;
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.primal = structural_point(t);
    sol.objective_value = 0;
    for (int j = 0; j < t.n_struct; ++j) sol.objective_value += lp.objective[j] * sol.primal[j];

    // y = c_B B^{-1}, read through each row's initial identity column,
    // then mapped back through the row flips and the max/min conversion.
    sol.dual.assign(static_cast<std::size_t>(lp.row_count()), Rational(0));
    for (int r = 0; r < lp.row_count(); ++r) {
        Rational y = 0;
        for (int k = 0; k < t.rows(); ++k) {
            if (costs[t.basis[k]] != 0 && t.a[k][t.identity_col[r]] != 0) {
                y += costs[t.basis[k]] * t.a[k][t.identity_col[r]];
            }
        }
        if (p.flip[r] < 0) y = -y;
        if (maximize) y = -y;
        sol.dual[static_cast<std::size_t>(r)] = y;
    }
    assert_solution(lp, sol);
    return sol;
}

FeasiblePoint find_feasible_point(const LinearProgram& lp) {
    check_shape(lp);
    Prepared p = prepare(lp);
    FeasiblePoint out;
    out.phase1_infeasibility = run_phase1(p);
    if (out.phase1_infeasibility > 0) return out;
    out.point = structural_point(p.t);
    return out;
}

std::vector<Vertex> vertex_enumerate(const LinearProgram& lp) {
    check_shape(lp);
    if (lp.column_count() > 8 || lp.row_count() > 8) {
        throw std::invalid_argument("vertex_enumerate: above the 8x8 oracle limit");
    }
    const int n = lp.column_count();

    // Augment with one slack per inequality row.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    {
        int n_slack = 0;
        for (const auto& row : lp.rows) {
            if (row.rel != Relation::eq) ++n_slack;
        }
        int slack = 0;
        for (const auto& row : lp.rows) {
            std::vector<Rational> r(static_cast<std::size_t>(n + n_slack), Rational(0));
            for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = row.coeffs[j];
            if (row.rel != Relation::eq) {
                r[static_cast<std::size_t>(n + slack)] = row.rel == Relation::le ? 1 : -1;
                ++slack;
            }
            rows.push_back(std::move(r));
            rhs.push_back(row.rhs);
        }
    }

    // Drop equality rows that Gaussian elimination proves redundant; a
    // contradictory redundancy means an empty feasible set.
    {
        std::vector<std::vector<Rational>> elim;
        std::vector<std::size_t> keep;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (lp.rows[r].rel != Relation::eq) {
                keep.push_back(r);
                continue;
            }
            std::vector<Rational> work = rows[r];
            work.push_back(rhs[r]);
            for (const auto& prior : elim) {
                std::size_t lead = 0;
                while (lead < prior.size() - 1 && prior[lead] == 0) ++lead;
                if (lead < prior.size() - 1 && work[lead] != 0) {
                    const Rational f = work[lead] / prior[lead];
                    for (std::size_t c = 0; c < work.size(); ++c) work[c] -= f * prior[c];
                }
            }
            bool all_zero = std::all_of(work.begin(), work.end() - 1,
                                        [](const Rational& v) { return v == 0; });
            if (all_zero) {
                if (work.back() != 0) return {};  // inconsistent system
                continue;                         // redundant row
            }
            elim.push_back(std::move(work));
            keep.push_back(r);
        }
        if (keep.size() != rows.size()) {
            std::vector<std::vector<Rational>> nr;
            std::vector<Rational> nb;
            for (std::size_t r : keep) {
                nr.push_back(rows[r]);
                nb.push_back(rhs[r]);
            }
            rows = std::move(nr);
            rhs = std::move(nb);
        }
    }

    const int mr = static_cast<int>(rows.size());
    const int nc = mr == 0 ? n : static_cast<int>(rows[0].size());
    std::vector<Vertex> found;

    std::vector<int> combo(static_cast<std::size_t>(mr));
    for (int i = 0; i < mr; ++i) combo[static_cast<std::size_t>(i)] = i;
    auto advance = [&]() -> bool {
        int i = mr - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == nc - mr + i) --i;
        if (i < 0) return false;
        ++combo[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < mr; ++k) {
            combo[static_cast<std::size_t>(k)] = combo[static_cast<std::size_t>(k - 1)] + 1;
        }
        return true;
    };

    if (mr > nc) return {};
    for (;;) {
        // Solve the square system over the chosen columns.
        std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(mr));
        for (int r = 0; r < mr; ++r) {
            auto& line = mat[static_cast<std::size_t>(r)];
            line.reserve(static_cast<std::size_t>(mr) + 1);
            for (int c = 0; c < mr; ++c) {
                line.push_back(rows[static_cast<std::size_t>(r)]
                                   [static_cast<std::size_t>(combo[static_cast<std::size_t>(c)])]);
            }
            line.push_back(rhs[static_cast<std::size_t>(r)]);
        }
        bool singular = false;
        for (int col = 0; col < mr && !singular; ++col) {
            int piv = -1;
            for (int r = col; r < mr; ++r) {
                if (mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) {
                singular = true;
                break;
            }
            std::swap(mat[static_cast<std::size_t>(col)], mat[static_cast<std::size_t>(piv)]);
            auto& prow = mat[static_cast<std::size_t>(col)];
            const Rational p0 = prow[static_cast<std::size_t>(col)];
            for (auto& v : prow) v /= p0;
            for (int r = 0; r < mr; ++r) {
                if (r == col) continue;
                auto& line = mat[static_cast<std::size_t>(r)];
                const Rational f = line[static_cast<std::size_t>(col)];
                if (f == 0) continue;
                for (std::size_t c = 0; c < line.size(); ++c) {
                    line[c] -= f * prow[c];
                }
            }
        }
        if (!singular) {
            bool feasible = true;
            for (int r = 0; r < mr; ++r) {
                if (mat[static_cast<std::size_t>(r)].back() < 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
                for (int r = 0; r < mr; ++r) {
                    int col = combo[static_cast<std::size_t>(r)];
                    if (col < n) {
                        x[static_cast<std::size_t>(col)] =
                            mat[static_cast<std::size_t>(r)].back();
                    }
                }
                Rational obj = 0;
                for (int j = 0; j < n; ++j) obj += lp.objective[j] * x[static_cast<std::size_t>(j)];
                found.push_back({std::move(x), std::move(obj)});
            }
        }
        if (mr == 0 || !advance()) break;
    }
    if (mr == 0 && found.empty()) {
        std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
        found.push_back({x, Rational(0)});
    }

    std::sort(found.begin(), found.end(),
              [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const Vertex& a, const Vertex& b) { return a.point == b.point; }),
                found.end());
    return found;
}

}  // namespace walras
