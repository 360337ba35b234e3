#include "pscf/ratlp.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>
#include <stdexcept>

namespace pscf {

namespace {

using boost::multiprecision::lcm;

// Dense fraction-free tableau: real value of any cell is cell / den with a
// single positive denominator shared by every row, including both objective
// rows. Pivoting keeps all cells integral (Bareiss-style update).
class Tableau {
  public:
    Tableau(const LinearProgram& lp, int verbosity);

    LpOutcome solve();

  private:
    int num_structural_;
    int num_rows_;
    int num_cols_;  // structural + slacks + artificials, excluding rhs
    int rhs_;       // rhs column index
    int verbosity_;
    Bigint den_;
    std::vector<std::vector<Bigint>> rows_;
    std::vector<Bigint> z_;   // phase-2 objective row: (z_j - c_j, z)
    std::vector<Bigint> z1_;  // phase-1 objective row
    std::vector<int> basis_;  // basis_[r] = variable of row r
    std::vector<bool> row_active_;
    std::vector<bool> col_artificial_;
    std::vector<int> identity_col_;   // per row, its initial +1 column
    std::vector<Rational> row_mult_;  // tableau row = row_mult * original row
    Bigint obj_scale_;                // objective row was scaled by this

    void pivot(int row, int col);
    bool bland_phase(const std::vector<Bigint>* z1);  // false iff unbounded
    void drive_out_artificials();
    void dump(const char* tag) const;
};

Tableau::Tableau(const LinearProgram& lp, int verbosity) : verbosity_(verbosity) {
    const int ns = lp.num_vars;
    if (ns < 1) throw std::invalid_argument("lp: need at least one variable");
    if (static_cast<int>(lp.objective.size()) != ns)
        throw std::invalid_argument("lp: objective length != num_vars");
    for (const auto& con : lp.constraints)
        if (static_cast<int>(con.coeffs.size()) != ns)
            throw std::invalid_argument("lp: constraint length != num_vars");

    num_structural_ = ns;
    num_rows_ = static_cast<int>(lp.constraints.size());
    const int num_slacks =
        static_cast<int>(std::count_if(lp.constraints.begin(), lp.constraints.end(),
                                       [](const auto& c) { return c.rel != Relation::equal; }));
    // worst case one artificial per row; unused ones stay all-zero and dead
    num_cols_ = ns + num_slacks + num_rows_;
    rhs_ = num_cols_;
    den_ = 1;
    rows_.assign(num_rows_, std::vector<Bigint>(num_cols_ + 1, Bigint(0)));
    basis_.assign(num_rows_, -1);
    row_active_.assign(num_rows_, true);
    col_artificial_.assign(num_cols_, false);
    identity_col_.assign(num_rows_, -1);
    row_mult_.assign(num_rows_, Rational(1));

    int next_slack = ns;
    int next_art = ns + num_slacks;
    for (int r = 0; r < num_rows_; ++r) {
        const auto& con = lp.constraints[r];
        Bigint scale = denominator(con.rhs);
        for (const auto& c : con.coeffs) scale = lcm(scale, denominator(c));
        Rational mult(scale);
        for (int j = 0; j < ns; ++j) {
            Rational v = con.coeffs[j] * mult;
            rows_[r][j] = numerator(v);
        }
        const Rational scaled_rhs = con.rhs * mult;
        rows_[r][rhs_] = numerator(scaled_rhs);
        int slack_col = -1;
        if (con.rel != Relation::equal) {
            slack_col = next_slack++;
            rows_[r][slack_col] = (con.rel == Relation::less_equal) ? 1 : -1;
        }
        if (rows_[r][rhs_] < 0) {
            for (auto& cell : rows_[r]) cell = -cell;
            mult = -mult;
        }
        row_mult_[r] = mult;
        if (slack_col >= 0 && rows_[r][slack_col] == 1) {
            basis_[r] = slack_col;
            identity_col_[r] = slack_col;
        } else {
            const int art = next_art++;
            col_artificial_[art] = true;
            rows_[r][art] = 1;
            basis_[r] = art;
            identity_col_[r] = art;
        }
    }

    obj_scale_ = 1;
    for (const auto& c : lp.objective) obj_scale_ = lcm(obj_scale_, denominator(c));
    z_.assign(num_cols_ + 1, Bigint(0));
    for (int j = 0; j < ns; ++j) {
        const Rational scaled = lp.objective[j] * Rational(obj_scale_);
        z_[j] = -numerator(scaled);
    }

    // phase-1 objective: maximize -(sum of artificials); eliminate the basic
    // artificials so the row is expressed over the current basis
    z1_.assign(num_cols_ + 1, Bigint(0));
    for (int r = 0; r < num_rows_; ++r)
        if (col_artificial_[basis_[r]])
            for (int j = 0; j <= num_cols_; ++j) z1_[j] -= rows_[r][j];
    for (int j = 0; j < num_cols_; ++j)
        if (col_artificial_[j]) z1_[j] += 1;
}

void Tableau::dump(const char* tag) const {
    std::cerr << "tableau " << tag << " den=" << den_ << "\n";
    for (int r = 0; r < num_rows_; ++r) {
        if (!row_active_[r]) continue;
        std::cerr << "  x" << basis_[r] << " |";
        for (int j = 0; j <= num_cols_; ++j) std::cerr << " " << rows_[r][j];
        std::cerr << "\n";
    }
    std::cerr << "  z  |";
    for (int j = 0; j <= num_cols_; ++j) std::cerr << " " << z_[j];
    std::cerr << "\n  z1 |";
    for (int j = 0; j <= num_cols_; ++j) std::cerr << " " << z1_[j];
    std::cerr << "\n";
}

void Tableau::pivot(int row, int col) {
    const Bigint piv = rows_[row][col];
    assert(piv != 0);
    auto update = [&](std::vector<Bigint>& target) {
        const Bigint factor = target[col];
        if (factor == 0) {
            if (den_ == piv) return;
            for (auto& cell : target) {
                if (cell == 0) continue;
                Bigint q, rem;
                boost::multiprecision::divide_qr(cell * piv, den_, q, rem);
                assert(rem == 0);
                cell = std::move(q);
            }
            return;
        }
        const std::vector<Bigint>& prow = rows_[row];
        for (int j = 0; j <= num_cols_; ++j) {
            Bigint q, rem;
            boost::multiprecision::divide_qr(target[j] * piv - factor * prow[j], den_, q, rem);
            assert(rem == 0);
            target[j] = std::move(q);
        }
    };
    for (int i = 0; i < num_rows_; ++i) {
        if (i == row || !row_active_[i]) continue;
        update(rows_[i]);
    }
    update(z_);
    update(z1_);
    den_ = piv;
    basis_[row] = col;
    if (den_ < 0) {  // only possible when evicting an artificial at value 0
        den_ = -den_;
        for (int i = 0; i < num_rows_; ++i)
            if (row_active_[i])
                for (auto& cell : rows_[i]) cell = -cell;
        for (auto& cell : z_) cell = -cell;
        for (auto& cell : z1_) cell = -cell;
    }
}

bool Tableau::bland_phase(const std::vector<Bigint>* z1) {
    const std::vector<Bigint>& obj = z1 ? *z1 : z_;
    for (;;) {
        // entering: smallest-index eligible column with negative (z_j - c_j)
        int enter = -1;
        for (int j = 0; j < num_cols_; ++j) {
            if (col_artificial_[j] && !z1) continue;  // artificials dead in phase 2
            if (obj[j] < 0) { enter = j; break; }
        }
        if (enter < 0) return true;
        // leaving: min ratio rhs/entry over positive entries, ties by
        // smallest basis variable (Bland)
        int leave = -1;
        for (int i = 0; i < num_rows_; ++i) {
            if (!row_active_[i] || rows_[i][enter] <= 0) continue;
            if (leave < 0) { leave = i; continue; }
            const Bigint lhs = rows_[i][rhs_] * rows_[leave][enter];
            const Bigint rhs = rows_[leave][rhs_] * rows_[i][enter];
            if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
        }
        if (leave < 0) return false;
        if (verbosity_ >= 2) dump(z1 ? "phase1" : "phase2");
        pivot(leave, enter);
    }
}

void Tableau::drive_out_artificials() {
    for (int r = 0; r < num_rows_; ++r) {
        if (!row_active_[r] || !col_artificial_[basis_[r]]) continue;
        assert(rows_[r][rhs_] == 0);
        int col = -1;
        for (int j = 0; j < num_cols_; ++j)
            if (!col_artificial_[j] && rows_[r][j] != 0) { col = j; break; }
        if (col >= 0) {
            pivot(r, col);
        } else {
            row_active_[r] = false;  // redundant constraint
        }
    }
}

LpOutcome Tableau::solve() {
    bool need_phase1 = false;
    for (int r = 0; r < num_rows_; ++r)
        if (col_artificial_[basis_[r]]) need_phase1 = true;
    if (need_phase1) {
        if (verbosity_ >= 1) std::cerr << "lp: phase 1 (" << num_rows_ << " rows)\n";
        const bool bounded = bland_phase(&z1_);
        assert(bounded);
        (void)bounded;
        if (z1_[rhs_] != 0) return LpOutcome{LpStatus::infeasible, Rational(0), {}, {}};
        drive_out_artificials();
    }
    if (verbosity_ >= 1) std::cerr << "lp: phase 2\n";
    if (!bland_phase(nullptr)) return LpOutcome{LpStatus::unbounded, Rational(0), {}, {}};
    if (verbosity_ >= 2) dump("final");

    LpOutcome out;
    out.status = LpStatus::optimal;
    out.objective_value = Rational(z_[rhs_], den_) / Rational(obj_scale_);
    out.assignment.assign(num_structural_, Rational(0));
    for (int r = 0; r < num_rows_; ++r) {
        if (!row_active_[r]) continue;
        if (basis_[r] < num_structural_)
            out.assignment[basis_[r]] = Rational(rows_[r][rhs_], den_);
    }
    out.duals.assign(num_rows_, Rational(0));
    for (int r = 0; r < num_rows_; ++r) {
        if (!row_active_[r]) continue;
        out.duals[r] = Rational(z_[identity_col_[r]], den_) * row_mult_[r] / Rational(obj_scale_);
    }
    return out;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp, int verbosity) {
    if (lp.constraints.empty()) {
        // only x >= 0 bounds: optimum is 0 unless some coefficient is positive
        for (const auto& c : lp.objective)
            if (c > 0) return LpOutcome{LpStatus::unbounded, Rational(0), {}, {}};
        return LpOutcome{LpStatus::optimal, Rational(0),
                         std::vector<Rational>(lp.num_vars, Rational(0)), {}};
    }
    Tableau tableau(lp, verbosity);
    return tableau.solve();
}

LinearProgram build_sd_dominance_lp(const Lottery& p, const Profile& profile) {
    if (p.num_alternatives() != profile.num_alternatives())
        throw std::invalid_argument("sd dominance lp: universe mismatch");
    const int m = profile.num_alternatives();
    const int n = profile.num_agents();
    int num_surplus = 0;
    for (int i = 0; i < n; ++i) num_surplus += profile.order(i).num_classes() - 1;

    LinearProgram lp;
    lp.num_vars = m + num_surplus;
    lp.objective.assign(lp.num_vars, Rational(0));
    for (int e = 0; e < num_surplus; ++e) lp.objective[m + e] = 1;

    LinearProgram::Constraint total;
    total.coeffs.assign(lp.num_vars, Rational(0));
    for (int a = 0; a < m; ++a) total.coeffs[a] = 1;
    total.rel = Relation::equal;
    total.rhs = 1;
    lp.constraints.push_back(std::move(total));

    int e_index = m;
    for (int i = 0; i < n; ++i) {
        const WeakOrder& order = profile.order(i);
        Rational prefix = 0;
        std::vector<Rational> indicator(m, Rational(0));
        for (int c = 0; c + 1 < order.num_classes(); ++c) {
            for (int a : order.classes()[c]) {
                indicator[a] = 1;
                prefix += p.prob(a);
            }
            LinearProgram::Constraint con;
            con.coeffs.assign(lp.num_vars, Rational(0));
            for (int a = 0; a < m; ++a) con.coeffs[a] = indicator[a];
            con.coeffs[e_index++] = -1;
            con.rel = Relation::equal;
            con.rhs = prefix;
            lp.constraints.push_back(std::move(con));
        }
    }
    return lp;
}

}  // namespace pscf
