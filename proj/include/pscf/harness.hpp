#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pscf/lottery.hpp"
#include "pscf/prefs.hpp"

namespace pscf {

/// Execution mode for the experiment kernels. `serial` is the reference
/// implementation; `parallel` runs the same loops under OpenMP. Results are
/// bit-identical: trials carry independently derived seeds and are reduced
/// by commutative integer sums.
enum class Exec { serial, parallel };

struct ExperimentSpec {
    std::vector<std::pair<int, int>> sizes;  // (n, m) cells
    int trials = 1;
    std::uint64_t seed = 0;
    std::string rule = "rmec";
};

struct CellResult {
    int n = 0, m = 0;
    int trials = 0;
    int sd_efficient_count = 0;
    double elapsed_seconds = 0.0;
};

/// Per cell: sample `trials` profiles uniformly over weak orders (seed derived
/// per (n, m, trial)), run the rule, and count SD-efficient outcomes.
std::vector<CellResult> run_table2(const ExperimentSpec& spec, Exec exec = Exec::parallel);

/// Scans every profile with n agents over the weak orders on m alternatives,
/// up to anonymity (multisets of orders), and returns how many have an
/// SD-dominated RMEC outcome. Throws if the multiset count exceeds `budget`.
std::uint64_t exhaustive_rmec_efficiency(int n, int m, Exec exec = Exec::parallel,
                                         std::uint64_t budget = 2'000'000);

/// supp(rmec) contained in supp(rsd).
bool support_containment_check(const Profile& profile, int rsd_agent_cap = 10);

/// Brute-force dominance oracle: enumerates every lottery with probabilities
/// that are multiples of 1/denominator (in a fixed lexicographic order over
/// the numerator vectors) and returns the first that SD-dominates p, if any.
/// A returned witness is always valid; absence proves nothing.
std::optional<Lottery> grid_dominance_oracle(const Lottery& p, const Profile& profile,
                                             int denominator,
                                             std::uint64_t budget = 10'000'000);

}  // namespace pscf
