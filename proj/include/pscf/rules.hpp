#pragma once

#include <cstdint>
#include <vector>

#include "pscf/lottery.hpp"
#include "pscf/prefs.hpp"
#include "pscf/rational.hpp"

namespace pscf {

/// Per-rank agent counts for an alternative, zero-padded to length m.
struct RankVector {
    std::vector<int> counts;
    bool operator==(const RankVector&) const = default;
};

enum class LexOrder { better, equal, worse };

/// Strict lexicographic comparison: the first differing component decides.
LexOrder lex_compare(const RankVector& r, const RankVector& s);

/// Strictly decreasing positional scoring vector s_1 > s_2 > ... > s_m.
class ScoringVector {
  public:
    explicit ScoringVector(std::vector<Rational> scores);
    const std::vector<Rational>& scores() const { return scores_; }
    int size() const { return static_cast<int>(scores_.size()); }

    /// s_j = (n+1)^(m-j). Base n+1 makes the positional score order coincide
    /// with lexicographic rank-vector order (each rank count is at most n).
    static ScoringVector rank_maximal(int n, int m);

    /// s_j = m - j.
    static ScoringVector borda(int m);

  private:
    std::vector<Rational> scores_;
};

/// counts_j = number of agents whose j-th indifference class contains alt.
RankVector rank_vector_alt(int alt, const Profile& profile);

/// Total positional score of alt: sum over agents of s_{class_index}.
Rational positional_score(int alt, const Profile& profile, const ScoringVector& s);

/// The alternatives in the agent's first class with the lexicographically
/// best rank vector. Never empty.
std::vector<int> contribution_set(const Profile& profile, int agent);

/// Same, with "best rank vector" replaced by "highest positional score".
std::vector<int> contribution_set(const Profile& profile, int agent, const ScoringVector& s);

struct RmecResult {
    Lottery outcome;
    /// contribution_sets[i] is the set F(i) the agent splits his 1/n over.
    std::vector<std::vector<int>> contribution_sets;
};

/// Rank Maximal Equal Contribution: each agent spreads 1/n uniformly over
/// the alternatives in his first class with the best rank vector.
Lottery rmec(const Profile& profile);
RmecResult rmec_detailed(const Profile& profile);

/// Maximal equal contribution under an arbitrary strictly decreasing
/// scoring vector (length m); ties split uniformly.
Lottery s_mec(const Profile& profile, const ScoringVector& s);
RmecResult s_mec_detailed(const Profile& profile, const ScoringVector& s);

/// Uniform lottery over the alternatives whose rank vector is
/// lexicographically maximal among all alternatives.
Lottery rank_maximal_rule(const Profile& profile);

/// 1/n on each agent's unique top; requires every order to be strict.
Lottery random_dictatorship(const Profile& profile);

/// Agents in `perm` order successively refine the working set via
/// max_within; returns the final working set (possibly non-singleton).
std::vector<int> serial_dictatorship(const Profile& profile, const std::vector<int>& perm);

/// Exact random serial dictatorship: the average over all n! permutations
/// of the uniform lottery on the final working set. Computed by dynamic
/// programming over (used-agent set, working set) states, so it handles
/// n up to ~16 rather than n! permutations.
Lottery rsd(const Profile& profile);

/// Work counter for rank-vector construction (thread-local); used to check
/// the O(m^2 n) cost profile of rmec.
std::uint64_t rank_vector_work();
void reset_rank_vector_work();

}  // namespace pscf
