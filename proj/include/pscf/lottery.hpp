#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pscf/prefs.hpp"
#include "pscf/rational.hpp"

namespace pscf {

/// Exact-rational probability distribution over alternatives {0..m-1}.
/// Probabilities are >= 0 and sum to exactly 1. Immutable.
class Lottery {
  public:
    /// Validated construction from a dense probability vector.
    explicit Lottery(std::vector<Rational> probs);

    /// Omitted alternatives get probability 0. Throws on a duplicate
    /// alternative, a negative probability, or a sum != 1.
    static Lottery from_pairs(const std::vector<std::pair<int, Rational>>& pairs, int m);

    static Lottery degenerate(int alt, int m);
    static Lottery uniform_over(const std::vector<int>& alts, int m);
    static Lottery uniform(int m);

    int num_alternatives() const { return static_cast<int>(probs_.size()); }
    const Rational& prob(int alt) const;
    const std::vector<Rational>& probs() const { return probs_; }

    /// Alternatives with positive probability, ascending by id.
    std::vector<int> support() const;

    /// Total probability on a set of alternatives.
    Rational mass_on(const std::vector<int>& alts) const;

    bool operator==(const Lottery&) const = default;

  private:
    std::vector<Rational> probs_;
};

/// Probability that the lottery selects something at least as good as `alt`:
/// the prefix sum over classes E^1..E^{class_index(alt)}.
Rational upper_contour_mass(const Lottery& p, const WeakOrder& order, int alt);

enum class SdCompare { equal, first_strict, second_strict, incomparable };

/// Stochastic-dominance comparison of p and q under `order`. One threshold
/// per indifference class suffices (prefix sums are constant within a class).
SdCompare sd_compare(const Lottery& p, const Lottery& q, const WeakOrder& order);

/// True iff some lottery is strictly SD-preferred to p under `order`;
/// equivalently, p puts mass < 1 on the first class.
bool exists_strict_sd_improvement(const Lottery& p, const WeakOrder& order);

/// Pointwise convex combination; weights must be >= 0 and sum to 1.
Lottery mix(const std::vector<std::pair<Rational, Lottery>>& entries);

/// Rank vector of a lottery: component j is sum_i sum_{a in E_i^j} p(a).
/// Components sum to n.
std::vector<Rational> rank_vector_lottery(const Lottery& p, const Profile& profile);

/// JSON object mapping label -> "num/den", support only, ascending id order.
std::string lottery_json(const Lottery& p, const std::vector<Alternative>& alternatives);

}  // namespace pscf
