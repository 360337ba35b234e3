#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pscf/lottery.hpp"
#include "pscf/prefs.hpp"
#include "pscf/rational.hpp"

namespace pscf {

using RuleFn = std::function<Lottery(const Profile&)>;

struct ParticipationReport {
    Lottery with_outcome;     // rule on the full profile
    Lottery without_outcome;  // rule with agent i dropped
    bool sd_ok = false;          // abstaining is not strictly SD-better
    bool strong_ok = false;      // participating is weakly SD-better
    bool very_strong_ok = false; // ... and strictly better whenever any strict
                                 // SD improvement over the abstain outcome exists
};

struct EfficiencyVerdict {
    bool efficient = false;
    std::optional<Lottery> witness;  // SD-dominates the tested lottery when set
};

/// Alternatives not Pareto-dominated: no b with b >= a for every agent and
/// b > a for at least one.
std::vector<int> pareto_optimal_set(const Profile& profile);

/// supp(p) contained in the Pareto-optimal set.
bool ex_post_efficient(const Lottery& p, const Profile& profile);

/// SD-efficiency via the surplus-maximization LP: efficient iff the optimum
/// is 0; otherwise returns the dominating witness read off the optimum.
EfficiencyVerdict sd_efficient(const Lottery& p, const Profile& profile);

/// Every agent weakly SD-prefers p to the uniform lottery.
bool sd_uniform_ok(const Lottery& p, const Profile& profile);

/// For every coalition S, p puts mass >= |S|/n on the union of the members'
/// first classes. Agents with identical first classes are grouped before
/// enumerating coalitions. Throws when n exceeds the cap.
bool proportional_share_ok(const Lottery& p, const Profile& profile, int agent_cap = 20);

ParticipationReport participation_report(const RuleFn& rule, const Profile& profile, int agent);

enum class MisreportDomain { all, strict, dichotomous };

struct Manipulation {
    WeakOrder misreport;
    Lottery outcome;  // strictly SD-dominates the truthful outcome for the agent
};

/// Enumerates every weak order in the domain as agent i's report and returns
/// the ones whose outcome strictly SD-dominates the truthful outcome with
/// respect to the agent's true order. Throws when m exceeds the cap.
std::vector<Manipulation> strategyproofness_scan(const RuleFn& rule, const Profile& profile,
                                                 int agent, MisreportDomain domain,
                                                 int m_cap = 5);

/// For every single-step reinforcement of alt in agent i's order, the rule's
/// probability of alt does not decrease.
bool monotonicity_check(const RuleFn& rule, const Profile& profile, int agent, int alt);

}  // namespace pscf
