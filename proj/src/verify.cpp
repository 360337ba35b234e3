#include "pscf/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pscf/ratlp.hpp"

namespace pscf {

std::vector<int> pareto_optimal_set(const Profile& profile) {
    const int m = profile.num_alternatives();
    const int n = profile.num_agents();
    std::vector<int> result;
    for (int a = 0; a < m; ++a) {
        bool dominated = false;
        for (int b = 0; b < m && !dominated; ++b) {
            if (b == a) continue;
            bool weak_all = true, strict_some = false;
            for (int i = 0; i < n; ++i) {
                const int ca = profile.order(i).class_index(a);
                const int cb = profile.order(i).class_index(b);
                if (cb > ca) { weak_all = false; break; }
                if (cb < ca) strict_some = true;
            }
            dominated = weak_all && strict_some;
        }
        if (!dominated) result.push_back(a);
    }
    return result;
}

bool ex_post_efficient(const Lottery& p, const Profile& profile) {
    if (p.num_alternatives() != profile.num_alternatives())
        throw std::invalid_argument("ex_post_efficient: universe mismatch");
    const std::vector<int> pareto = pareto_optimal_set(profile);
    for (int a : p.support())
        if (std::find(pareto.begin(), pareto.end(), a) == pareto.end()) return false;
    return true;
}

EfficiencyVerdict sd_efficient(const Lottery& p, const Profile& profile) {
    const LinearProgram lp = build_sd_dominance_lp(p, profile);
    const LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::optimal)
        throw std::logic_error("sd_efficient: dominance LP must be feasible and bounded");
    if (out.objective_value == 0) return EfficiencyVerdict{true, std::nullopt};
    std::vector<Rational> q(out.assignment.begin(),
                            out.assignment.begin() + profile.num_alternatives());
    return EfficiencyVerdict{false, Lottery(std::move(q))};
}

bool sd_uniform_ok(const Lottery& p, const Profile& profile) {
    const Lottery uniform = Lottery::uniform(profile.num_alternatives());
    for (int i = 0; i < profile.num_agents(); ++i) {
        const SdCompare cmp = sd_compare(p, uniform, profile.order(i));
        if (cmp != SdCompare::equal && cmp != SdCompare::first_strict) return false;
    }
    return true;
}

bool proportional_share_ok(const Lottery& p, const Profile& profile, int agent_cap) {
    const int n = profile.num_agents();
    if (n > agent_cap)
        throw std::invalid_argument("proportional_share_ok: n exceeds the coalition cap");
    // group agents by identical first class; a coalition is determined by the
    // set of distinct first classes it brings in
    std::map<std::vector<int>, int> groups;
    for (int i = 0; i < n; ++i) ++groups[profile.order(i).first_class()];
    std::vector<std::pair<std::vector<int>, int>> distinct(groups.begin(), groups.end());
    const int d = static_cast<int>(distinct.size());
    const int m = profile.num_alternatives();
    for (std::uint64_t subset = 1; subset < (std::uint64_t(1) << d); ++subset) {
        std::vector<bool> in_union(m, false);
        int coalition = 0;
        for (int g = 0; g < d; ++g) {
            if (!(subset & (std::uint64_t(1) << g))) continue;
            coalition += distinct[g].second;
            for (int a : distinct[g].first) in_union[a] = true;
        }
        Rational mass = 0;
        for (int a = 0; a < m; ++a)
            if (in_union[a]) mass += p.prob(a);
        if (mass < Rational(coalition, n)) return false;
    }
    return true;
}

ParticipationReport participation_report(const RuleFn& rule, const Profile& profile, int agent) {
    if (profile.num_agents() < 2)
        throw std::invalid_argument("participation_report: need n >= 2");
    const WeakOrder& truth = profile.order(agent);
    Lottery with = rule(profile);
    Lottery without = rule(drop_agent(profile, agent));
    const SdCompare cmp = sd_compare(with, without, truth);
    ParticipationReport report{with, without, false, false, false};
    report.sd_ok = (cmp != SdCompare::second_strict);
    report.strong_ok = (cmp == SdCompare::equal || cmp == SdCompare::first_strict);
    report.very_strong_ok =
        report.strong_ok &&
        (cmp == SdCompare::first_strict || !exists_strict_sd_improvement(without, truth));
    return report;
}

std::vector<Manipulation> strategyproofness_scan(const RuleFn& rule, const Profile& profile,
                                                 int agent, MisreportDomain domain, int m_cap) {
    const int m = profile.num_alternatives();
    if (m > m_cap)
        throw std::invalid_argument("strategyproofness_scan: m exceeds the misreport cap");
    const WeakOrder& truth = profile.order(agent);
    const Lottery truthful_outcome = rule(profile);
    const Bigint total = count_weak_orders(m);
    std::vector<Manipulation> found;
    for (Bigint index = 0; index < total; ++index) {
        WeakOrder report = unrank_weak_order(m, index);
        if (domain == MisreportDomain::strict && !report.is_strict()) continue;
        if (domain == MisreportDomain::dichotomous && !report.is_dichotomous()) continue;
        std::vector<WeakOrder> orders = profile.orders();
        orders[agent] = report;
        Lottery outcome = rule(Profile(profile.alternatives(), std::move(orders),
                                       profile.agent_names()));
        if (sd_compare(outcome, truthful_outcome, truth) == SdCompare::first_strict)
            found.push_back(Manipulation{std::move(report), std::move(outcome)});
    }
    return found;
}

bool monotonicity_check(const RuleFn& rule, const Profile& profile, int agent, int alt) {
    const Rational before = rule(profile).prob(alt);
    for (const WeakOrder& promoted : reinforcements(profile.order(agent), alt)) {
        std::vector<WeakOrder> orders = profile.orders();
        orders[agent] = promoted;
        const Lottery after =
            rule(Profile(profile.alternatives(), std::move(orders), profile.agent_names()));
        if (after.prob(alt) < before) return false;
    }
    return true;
}

}  // namespace pscf
