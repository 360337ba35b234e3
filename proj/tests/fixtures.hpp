#pragma once

// Shared test fixtures: the profiles exercised throughout the test suites,
// built through the text codec, plus small helpers for building exact
// lotteries and permuted profiles.

#include <string>
#include <utility>
#include <vector>

#include "pscf/lottery.hpp"
#include "pscf/prefs.hpp"
#include "pscf/rational.hpp"

namespace fixtures {

using pscf::Lottery;
using pscf::Profile;
using pscf::Rational;

// five agents, six alternatives; outcome 1/10 a + 3/5 c + 1/5 d + 1/10 f
inline Profile example1() {
    return pscf::parse_profile(
        "alternatives: a b c d e f\n"
        "1: a,b,c,f > d > e\n"
        "2: b,d > e > a,c,f\n"
        "3: a,e,f > d > b > c\n"
        "4: c > d > e > a,f > b\n"
        "5: c,d > a,b,e,f\n");
}

// the 2-vs-1 profile where the rank-maximal rule shuts out the minority
inline Profile minority() {
    return pscf::parse_profile(
        "alternatives: a b\n"
        "1: a > b\n"
        "2: a > b\n"
        "3: b > a\n");
}

// ten dichotomous agents; RMEC gives 8/10 d + 1/10 c + 1/10 b, dominated
inline Profile dichotomous10() {
    return pscf::parse_profile(
        "alternatives: a b c d\n"
        "1: d > a,b,c\n"
        "2: d > a,b,c\n"
        "3: d > a,b,c\n"
        "4: d > a,b,c\n"
        "5: c,d > a,b\n"
        "6: c,d > a,b\n"
        "7: b,d > a,c\n"
        "8: b,d > a,c\n"
        "9: a,b > c,d\n"
        "10: a,c > b,d\n");
}

// RSD returns 1/3 a + 1/3 b + 1/6 c + 1/6 d here; RMEC returns 1/2 a + 1/2 b
inline Profile rsd4() {
    return pscf::parse_profile(
        "alternatives: a b c d\n"
        "1: a,c > b > d\n"
        "2: a,d > b > c\n"
        "3: b,c > a > d\n"
        "4: b,d > a > c\n");
}

// strict 3-agent profile incompatible with uniformity + participation
inline Profile impossibility3() {
    return pscf::parse_profile(
        "alternatives: a b c\n"
        "1: a > b > c\n"
        "2: c > b > a\n"
        "3: a > b > c\n");
}

// agent 1 can manipulate RMEC here by reporting a > c > b > e > d
inline Profile manipulation3() {
    return pscf::parse_profile(
        "alternatives: a b c d e\n"
        "1: a > b > c > d > e\n"
        "2: e > d > c > b > a\n"
        "3: c,d > a,b,e\n");
}

// f Pareto-dominates b in this profile
inline Profile example2() {
    return pscf::parse_profile(
        "alternatives: a b c d e f\n"
        "1: a > e > d > f > b > c\n"
        "2: b,c,d,f > a > e\n"
        "3: e > a > b,c,d,f\n"
        "4: e > c > b,f > a > d\n"
        "5: e > b,f > c > a > d\n");
}

inline Rational rat(const std::string& text) { return pscf::parse_rational(text); }

/// Lottery from (label, fraction) pairs over the profile's alternatives.
inline Lottery lot(const Profile& profile,
                   const std::vector<std::pair<std::string, std::string>>& entries) {
    std::vector<std::pair<int, Rational>> pairs;
    pairs.reserve(entries.size());
    for (const auto& [label, frac] : entries)
        pairs.emplace_back(profile.alternative_id(label), rat(frac));
    return Lottery::from_pairs(pairs, profile.num_alternatives());
}

/// Profile with agents reordered by perm (new position i takes old agent perm[i]).
inline Profile permute_agents(const Profile& profile, const std::vector<int>& perm) {
    std::vector<pscf::WeakOrder> orders;
    std::vector<std::string> names;
    for (int i : perm) {
        orders.push_back(profile.order(i));
        names.push_back(profile.agent_name(i));
    }
    return Profile(profile.alternatives(), std::move(orders), std::move(names));
}

/// Profile with alternative ids relabeled: new id perm[a] plays old a's role.
/// Labels stay attached to positions, so lotteries compare via ids.
inline Profile permute_alternatives(const Profile& profile, const std::vector<int>& perm) {
    std::vector<pscf::WeakOrder> orders;
    for (int i = 0; i < profile.num_agents(); ++i) {
        std::vector<std::vector<int>> classes;
        for (const auto& cls : profile.order(i).classes()) {
            std::vector<int> mapped;
            for (int a : cls) mapped.push_back(perm[a]);
            classes.push_back(std::move(mapped));
        }
        orders.emplace_back(std::move(classes), profile.num_alternatives());
    }
    return Profile(profile.alternatives(), std::move(orders), profile.agent_names());
}

}  // namespace fixtures
