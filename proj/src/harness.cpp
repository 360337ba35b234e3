#include "pscf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "pscf/rng.hpp"
#include "pscf/rules.hpp"
#include "pscf/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pscf {

namespace {

Lottery run_rule(const std::string& name, const Profile& profile) {
    if (name == "rmec") return rmec(profile);
    if (name == "smec")
        return s_mec(profile, ScoringVector::rank_maximal(profile.num_agents(),
                                                          profile.num_alternatives()));
    if (name == "rankmax") return rank_maximal_rule(profile);
    if (name == "rd") return random_dictatorship(profile);
    if (name == "rsd") return rsd(profile);
    throw std::invalid_argument("unknown rule '" + name + "'");
}

bool known_rule(const std::string& name) {
    return name == "rmec" || name == "smec" || name == "rankmax" || name == "rd" ||
           name == "rsd";
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

std::vector<CellResult> run_table2(const ExperimentSpec& spec, Exec exec) {
    if (spec.trials < 1) throw std::invalid_argument("run_table2: need trials >= 1");
    if (!known_rule(spec.rule)) throw std::invalid_argument("unknown rule '" + spec.rule + "'");
    const bool uses_rsd = (spec.rule == "rsd");
    for (const auto& [n, m] : spec.sizes) {
        if (n < 1 || m < 1) throw std::invalid_argument("run_table2: need n, m >= 1");
        if (n > 64 || m > 16) throw std::invalid_argument("run_table2: size cap is n <= 64, m <= 16");
        if (uses_rsd && (n > 10 || m > 8))
            throw std::invalid_argument("run_table2: RSD runs are capped at n <= 10, m <= 8");
    }
    std::vector<CellResult> results;
    results.reserve(spec.sizes.size());
    for (const auto& [n, m] : spec.sizes) {
        const double start = now_seconds();
        int efficient = 0;
        std::exception_ptr failure = nullptr;
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : efficient)
            for (int t = 0; t < spec.trials; ++t) {
                try {
                    const Profile profile = sample_profile(n, m, derive_seed(spec.seed, n, m, t));
                    if (sd_efficient(run_rule(spec.rule, profile), profile).efficient)
                        ++efficient;
                } catch (...) {
#pragma omp critical
                    if (!failure) failure = std::current_exception();
                }
            }
        } else {
            for (int t = 0; t < spec.trials; ++t) {
                const Profile profile = sample_profile(n, m, derive_seed(spec.seed, n, m, t));
                if (sd_efficient(run_rule(spec.rule, profile), profile).efficient) ++efficient;
            }
        }
        if (failure) std::rethrow_exception(failure);
        results.push_back(CellResult{n, m, spec.trials, efficient, now_seconds() - start});
    }
    return results;
}

namespace {

// count of SD-dominated RMEC outcomes over all non-decreasing order-index
// tuples that start with first_index
std::uint64_t scan_chunk(int first_index, int n, const std::vector<Alternative>& alternatives,
                         const std::vector<WeakOrder>& orders) {
    const int total_orders = static_cast<int>(orders.size());
    std::uint64_t dominated = 0;
    std::vector<int> idx(n, first_index);
    for (;;) {
        std::vector<WeakOrder> profile_orders;
        profile_orders.reserve(n);
        for (int i = 0; i < n; ++i) profile_orders.push_back(orders[idx[i]]);
        const Profile profile(alternatives, std::move(profile_orders));
        if (!sd_efficient(rmec(profile), profile).efficient) ++dominated;
        // next non-decreasing tuple with idx[0] fixed
        int p = n - 1;
        while (p >= 1 && idx[p] == total_orders - 1) --p;
        if (p < 1) break;
        ++idx[p];
        for (int q = p + 1; q < n; ++q) idx[q] = idx[p];
    }
    return dominated;
}

}  // namespace

std::uint64_t exhaustive_rmec_efficiency(int n, int m, Exec exec, std::uint64_t budget) {
    if (n < 1 || m < 1) throw std::invalid_argument("exhaustive scan: need n, m >= 1");
    const Bigint order_count = count_weak_orders(m);
    // multisets of n orders: C(order_count + n - 1, n)
    Bigint instances = 1;
    for (int i = 0; i < n; ++i) instances = instances * (order_count + i) / (i + 1);
    if (instances > budget)
        throw std::invalid_argument("exhaustive scan: " + instances.str() +
                                    " instances exceed the budget of " + std::to_string(budget));
    const int total_orders = static_cast<int>(order_count);
    std::vector<WeakOrder> orders;
    orders.reserve(total_orders);
    for (int o = 0; o < total_orders; ++o) orders.push_back(unrank_weak_order(m, Bigint(o)));
    std::vector<Alternative> alternatives;
    for (int a = 0; a < m; ++a)
        alternatives.push_back({a, std::string(1, static_cast<char>('a' + a))});

    std::uint64_t dominated = 0;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : dominated)
        for (int first = 0; first < total_orders; ++first)
            dominated += scan_chunk(first, n, alternatives, orders);
    } else {
        for (int first = 0; first < total_orders; ++first)
            dominated += scan_chunk(first, n, alternatives, orders);
    }
    return dominated;
}

bool support_containment_check(const Profile& profile, int rsd_agent_cap) {
    if (profile.num_agents() > rsd_agent_cap)
        throw std::invalid_argument("support_containment_check: n exceeds the RSD budget");
    const std::vector<int> rsd_support = rsd(profile).support();
    for (int a : rmec(profile).support())
        if (std::find(rsd_support.begin(), rsd_support.end(), a) == rsd_support.end())
            return false;
    return true;
}

std::optional<Lottery> grid_dominance_oracle(const Lottery& p, const Profile& profile,
                                             int denominator, std::uint64_t budget) {
    if (denominator < 1) throw std::invalid_argument("grid oracle: need denominator >= 1");
    const int m = profile.num_alternatives();
    Bigint grid_points = 1;  // C(denominator + m - 1, m - 1)
    for (int i = 1; i <= m - 1; ++i)
        grid_points = grid_points * (denominator + i) / i;
    if (grid_points > budget)
        throw std::invalid_argument("grid oracle: " + grid_points.str() +
                                    " grid points exceed the budget of " + std::to_string(budget));

    // enumerate compositions of `denominator` into m parts in lexicographic
    // order of the numerator vector, via a simple recursion stack
    std::vector<int> stack_value(m + 1, 0);
    std::function<std::optional<Lottery>(int, int)> walk =
        [&](int pos, int remaining) -> std::optional<Lottery> {
        if (pos == m - 1) {
            stack_value[pos] = remaining;
            std::vector<Rational> probs(m);
            for (int a = 0; a < m; ++a) probs[a] = Rational(stack_value[a], denominator);
            Lottery q{std::move(probs)};
            bool weak_all = true, strict_some = false;
            for (int i = 0; i < profile.num_agents() && weak_all; ++i) {
                switch (sd_compare(q, p, profile.order(i))) {
                    case SdCompare::first_strict: strict_some = true; break;
                    case SdCompare::equal: break;
                    default: weak_all = false; break;
                }
            }
            if (weak_all && strict_some) return q;
            return std::nullopt;
        }
        for (int v = 0; v <= remaining; ++v) {
            stack_value[pos] = v;
            if (auto hit = walk(pos + 1, remaining - v)) return hit;
        }
        return std::nullopt;
    };
    return walk(0, denominator);
}

}  // namespace pscf
