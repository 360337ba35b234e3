#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "fixtures.hpp"
#include "pscf/harness.hpp"
#include "pscf/rng.hpp"
#include "pscf/rules.hpp"
#include "pscf/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pscf;
using fixtures::lot;

namespace {

bool dominates(const Lottery& q, const Lottery& p, const Profile& profile) {
    bool strict = false;
    for (int i = 0; i < profile.num_agents(); ++i) {
        switch (sd_compare(q, p, profile.order(i))) {
            case SdCompare::first_strict: strict = true; break;
            case SdCompare::equal: break;
            default: return false;
        }
    }
    return strict;
}

}  // namespace

TEST_CASE("run_table2 basics") {
    ExperimentSpec spec;
    spec.sizes = {{3, 3}};
    spec.trials = 1;
    spec.seed = 11;
    const auto single = run_table2(spec, Exec::serial);
    REQUIRE(single.size() == 1);
    CHECK(single[0].trials == 1);
    CHECK((single[0].sd_efficient_count == 0 || single[0].sd_efficient_count == 1));

    spec.sizes = {{3, 3}, {4, 4}};
    spec.trials = 60;
    const auto first = run_table2(spec, Exec::parallel);
    const auto second = run_table2(spec, Exec::parallel);
    const auto reference = run_table2(spec, Exec::serial);
    REQUIRE(first.size() == 2);
    for (std::size_t c = 0; c < first.size(); ++c) {
        CHECK(first[c].sd_efficient_count == second[c].sd_efficient_count);
        CHECK(first[c].sd_efficient_count == reference[c].sd_efficient_count);
        CHECK(first[c].trials == 60);
    }

#ifdef _OPENMP
    // counts are invariant under worker-count changes
    const int default_threads = omp_get_max_threads();
    for (int threads : {2, 3}) {
        omp_set_num_threads(threads);
        const auto varied = run_table2(spec, Exec::parallel);
        for (std::size_t c = 0; c < varied.size(); ++c)
            CHECK(varied[c].sd_efficient_count == reference[c].sd_efficient_count);
        CHECK(exhaustive_rmec_efficiency(2, 3, Exec::parallel) ==
              exhaustive_rmec_efficiency(2, 3, Exec::serial));
    }
    omp_set_num_threads(default_threads);
#endif

    spec.sizes = {{70, 4}};
    CHECK_THROWS_AS(run_table2(spec), std::invalid_argument);
    spec.sizes = {{4, 4}};
    spec.trials = 0;
    CHECK_THROWS_AS(run_table2(spec), std::invalid_argument);
    spec.trials = 1;
    spec.rule = "rsd";
    spec.sizes = {{12, 4}};
    CHECK_THROWS_AS(run_table2(spec), std::invalid_argument);
    spec.rule = "nope";
    spec.sizes = {{3, 3}};
    CHECK_THROWS_AS(run_table2(spec), std::invalid_argument);
}

TEST_CASE("exhaustive_rmec_efficiency on small universes") {
    CHECK(exhaustive_rmec_efficiency(2, 2, Exec::serial) == 0);   // 6 multisets
    CHECK(exhaustive_rmec_efficiency(3, 2, Exec::serial) == 0);   // 10 multisets
    CHECK(exhaustive_rmec_efficiency(1, 3, Exec::serial) == 0);
    CHECK(exhaustive_rmec_efficiency(2, 3, Exec::parallel) ==
          exhaustive_rmec_efficiency(2, 3, Exec::serial));
    CHECK_THROWS_AS(exhaustive_rmec_efficiency(4, 4, Exec::serial, 1000),
                    std::invalid_argument);  // budget exceeded
}

TEST_CASE("support_containment_check") {
    CHECK(support_containment_check(fixtures::rsd4()));

    const auto single = parse_profile("alternatives: a b c\n1: a,c > b\n");
    CHECK(support_containment_check(single));

    std::vector<WeakOrder> many(11, WeakOrder({{0}, {1}}, 2));
    const Profile big({{0, "a"}, {1, "b"}}, many);
    CHECK_THROWS_AS(support_containment_check(big), std::invalid_argument);
}

TEST_CASE("support containment holds on random profiles") {
    SplitMix64 rng(801);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int m = 1 + static_cast<int>(rng.next() % 6);
        const Profile p = sample_profile(n, m, rng.next());
        CHECK(support_containment_check(p));
    }
}

TEST_CASE("grid_dominance_oracle") {
    const auto dich = fixtures::dichotomous10();
    const Lottery p = rmec(dich);
    const auto witness = grid_dominance_oracle(p, dich, 10);
    REQUIRE(witness.has_value());
    CHECK(dominates(*witness, p, dich));

    const auto rsd_prof = fixtures::rsd4();
    const Lottery rsd_lot =
        lot(rsd_prof, {{"a", "1/3"}, {"b", "1/3"}, {"c", "1/6"}, {"d", "1/6"}});
    const auto rsd_witness = grid_dominance_oracle(rsd_lot, rsd_prof, 6);
    REQUIRE(rsd_witness.has_value());
    CHECK(dominates(*rsd_witness, rsd_lot, rsd_prof));

    const auto unanimous = parse_profile("alternatives: a b\n1: a > b\n2: a > b\n");
    CHECK_FALSE(grid_dominance_oracle(Lottery::degenerate(0, 2), unanimous, 12).has_value());

    CHECK_THROWS_AS(grid_dominance_oracle(p, dich, 1000, 100), std::invalid_argument);
}

TEST_CASE("oracle witnesses agree with the LP verdicts") {
    SplitMix64 rng(901);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 3);
        const int m = 2 + static_cast<int>(rng.next() % 3);
        const Profile profile = sample_profile(n, m, rng.next());
        // random grid lottery, deliberately often inefficient
        std::vector<Rational> probs(m, Rational(0));
        for (int unit = 0; unit < 6; ++unit) probs[rng.next() % m] += Rational(1, 6);
        const Lottery p{std::move(probs)};
        const auto oracle = grid_dominance_oracle(p, profile, 12);
        const auto verdict = sd_efficient(p, profile);
        if (oracle.has_value()) {
            CHECK(dominates(*oracle, p, profile));
            CHECK_FALSE(verdict.efficient);
        }
        if (!verdict.efficient) CHECK(dominates(*verdict.witness, p, profile));
    }
}
