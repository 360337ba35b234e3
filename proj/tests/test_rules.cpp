#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "pscf/rng.hpp"
#include "pscf/rules.hpp"

using namespace pscf;
using fixtures::lot;
using fixtures::rat;

namespace {

// independent oracle: average the uniform lottery on the serial-dictatorship
// outcome over all n! permutations
Lottery rsd_bruteforce(const Profile& profile) {
    const int n = profile.num_agents();
    const int m = profile.num_alternatives();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Bigint factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    std::vector<Rational> probs(m, Rational(0));
    const Rational per_perm(Bigint(1), factorial);
    do {
        const std::vector<int> final_set = serial_dictatorship(profile, perm);
        const Rational share = per_perm / static_cast<int>(final_set.size());
        for (int a : final_set) probs[a] += share;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Lottery(std::move(probs));
}

RankVector rv(std::vector<int> counts) { return RankVector{std::move(counts)}; }

}  // namespace

TEST_CASE("rank vectors of the running example") {
    const auto ex1 = fixtures::example1();
    auto vec = [&](const char* label) {
        return rank_vector_alt(ex1.alternative_id(label), ex1);
    };
    CHECK(vec("a") == rv({2, 1, 1, 1, 0, 0}));
    CHECK(vec("b") == rv({2, 1, 1, 0, 1, 0}));
    CHECK(vec("c") == rv({3, 0, 1, 1, 0, 0}));
    CHECK(vec("d") == rv({2, 3, 0, 0, 0, 0}));
    CHECK(vec("e") == rv({1, 2, 2, 0, 0, 0}));
    CHECK(vec("f") == rv({2, 1, 1, 1, 0, 0}));

    const auto single = parse_profile("alternatives: a b c\n1: b > a > c\n");
    CHECK(rank_vector_alt(1, single) == rv({1, 0, 0}));
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(rv({3, 0, 1, 1, 0, 0}), rv({2, 1, 1, 1, 0, 0})) == LexOrder::better);
    CHECK(lex_compare(rv({2, 3, 0}), rv({2, 3, 0})) == LexOrder::equal);
    CHECK(lex_compare(rv({2, 1, 1, 1, 0, 0}), rv({2, 1, 1, 0, 1, 0})) == LexOrder::better);
    CHECK(lex_compare(rv({2, 1, 1, 0, 1, 0}), rv({2, 1, 1, 1, 0, 0})) == LexOrder::worse);
    CHECK_THROWS_AS(lex_compare(rv({1}), rv({1, 0})), std::invalid_argument);
}

TEST_CASE("positional_score") {
    const auto minority = fixtures::minority();
    const ScoringVector plurality({rat("1"), rat("0")});
    CHECK(positional_score(minority.alternative_id("a"), minority, plurality) == 2);
    CHECK(positional_score(minority.alternative_id("b"), minority, plurality) == 1);

    // Borda score of a strict single-agent order is m - class_index
    const auto single = parse_profile("alternatives: a b c d\n1: c > a > d > b\n");
    const ScoringVector borda = ScoringVector::borda(4);
    for (int a = 0; a < 4; ++a)
        CHECK(positional_score(a, single, borda) == 4 - single.order(0).class_index(a));

    CHECK_THROWS_AS(ScoringVector({rat("1"), rat("1")}), std::invalid_argument);
    CHECK_THROWS_AS(ScoringVector({rat("0"), rat("1")}), std::invalid_argument);
}

TEST_CASE("base-(n+1) positional scores realize lexicographic rank order") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int m = 2 + static_cast<int>(rng.next() % 4);
        const Profile p = sample_profile(n, m, rng.next());
        const ScoringVector s = ScoringVector::rank_maximal(n, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                const auto by_rank = lex_compare(rank_vector_alt(a, p), rank_vector_alt(b, p));
                const Rational sa = positional_score(a, p, s);
                const Rational sb = positional_score(b, p, s);
                switch (by_rank) {
                    case LexOrder::better: CHECK(sa > sb); break;
                    case LexOrder::equal: CHECK(sa == sb); break;
                    case LexOrder::worse: CHECK(sa < sb); break;
                }
            }
    }
}

TEST_CASE("contribution_set") {
    const auto ex1 = fixtures::example1();
    CHECK(contribution_set(ex1, 2) ==
          std::vector<int>{ex1.alternative_id("a"), ex1.alternative_id("f")});
    CHECK(contribution_set(ex1, 0) == std::vector<int>{ex1.alternative_id("c")});

    const auto single = parse_profile("alternatives: a b c\n1: b > a,c\n");
    CHECK(contribution_set(single, 0) == std::vector<int>{1});
}

TEST_CASE("rmec on the paper profiles") {
    const auto ex1 = fixtures::example1();
    CHECK(rmec(ex1) == lot(ex1, {{"a", "1/10"}, {"c", "3/5"}, {"d", "1/5"}, {"f", "1/10"}}));

    const auto minority = fixtures::minority();
    CHECK(rmec(minority) == lot(minority, {{"a", "2/3"}, {"b", "1/3"}}));

    const auto dich = fixtures::dichotomous10();
    CHECK(rmec(dich) == lot(dich, {{"d", "8/10"}, {"c", "1/10"}, {"b", "1/10"}}));
}

TEST_CASE("rmec components") {
    const auto ex1 = fixtures::example1();
    const RmecResult detail = rmec_detailed(ex1);
    const int n = ex1.num_agents();
    REQUIRE(static_cast<int>(detail.contribution_sets.size()) == n);
    std::vector<Rational> accumulated(ex1.num_alternatives(), Rational(0));
    for (int i = 0; i < n; ++i) {
        const auto& f = detail.contribution_sets[i];
        REQUIRE(!f.empty());
        // F(i) lies inside the agent's first class and carries exactly 1/n
        Rational component_mass = 0;
        for (int a : f) {
            CHECK(ex1.order(i).class_index(a) == 1);
            component_mass += Rational(1, n * static_cast<int>(f.size()));
            accumulated[a] += Rational(1, n * static_cast<int>(f.size()));
        }
        CHECK(component_mass == Rational(1, n));
    }
    CHECK(Lottery(accumulated) == detail.outcome);
}

TEST_CASE("s_mec") {
    // base-(n+1) scoring reproduces rmec exactly
    SplitMix64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int m = 2 + static_cast<int>(rng.next() % 4);
        const Profile p = sample_profile(n, m, rng.next());
        CHECK(s_mec(p, ScoringVector::rank_maximal(n, m)) == rmec(p));
    }

    // on strict profiles every s-MEC equals random dictatorship
    const auto strict = fixtures::impossibility3();
    CHECK(s_mec(strict, ScoringVector::borda(3)) == random_dictatorship(strict));
    CHECK(s_mec(strict, ScoringVector({rat("1"), rat("1/2"), rat("1/3")})) ==
          random_dictatorship(strict));

    // a single agent gets the uniform lottery over his first class
    const auto single = parse_profile("alternatives: a b c\n1: a,c > b\n");
    CHECK(s_mec(single, ScoringVector::borda(3)) ==
          Lottery::uniform_over({0, 2}, 3));
}

TEST_CASE("rank_maximal_rule") {
    const auto minority = fixtures::minority();
    CHECK(rank_maximal_rule(minority) == Lottery::degenerate(minority.alternative_id("a"), 2));

    const auto solo = parse_profile("alternatives: a\n1: a\n");
    CHECK(rank_maximal_rule(solo) == Lottery::degenerate(0, 1));

    const auto ex1 = fixtures::example1();
    CHECK(rank_maximal_rule(ex1) == Lottery::degenerate(ex1.alternative_id("c"), 6));
}

TEST_CASE("random_dictatorship") {
    const auto imp = fixtures::impossibility3();
    CHECK(random_dictatorship(imp) == lot(imp, {{"a", "2/3"}, {"c", "1/3"}}));

    const auto unanimous = parse_profile("alternatives: a b\n1: a > b\n2: a > b\n");
    CHECK(random_dictatorship(unanimous) == Lottery::degenerate(0, 2));

    CHECK_THROWS_AS(random_dictatorship(fixtures::rsd4()), std::invalid_argument);
}

TEST_CASE("serial_dictatorship") {
    const auto prof = fixtures::rsd4();
    CHECK(serial_dictatorship(prof, {0, 1, 2, 3}) == std::vector<int>{prof.alternative_id("a")});
    CHECK(serial_dictatorship(prof, {2, 3, 0, 1}) == std::vector<int>{prof.alternative_id("b")});

    const auto single = parse_profile("alternatives: a b c\n1: a,c > b\n");
    CHECK(serial_dictatorship(single, {0}) == std::vector<int>{0, 2});

    CHECK_THROWS_AS(serial_dictatorship(prof, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(serial_dictatorship(prof, {0, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("rsd on the paper profile and against brute force") {
    const auto prof = fixtures::rsd4();
    CHECK(rsd(prof) == lot(prof, {{"a", "1/3"}, {"b", "1/3"}, {"c", "1/6"}, {"d", "1/6"}}));

    const auto minority = fixtures::minority();
    CHECK(rsd(minority) == lot(minority, {{"a", "2/3"}, {"b", "1/3"}}));

    SplitMix64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 5);
        const int m = 1 + static_cast<int>(rng.next() % 4);
        const Profile p = sample_profile(n, m, rng.next());
        CHECK(rsd(p) == rsd_bruteforce(p));
    }

    // with strict preferences the first dictator decides everything
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const int m = 2 + static_cast<int>(rng.next() % 3);
        Bigint strict_count = 1;
        for (int i = 2; i <= m; ++i) strict_count *= i;
        std::vector<WeakOrder> orders;
        for (int i = 0; i < n; ++i) {
            // rejection-sample strict orders
            for (;;) {
                WeakOrder w = unrank_weak_order(m, uniform_below(rng, count_weak_orders(m)));
                if (w.is_strict()) { orders.push_back(w); break; }
            }
        }
        std::vector<Alternative> alts;
        for (int a = 0; a < m; ++a) alts.push_back({a, std::string(1, char('a' + a))});
        const Profile p(alts, orders);
        CHECK(rsd(p) == random_dictatorship(p));
        CHECK(rmec(p) == random_dictatorship(p));
    }
}

TEST_CASE("anonymity and neutrality spot checks") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 4);
        const int m = 2 + static_cast<int>(rng.next() % 4);
        const Profile p = sample_profile(n, m, rng.next());

        std::vector<int> agent_perm(n);
        std::iota(agent_perm.begin(), agent_perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(agent_perm[i], agent_perm[rng.next() % (i + 1)]);
        const Profile shuffled = fixtures::permute_agents(p, agent_perm);
        CHECK(rmec(shuffled) == rmec(p));
        CHECK(rank_maximal_rule(shuffled) == rank_maximal_rule(p));

        std::vector<int> alt_perm(m);
        std::iota(alt_perm.begin(), alt_perm.end(), 0);
        for (int i = m - 1; i > 0; --i) std::swap(alt_perm[i], alt_perm[rng.next() % (i + 1)]);
        const Profile relabeled = fixtures::permute_alternatives(p, alt_perm);
        const Lottery before = rmec(p);
        const Lottery after = rmec(relabeled);
        for (int a = 0; a < m; ++a) CHECK(after.prob(alt_perm[a]) == before.prob(a));
    }
}

TEST_CASE("rank-vector work scales like m^2 + mn") {
    const int n = 6;
    reset_rank_vector_work();
    rmec(sample_profile(n, 8, 1234));
    const std::uint64_t work_small = rank_vector_work();
    reset_rank_vector_work();
    rmec(sample_profile(n, 16, 1234));
    const std::uint64_t work_large = rank_vector_work();
    CHECK(work_large <= 5 * work_small);  // doubling m at fixed n costs at most ~4x
    CHECK(work_large >= 2 * work_small);
}
