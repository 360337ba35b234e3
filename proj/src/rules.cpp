#include "pscf/rules.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pscf {

namespace {
thread_local std::uint64_t g_rank_vector_work = 0;
}

std::uint64_t rank_vector_work() { return g_rank_vector_work; }
void reset_rank_vector_work() { g_rank_vector_work = 0; }

LexOrder lex_compare(const RankVector& r, const RankVector& s) {
    if (r.counts.size() != s.counts.size())
        throw std::invalid_argument("lex_compare: length mismatch");
    for (std::size_t j = 0; j < r.counts.size(); ++j) {
        if (r.counts[j] > s.counts[j]) return LexOrder::better;
        if (r.counts[j] < s.counts[j]) return LexOrder::worse;
    }
    return LexOrder::equal;
}

ScoringVector::ScoringVector(std::vector<Rational> scores) : scores_(std::move(scores)) {
    if (scores_.empty()) throw std::invalid_argument("scoring vector: empty");
    for (std::size_t j = 0; j + 1 < scores_.size(); ++j)
        if (!(scores_[j] > scores_[j + 1]))
            throw std::invalid_argument("scoring vector: must be strictly decreasing");
}

ScoringVector ScoringVector::rank_maximal(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("scoring vector: need n, m >= 1");
    std::vector<Rational> scores(m);
    Bigint power = 1;
    for (int j = m - 1; j >= 0; --j) {
        scores[j] = Rational(power);
        power *= (n + 1);
    }
    return ScoringVector(std::move(scores));
}

ScoringVector ScoringVector::borda(int m) {
    if (m < 1) throw std::invalid_argument("scoring vector: need m >= 1");
    std::vector<Rational> scores(m);
    for (int j = 0; j < m; ++j) scores[j] = Rational(m - 1 - j);
    return ScoringVector(std::move(scores));
}

RankVector rank_vector_alt(int alt, const Profile& profile) {
    const int m = profile.num_alternatives();
    RankVector r{std::vector<int>(m, 0)};
    g_rank_vector_work += m;  // zero-padding the vector
    for (int i = 0; i < profile.num_agents(); ++i) {
        ++r.counts[profile.order(i).class_index(alt) - 1];
        ++g_rank_vector_work;
    }
    return r;
}

namespace {

std::vector<RankVector> all_rank_vectors(const Profile& profile) {
    const int m = profile.num_alternatives();
    std::vector<RankVector> vectors(m);
    for (int a = 0; a < m; ++a) {
        vectors[a].counts.assign(m, 0);
        g_rank_vector_work += m;
    }
    for (int i = 0; i < profile.num_agents(); ++i) {
        const WeakOrder& order = profile.order(i);
        for (int a = 0; a < m; ++a) {
            ++vectors[a].counts[order.class_index(a) - 1];
            ++g_rank_vector_work;
        }
    }
    return vectors;
}

std::vector<int> best_by_rank(const std::vector<int>& candidates,
                              const std::vector<RankVector>& vectors) {
    std::vector<int> best;
    for (int a : candidates) {
        if (best.empty()) { best.push_back(a); continue; }
        switch (lex_compare(vectors[a], vectors[best.front()])) {
            case LexOrder::better: best.assign(1, a); break;
            case LexOrder::equal: best.push_back(a); break;
            case LexOrder::worse: break;
        }
    }
    return best;
}

std::vector<Rational> all_scores(const Profile& profile, const ScoringVector& s) {
    if (s.size() != profile.num_alternatives())
        throw std::invalid_argument("positional score: scoring vector length != m");
    const int m = profile.num_alternatives();
    std::vector<Rational> scores(m, Rational(0));
    for (int i = 0; i < profile.num_agents(); ++i) {
        const WeakOrder& order = profile.order(i);
        for (int a = 0; a < m; ++a) scores[a] += s.scores()[order.class_index(a) - 1];
    }
    return scores;
}

std::vector<int> best_by_score(const std::vector<int>& candidates,
                               const std::vector<Rational>& scores) {
    std::vector<int> best;
    for (int a : candidates) {
        if (best.empty() || scores[a] > scores[best.front()]) best.assign(1, a);
        else if (scores[a] == scores[best.front()]) best.push_back(a);
    }
    return best;
}

RmecResult equal_contribution(const Profile& profile,
                              const std::vector<std::vector<int>>& contribution_sets) {
    const int n = profile.num_agents();
    std::vector<Rational> probs(profile.num_alternatives(), Rational(0));
    for (const auto& f : contribution_sets) {
        const Rational share(1, n * static_cast<int>(f.size()));
        for (int a : f) probs[a] += share;
    }
    return RmecResult{Lottery(std::move(probs)), contribution_sets};
}

}  // namespace

Rational positional_score(int alt, const Profile& profile, const ScoringVector& s) {
    if (s.size() != profile.num_alternatives())
        throw std::invalid_argument("positional score: scoring vector length != m");
    Rational total = 0;
    for (int i = 0; i < profile.num_agents(); ++i)
        total += s.scores()[profile.order(i).class_index(alt) - 1];
    return total;
}

std::vector<int> contribution_set(const Profile& profile, int agent) {
    std::vector<RankVector> vectors = all_rank_vectors(profile);
    return best_by_rank(profile.order(agent).first_class(), vectors);
}

std::vector<int> contribution_set(const Profile& profile, int agent, const ScoringVector& s) {
    std::vector<Rational> scores = all_scores(profile, s);
    return best_by_score(profile.order(agent).first_class(), scores);
}

RmecResult rmec_detailed(const Profile& profile) {
    std::vector<RankVector> vectors = all_rank_vectors(profile);
    std::vector<std::vector<int>> sets;
    sets.reserve(profile.num_agents());
    for (int i = 0; i < profile.num_agents(); ++i)
        sets.push_back(best_by_rank(profile.order(i).first_class(), vectors));
    return equal_contribution(profile, sets);
}

Lottery rmec(const Profile& profile) { return rmec_detailed(profile).outcome; }

RmecResult s_mec_detailed(const Profile& profile, const ScoringVector& s) {
    std::vector<Rational> scores = all_scores(profile, s);
    std::vector<std::vector<int>> sets;
    sets.reserve(profile.num_agents());
    for (int i = 0; i < profile.num_agents(); ++i)
        sets.push_back(best_by_score(profile.order(i).first_class(), scores));
    return equal_contribution(profile, sets);
}

Lottery s_mec(const Profile& profile, const ScoringVector& s) {
    return s_mec_detailed(profile, s).outcome;
}

Lottery rank_maximal_rule(const Profile& profile) {
    std::vector<RankVector> vectors = all_rank_vectors(profile);
    std::vector<int> all(profile.num_alternatives());
    for (int a = 0; a < profile.num_alternatives(); ++a) all[a] = a;
    return Lottery::uniform_over(best_by_rank(all, vectors), profile.num_alternatives());
}

Lottery random_dictatorship(const Profile& profile) {
    const int n = profile.num_agents();
    std::vector<Rational> probs(profile.num_alternatives(), Rational(0));
    for (int i = 0; i < n; ++i) {
        const WeakOrder& order = profile.order(i);
        if (!order.is_strict())
            throw std::invalid_argument("random dictatorship: order with a tie");
        probs[order.first_class().front()] += Rational(1, n);
    }
    return Lottery(std::move(probs));
}

std::vector<int> serial_dictatorship(const Profile& profile, const std::vector<int>& perm) {
    const int n = profile.num_agents();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("serial dictatorship: permutation length != n");
    std::vector<bool> seen(n, false);
    for (int i : perm) {
        if (i < 0 || i >= n || seen[i])
            throw std::invalid_argument("serial dictatorship: not a permutation of agents");
        seen[i] = true;
    }
    std::vector<int> working(profile.num_alternatives());
    for (int a = 0; a < profile.num_alternatives(); ++a) working[a] = a;
    for (int i : perm) working = max_within(profile.order(i), working);
    return working;
}

Lottery rsd(const Profile& profile) {
    const int n = profile.num_agents();
    const int m = profile.num_alternatives();
    if (n > 20) throw std::invalid_argument("rsd: subset DP supports n <= 20");
    if (m > 32) throw std::invalid_argument("rsd: working-set masks support m <= 32");

    // per agent, the members of each class as a bitmask, best class first
    std::vector<std::vector<std::uint32_t>> class_masks(n);
    for (int i = 0; i < n; ++i)
        for (const auto& cls : profile.order(i).classes()) {
            std::uint32_t mask = 0;
            for (int a : cls) mask |= (std::uint32_t(1) << a);
            class_masks[i].push_back(mask);
        }

    const std::uint32_t full = (m == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << m) - 1);
    // state: (used-agent mask, working-set mask) -> probability of reaching it
    using StateMap = std::unordered_map<std::uint64_t, Rational>;
    auto key = [](std::uint32_t used, std::uint32_t working) {
        return (std::uint64_t(used) << 32) | working;
    };
    StateMap layer;
    layer[key(0, full)] = Rational(1);
    for (int t = 0; t < n; ++t) {
        StateMap next;
        const Rational pick(1, n - t);
        for (const auto& [k, weight] : layer) {
            const auto used = static_cast<std::uint32_t>(k >> 32);
            const auto working = static_cast<std::uint32_t>(k & 0xFFFFFFFFu);
            for (int i = 0; i < n; ++i) {
                if (used & (std::uint32_t(1) << i)) continue;
                std::uint32_t refined = 0;
                for (std::uint32_t cls : class_masks[i])
                    if ((refined = cls & working) != 0) break;
                next[key(used | (std::uint32_t(1) << i), refined)] += weight * pick;
            }
        }
        layer = std::move(next);
    }
    std::vector<Rational> probs(m, Rational(0));
    for (const auto& [k, weight] : layer) {
        const auto working = static_cast<std::uint32_t>(k & 0xFFFFFFFFu);
        int size = 0;
        for (int a = 0; a < m; ++a)
            if (working & (std::uint32_t(1) << a)) ++size;
        const Rational share = weight / size;
        for (int a = 0; a < m; ++a)
            if (working & (std::uint32_t(1) << a)) probs[a] += share;
    }
    return Lottery(std::move(probs));
}

}  // namespace pscf
