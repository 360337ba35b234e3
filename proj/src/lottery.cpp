#include "pscf/lottery.hpp"

#include <stdexcept>

namespace pscf {

Lottery::Lottery(std::vector<Rational> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("lottery: need m >= 1");
    Rational total = 0;
    for (const auto& p : probs_) {
        if (p < 0) throw std::invalid_argument("lottery: negative probability");
        total += p;
    }
    if (total != 1) throw std::invalid_argument("lottery: probabilities sum to " +
                                                rational_str(total) + ", not 1");
}

Lottery Lottery::from_pairs(const std::vector<std::pair<int, Rational>>& pairs, int m) {
    if (m < 1) throw std::invalid_argument("lottery: need m >= 1");
    std::vector<Rational> probs(m, Rational(0));
    std::vector<bool> seen(m, false);
    for (const auto& [alt, p] : pairs) {
        if (alt < 0 || alt >= m)
            throw std::invalid_argument("lottery: alternative id out of range");
        if (seen[alt]) throw std::invalid_argument("lottery: duplicate alternative");
        seen[alt] = true;
        probs[alt] = p;
    }
    return Lottery(std::move(probs));
}

Lottery Lottery::degenerate(int alt, int m) {
    return from_pairs({{alt, Rational(1)}}, m);
}

Lottery Lottery::uniform_over(const std::vector<int>& alts, int m) {
    if (alts.empty()) throw std::invalid_argument("lottery: uniform over empty set");
    const Rational share(1, static_cast<int>(alts.size()));
    std::vector<std::pair<int, Rational>> pairs;
    pairs.reserve(alts.size());
    for (int a : alts) pairs.emplace_back(a, share);
    return from_pairs(pairs, m);
}

Lottery Lottery::uniform(int m) {
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    return uniform_over(all, m);
}

const Rational& Lottery::prob(int alt) const {
    if (alt < 0 || alt >= num_alternatives())
        throw std::invalid_argument("lottery: alternative id out of range");
    return probs_[alt];
}

std::vector<int> Lottery::support() const {
    std::vector<int> result;
    for (int a = 0; a < num_alternatives(); ++a)
        if (probs_[a] > 0) result.push_back(a);
    return result;
}

Rational Lottery::mass_on(const std::vector<int>& alts) const {
    Rational total = 0;
    for (int a : alts) total += prob(a);
    return total;
}

Rational upper_contour_mass(const Lottery& p, const WeakOrder& order, int alt) {
    if (p.num_alternatives() != order.num_alternatives())
        throw std::invalid_argument("upper_contour_mass: universe mismatch");
    const int j = order.class_index(alt);
    Rational total = 0;
    for (int c = 0; c < j; ++c)
        for (int a : order.classes()[c]) total += p.prob(a);
    return total;
}

SdCompare sd_compare(const Lottery& p, const Lottery& q, const WeakOrder& order) {
    if (p.num_alternatives() != q.num_alternatives() ||
        p.num_alternatives() != order.num_alternatives())
        throw std::invalid_argument("sd_compare: universe mismatch");
    Rational p_prefix = 0, q_prefix = 0;
    bool p_above = false, q_above = false;
    // the last class's prefix is 1 for both, so it never discriminates
    for (int c = 0; c + 1 < order.num_classes(); ++c) {
        for (int a : order.classes()[c]) {
            p_prefix += p.prob(a);
            q_prefix += q.prob(a);
        }
        if (p_prefix > q_prefix) p_above = true;
        if (q_prefix > p_prefix) q_above = true;
    }
    if (p_above && q_above) return SdCompare::incomparable;
    if (p_above) return SdCompare::first_strict;
    if (q_above) return SdCompare::second_strict;
    return SdCompare::equal;
}

bool exists_strict_sd_improvement(const Lottery& p, const WeakOrder& order) {
    if (p.num_alternatives() != order.num_alternatives())
        throw std::invalid_argument("exists_strict_sd_improvement: universe mismatch");
    return p.mass_on(order.first_class()) < 1;
}

Lottery mix(const std::vector<std::pair<Rational, Lottery>>& entries) {
    if (entries.empty()) throw std::invalid_argument("mix: no entries");
    const int m = entries.front().second.num_alternatives();
    Rational weight_total = 0;
    std::vector<Rational> probs(m, Rational(0));
    for (const auto& [w, lot] : entries) {
        if (w < 0) throw std::invalid_argument("mix: negative weight");
        if (lot.num_alternatives() != m) throw std::invalid_argument("mix: universe mismatch");
        weight_total += w;
        for (int a = 0; a < m; ++a) probs[a] += w * lot.prob(a);
    }
    if (weight_total != 1) throw std::invalid_argument("mix: weights sum to " +
                                                       rational_str(weight_total) + ", not 1");
    return Lottery(std::move(probs));
}

std::vector<Rational> rank_vector_lottery(const Lottery& p, const Profile& profile) {
    if (p.num_alternatives() != profile.num_alternatives())
        throw std::invalid_argument("rank_vector_lottery: universe mismatch");
    std::vector<Rational> r(profile.num_alternatives(), Rational(0));
    for (int i = 0; i < profile.num_agents(); ++i) {
        const auto& classes = profile.order(i).classes();
        for (std::size_t j = 0; j < classes.size(); ++j)
            for (int a : classes[j]) r[j] += p.prob(a);
    }
    return r;
}

std::string lottery_json(const Lottery& p, const std::vector<Alternative>& alternatives) {
    if (static_cast<int>(alternatives.size()) != p.num_alternatives())
        throw std::invalid_argument("lottery_json: universe mismatch");
    std::string out = "{";
    bool first = true;
    for (int a : p.support()) {
        if (!first) out += ",";
        first = false;
        out += "\"" + alternatives[a].label + "\":\"" + fraction_str(p.prob(a)) + "\"";
    }
    out += "}";
    return out;
}

}  // namespace pscf
