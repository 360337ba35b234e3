#include "pscf/prefs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "pscf/rng.hpp"

namespace pscf {

// --- WeakOrder ------------------------------------------------------------

WeakOrder::WeakOrder(std::vector<std::vector<int>> classes, int num_alternatives)
    : classes_(std::move(classes)), class_of_(num_alternatives, -1) {
    if (num_alternatives < 1) throw std::invalid_argument("weak order: need m >= 1");
    if (classes_.empty()) throw std::invalid_argument("weak order: no classes");
    int seen = 0;
    for (std::size_t j = 0; j < classes_.size(); ++j) {
        auto& cls = classes_[j];
        if (cls.empty()) throw std::invalid_argument("weak order: empty class");
        std::sort(cls.begin(), cls.end());
        for (int a : cls) {
            if (a < 0 || a >= num_alternatives)
                throw std::invalid_argument("weak order: alternative id out of range");
            if (class_of_[a] != -1)
                throw std::invalid_argument("weak order: duplicate alternative");
            class_of_[a] = static_cast<int>(j);
            ++seen;
        }
    }
    if (seen != num_alternatives)
        throw std::invalid_argument("weak order: missing alternative(s)");
}

int WeakOrder::class_index(int alt) const {
    if (alt < 0 || alt >= num_alternatives())
        throw std::invalid_argument("class_index: alternative not in universe");
    return class_of_[alt] + 1;
}

bool WeakOrder::is_strict() const {
    for (const auto& cls : classes_)
        if (cls.size() != 1) return false;
    return true;
}

std::vector<int> max_within(const WeakOrder& order, const std::vector<int>& within) {
    if (within.empty()) throw std::invalid_argument("max_within: empty set");
    int best = order.num_classes() + 1;
    for (int a : within) best = std::min(best, order.class_index(a));
    std::vector<int> result;
    for (int a : order.classes()[best - 1])
        if (std::find(within.begin(), within.end(), a) != within.end()) result.push_back(a);
    return result;
}

// --- Profile ---------------------------------------------------------------

Profile::Profile(std::vector<Alternative> alternatives, std::vector<WeakOrder> orders,
                 std::vector<std::string> agent_names)
    : alternatives_(std::move(alternatives)),
      orders_(std::move(orders)),
      agent_names_(std::move(agent_names)) {
    const int m = static_cast<int>(alternatives_.size());
    if (m < 1) throw std::invalid_argument("profile: need m >= 1");
    if (orders_.empty()) throw std::invalid_argument("profile: need n >= 1");
    for (int i = 0; i < m; ++i) {
        if (alternatives_[i].id != i)
            throw std::invalid_argument("profile: alternative ids must be 0..m-1 in order");
        if (alternatives_[i].label.empty())
            throw std::invalid_argument("profile: empty alternative label");
        for (int j = 0; j < i; ++j)
            if (alternatives_[j].label == alternatives_[i].label)
                throw std::invalid_argument("profile: duplicate label '" +
                                            alternatives_[i].label + "'");
    }
    for (const auto& order : orders_)
        if (order.num_alternatives() != m)
            throw std::invalid_argument("profile: order over wrong alternative set");
    if (agent_names_.empty()) {
        agent_names_.reserve(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            agent_names_.push_back(std::to_string(i + 1));
    }
    if (agent_names_.size() != orders_.size())
        throw std::invalid_argument("profile: agent name count mismatch");
}

const WeakOrder& Profile::order(int agent) const {
    if (agent < 0 || agent >= num_agents())
        throw std::invalid_argument("profile: agent index out of range");
    return orders_[agent];
}

const std::string& Profile::agent_name(int agent) const {
    if (agent < 0 || agent >= num_agents())
        throw std::invalid_argument("profile: agent index out of range");
    return agent_names_[agent];
}

int Profile::alternative_id(std::string_view label) const {
    for (const auto& alt : alternatives_)
        if (alt.label == label) return alt.id;
    throw std::invalid_argument("profile: unknown label '" + std::string(label) + "'");
}

Profile drop_agent(const Profile& profile, int agent) {
    if (profile.num_agents() < 2)
        throw std::invalid_argument("drop_agent: electorate would become empty");
    if (agent < 0 || agent >= profile.num_agents())
        throw std::invalid_argument("drop_agent: agent index out of range");
    std::vector<WeakOrder> orders = profile.orders();
    std::vector<std::string> names = profile.agent_names();
    orders.erase(orders.begin() + agent);
    names.erase(names.begin() + agent);
    return Profile(profile.alternatives(), std::move(orders), std::move(names));
}

// --- text codec ------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

void check_label(std::string_view label, const std::string& where) {
    if (label.empty()) throw std::runtime_error(where + ": empty label");
    for (char c : label)
        if (c == ',' || c == '>' || c == ':' || c == '#' || c == ' ' || c == '\t')
            throw std::runtime_error(where + ": bad character in label '" +
                                     std::string(label) + "'");
}

WeakOrder parse_order_body(std::string_view body,
                           const std::vector<Alternative>& alternatives,
                           const std::string& where) {
    std::vector<std::vector<int>> classes;
    for (std::string_view class_part : split(body, '>')) {
        class_part = trim(class_part);
        if (class_part.empty()) throw std::runtime_error(where + ": empty class");
        std::vector<int> members;
        for (std::string_view member : split(class_part, ',')) {
            member = trim(member);
            if (member.empty()) throw std::runtime_error(where + ": empty class member");
            int id = -1;
            for (const auto& alt : alternatives)
                if (alt.label == member) { id = alt.id; break; }
            if (id < 0)
                throw std::runtime_error(where + ": unknown label '" + std::string(member) + "'");
            members.push_back(id);
        }
        classes.push_back(std::move(members));
    }
    try {
        return WeakOrder(std::move(classes), static_cast<int>(alternatives.size()));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(where + ": " + e.what());
    }
}

}  // namespace

WeakOrder parse_weak_order(std::string_view text, const std::vector<Alternative>& alternatives) {
    return parse_order_body(text, alternatives, "weak order");
}

std::string format_weak_order(const WeakOrder& order,
                              const std::vector<Alternative>& alternatives) {
    std::string out;
    for (std::size_t j = 0; j < order.classes().size(); ++j) {
        if (j > 0) out += " > ";
        const auto& cls = order.classes()[j];
        for (std::size_t t = 0; t < cls.size(); ++t) {
            if (t > 0) out += ",";
            out += alternatives.at(cls[t]).label;
        }
    }
    return out;
}

Profile parse_profile(std::string_view text) {
    std::vector<Alternative> alternatives;
    std::vector<WeakOrder> orders;
    std::vector<std::string> names;
    bool have_alternatives = false;
    int line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::string where = "line " + std::to_string(line_no);
        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw std::runtime_error(where + ": expected 'name: classes'");
        std::string_view head = trim(line.substr(0, colon));
        std::string_view body = trim(line.substr(colon + 1));
        if (!have_alternatives) {
            if (head != "alternatives")
                throw std::runtime_error(where + ": first content line must be 'alternatives: ...'");
            int id = 0;
            for (std::string_view token : split(body, ' ')) {
                token = trim(token);
                if (token.empty()) continue;
                check_label(token, where);
                for (const auto& alt : alternatives)
                    if (alt.label == token)
                        throw std::runtime_error(where + ": duplicate label '" +
                                                 std::string(token) + "'");
                alternatives.push_back({id++, std::string(token)});
            }
            if (alternatives.empty())
                throw std::runtime_error(where + ": no alternatives listed");
            have_alternatives = true;
            continue;
        }
        if (head.empty()) throw std::runtime_error(where + ": missing agent name");
        names.emplace_back(head);
        orders.push_back(parse_order_body(body, alternatives, where));
    }
    if (!have_alternatives) throw std::runtime_error("profile: no 'alternatives:' line");
    if (orders.empty()) throw std::runtime_error("profile: no agent lines");
    return Profile(std::move(alternatives), std::move(orders), std::move(names));
}

std::string format_profile(const Profile& profile) {
    std::string out = "alternatives:";
    for (const auto& alt : profile.alternatives()) {
        out += " ";
        out += alt.label;
    }
    out += "\n";
    for (int i = 0; i < profile.num_agents(); ++i) {
        out += profile.agent_name(i);
        out += ": ";
        out += format_weak_order(profile.order(i), profile.alternatives());
        out += "\n";
    }
    return out;
}

// --- enumeration and sampling -----------------------------------------------
//
// Canonical order: k = 1..m ascending; within k, all surjective words
// w in {1..k}^m (w[i] = class of alternative i) in lexicographic order.
// Unranking walks the word left to right, counting completions with an
// inclusion-exclusion table.

namespace {

// completions[u][r] = number of words of length r over k letters that use
// every one of u designated letters = sum_j (-1)^j C(u,j) (k-j)^r.
std::vector<std::vector<Bigint>> completion_table(int m, int k) {
    std::vector<std::vector<Bigint>> binom(k + 1, std::vector<Bigint>(k + 1, 0));
    for (int i = 0; i <= k; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<std::vector<Bigint>> pow(k + 1, std::vector<Bigint>(m + 1, 0));
    for (int b = 0; b <= k; ++b) {
        pow[b][0] = 1;
        for (int r = 1; r <= m; ++r) pow[b][r] = pow[b][r - 1] * b;
    }
    std::vector<std::vector<Bigint>> table(k + 1, std::vector<Bigint>(m + 1, 0));
    for (int u = 0; u <= k; ++u)
        for (int r = 0; r <= m; ++r) {
            Bigint total = 0;
            for (int j = 0; j <= u; ++j) {
                Bigint term = binom[u][j] * pow[k - j][r];
                if (j % 2 == 0) total += term; else total -= term;
            }
            table[u][r] = total;
        }
    return table;
}

Bigint surjective_word_count(int m, int k) {
    auto table = completion_table(m, k);
    return table[k][m];
}

}  // namespace

Bigint count_weak_orders(int m) {
    if (m < 1) throw std::invalid_argument("count_weak_orders: need m >= 1");
    Bigint total = 0;
    for (int k = 1; k <= m; ++k) total += surjective_word_count(m, k);
    return total;
}

WeakOrder unrank_weak_order(int m, const Bigint& index) {
    if (m < 1) throw std::invalid_argument("unrank_weak_order: need m >= 1");
    if (index < 0) throw std::out_of_range("unrank_weak_order: negative index");
    Bigint rest = index;
    for (int k = 1; k <= m; ++k) {
        auto table = completion_table(m, k);
        const Bigint& with_k = table[k][m];
        if (rest >= with_k) {
            rest -= with_k;
            continue;
        }
        // unrank the rest-th surjective word over {1..k} in lex order
        std::vector<int> word(m, 0);
        std::vector<bool> unused(k + 1, true);
        int unused_count = k;
        for (int pos = 0; pos < m; ++pos) {
            const int r = m - pos - 1;
            for (int v = 1; v <= k; ++v) {
                const int would_unused = unused_count - (unused[v] ? 1 : 0);
                const Bigint& cnt = table[would_unused][r];
                if (rest < cnt) {
                    word[pos] = v;
                    if (unused[v]) { unused[v] = false; --unused_count; }
                    break;
                }
                rest -= cnt;
            }
        }
        std::vector<std::vector<int>> classes(k);
        for (int a = 0; a < m; ++a) classes[word[a] - 1].push_back(a);
        return WeakOrder(std::move(classes), m);
    }
    throw std::out_of_range("unrank_weak_order: index out of range");
}

Bigint rank_weak_order(const WeakOrder& order) {
    const int m = order.num_alternatives();
    const int k = order.num_classes();
    Bigint index = 0;
    for (int kk = 1; kk < k; ++kk) index += surjective_word_count(m, kk);
    auto table = completion_table(m, k);
    std::vector<bool> unused(k + 1, true);
    int unused_count = k;
    for (int pos = 0; pos < m; ++pos) {
        const int r = m - pos - 1;
        const int letter = order.class_index(pos);
        for (int v = 1; v < letter; ++v) {
            const int would_unused = unused_count - (unused[v] ? 1 : 0);
            index += table[would_unused][r];
        }
        if (unused[letter]) { unused[letter] = false; --unused_count; }
    }
    return index;
}

namespace {

std::string label_for(int i, int m) {
    if (m <= 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i + 1);
}

}  // namespace

Profile sample_profile(int n, int m, std::uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("sample_profile: need n, m >= 1");
    const Bigint total = count_weak_orders(m);
    SplitMix64 rng(seed);
    std::vector<WeakOrder> orders;
    orders.reserve(n);
    for (int i = 0; i < n; ++i)
        orders.push_back(unrank_weak_order(m, uniform_below(rng, total)));
    std::vector<Alternative> alternatives;
    alternatives.reserve(m);
    for (int i = 0; i < m; ++i) alternatives.push_back({i, label_for(i, m)});
    return Profile(std::move(alternatives), std::move(orders));
}

std::vector<WeakOrder> reinforcements(const WeakOrder& order, int alt) {
    const int m = order.num_alternatives();
    const int j = order.class_index(alt);  // 1-based
    std::vector<WeakOrder> result;
    const auto& classes = order.classes();
    if (classes[j - 1].size() >= 2) {
        // split alt out as a new singleton class immediately above its class
        std::vector<std::vector<int>> next;
        for (int c = 0; c < j - 1; ++c) next.push_back(classes[c]);
        next.push_back({alt});
        std::vector<int> rest;
        for (int a : classes[j - 1])
            if (a != alt) rest.push_back(a);
        next.push_back(std::move(rest));
        for (std::size_t c = j; c < classes.size(); ++c) next.push_back(classes[c]);
        result.emplace_back(std::move(next), m);
    }
    if (j >= 2) {
        // merge alt into the class immediately above
        std::vector<std::vector<int>> next;
        for (int c = 0; c + 1 < j - 1; ++c) next.push_back(classes[c]);
        std::vector<int> merged = classes[j - 2];
        merged.push_back(alt);
        next.push_back(std::move(merged));
        if (classes[j - 1].size() >= 2) {
            std::vector<int> rest;
            for (int a : classes[j - 1])
                if (a != alt) rest.push_back(a);
            next.push_back(std::move(rest));
        }
        for (std::size_t c = j; c < classes.size(); ++c) next.push_back(classes[c]);
        result.emplace_back(std::move(next), m);
    }
    return result;
}

}  // namespace pscf
