#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pscf/rational.hpp"

namespace pscf {

struct Alternative {
    int id;
    std::string label;
    bool operator==(const Alternative&) const = default;
};

/// A complete weak order over alternatives {0..m-1}, represented as an
/// ordered partition into indifference classes, best class first.
/// Immutable after construction; members of each class are kept sorted by id.
class WeakOrder {
  public:
    WeakOrder(std::vector<std::vector<int>> classes, int num_alternatives);

    int num_alternatives() const { return static_cast<int>(class_of_.size()); }
    int num_classes() const { return static_cast<int>(classes_.size()); }

    /// Ordered indifference classes, best first.
    const std::vector<std::vector<int>>& classes() const { return classes_; }

    /// 1-based rank of the class containing alt (1 = best).
    int class_index(int alt) const;

    /// The most preferred class.
    const std::vector<int>& first_class() const { return classes_.front(); }

    bool is_strict() const;
    bool is_dichotomous() const { return num_classes() <= 2; }

    bool operator==(const WeakOrder& other) const { return classes_ == other.classes_; }

  private:
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;  // 0-based class position per alternative
};

/// The most preferred alternatives of `within` under `order`
/// (the intersection of `within` with the best class it meets).
std::vector<int> max_within(const WeakOrder& order, const std::vector<int>& within);

/// A preference profile: n weak orders over a shared alternative set.
/// Agents are positional; names are display-only and round-trip the codec.
class Profile {
  public:
    Profile(std::vector<Alternative> alternatives, std::vector<WeakOrder> orders,
            std::vector<std::string> agent_names = {});

    int num_alternatives() const { return static_cast<int>(alternatives_.size()); }
    int num_agents() const { return static_cast<int>(orders_.size()); }
    const std::vector<Alternative>& alternatives() const { return alternatives_; }
    const WeakOrder& order(int agent) const;
    const std::vector<WeakOrder>& orders() const { return orders_; }
    const std::string& agent_name(int agent) const;
    const std::vector<std::string>& agent_names() const { return agent_names_; }

    /// Id for a label; throws std::invalid_argument if unknown.
    int alternative_id(std::string_view label) const;

    bool operator==(const Profile&) const = default;

  private:
    std::vector<Alternative> alternatives_;
    std::vector<WeakOrder> orders_;
    std::vector<std::string> agent_names_;
};

/// The profile with agent i removed; requires n >= 2.
Profile drop_agent(const Profile& profile, int agent);

// --- text codec ---------------------------------------------------------
//
// Profile files are UTF-8 text. Lines starting with '#' are comments.
// The first content line is "alternatives: a b c ...", then one line per
// agent: "name: class1 > class2 > ..." with ','-separated ties inside a
// class. Serialization is byte-stable: ties are written in ascending id
// order, classes joined by " > ".

Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& profile);

WeakOrder parse_weak_order(std::string_view text, const std::vector<Alternative>& alternatives);
std::string format_weak_order(const WeakOrder& order, const std::vector<Alternative>& alternatives);

// --- enumeration and sampling -------------------------------------------

/// Number of complete weak orders (ordered set partitions) on m alternatives.
Bigint count_weak_orders(int m);

/// Bijective unranking of weak orders. The canonical enumeration fixes the
/// number of classes k = 1..m ascending and, within each k, lists all
/// surjective class-assignment words (alternative id -> class 1..k) in
/// lexicographic order. unrank(rank(w)) == w for every valid w.
WeakOrder unrank_weak_order(int m, const Bigint& index);
Bigint rank_weak_order(const WeakOrder& order);

/// n agents, each drawn independently and exactly uniformly over all
/// count_weak_orders(m) weak orders. Deterministic given the seed.
Profile sample_profile(int n, int m, std::uint64_t seed);

/// Every single-step promotion of `alt` in the order: (i) if alt's class has
/// other members, alt split out as a new singleton class immediately above;
/// (ii) if alt is not in the first class, alt merged into the class
/// immediately above. Empty iff alt is alone in the first class.
std::vector<WeakOrder> reinforcements(const WeakOrder& order, int alt);

}  // namespace pscf
