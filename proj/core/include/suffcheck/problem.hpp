#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "suffcheck/rational.hpp"

namespace suffcheck {

// Enumeration caps guard every operation that walks a state space. Exceeding
// a cap is an error, never silent truncation.
inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

struct State {
    std::vector<int> values;

    State() = default;
    State(std::initializer_list<int> v) : values(v) {}
    explicit State(std::vector<int> v) : values(std::move(v)) {}

    int size() const noexcept { return static_cast<int>(values.size()); }
    auto operator<=>(const State&) const = default;
};

// Sorted, duplicate-free set of coordinate indices.
class CoordSet {
  public:
    CoordSet() = default;
    CoordSet(std::initializer_list<int> indices);

    // Rejects negatives and duplicates.
    static CoordSet from_indices(std::vector<int> indices);
    static CoordSet full(int coordinate_count);

    const std::vector<int>& indices() const noexcept { return indices_; }
    int size() const noexcept { return static_cast<int>(indices_.size()); }
    bool empty() const noexcept { return indices_.empty(); }
    bool contains(int i) const;
    bool subset_of(const CoordSet& other) const;

    CoordSet set_union(const CoordSet& other) const;
    CoordSet set_minus(const CoordSet& other) const;
    CoordSet set_intersect(const CoordSet& other) const;
    CoordSet complement(int coordinate_count) const;

    // Throws InvalidCoordSet if any index >= coordinate_count.
    void require_valid_for(int coordinate_count) const;

    bool operator==(const CoordSet&) const = default;

  private:
    std::vector<int> indices_; // ascending
};

// Nonempty set of action indices, ascending.
struct OptSet {
    std::vector<int> actions;

    OptSet() = default;
    OptSet(std::initializer_list<int> a) : actions(a) {}

    bool contains(int action) const;
    bool operator==(const OptSet&) const = default;
};

struct CoordinateDomain {
    int size = 1;
    std::vector<std::string> labels; // empty, or exactly `size` distinct labels

    CoordinateDomain() = default;
    CoordinateDomain(int s) : size(s) {}
    CoordinateDomain(int s, std::vector<std::string> l) : size(s), labels(std::move(l)) {}
    bool operator==(const CoordinateDomain&) const = default;
};

// Mixed-radix index arithmetic over a product of finite domains. Coordinate 0
// is the most significant digit, so ascending index order is lexicographic
// order on value tuples.
class StateSpace {
  public:
    explicit StateSpace(std::vector<int> sizes);

    int coordinate_count() const noexcept { return static_cast<int>(sizes_.size()); }
    int domain_size(int i) const { return sizes_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& domain_sizes() const noexcept { return sizes_; }
    std::uint64_t state_count() const noexcept { return count_; }
    std::uint64_t stride(int i) const { return strides_.at(static_cast<std::size_t>(i)); }

    std::uint64_t index_of(const State& s) const;
    State state_at(std::uint64_t index) const;
    int digit(std::uint64_t index, int i) const;
    void require_valid(const State& s) const;

    std::uint64_t projection_count(const CoordSet& coords) const;
    std::uint64_t projection_key(std::uint64_t state_index, const CoordSet& coords) const;

    bool operator==(const StateSpace& o) const { return sizes_ == o.sizes_; }

  private:
    std::vector<int> sizes_;
    std::vector<std::uint64_t> strides_; // strides_[i] = product of sizes_[i+1..]
    std::uint64_t count_ = 1;
};

// Finite decision problem with coordinate structure: an explicit action set,
// a product state space, and a total exact-rational utility table.
class DecisionProblem {
  public:
    DecisionProblem(std::vector<std::string> action_labels,
                    std::vector<CoordinateDomain> domains,
                    std::vector<Rational> utility); // flat, [action * N + state_index]

    static DecisionProblem
    from_function(std::vector<std::string> action_labels,
                  std::vector<CoordinateDomain> domains,
                  const std::function<Rational(int, const State&)>& utility,
                  std::uint64_t state_cap = kDefaultStateCap);

    int action_count() const noexcept { return static_cast<int>(action_labels_.size()); }
    const std::vector<std::string>& action_labels() const noexcept { return action_labels_; }
    const std::string& action_label(int a) const { return action_labels_.at(static_cast<std::size_t>(a)); }
    const std::vector<CoordinateDomain>& domains() const noexcept { return domains_; }
    const StateSpace& space() const noexcept { return space_; }
    int coordinate_count() const noexcept { return space_.coordinate_count(); }

    const Rational& utility(int action, std::uint64_t state_index) const;
    const Rational& utility(int action, const State& s) const;
    const std::vector<Rational>& utility_table() const noexcept { return utility_; }

    // Resolves a coordinate value label ("rain") to its index; IndexOutOfRange
    // on unknown labels or unlabeled domains.
    int resolve_value(int coordinate, const std::string& label) const;

    bool operator==(const DecisionProblem& o) const {
        return action_labels_ == o.action_labels_ && domains_ == o.domains_ &&
               utility_ == o.utility_;
    }

  private:
    std::vector<std::string> action_labels_;
    std::vector<CoordinateDomain> domains_;
    StateSpace space_;
    std::vector<Rational> utility_;
};

// Certificate that a coordinate set fails sufficiency: two states with equal
// projections but different optimal-action sets.
struct InsufficiencyWitness {
    State s;
    State s_prime;
    OptSet opt_s;
    OptSet opt_s_prime;

    bool operator==(const InsufficiencyWitness&) const = default;
};

} // namespace suffcheck
