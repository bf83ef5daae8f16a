#include "suffcheck/problem.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace suffcheck {

CoordSet::CoordSet(std::initializer_list<int> indices)
    : CoordSet(from_indices(std::vector<int>(indices))) {}

CoordSet CoordSet::from_indices(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0) {
            raise(ErrorCode::InvalidCoordSet,
                  "negative coordinate index " + std::to_string(indices[i]));
        }
        if (i > 0 && indices[i] == indices[i - 1]) {
            raise(ErrorCode::InvalidCoordSet,
                  "duplicate coordinate index " + std::to_string(indices[i]));
        }
    }
    CoordSet cs;
    cs.indices_ = std::move(indices);
    return cs;
}

CoordSet CoordSet::full(int coordinate_count) {
    CoordSet cs;
    cs.indices_.resize(static_cast<std::size_t>(coordinate_count));
    for (int i = 0; i < coordinate_count; ++i) cs.indices_[static_cast<std::size_t>(i)] = i;
    return cs;
}

bool CoordSet::contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool CoordSet::subset_of(const CoordSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(),
                         indices_.begin(), indices_.end());
}

CoordSet CoordSet::set_union(const CoordSet& other) const {
    CoordSet out;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                   other.indices_.end(), std::back_inserter(out.indices_));
    return out;
}

CoordSet CoordSet::set_minus(const CoordSet& other) const {
    CoordSet out;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(out.indices_));
    return out;
}

CoordSet CoordSet::set_intersect(const CoordSet& other) const {
    CoordSet out;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                          other.indices_.end(), std::back_inserter(out.indices_));
    return out;
}

CoordSet CoordSet::complement(int coordinate_count) const {
    return full(coordinate_count).set_minus(*this);
}

void CoordSet::require_valid_for(int coordinate_count) const {
    if (!indices_.empty() && indices_.back() >= coordinate_count) {
        raise(ErrorCode::InvalidCoordSet,
              "coordinate index " + std::to_string(indices_.back()) +
                  " out of range for " + std::to_string(coordinate_count) + " coordinates");
    }
}

bool OptSet::contains(int action) const {
    return std::binary_search(actions.begin(), actions.end(), action);
}

StateSpace::StateSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 1) {
            raise(ErrorCode::InvalidArgument,
                  "coordinate domain size must be >= 1, got " + std::to_string(sizes_[i]));
        }
    }
    unsigned __int128 count = 1;
    for (int s : sizes_) {
        count *= static_cast<unsigned>(s);
        if (count > std::numeric_limits<std::uint64_t>::max()) {
            raise(ErrorCode::StateSpaceTooLarge, "state count exceeds 64-bit range");
        }
    }
    count_ = static_cast<std::uint64_t>(count);
    strides_.assign(sizes_.size(), 1);
    for (int i = static_cast<int>(sizes_.size()) - 2; i >= 0; --i) {
        strides_[static_cast<std::size_t>(i)] =
            strides_[static_cast<std::size_t>(i) + 1] *
            static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(i) + 1]);
    }
}

void StateSpace::require_valid(const State& s) const {
    if (s.size() != coordinate_count()) {
        raise(ErrorCode::InvalidState,
              "state has " + std::to_string(s.size()) + " coordinates, expected " +
                  std::to_string(coordinate_count()));
    }
    for (int i = 0; i < coordinate_count(); ++i) {
        int v = s.values[static_cast<std::size_t>(i)];
        if (v < 0 || v >= sizes_[static_cast<std::size_t>(i)]) {
            raise(ErrorCode::InvalidState,
                  "coordinate " + std::to_string(i) + " value " + std::to_string(v) +
                      " outside domain of size " + std::to_string(sizes_[static_cast<std::size_t>(i)]));
        }
    }
}

std::uint64_t StateSpace::index_of(const State& s) const {
    require_valid(s);
    std::uint64_t index = 0;
    for (int i = 0; i < coordinate_count(); ++i) {
        index = index * static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(i)]) +
                static_cast<std::uint64_t>(s.values[static_cast<std::size_t>(i)]);
    }
    return index;
}

State StateSpace::state_at(std::uint64_t index) const {
    if (index >= count_) {
        raise(ErrorCode::IndexOutOfRange,
              "state index " + std::to_string(index) + " >= " + std::to_string(count_));
    }
    State s;
    s.values.resize(sizes_.size());
    for (int i = coordinate_count() - 1; i >= 0; --i) {
        auto size = static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(i)]);
        s.values[static_cast<std::size_t>(i)] = static_cast<int>(index % size);
        index /= size;
    }
    return s;
}

int StateSpace::digit(std::uint64_t index, int i) const {
    return static_cast<int>((index / strides_[static_cast<std::size_t>(i)]) %
                            static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(i)]));
}

std::uint64_t StateSpace::projection_count(const CoordSet& coords) const {
    coords.require_valid_for(coordinate_count());
    std::uint64_t count = 1;
    for (int i : coords.indices()) {
        count *= static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(i)]);
    }
    return count;
}

std::uint64_t StateSpace::projection_key(std::uint64_t state_index, const CoordSet& coords) const {
    std::uint64_t key = 0;
    for (int i : coords.indices()) {
        key = key * static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(i)]) +
              static_cast<std::uint64_t>(digit(state_index, i));
    }
    return key;
}

namespace {

std::vector<int> domain_sizes_of(const std::vector<CoordinateDomain>& domains) {
    std::vector<int> sizes;
    sizes.reserve(domains.size());
    for (const auto& d : domains) sizes.push_back(d.size);
    return sizes;
}

void validate_labels(const std::vector<CoordinateDomain>& domains) {
    for (std::size_t i = 0; i < domains.size(); ++i) {
        const auto& d = domains[i];
        if (d.labels.empty()) continue;
        if (static_cast<int>(d.labels.size()) != d.size) {
            raise(ErrorCode::DataFormat,
                  "coordinate " + std::to_string(i) + " has " +
                      std::to_string(d.labels.size()) + " labels for domain of size " +
                      std::to_string(d.size));
        }
        std::set<std::string> seen(d.labels.begin(), d.labels.end());
        if (seen.size() != d.labels.size()) {
            raise(ErrorCode::DataFormat,
                  "coordinate " + std::to_string(i) + " has duplicate value labels");
        }
    }
}

} // namespace

DecisionProblem::DecisionProblem(std::vector<std::string> action_labels,
                                 std::vector<CoordinateDomain> domains,
                                 std::vector<Rational> utility)
    : action_labels_(std::move(action_labels)),
      domains_(std::move(domains)),
      space_(domain_sizes_of(domains_)),
      utility_(std::move(utility)) {
    if (action_labels_.empty()) {
        raise(ErrorCode::InvalidArgument, "a decision problem needs at least one action");
    }
    std::set<std::string> distinct(action_labels_.begin(), action_labels_.end());
    if (distinct.size() != action_labels_.size()) {
        raise(ErrorCode::DataFormat, "action identifiers must be distinct");
    }
    validate_labels(domains_);
    unsigned __int128 expected =
        static_cast<unsigned __int128>(action_labels_.size()) * space_.state_count();
    if (expected != utility_.size()) {
        raise(ErrorCode::DataFormat,
              "utility table has " + std::to_string(utility_.size()) + " entries, expected " +
                  std::to_string(action_labels_.size()) + " x " +
                  std::to_string(space_.state_count()));
    }
}

DecisionProblem DecisionProblem::from_function(
    std::vector<std::string> action_labels, std::vector<CoordinateDomain> domains,
    const std::function<Rational(int, const State&)>& utility, std::uint64_t state_cap) {
    StateSpace space(domain_sizes_of(domains));
    if (space.state_count() > state_cap) {
        raise(ErrorCode::StateSpaceTooLarge,
              "state count " + std::to_string(space.state_count()) + " exceeds cap " +
                  std::to_string(state_cap));
    }
    std::uint64_t n_states = space.state_count();
    std::vector<Rational> table;
    table.reserve(action_labels.size() * n_states);
    for (std::size_t a = 0; a < action_labels.size(); ++a) {
        for (std::uint64_t s = 0; s < n_states; ++s) {
            table.push_back(utility(static_cast<int>(a), space.state_at(s)));
        }
    }
    return DecisionProblem(std::move(action_labels), std::move(domains), std::move(table));
}

const Rational& DecisionProblem::utility(int action, std::uint64_t state_index) const {
    if (action < 0 || action >= action_count()) {
        raise(ErrorCode::IndexOutOfRange, "action index " + std::to_string(action));
    }
    if (state_index >= space_.state_count()) {
        raise(ErrorCode::IndexOutOfRange, "state index " + std::to_string(state_index));
    }
    return utility_[static_cast<std::size_t>(
        static_cast<std::uint64_t>(action) * space_.state_count() + state_index)];
}

const Rational& DecisionProblem::utility(int action, const State& s) const {
    return utility(action, space_.index_of(s));
}

int DecisionProblem::resolve_value(int coordinate, const std::string& label) const {
    if (coordinate < 0 || coordinate >= coordinate_count()) {
        raise(ErrorCode::IndexOutOfRange, "coordinate index " + std::to_string(coordinate));
    }
    const auto& labels = domains_[static_cast<std::size_t>(coordinate)].labels;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] == label) return static_cast<int>(v);
    }
    raise(ErrorCode::IndexOutOfRange,
          "unknown value label '" + label + "' for coordinate " + std::to_string(coordinate));
}

} // namespace suffcheck
