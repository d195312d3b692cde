#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlim/errors.hpp"

namespace dlim {

// Finite poset, stored as the reflexive-transitive closure of the given
// relation pairs.  Antisymmetry violations are construction errors;
// directedness is a queryable property, not a requirement.
class Poset {
public:
    static Poset build(std::vector<std::string> labels,
                       const std::vector<std::pair<size_t, size_t>>& le_pairs);

    size_t size() const { return labels_.size(); }
    const std::string& label(size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<size_t> index_of(const std::string& label) const;

    bool leq(size_t a, size_t b) const { return le_[a * size() + b]; }
    bool lt(size_t a, size_t b) const { return a != b && leq(a, b); }

    bool is_directed() const;
    std::optional<size_t> maximum() const;

    // S is cofinal when every element sits below some element of S.
    bool is_cofinal(const std::vector<size_t>& subset) const;
    bool is_down_closed(const std::vector<size_t>& subset) const;

    // All downward-closed subsets, as sorted index lists; throws CapExceeded
    // when 2^size() would exceed the cap.
    std::vector<std::vector<size_t>> down_sets(size_t cap) const;

    // Strictly increasing chains of length len+1 (that is, len strict steps),
    // each chain ascending; enumeration order is lexicographic and stable.
    std::vector<std::vector<size_t>> chains(size_t len, size_t cap) const;

    Poset restrict(const std::vector<size_t>& subset) const;

private:
    std::vector<std::string> labels_;
    std::vector<char> le_;  // closure, row-major size() x size()
};

}  // namespace dlim
