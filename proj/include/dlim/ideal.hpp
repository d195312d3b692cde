#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "dlim/errors.hpp"

namespace dlim {

// Ideal on a finite ground set, given by generators.  On a finite ground set
// the ideal is determined by its maximum J_max = union of the generators:
// membership(S) holds exactly when S is contained in J_max (ideals are closed
// under subsets and finite unions).  Ground sets are capped at 64 elements so
// subsets are single machine words.
struct SetIdeal {
    std::vector<std::string> ground;      // element labels, fixed order
    std::vector<uint64_t> generators;     // bitmasks over ground
    uint64_t jmax = 0;

    static SetIdeal build(std::vector<std::string> ground, std::vector<uint64_t> generators) {
        require(ground.size() <= 64, "ground set larger than 64 elements");
        SetIdeal s;
        uint64_t full = ground.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << ground.size()) - 1;
        for (uint64_t g : generators)
            require((g & ~full) == 0, "generator contains elements outside the ground set");
        s.ground = std::move(ground);
        s.generators = std::move(generators);
        for (uint64_t g : s.generators) s.jmax |= g;
        return s;
    }

    size_t ground_size() const { return ground.size(); }
    bool member(uint64_t subset) const { return (subset & ~jmax) == 0; }
    bool is_improper() const {
        uint64_t full = ground.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << ground.size()) - 1;
        return jmax == full;
    }

    std::string subset_str(uint64_t mask) const {
        std::string s = "{";
        bool first = true;
        for (size_t i = 0; i < ground.size(); ++i)
            if (mask >> i & 1) {
                s += (first ? "" : ",") + ground[i];
                first = false;
            }
        return s + "}";
    }
};

}  // namespace dlim
