#pragma once
#include <string>

#include "dlim/system.hpp"

namespace dlim {

// Short exact sequence of inverse systems over one shared poset, with the
// per-element inclusion and projection maps.  Exactness is checked exactly at
// every element, and every square against the transition maps commutes.
struct SesOfSystems {
    InverseSystem sub, mid, quot;
    std::vector<Matrix> inc;   // per element: sub(x) -> mid(x)
    std::vector<Matrix> proj;  // per element: mid(x) -> quot(x)

    static SesOfSystems build(InverseSystem sub, InverseSystem mid, InverseSystem quot,
                              std::vector<Matrix> inc, std::vector<Matrix> proj);
};

struct LesNode {
    int degree;
    std::string position;  // "sub", "mid", "quot"
    bool exact;
    std::string detail;
};

struct LesReport {
    int max_degree = 0;
    std::vector<FinAbGroup> sub, mid, quot;  // degrees 0..max_degree
    std::vector<LesNode> nodes;
    bool exact_everywhere = true;
    bool connecting_nonzero = false;  // some delta_n is nonzero on a generator
    bool mid_flasque = false;
    bool eq_lim1_checked = false;  // lim^1 sub = lim quot / im(lim mid)
    bool eq_lim1_holds = false;
    std::vector<std::pair<int, bool>> eq_limn;  // n >= 2: lim^n sub = lim^{n-1} quot
};

// Long exact sequence of the SES on Roos complexes, with connecting maps by
// the standard zig-zag (deterministic preimage choice); ker = im is verified
// exactly at every node.
LesReport les_of_ses(const SesOfSystems& x, int max_degree, const Caps& caps = {});

}  // namespace dlim
