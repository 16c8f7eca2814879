#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dslice/diagram.hpp"

namespace dslice {

// Braid word on `strands` strands; letters are (index i, sign) for sigma_i^±1,
// 1 <= i <= strands - 1. The empty word is the identity braid.
struct BraidWord {
    int strands = 1;
    std::vector<std::pair<int, int>> letters;
};

// Format: "<n> s<i> s<i>^-1 ..." — strand count header, then generators.
BraidWord parse_braid(const std::string& text);

// Number of components of the trace closure (= permutation cycle count).
int closure_components(const BraidWord& b);

// Standard trace closure as an oriented diagram, one crossing per letter.
// A positive letter sigma_i takes the strand at position i over the strand
// at position i+1, giving a crossing of sign +1.
KnotDiagram braid_closure(const BraidWord& b);

}  // namespace dslice
