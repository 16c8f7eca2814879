#pragma once

#include <string>
#include <vector>

#include "dslice/diagram.hpp"
#include "dslice/matrix.hpp"

namespace dslice {

struct SeifertMatrix {
    IntMat v;
    std::string provenance;
};

// Basis cycle in the circle-band graph: runs through two bands of the same
// annulus (tree band + non-tree band) and the rim arcs between them.
struct BasisCycle {
    int annulus;  // 1-based annulus index (between circle depths annulus-1, annulus)
    int band_a;   // crossing id of the tree band
    int band_b;   // crossing id of the companion band
};

// Seifert surface data computed on a braid-normalized diagram (the input
// diagram is first brought to coherently nested Seifert circles by R2 moves;
// the result is a Seifert surface of the same knot).
struct SeifertSurface {
    KnotDiagram normalized;
    int num_circles = 0;
    int num_bands = 0;
    int genus = 0;
    std::vector<int> band_sign;                   // per crossing of `normalized`
    std::vector<int> band_annulus;                // per crossing, 1-based
    std::vector<int> band_pos;                    // per crossing, global linear position
    std::vector<std::vector<int>> annulus_bands;  // crossing ids, sorted by band_pos
    std::vector<BasisCycle> basis;                // exactly 2*genus cycles
    std::string provenance;
};

// Runs Seifert's algorithm; requires an oriented 1-component diagram.
SeifertSurface seifert_surface(const KnotDiagram& d);

// Seifert linking matrix in the spanning-tree-complement basis.
SeifertMatrix seifert_matrix(const SeifertSurface& s);

// Full pipeline, diagram -> matrix.
SeifertMatrix seifert_matrix_of(const KnotDiagram& d);

// Checks the Seifert matrix contract: square, even size, det(V - V^T) = 1.
void validate_seifert_matrix(const IntMat& v);

}  // namespace dslice
