#pragma once

#include <array>
#include <string>
#include <vector>

namespace dslice {

// One crossing of an oriented diagram. slot[0..3] are the four arc labels in
// counterclockwise order starting from the incoming under-strand:
//   slot[0] = a (under in), slot[1] = b, slot[2] = c (under out), slot[3] = d.
// sign = +1 when the over-strand runs d -> b, -1 when it runs b -> d
// (equivalently sign = sgn det(over direction, under direction)).
struct Crossing {
    std::array<int, 4> slot{};
    int sign = 0;

    int under_in() const { return slot[0]; }
    int under_out() const { return slot[2]; }
    int over_in() const { return sign > 0 ? slot[3] : slot[1]; }
    int over_out() const { return sign > 0 ? slot[1] : slot[3]; }
};

// Oriented link diagram. Arcs are labeled 1..2n (n = crossings); each label
// appears exactly twice among the slots. next_arc is the successor along the
// link. Crossing-free unknot components are counted separately since PD
// cannot express them.
class KnotDiagram {
public:
    std::vector<Crossing> crossings;
    int free_loops = 0;  // crossing-free unknot components

    int n_arcs() const { return static_cast<int>(crossings.size()) * 2; }
    int num_components() const { return num_components_; }
    int component_of_arc(int arc) const { return component_of_arc_[arc]; }
    int next_arc(int arc) const { return next_arc_[arc]; }

    // Validates labels and orientation structure, computes components, and
    // relabels arcs canonically to 1..2n. Throws InputError on bad input.
    void finalize();

    std::string serialize() const;

private:
    int num_components_ = 0;
    std::vector<int> next_arc_;          // 1-indexed
    std::vector<int> component_of_arc_;  // 1-indexed, components numbered from 0
};

KnotDiagram parse_pd(const std::string& text);
KnotDiagram parse_gauss(const std::string& text);

KnotDiagram mirror(const KnotDiagram& d);
KnotDiagram reverse(const KnotDiagram& d);
KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2);

int writhe(const KnotDiagram& d);

// Planar-map faces of the 4-valent diagram graph, traced from the rotation
// system the PD code carries. Entries are (crossing index, corner index):
// corner k is the wedge between slot k and slot (k+1) mod 4. A valid planar
// diagram has exactly n + 2 faces per component-sphere; non-realizable codes
// (e.g. from non-planar Gauss input) fail the Euler count and throw.
struct PlanarFaces {
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::vector<std::array<int, 4>> corner_face;  // [crossing][corner] -> face id
    // Side faces of each directed arc: side0 = face traced along the arc's
    // forward direction, side1 = the opposite side. 1-indexed by arc.
    std::vector<int> side0, side1;
};
PlanarFaces trace_faces(const KnotDiagram& d);

}  // namespace dslice
