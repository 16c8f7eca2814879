#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dslice/diagram.hpp"
#include "dslice/matrix.hpp"

namespace dslice {
namespace fourman {

// Framed link describing a 2-handlebody: either an explicit linking matrix or
// a multi-component diagram with framings (and optional linking overrides).
struct FramedLink {
    IntMat q;  // assembled linking matrix

    static FramedLink from_matrix(const IntMat& q);
    static FramedLink from_diagram(const KnotDiagram& d, const std::vector<mpz_class>& framings,
                                   const std::vector<std::tuple<int, int, mpz_class>>& overrides = {});
    // JSON file: {"matrix": [[...]]} or
    // {"diagram": "<pd>", "framings": [..], "overrides": [[i,j,lk],...]}.
    static FramedLink from_json_text(const std::string& text);

    int components() const { return static_cast<int>(q.rows()); }
};

// Pairwise linking number of two diagram components: half the signed count of
// their mutual crossings.
mpz_class linking_number(const KnotDiagram& d, int comp_i, int comp_j);

// Signature of the (symmetric) intersection form.
int form_signature(const IntMat& q);

// Invariant factors of coker(Q) = H1(boundary), unit factors dropped; an
// empty list means a homology sphere.
std::vector<mpz_class> boundary_homology(const IntMat& q);

struct MeridianClass {
    std::vector<mpz_class> coords;   // in SNF coordinates, reduced mod factors
    std::vector<mpz_class> factors;  // corresponding invariant factors (0 = free)
    bool nontrivial = false;
};
// Image of the i-th meridian basis vector in coker(Q), 1-based index.
MeridianClass meridian_class(const IntMat& q, int index);

struct HandlebodySummary {
    int n = 0;
    IntMat q;
    int signature = 0;
    int chi = 0;        // chi(X) = 1 + n
    int chi_capped = 0; // chi(X-hat) = 2 + n
    int b2_capped = 0;  // n
    std::vector<mpz_class> h1_boundary;  // invariant factors, units dropped
    bool cappable = false;               // |det Q| = 1
};
HandlebodySummary summarize(const IntMat& q);

}  // namespace fourman
}  // namespace dslice
