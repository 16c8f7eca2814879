#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dslice/braid.hpp"
#include "dslice/diagram.hpp"
#include "dslice/errors.hpp"
#include "dslice/invariants.hpp"
#include "dslice/seifert.hpp"
#include "oracles.hpp"

using namespace dslice;

namespace {

int sig_classical(const IntMat& v) { return signature_symmetric(v + v.transpose()); }

const char* kRightTrefoilPd = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
const char* kLeftTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

}  // namespace

TEST_CASE("seifert circles: trefoil, unknot, figure-eight") {
    auto tre = seifert_surface(parse_pd(kRightTrefoilPd));
    CHECK(tre.num_circles == 2);
    CHECK(tre.num_bands == 3);
    CHECK(tre.genus == 1);
    CHECK(tre.basis.size() == 2);

    auto unknot = seifert_surface(parse_pd("U"));
    CHECK(unknot.num_circles == 1);
    CHECK(unknot.num_bands == 0);
    CHECK(unknot.genus == 0);

    auto fig8 = seifert_surface(braid_closure(parse_braid("3 s1 s2^-1 s1 s2^-1")));
    CHECK(fig8.num_circles == 3);
    CHECK(fig8.num_bands == 4);
    CHECK(fig8.genus == 1);
}

TEST_CASE("seifert: multi-component input is rejected") {
    auto hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)");
    CHECK_THROWS_AS(seifert_surface(hopf), InputError);
}

TEST_CASE("seifert matrix: trefoil up to invariants") {
    // The spec pins V ~ [[-1,1],[0,-1]] only through invariants.
    auto m = seifert_matrix_of(parse_pd(kRightTrefoilPd));
    CHECK(m.v.rows() == 2);
    CHECK(det(m.v - m.v.transpose()) == 1);
    CHECK(sig_classical(m.v) == -2);
    CHECK(alexander(m.v).to_string() == "t - 1 + t^-1");

    auto u = seifert_matrix_of(parse_pd("U"));
    CHECK(u.v.rows() == 0);

    auto f8 = seifert_matrix_of(braid_closure(parse_braid("3 s1 s2^-1 s1 s2^-1")));
    CHECK(f8.v.rows() == 2);
    CHECK(det(f8.v - f8.v.transpose()) == 1);
    CHECK(abs(alexander(f8.v).eval_pm1(-1)) == 5);
}

TEST_CASE("invariant stability: the three trefoil encodings agree") {
    auto pd = seifert_matrix_of(parse_pd(kRightTrefoilPd)).v;
    auto gauss = seifert_matrix_of(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")).v;
    auto braid = seifert_matrix_of(braid_closure(parse_braid("2 s1 s1 s1"))).v;
    CHECK(alexander(pd) == alexander(gauss));
    CHECK(alexander(pd) == alexander(braid));
    CHECK(sig_classical(pd) == sig_classical(gauss));
    CHECK(sig_classical(pd) == sig_classical(braid));
    CHECK(arf(pd) == arf(gauss));
    CHECK(arf(pd) == arf(braid));
}

TEST_CASE("torus knot family T(2,2k+1): genus k") {
    for (int k = 1; k <= 4; ++k) {
        BraidWord w;
        w.strands = 2;
        for (int i = 0; i < 2 * k + 1; ++i) w.letters.emplace_back(1, 1);
        auto sf = seifert_surface(braid_closure(w));
        CHECK(sf.genus == k);
        auto m = seifert_matrix(sf);
        CHECK(static_cast<int>(m.v.rows()) == 2 * k);
        CHECK(sig_classical(m.v) == -2 * k);
    }
}

TEST_CASE("mirror negates the symmetrized signature") {
    std::mt19937 rng(2024);
    int tested = 0;
    while (tested < 20) {
        int strands = 2 + rng() % 3;
        BraidWord w;
        w.strands = strands;
        int len = 3 + rng() % 6;
        for (int i = 0; i < len; ++i)
            w.letters.emplace_back(1 + rng() % (strands - 1), rng() % 2 ? 1 : -1);
        if (closure_components(w) != 1) continue;
        ++tested;
        auto d = braid_closure(w);
        auto v = seifert_matrix_of(d).v;
        auto vm = seifert_matrix_of(mirror(d)).v;
        CHECK(sig_classical(vm) == -sig_classical(v));
    }
}

TEST_CASE("det(V - V^T) = 1 for every 1-component diagram in the corpus") {
    std::mt19937 rng(555);
    int tested = 0;
    while (tested < 40) {
        int strands = 2 + rng() % 3;
        BraidWord w;
        w.strands = strands;
        int len = 2 + rng() % 8;
        for (int i = 0; i < len; ++i)
            w.letters.emplace_back(1 + rng() % (strands - 1), rng() % 2 ? 1 : -1);
        if (closure_components(w) != 1) continue;
        ++tested;
        auto m = seifert_matrix_of(braid_closure(w));
        CHECK(det(m.v - m.v.transpose()) == 1);  // also rechecked inside
    }
}

TEST_CASE("pipeline against the Wirtinger/Fox oracle, sums included") {
    std::mt19937 rng(808);
    int tested = 0;
    while (tested < 15) {
        int strands = 2 + rng() % 2;
        BraidWord w;
        w.strands = strands;
        int len = 3 + rng() % 4;
        for (int i = 0; i < len; ++i)
            w.letters.emplace_back(1 + rng() % (strands - 1), rng() % 2 ? 1 : -1);
        if (closure_components(w) != 1) continue;
        ++tested;
        auto d1 = braid_closure(w);
        auto d = (tested % 2) ? connected_sum(d1, mirror(d1)) : d1;
        auto m = seifert_matrix_of(d);
        CHECK(alexander(m.v) == oracles::wirtinger_alexander(d));
    }
}

TEST_CASE("signature at -1 matches the Sturm oracle on small diagrams") {
    // Spec: oracle equivalence on all corpus diagrams with <= 8 crossings.
    std::vector<KnotDiagram> corpus;
    corpus.push_back(parse_pd(kRightTrefoilPd));
    corpus.push_back(parse_pd(kLeftTrefoilPd));
    corpus.push_back(parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"));
    corpus.push_back(braid_closure(parse_braid("3 s1 s2^-1 s1 s2^-1")));
    corpus.push_back(braid_closure(parse_braid("2 s1 s1 s1 s1 s1")));
    corpus.push_back(braid_closure(parse_braid("2 s1 s1 s1 s1 s1 s1 s1")));
    corpus.push_back(braid_closure(parse_braid("3 s1 s2 s1 s2 s1 s2 s1 s2")));
    corpus.push_back(braid_closure(parse_braid("2 s1")));
    for (const auto& d : corpus) {
        auto v = seifert_matrix_of(d).v;
        CHECK(signature_symmetric(v + v.transpose()) == oracles::sturm_sign_count(v + v.transpose()));
    }
}

TEST_CASE("direct Seifert matrix ingestion is validated") {
    IntMat good(2, 2);
    good.at(0, 0) = -1;
    good.at(0, 1) = 1;
    good.at(1, 1) = -1;
    CHECK_NOTHROW(validate_seifert_matrix(good));

    IntMat odd(3, 3);
    CHECK_THROWS_AS(validate_seifert_matrix(odd), InputError);
    IntMat sym(2, 2);
    sym.at(0, 0) = 1;
    sym.at(1, 1) = 1;  // V - V^T = 0
    CHECK_THROWS_AS(validate_seifert_matrix(sym), InputError);
}
