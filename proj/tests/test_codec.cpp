#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dslice/braid.hpp"
#include "dslice/diagram.hpp"
#include "dslice/errors.hpp"
#include "oracles.hpp"

using namespace dslice;

namespace {

std::multiset<std::array<int, 4>> crossing_set(const KnotDiagram& d) {
    std::multiset<std::array<int, 4>> s;
    for (const auto& c : d.crossings) s.insert(c.slot);
    return s;
}

BraidWord random_word(std::mt19937& rng, int strands, int len) {
    BraidWord w;
    w.strands = strands;
    for (int i = 0; i < len; ++i)
        w.letters.emplace_back(1 + rng() % (strands - 1), rng() % 2 ? 1 : -1);
    return w;
}

}  // namespace

TEST_CASE("pd: hopf link") {
    auto d = parse_pd("X(1,4,2,3) X(3,2,4,1)");
    CHECK(d.num_components() == 2);
    CHECK(d.crossings.size() == 2);
    CHECK(oracles::circuits_consistent(d));
}

TEST_CASE("pd: empty input is an error, unknot needs the U token") {
    CHECK_THROWS_AS(parse_pd(""), InputError);
    CHECK_THROWS_AS(parse_pd("   "), InputError);
    auto u = parse_pd("U");
    CHECK(u.num_components() == 1);
    CHECK(u.crossings.empty());
    CHECK(u.serialize() == "U");
}

TEST_CASE("pd: trefoil") {
    auto d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    CHECK(d.num_components() == 1);
    CHECK(d.crossings.size() == 3);
    CHECK(oracles::circuits_consistent(d));
}

TEST_CASE("pd: validation failures") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), InputError);           // labels appear once
    CHECK_THROWS_AS(parse_pd("X(1,1,1,1)"), InputError);           // label appears 4 times
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5)"), InputError);           // dangling labels
    CHECK_THROWS_AS(parse_pd("X(1,2"), InputError);                // malformed syntax
    CHECK_THROWS_AS(parse_pd("U X(1,2,2,1)"), InputError);         // U mixed with crossings
}

TEST_CASE("pd: arc labels appear exactly twice after parsing") {
    auto d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
    std::map<int, int> count;
    for (const auto& c : d.crossings)
        for (int s : c.slot) ++count[s];
    CHECK(count.size() == static_cast<std::size_t>(d.n_arcs()));
    for (auto& [label, n] : count) CHECK(n == 2);
}

TEST_CASE("gauss: trefoil") {
    auto d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(d.num_components() == 1);
    CHECK(d.crossings.size() == 3);
    for (const auto& c : d.crossings) CHECK(c.sign == 1);
    CHECK(oracles::circuits_consistent(d));
}

TEST_CASE("gauss: single kink") {
    auto d = parse_gauss("O1+ U1+");
    CHECK(d.num_components() == 1);
    CHECK(d.crossings.size() == 1);
}

TEST_CASE("gauss: label twice as over is an error") {
    CHECK_THROWS_AS(parse_gauss("O1+ O1-"), InputError);
    CHECK_THROWS_AS(parse_gauss("O1+ U1+ O1+ U1+"), InputError);
    CHECK_THROWS_AS(parse_gauss("O1+ U1-"), InputError);  // conflicting signs
    CHECK_THROWS_AS(parse_gauss("O1+"), InputError);
}

TEST_CASE("braid: parsing and closure basics") {
    auto b = parse_braid("2 s1 s1 s1");
    CHECK(b.strands == 2);
    CHECK(b.letters.size() == 3);
    auto d = braid_closure(b);
    CHECK(d.num_components() == 1);
    CHECK(d.crossings.size() == 3);
    CHECK(oracles::circuits_consistent(d));

    auto empty = braid_closure(parse_braid("1"));
    CHECK(empty.num_components() == 1);
    CHECK(empty.crossings.empty());

    auto kinked = braid_closure(parse_braid("2 s1"));
    CHECK(kinked.num_components() == 1);
    CHECK(kinked.crossings.size() == 1);

    CHECK_THROWS_AS(parse_braid("2 s2"), InputError);   // index out of range
    CHECK_THROWS_AS(parse_braid("1 s1"), InputError);
    CHECK_THROWS_AS(parse_braid("s1 s1"), InputError);  // missing header
}

TEST_CASE("braid: closure components = permutation cycles") {
    CHECK(closure_components(parse_braid("2 s1 s1")) == 2);   // hopf link
    CHECK(closure_components(parse_braid("3 s1 s2")) == 1);
    CHECK(closure_components(parse_braid("3")) == 3);         // identity braid
    CHECK(closure_components(parse_braid("3 s1 s1")) == 3);
    auto d = braid_closure(parse_braid("3 s1 s1"));
    CHECK(d.num_components() == 3);  // hopf link + one untouched strand
    CHECK(d.free_loops == 1);
}

TEST_CASE("braid: word and inverse word closures have equal component counts") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        auto w = random_word(rng, 2 + rng() % 3, 1 + rng() % 8);
        BraidWord inv;
        inv.strands = w.strands;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            inv.letters.emplace_back(it->first, -it->second);
        CHECK(closure_components(w) == closure_components(inv));
        CHECK(braid_closure(w).num_components() == braid_closure(inv).num_components());
    }
}

TEST_CASE("mirror and reverse are involutions") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto w = random_word(rng, 2 + rng() % 3, 1 + rng() % 7);
        auto d = braid_closure(w);
        if (d.crossings.empty()) continue;
        CHECK(crossing_set(mirror(mirror(d))) == crossing_set(d));
        CHECK(crossing_set(reverse(reverse(d))) == crossing_set(d));
        // mirror flips all crossing signs
        auto m = mirror(d);
        CHECK(writhe(m) == -writhe(d));
        CHECK(m.num_components() == d.num_components());
    }
    CHECK(crossing_set(reverse(parse_pd("U"))) == crossing_set(parse_pd("U")));
}

TEST_CASE("serialize round-trip reparses to the identical crossing set") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto w = random_word(rng, 2 + rng() % 3, 1 + rng() % 8);
        auto d = braid_closure(w);
        if (d.free_loops > 0) continue;  // PD text cannot carry free loops
        auto d2 = parse_pd(d.serialize());
        CHECK(crossing_set(d2) == crossing_set(d));
        CHECK(d2.num_components() == d.num_components());
    }
}

TEST_CASE("connected sum") {
    auto tre = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
    auto s = connected_sum(tre, tre);
    CHECK(s.num_components() == 1);
    CHECK(s.crossings.size() == 6);
    CHECK(oracles::circuits_consistent(s));

    auto hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)");
    CHECK_THROWS_AS(connected_sum(tre, hopf), InputError);
    // unknot is the identity
    CHECK(crossing_set(connected_sum(tre, parse_pd("U"))) == crossing_set(tre));
}

TEST_CASE("planar faces obey the Euler count; bad rotation systems are caught") {
    auto d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto pf = trace_faces(d);
    CHECK(pf.faces.size() == d.crossings.size() + 2);
    // A non-realizable signed Gauss code: trefoil with one flipped sign is
    // combinatorially consistent but not planar.
    auto bad = parse_gauss("O1+ U2+ O3- U1+ O2+ U3-");
    CHECK_THROWS_AS(trace_faces(bad), InputError);
}
