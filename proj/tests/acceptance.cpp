// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs on exact arithmetic; tolerances are equalities.

#include <gmpxx.h>

#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "dslice/braid.hpp"
#include "dslice/diagram.hpp"
#include "dslice/errors.hpp"
#include "dslice/fourmanifold.hpp"
#include "dslice/invariants.hpp"
#include "dslice/obstructions.hpp"
#include "dslice/seifert.hpp"
#include "dslice/wall.hpp"
#include "oracles.hpp"

using namespace dslice;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

int sigma_at_minus1(const KnotDiagram& d) {
    auto v = seifert_matrix_of(d).v;
    return lt_signature(v, UnitComplexSample::parse("1/2"));
}

KnotDiagram torus_2_braid(int crossings, int sign) {
    BraidWord w;
    w.strands = 2;
    for (int i = 0; i < crossings; ++i) w.letters.emplace_back(1, sign);
    return braid_closure(w);
}

// 1. Signature pipeline through all three notations.
void criterion1() {
    std::ostringstream why;
    bool ok = true;
    auto expect = [&](int got, int want, const char* what) {
        if (got != want) {
            ok = false;
            why << what << " gave " << got << " expected " << want << "; ";
        }
    };
    expect(sigma_at_minus1(parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")), -2, "right trefoil PD");
    expect(sigma_at_minus1(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")), -2, "right trefoil Gauss");
    expect(sigma_at_minus1(braid_closure(parse_braid("2 s1 s1 s1"))), -2, "right trefoil braid");
    expect(sigma_at_minus1(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")), 2, "left trefoil PD");
    expect(sigma_at_minus1(parse_gauss("O1- U2- O3- U1- O2- U3-")), 2, "left trefoil Gauss");
    expect(sigma_at_minus1(braid_closure(parse_braid("2 s1^-1 s1^-1 s1^-1"))), 2, "left trefoil braid");
    expect(sigma_at_minus1(braid_closure(parse_braid("3 s1 s2^-1 s1 s2^-1"))), 0, "figure-eight");
    expect(sigma_at_minus1(parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")), 0,
           "figure-eight table PD");
    expect(sigma_at_minus1(torus_2_braid(7, 1)), -6, "T(2,7) braid closure");
    criterion(1, "signature pipeline (PD, Gauss, braid)", ok, why.str());
}

// 2. Alexander polynomial and Arf.
void criterion2() {
    std::ostringstream why;
    bool ok = true;
    auto tre = seifert_matrix_of(parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")).v;
    if (alexander(tre).to_string() != "t - 1 + t^-1") {
        ok = false;
        why << "trefoil Delta = " << alexander(tre).to_string() << "; ";
    }
    if (arf(tre) != 1) {
        ok = false;
        why << "trefoil arf != 1; ";
    }
    auto f8 = seifert_matrix_of(braid_closure(parse_braid("3 s1 s2^-1 s1 s2^-1"))).v;
    if (abs(alexander(f8).eval_pm1(-1)) != 5) {
        ok = false;
        why << "fig8 |Delta(-1)| != 5; ";
    }
    if (arf(f8) != 1) {
        ok = false;
        why << "fig8 arf != 1; ";
    }
    auto unknot = seifert_matrix_of(parse_pd("U")).v;
    if (alexander(unknot).to_string() != "1" || arf(unknot) != 0) {
        ok = false;
        why << "unknot Delta/arf; ";
    }
    auto granny = seifert_matrix_of(
        connected_sum(parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"),
                      parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"))).v;
    if (arf(granny) != 0) {
        ok = false;
        why << "#^2 trefoil arf != 0; ";
    }
    criterion(2, "Alexander and Arf", ok, why.str());
}

// 3. Rohlin genus bounds.
void criterion3() {
    auto c1 = obstruct::rohlin_bound(parse_matrix("[1]"), {mpz_class(4)});
    auto c2 = obstruct::rohlin_bound(parse_matrix("[[0,1],[1,0]]"), {mpz_class(2), mpz_class(2)});
    bool ok = c1.g_min == 3 && c2.g_min == 1;
    criterion(3, "Rohlin reproduction (quartic genus 3; S2xS2 class (2,2) genus 1)", ok,
              "g_min = " + c1.g_min.get_str() + ", " + c2.g_min.get_str());
}

// 4. Deep-slice coverage over a matrix corpus.
void criterion4() {
    std::ostringstream why;
    bool ok = true;
    std::mt19937 rng(20240908);
    int non_unimodular = 0, unimodular = 0;
    while (non_unimodular < 20 || unimodular < 10) {
        int n = 1 + rng() % 4;
        IntMat q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 7) - 3;
                q.at(i, j) = v;
                q.at(j, i) = v;
            }
        bool uni = abs(det(q)) == 1;
        if (uni && unimodular >= 10) continue;
        if (!uni && non_unimodular >= 20) continue;
        auto cert = obstruct::deep_slice_certificate(fourman::FramedLink::from_matrix(q));
        if (uni) {
            ++unimodular;
            if (cert.tag != obstruct::DeepSliceCase::ROHLIN_CONDITIONAL) {
                ok = false;
                why << "unimodular " << q.to_string() << " not ROHLIN_CONDITIONAL; ";
            } else if (cert.rohlin->g_min < 1) {
                ok = false;
                why << "conditional certificate with g_min < 1; ";
            }
        } else {
            ++non_unimodular;
            if (cert.tag != obstruct::DeepSliceCase::WALL_MERIDIAN) {
                ok = false;
                why << "non-unimodular " << q.to_string() << " not WALL_MERIDIAN; ";
            } else if (!cert.meridian->nontrivial || cert.mu->is_zero()) {
                ok = false;
                why << "weak meridian witness; ";
            }
        }
    }
    criterion(4, "deep-slice certificates cover 20 non-unimodular + 10 unimodular matrices", ok,
              why.str());
}

// 5. Murasugi-Tristram instances.
void criterion5() {
    auto v1 = obstruct::mt_obstruct(2, UnitComplexSample::parse("1/2"), 1, 3, true);
    auto v2 = obstruct::mt_obstruct(-2, UnitComplexSample::parse("1/2"), 1, 3, true);
    bool ok = v1.slack == 2 && v1.obstructed && v2.slack == 0 && !v2.obstructed;
    criterion(5, "Murasugi-Tristram worked instances", ok,
              "slacks " + std::to_string(v1.slack) + ", " + std::to_string(v2.slack));
}

// 6. Universal-slicing refutations, witness recomputed through diagrams.
void criterion6() {
    std::ostringstream why;
    bool ok = true;
    std::mt19937 rng(424242);
    KnotDiagram left = torus_2_braid(3, -1);
    for (int trial = 0; trial < 50; ++trial) {
        int sign = static_cast<int>(rng() % 21) - 10;
        int chi = static_cast<int>(rng() % 21) - 10;
        int l = static_cast<int>(rng() % 6);
        auto w = obstruct::universal_refute(sign, chi, l);
        if (2 * w.n < w.bound) {
            ok = false;
            why << "2n < B at (" << sign << "," << chi << "," << l << "); ";
        }
        if (w.slack <= 0) {
            ok = false;
            why << "non-positive slack at (" << sign << "," << chi << "," << l << "); ";
        }
        if (w.n <= 5) {
            KnotDiagram witness = left;
            for (long i = 1; i < w.n; ++i) witness = connected_sum(witness, left);
            int sigma = sigma_at_minus1(witness);
            if (sigma != 2 * w.n) {
                ok = false;
                why << "diagram pipeline sigma " << sigma << " != " << 2 * w.n << "; ";
            }
        }
    }
    criterion(6, "universal refutation witnesses (50 random triples, diagram recomputation)", ok,
              why.str());
}

// 7. Lambda~ randomized property suite.
void criterion7() {
    using namespace dslice::wall;
    std::ostringstream why;
    bool ok = true;
    const int rank = 3;
    std::mt19937 rng(777777);
    auto random_w = [&](int max_len) {
        std::vector<int> letters;
        int len = rng() % (max_len + 1);
        for (int i = 0; i < len; ++i) {
            int g = 1 + rng() % rank;
            letters.push_back(rng() % 2 ? g : -g);
        }
        return FreeWord(std::move(letters), rank);
    };
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::vector<std::pair<mpz_class, FreeWord>> raw;
        int terms = 1 + rng() % 6;
        for (int i = 0; i < terms; ++i)
            raw.emplace_back(static_cast<long>(rng() % 9) - 4, random_w(6));
        auto e = normalize(raw, rank);

        std::vector<std::pair<mpz_class, FreeWord>> again;
        for (const auto& [word, coeff] : e.terms()) again.emplace_back(coeff, word);
        if (!(normalize(again, rank).terms() == e.terms())) {
            ok = false;
            why << "normalize not idempotent; ";
        }

        FreeWord g = random_w(6);
        if (!normalize({{1, g}, {-1, g.inverse()}}, rank).is_zero()) {
            ok = false;
            why << "g - g^-1 != 0; ";
        }
        if (!normalize({{static_cast<long>(rng() % 10) + 1, FreeWord({}, rank)}}, rank).is_zero()) {
            ok = false;
            why << "identity term survived; ";
        }

        std::vector<std::pair<mpz_class, FreeWord>> flipped = raw;
        for (std::size_t i = 0; i < flipped.size(); ++i)
            if ((i + trial) % 2) flipped[i].second = flipped[i].second.inverse();
        if (!(normalize(flipped, rank).terms() == e.terms())) {
            ok = false;
            why << "sheet-flip changed the element; ";
        }

        if (!g.is_identity()) {
            auto mu = mu_from_double_points({{1, g}}, rank);
            if (mu.is_zero() || !(mu.terms().begin()->first == g.canonical()) ||
                mu.terms().begin()->second != 1) {
                ok = false;
                why << "mu([(+1,gamma)]) != gamma; ";
            }
        }
    }
    criterion(7, "Lambda~ property suite (1000 randomized sums, rank 3)", ok, why.str());
}

// 8. Brute-force oracle equivalence for signature and SNF.
void criterion8() {
    std::ostringstream why;
    bool ok = true;
    std::mt19937 rng(88888888);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + rng() % 4;
        IntMat q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 5) - 2;
                q.at(i, j) = v;
                q.at(j, i) = v;
            }
        int s1 = fourman::form_signature(q);
        int s2 = oracles::sturm_sign_count(q);
        if (s1 != s2) {
            ok = false;
            why << "signature " << s1 << " vs oracle " << s2 << " on " << q.to_string() << "; ";
            break;
        }
        auto f1 = smith_normal_form(q).diag;
        auto f2 = oracles::naive_smith(q);
        if (f1 != f2) {
            ok = false;
            why << "SNF mismatch on " << q.to_string() << "; ";
            break;
        }
    }
    criterion(8, "brute-force oracle equivalence (500 samples, forms up to 4x4)", ok, why.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria pass\n";
    return 0;
}
