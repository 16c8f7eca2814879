#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dslice/fourmanifold.hpp"
#include "dslice/invariants.hpp"
#include "dslice/matrix.hpp"
#include "dslice/wall.hpp"

namespace dslice {
namespace obstruct {

// Genus bound certificate from the Rohlin inequality
// 4g >= |psi.psi - 2 sigma(X)| - 2 b2(X) for even classes psi.
struct RohlinCertificate {
    std::vector<mpz_class> psi;
    mpz_class psi_self;  // psi^T Q psi
    int sign_x = 0;
    int b2 = 0;
    mpz_class rhs;    // |psi.psi - 2 sigma| - 2 b2
    mpz_class g_min;  // max(0, ceil(rhs / 4))
};

enum class DeepSliceCase { WALL_MERIDIAN, ROHLIN_CONDITIONAL, FAMILY_RULE_NONE, INDETERMINATE };

struct DeepSliceCertificate {
    DeepSliceCase tag = DeepSliceCase::INDETERMINATE;
    // WALL_MERIDIAN: the certified knot is the Whitehead double of this meridian.
    int meridian_index = 0;  // 1-based
    std::optional<fourman::MeridianClass> meridian;
    std::optional<wall::LambdaElement> mu;  // symbolic mu = gamma_i in Lambda~
    // ROHLIN_CONDITIONAL
    std::optional<RohlinCertificate> rohlin;
    std::vector<std::string> warnings;
    std::string witness_description;
};

struct MTVerdict {
    int sigma = 0;
    int sign_x = 0;
    int chi = 0;
    int slack = 0;  // |sigma + sign| - chi + 2
    bool obstructed = false;
    UnitComplexSample omega;
};

struct RefutationWitness {
    int sign_v = 0;
    int chi_v = 0;
    int h1_generators = 0;
    mpz_class bound;      // B = |sign| + |chi| + 2l
    long n = 1;           // witness = #^n (left trefoil)
    long sigma_witness = 2;  // = 2n at omega = -1
    int sign_surgered = 0;   // sign(V') = sign(V)
    int chi_surgered = 0;    // chi(V') = chi(V) + 2l
    mpz_class slack;      // |2n + sign| - (|chi| + 2l) + 2
    bool vacuous = false;  // B = 0: bound holds for every knot
};

enum class ManifoldFamily { ONE_HANDLEBODY, S2xD2_SUM };

struct FamilyRuleVerdict {
    ManifoldFamily family;
    int k = 0;
    bool deep_slice_exists = false;
    bool local_deep_slice_exists = false;
    std::string statement;
};

// Rohlin bound for an even class psi in the capped closure of Q (|det Q| = 1).
RohlinCertificate rohlin_bound(const IntMat& q, const std::vector<mpz_class>& psi);

// Finds an even class with genus bound >= 1: psi = 2k*alpha for the first
// alpha (deterministic search) with alpha.alpha != 0 and the least k >= 1.
RohlinCertificate find_nonsphere_class(const IntMat& q);

// Deep-slice certificate for the 2-handlebody of a framed link.
DeepSliceCertificate deep_slice_certificate(const fourman::FramedLink& link);

// Murasugi-Tristram sliceness obstruction in a closed manifold with H1 = 0.
MTVerdict mt_obstruct(int sigma, const UnitComplexSample& omega, int sign_x, int chi,
                      bool h1_zero);

// Witness that no compact V with S^3 boundary slices every knot
// null-homologously.
RefutationWitness universal_refute(int sign_v, int chi_v, int h1_generators);

FamilyRuleVerdict family_rules(ManifoldFamily family, int k);
ManifoldFamily parse_family(const std::string& name);

}  // namespace obstruct
}  // namespace dslice
