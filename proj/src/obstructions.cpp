#include "dslice/obstructions.hpp"

#include <algorithm>

#include "dslice/errors.hpp"

namespace dslice {
namespace obstruct {

namespace {

mpz_class quad_value(const IntMat& q, const std::vector<mpz_class>& v) {
    std::size_t n = q.rows();
    mpz_class acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += v[i] * q.at(i, j) * v[j];
    return acc;
}

mpz_class ceil_div(const mpz_class& a, long b) {
    mpz_class r;
    mpz_cdiv_q_ui(r.get_mpz_t(), a.get_mpz_t(), b);
    return r;
}

RohlinCertificate rohlin_from(const IntMat& q, const std::vector<mpz_class>& psi, int sign_x) {
    RohlinCertificate c;
    c.psi = psi;
    c.psi_self = quad_value(q, psi);
    c.sign_x = sign_x;
    c.b2 = static_cast<int>(q.rows());
    c.rhs = abs(c.psi_self - 2 * c.sign_x) - 2 * c.b2;
    c.g_min = c.rhs <= 0 ? 0 : ceil_div(c.rhs, 4);
    return c;
}

}  // namespace

RohlinCertificate rohlin_bound(const IntMat& q, const std::vector<mpz_class>& psi) {
    if (!q.square() || !q.is_symmetric()) throw InputError("linking matrix must be symmetric");
    if (psi.size() != q.rows()) throw InputError("class vector length must match the matrix size");
    if (abs(det(q)) != 1)
        throw PreconditionError("capped closure needs |det Q| = 1 (boundary not a homology sphere)");
    bool all_zero = true, all_even = true;
    for (const auto& v : psi) {
        if (v != 0) all_zero = false;
        if (v % 2 != 0) all_even = false;
    }
    if (all_zero) throw PreconditionError("class must be nonzero");
    if (!all_even) throw PreconditionError("class not divisible by 2");
    return rohlin_from(q, psi, signature_symmetric(q));
}

RohlinCertificate find_nonsphere_class(const IntMat& q) {
    if (!q.square() || !q.is_symmetric() || q.rows() == 0)
        throw InputError("linking matrix must be symmetric and nonempty");
    if (abs(det(q)) != 1) throw PreconditionError("capped closure needs |det Q| = 1");
    std::size_t n = q.rows();
    int sign_x = signature_symmetric(q);

    // Deterministic search for alpha with alpha.alpha != 0: basis vectors,
    // then sums of two, then the full box with growing coordinate bound.
    auto self_pairing = [&](const std::vector<mpz_class>& v) { return quad_value(q, v); };
    std::vector<mpz_class> alpha;
    for (std::size_t i = 0; i < n && alpha.empty(); ++i) {
        std::vector<mpz_class> v(n, 0);
        v[i] = 1;
        if (self_pairing(v) != 0) alpha = v;
    }
    for (std::size_t i = 0; i < n && alpha.empty(); ++i)
        for (std::size_t j = i + 1; j < n && alpha.empty(); ++j) {
            std::vector<mpz_class> v(n, 0);
            v[i] = 1;
            v[j] = 1;
            if (self_pairing(v) != 0) alpha = v;
        }
    for (long bound = 2; alpha.empty() && bound <= 16; ++bound) {
        std::vector<long> idx(n, 0);
        for (;;) {
            std::vector<mpz_class> v(n);
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = idx[i] - bound;  // coordinates in [-bound, bound]
                if (v[i] != 0) nonzero = true;
            }
            if (nonzero && self_pairing(v) != 0) {
                alpha = v;
                break;
            }
            std::size_t carry = 0;
            while (carry < n && ++idx[carry] > 2 * bound) idx[carry++] = 0;
            if (carry == n) break;
        }
    }
    if (alpha.empty())
        throw std::logic_error("no class of nonzero square found for a unimodular form");

    for (long k = 1;; ++k) {
        std::vector<mpz_class> psi(n);
        for (std::size_t i = 0; i < n; ++i) psi[i] = 2 * k * alpha[i];
        RohlinCertificate c = rohlin_from(q, psi, sign_x);
        if (c.g_min >= 1) return c;
    }
}

DeepSliceCertificate deep_slice_certificate(const fourman::FramedLink& link) {
    const IntMat& q = link.q;
    if (q.rows() == 0) throw InputError("a 2-handlebody needs at least one 2-handle");
    DeepSliceCertificate cert;

    for (int i = 1; i <= static_cast<int>(q.rows()); ++i) {
        fourman::MeridianClass mc = fourman::meridian_class(q, i);
        if (mc.nontrivial) {
            cert.tag = DeepSliceCase::WALL_MERIDIAN;
            cert.meridian_index = i;
            cert.meridian = mc;
            int rank = static_cast<int>(q.rows());
            wall::FreeWord gamma({i}, rank);
            cert.mu = wall::mu_from_double_points({{1, gamma}}, rank);
            cert.witness_description =
                "Whitehead double of meridian " + std::to_string(i) +
                "; slice in X, mu(K) = gamma_" + std::to_string(i) + " != 0 in Lambda~";
            return cert;
        }
    }

    // All meridians die in H1(boundary), so |det Q| = 1.
    cert.tag = DeepSliceCase::ROHLIN_CONDITIONAL;
    cert.rohlin = find_nonsphere_class(q);
    cert.warnings.push_back("conditional on the boundary being S^3 (only |det Q| = 1 is certified)");
    cert.warnings.push_back(
        "if the boundary is a homology sphere with nontrivial pi_1, the certificate is indeterminate");
    cert.witness_description =
        "boundary of the handle-part disk of a surface representing the even class psi";
    return cert;
}

MTVerdict mt_obstruct(int sigma, const UnitComplexSample& omega, int sign_x, int chi,
                      bool h1_zero) {
    if (!omega.certified)
        throw PreconditionError("omega " + omega.to_string() +
                                " is not certified (order is not a prime power); refusing verdict");
    if (!h1_zero) throw PreconditionError("the obstruction requires H1(X; Z) = 0");
    MTVerdict v;
    v.sigma = sigma;
    v.sign_x = sign_x;
    v.chi = chi;
    v.omega = omega;
    v.slack = std::abs(sigma + sign_x) - chi + 2;
    v.obstructed = v.slack > 0;
    return v;
}

RefutationWitness universal_refute(int sign_v, int chi_v, int h1_generators) {
    if (h1_generators < 0) throw InputError("number of H1 generators must be nonnegative");
    RefutationWitness w;
    w.sign_v = sign_v;
    w.chi_v = chi_v;
    w.h1_generators = h1_generators;
    w.bound = mpz_class(std::abs(sign_v)) + std::abs(chi_v) + 2 * h1_generators;
    mpz_class n = (w.bound + 1) / 2;  // ceil(B / 2)
    if (n < 1) {
        n = 1;
        w.vacuous = true;
    }
    w.n = n.get_si();
    w.sigma_witness = 2 * w.n;
    w.sign_surgered = sign_v;
    w.chi_surgered = chi_v + 2 * h1_generators;
    w.slack = abs(mpz_class(w.sigma_witness) + sign_v) -
              (mpz_class(std::abs(chi_v)) + 2 * h1_generators) + 2;
    return w;
}

ManifoldFamily parse_family(const std::string& name) {
    if (name == "one-handlebody" || name == "ONE_HANDLEBODY") return ManifoldFamily::ONE_HANDLEBODY;
    if (name == "s2xd2-sum" || name == "S2xD2_SUM") return ManifoldFamily::S2xD2_SUM;
    throw InputError("unrecognized manifold family: " + name +
                     " (expected one-handlebody or s2xd2-sum)");
}

FamilyRuleVerdict family_rules(ManifoldFamily family, int k) {
    if (k < 0) throw InputError("family parameter must be nonnegative");
    FamilyRuleVerdict v;
    v.family = family;
    v.k = k;
    if (family == ManifoldFamily::ONE_HANDLEBODY) {
        v.deep_slice_exists = false;
        v.local_deep_slice_exists = false;
        v.statement = "boundary connected sums of S^1 x B^3 admit no deep slice knots";
    } else {
        v.local_deep_slice_exists = false;
        v.deep_slice_exists = k >= 1;
        v.statement = k == 0
                          ? "B^4 admits no deep slice knots (slice = shallow slice)"
                          : "no deep slice local knots (the manifold embeds in S^4); "
                            "non-local deep slice knots exist";
    }
    return v;
}

}  // namespace obstruct
}  // namespace dslice
