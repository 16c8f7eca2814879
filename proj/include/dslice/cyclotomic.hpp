#pragma once

#include <gmpxx.h>

#include <vector>

#include "dslice/laurent.hpp"

namespace dslice {

// Exact arithmetic in Q(zeta_m), elements as rational polynomials in zeta of
// degree < phi(m), reduced mod the m-th cyclotomic polynomial.
class CyclotomicField {
public:
    explicit CyclotomicField(int m);

    using Elem = std::vector<mpq_class>;  // size deg()

    int order() const { return m_; }
    int deg() const { return deg_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    Elem from_rational(const mpq_class& q) const;
    Elem root_power(int k) const;  // zeta^k reduced

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem conj(const Elem& x) const;  // complex conjugation, zeta -> zeta^-1
    Elem inverse(const Elem& x) const;
    bool is_zero(const Elem& x) const;
    bool is_real(const Elem& x) const;

    // Exact sign of a real element: +1, 0, -1. Uses rational interval
    // evaluation refined below an algebraic-integer separation bound, so the
    // verdict is certified.
    int sign_real(const Elem& x) const;

private:
    Elem reduce(std::vector<mpq_class> raw) const;  // size up to 2*deg-1

    int m_;
    int deg_;
    std::vector<mpq_class> phi_;                 // monic, ascending, size deg+1
    std::vector<std::vector<mpq_class>> power_;  // zeta^j mod phi for j = 0..m
};

// Signature of a Hermitian matrix over Q(zeta_m) (entries h[i][j], with
// h[j][i] = conj(h[i][j])), by exact congruence diagonalization.
int hermitian_signature(const CyclotomicField& f,
                        std::vector<std::vector<CyclotomicField::Elem>> h);

}  // namespace dslice
