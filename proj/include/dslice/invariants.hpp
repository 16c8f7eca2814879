#pragma once

#include <string>

#include "dslice/laurent.hpp"
#include "dslice/matrix.hpp"

namespace dslice {

// omega = exp(2*pi*i * a/m) in lowest terms, 0 < a < m. Certified membership
// in the valid domain of the Murasugi-Tristram inequality exactly when m is a
// prime power (which includes omega = -1, m = 2).
struct UnitComplexSample {
    long a = 1;
    long m = 2;
    bool certified = true;

    static UnitComplexSample parse(const std::string& text);  // "a/m" or "-1"
    std::string to_string() const;
};

bool is_prime_power(long m);

// Alexander polynomial det(V - t V^T), normalized palindromic with value 1
// at t = 1 (automatic from det(V - V^T) = 1).
Laurent alexander(const IntMat& v);

// Levine-Tristram signature: signature of (1-omega) V + (1-conj(omega)) V^T.
// Throws PreconditionError when omega is a root of the Alexander polynomial.
// Works for any omega != 1; callers enforce certification policy.
int lt_signature(const IntMat& v, const UnitComplexSample& omega);

// Arf invariant: 0 iff |Delta(-1)| = +-1 mod 8.
int arf(const IntMat& v);

// Block diagonal sum; models connected sum at the Seifert level.
IntMat direct_sum(const IntMat& a, const IntMat& b);

}  // namespace dslice
