#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dslice {

// Integer Laurent polynomial, dense coefficients c[i] for t^(lo+i).
// Always kept trimmed: c.front() and c.back() nonzero unless zero polynomial.
class Laurent {
public:
    Laurent() = default;  // zero
    static Laurent constant(const mpz_class& v);
    static Laurent monomial(const mpz_class& v, int exp);
    // Ordinary polynomial with ascending coefficients, exponents from `lo`.
    static Laurent from_coeffs(std::vector<mpz_class> coeffs, int lo);

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(int exp) const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return lo_ == o.lo_ && c_ == o.c_; }

    Laurent shifted(int k) const;  // multiply by t^k

    mpq_class eval(const mpq_class& t) const;  // t != 0
    mpz_class eval_pm1(int pm) const;          // value at t = +1 or -1

    bool is_palindromic() const;  // coeff(k) == coeff(-k) for all k

    std::string to_string() const;  // e.g. "t^-1 - 1 + t"

private:
    void trim();
    int lo_ = 0;
    std::vector<mpz_class> c_;
};

// m-th cyclotomic polynomial as an ordinary polynomial (lo = 0).
Laurent cyclotomic_polynomial(int m);

// Whether divisor (an ordinary monic-lead polynomial) divides p in Z[t,t^-1]
// up to units, i.e. divides t^k * p for the k clearing negative exponents.
bool divides_laurent(const Laurent& divisor, const Laurent& p);

}  // namespace dslice
