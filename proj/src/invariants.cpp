#include "dslice/invariants.hpp"

#include <numeric>

#include "dslice/cyclotomic.hpp"
#include "dslice/errors.hpp"
#include "dslice/seifert.hpp"

namespace dslice {

bool is_prime_power(long m) {
    if (m < 2) return false;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        return m == 1;
    }
    return true;  // m itself prime
}

UnitComplexSample UnitComplexSample::parse(const std::string& text) {
    UnitComplexSample w;
    if (text == "-1") {
        w.a = 1;
        w.m = 2;
    } else {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            throw InputError("omega must be written a/m (rotation number), e.g. 1/2 for -1");
        try {
            w.a = std::stol(text.substr(0, slash));
            w.m = std::stol(text.substr(slash + 1));
        } catch (...) {
            throw InputError("malformed omega: " + text);
        }
    }
    if (w.m <= 0 || w.a <= 0 || w.a >= w.m)
        throw InputError("omega rotation a/m needs 0 < a < m (omega = 1 is excluded)");
    long g = std::gcd(w.a, w.m);
    w.a /= g;
    w.m /= g;
    w.certified = is_prime_power(w.m);
    return w;
}

std::string UnitComplexSample::to_string() const {
    return std::to_string(a) + "/" + std::to_string(m);
}

Laurent alexander(const IntMat& v) {
    validate_seifert_matrix(v);
    int n = static_cast<int>(v.rows());
    int g = n / 2;
    if (n == 0) return Laurent::constant(1);

    // det(V - t V^T) has degree <= 2g; interpolate from integer evaluations.
    IntMat vt = v.transpose();
    std::vector<mpq_class> xs, ys;
    for (int k = -g; k <= g; ++k) {
        IntMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = v.at(i, j) - k * vt.at(i, j);
        xs.emplace_back(k);
        ys.emplace_back(det(a));
    }
    // Lagrange -> monomial coefficients via Newton's divided differences.
    std::size_t npts = xs.size();
    std::vector<mpq_class> dd = ys;
    for (std::size_t lvl = 1; lvl < npts; ++lvl)
        for (std::size_t i = npts - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    std::vector<mpq_class> coeff(npts, 0);
    std::vector<mpq_class> basis(npts, 0);
    basis[0] = 1;  // running product (t - x_0)...(t - x_{k-1})
    std::size_t basis_deg = 0;
    for (std::size_t k = 0; k < npts; ++k) {
        for (std::size_t i = 0; i <= basis_deg; ++i) coeff[i] += dd[k] * basis[i];
        if (k + 1 < npts) {
            for (std::size_t i = basis_deg + 1; i-- > 0;) {
                basis[i + 1] += basis[i];
                basis[i] *= -xs[k];
            }
            ++basis_deg;
        }
    }
    std::vector<mpz_class> ic(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        if (coeff[i].get_den() != 1)
            throw std::logic_error("Alexander interpolation produced non-integer coefficient");
        ic[i] = coeff[i].get_num();
    }
    Laurent delta = Laurent::from_coeffs(std::move(ic), -g);
    if (!delta.is_palindromic())
        throw std::logic_error("Alexander polynomial failed palindromicity");
    if (delta.eval_pm1(1) != 1) throw std::logic_error("Alexander normalization Delta(1) != 1");
    return delta;
}

int lt_signature(const IntMat& v, const UnitComplexSample& omega) {
    validate_seifert_matrix(v);
    int n = static_cast<int>(v.rows());
    if (n == 0) return 0;

    Laurent delta = alexander(v);
    if (divides_laurent(cyclotomic_polynomial(static_cast<int>(omega.m)), delta))
        throw PreconditionError("omega " + omega.to_string() +
                                " is an Alexander root; signature jump point");

    if (omega.m == 2) {
        // omega = -1: the hermitian form is 2(V + V^T).
        return signature_symmetric(v + v.transpose());
    }

    CyclotomicField f(static_cast<int>(omega.m));
    auto w = f.root_power(static_cast<int>(omega.a));
    auto wbar = f.conj(w);
    auto c1 = f.sub(f.one(), w);     // 1 - omega
    auto c2 = f.sub(f.one(), wbar);  // 1 - conj(omega)
    std::vector<std::vector<CyclotomicField::Elem>> h(n, std::vector<CyclotomicField::Elem>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto t1 = f.mul(c1, f.from_rational(mpq_class(v.at(i, j))));
            auto t2 = f.mul(c2, f.from_rational(mpq_class(v.at(j, i))));
            h[i][j] = f.add(t1, t2);
        }
    return hermitian_signature(f, std::move(h));
}

int arf(const IntMat& v) {
    Laurent delta = alexander(v);
    mpz_class d = abs(delta.eval_pm1(-1));
    long r = mpz_class(d % 8).get_si();
    return (r == 1 || r == 7) ? 0 : 1;
}

IntMat direct_sum(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

}  // namespace dslice
