#include "dslice/laurent.hpp"

#include <sstream>

#include "dslice/errors.hpp"

namespace dslice {

void Laurent::trim() {
    std::size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (b > 0 || e < c_.size()) {
        c_ = std::vector<mpz_class>(c_.begin() + b, c_.begin() + e);
        lo_ += static_cast<int>(b);
    }
}

Laurent Laurent::constant(const mpz_class& v) { return monomial(v, 0); }

Laurent Laurent::monomial(const mpz_class& v, int exp) {
    Laurent p;
    if (v != 0) {
        p.lo_ = exp;
        p.c_ = {v};
    }
    return p;
}

Laurent Laurent::from_coeffs(std::vector<mpz_class> coeffs, int lo) {
    Laurent p;
    p.lo_ = lo;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

mpz_class Laurent::coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > hi()) return 0;
    return c_[exp - lo_];
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
    std::vector<mpz_class> c(nhi - nlo + 1);
    for (int e = nlo; e <= nhi; ++e) c[e - nlo] = coeff(e) + o.coeff(e);
    return from_coeffs(std::move(c), nlo);
}

Laurent Laurent::operator-() const {
    Laurent p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return Laurent();
    std::vector<mpz_class> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(c), lo_ + o.lo_);
}

Laurent Laurent::shifted(int k) const {
    Laurent p = *this;
    if (!p.is_zero()) p.lo_ += k;
    return p;
}

mpq_class Laurent::eval(const mpq_class& t) const {
    if (is_zero()) return 0;
    if (t == 0) throw InputError("cannot evaluate Laurent polynomial at t = 0");
    // Horner over the ordinary part, then divide by t^-lo if needed.
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + mpq_class(*it);
    mpq_class p = 1;
    if (lo_ >= 0)
        for (int i = 0; i < lo_; ++i) p *= t;
    else
        for (int i = 0; i < -lo_; ++i) p /= t;
    return acc * p;
}

mpz_class Laurent::eval_pm1(int pm) const {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        int e = lo_ + static_cast<int>(i);
        bool neg = pm < 0 && (e % 2 != 0);
        acc += neg ? -c_[i] : c_[i];
    }
    return acc;
}

bool Laurent::is_palindromic() const {
    for (int e = lo_; e <= hi(); ++e)
        if (coeff(e) != coeff(-e)) return false;
    return true;
}

std::string Laurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = hi(); e >= lo_; --e) {
        mpz_class v = coeff(e);
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        mpz_class av = abs(v);
        if (av != 1 || e == 0) os << av.get_str();
        if (e != 0) {
            if (av != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Exact quotient of ordinary polynomials (ascending coeffs), remainder out.
// Divisor must have invertible (unit) leading coefficient over Z? Not needed:
// we only divide by monic polynomials here (x^d - 1 factors, cyclotomics).
bool poly_divmod_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den,
                       std::vector<mpz_class>* rem_out) {
    if (den.empty() || den.back() != 1) throw InputError("internal: non-monic divisor");
    while (num.size() >= den.size()) {
        mpz_class f = num.back();
        std::size_t off = num.size() - den.size();
        if (f != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
        num.pop_back();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (rem_out) *rem_out = num;
    return num.empty();
}

std::vector<mpz_class> laurent_to_ordinary(const Laurent& p) {
    std::vector<mpz_class> c;
    for (int e = p.lo(); e <= p.hi(); ++e) c.push_back(p.coeff(e));
    return c;
}

}  // namespace

Laurent cyclotomic_polynomial(int m) {
    if (m < 1) throw InputError("cyclotomic index must be positive");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed by repeated
    // exact division.
    std::vector<mpz_class> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<mpz_class> phi_d = laurent_to_ordinary(cyclotomic_polynomial(d));
        // Long division, exact by construction.
        std::vector<mpz_class> q(num.size() - phi_d.size() + 1);
        std::vector<mpz_class> r = num;
        for (std::size_t k = q.size(); k-- > 0;) {
            mpz_class f = r[k + phi_d.size() - 1];  // phi_d is monic
            q[k] = f;
            if (f != 0)
                for (std::size_t i = 0; i < phi_d.size(); ++i) r[k + i] -= f * phi_d[i];
        }
        num = q;
    }
    return Laurent::from_coeffs(std::move(num), 0);
}

bool divides_laurent(const Laurent& divisor, const Laurent& p) {
    if (p.is_zero()) return true;
    return poly_divmod_monic(laurent_to_ordinary(p), laurent_to_ordinary(divisor), nullptr);
}

}  // namespace dslice
