#include "dslice/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

// Rational interval with exact endpoints.
struct Iv {
    mpq_class lo, hi;
};

Iv iv_add(const Iv& a, const Iv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Iv iv_scale(const Iv& a, const mpq_class& c) {
    if (c >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

// pi enclosure by Machin's formula with alternating-series tail bounds.
Iv pi_interval(int terms) {
    auto atan_inv = [&](long x) {
        // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)): alternating with
        // decreasing terms, so consecutive partial sums bracket the limit.
        mpq_class s = 0, prev = 0;
        mpz_class xp = x;  // x^(2k+1)
        for (int k = 0; k < terms; ++k) {
            prev = s;
            mpq_class term = mpq_class(1) / (mpq_class(2 * k + 1) * mpq_class(xp));
            s += (k % 2 == 0) ? term : -term;
            xp *= x * x;
        }
        Iv r;
        r.lo = std::min(s, prev);
        r.hi = std::max(s, prev);
        return r;
    };
    Iv a5 = atan_inv(5), a239 = atan_inv(239);
    // pi = 16 atan(1/5) - 4 atan(1/239)
    Iv r;
    r.lo = 16 * a5.lo - 4 * a239.hi;
    r.hi = 16 * a5.hi - 4 * a239.lo;
    return r;
}

// cos over a small rational interval around theta, via Taylor at the midpoint
// with |cos'| <= 1 slack for the enclosure width.
Iv cos_interval(const Iv& theta, int terms) {
    mpq_class mid = (theta.lo + theta.hi) / 2;
    mpq_class rad = (theta.hi - theta.lo) / 2;
    // Taylor at 0 evaluated at mid: cos(mid) = sum (-1)^k mid^(2k) / (2k)!
    mpq_class acc = 0;
    mpq_class pw = 1;  // mid^(2k)
    mpz_class fact = 1;
    mpq_class mid2 = mid * mid;
    for (int k = 0; k < terms; ++k) {
        acc += (k % 2 == 0 ? pw : -pw) / mpq_class(fact);
        pw *= mid2;
        fact *= (2 * k + 1);
        fact *= (2 * k + 2);
    }
    // Remainder bound |R| <= mid^(2T) / (2T)! (valid once terms exceed |mid|).
    mpq_class rem = pw / mpq_class(fact);
    if (rem < 0) rem = -rem;
    mpq_class err = rem + rad;
    return {acc - err, acc + err};
}

}  // namespace

CyclotomicField::CyclotomicField(int m) : m_(m) {
    if (m < 2) throw InputError("cyclotomic field order must be >= 2");
    Laurent phi = cyclotomic_polynomial(m);
    deg_ = phi.hi();
    phi_.resize(deg_ + 1);
    for (int i = 0; i <= deg_; ++i) phi_[i] = mpq_class(phi.coeff(i));
    // x^j mod phi, iteratively.
    power_.assign(m + 1, {});
    std::vector<mpq_class> cur(deg_, 0);
    cur[0] = 1;
    power_[0] = cur;
    for (int j = 1; j <= m; ++j) {
        // multiply by x
        std::vector<mpq_class> nxt(deg_ + 1, 0);
        for (int i = 0; i < deg_; ++i) nxt[i + 1] = cur[i];
        mpq_class lead = nxt[deg_];
        if (lead != 0)
            for (int i = 0; i < deg_; ++i) nxt[i] -= lead * phi_[i];
        nxt.resize(deg_);
        power_[j] = nxt;
        cur = nxt;
    }
}

CyclotomicField::Elem CyclotomicField::one() const { return from_rational(1); }

CyclotomicField::Elem CyclotomicField::from_rational(const mpq_class& q) const {
    Elem e = zero();
    e[0] = q;
    return e;
}

CyclotomicField::Elem CyclotomicField::root_power(int k) const {
    int j = ((k % m_) + m_) % m_;
    return power_[j];
}

CyclotomicField::Elem CyclotomicField::add(const Elem& x, const Elem& y) const {
    Elem r = x;
    for (int i = 0; i < deg_; ++i) r[i] += y[i];
    return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& x, const Elem& y) const {
    Elem r = x;
    for (int i = 0; i < deg_; ++i) r[i] -= y[i];
    return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& x) const {
    Elem r = x;
    for (auto& v : r) v = -v;
    return r;
}

CyclotomicField::Elem CyclotomicField::reduce(std::vector<mpq_class> raw) const {
    for (int j = static_cast<int>(raw.size()) - 1; j >= deg_; --j) {
        mpq_class lead = raw[j];
        if (lead == 0) continue;
        raw[j] = 0;
        for (int i = 0; i < deg_; ++i) raw[j - deg_ + i] -= lead * phi_[i];
    }
    raw.resize(deg_);
    return raw;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& x, const Elem& y) const {
    std::vector<mpq_class> raw(2 * deg_ - 1, 0);
    for (int i = 0; i < deg_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) raw[i + j] += x[i] * y[j];
    }
    return reduce(std::move(raw));
}

CyclotomicField::Elem CyclotomicField::conj(const Elem& x) const {
    Elem r = zero();
    for (int i = 0; i < deg_; ++i) {
        if (x[i] == 0) continue;
        const auto& p = power_[(m_ - i) % m_];
        for (int j = 0; j < deg_; ++j) r[j] += x[i] * p[j];
    }
    return r;
}

bool CyclotomicField::is_zero(const Elem& x) const {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

bool CyclotomicField::is_real(const Elem& x) const { return conj(x) == x; }

CyclotomicField::Elem CyclotomicField::inverse(const Elem& x) const {
    if (is_zero(x)) throw InputError("division by zero in cyclotomic field");
    // Extended Euclid in Q[t] for (x as polynomial, phi).
    using Poly = std::vector<mpq_class>;
    auto trim = [](Poly& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
    auto divmod = [&](Poly a, const Poly& b, Poly& q) {
        q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
        while (a.size() >= b.size()) {
            mpq_class f = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            q[off] = f;
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.size() >= b.size() && a.back() == 0) trim(a);
        }
        return a;  // remainder
    };
    Poly r0(phi_.begin(), phi_.end());
    Poly r1(x.begin(), x.end());
    trim(r1);
    Poly s0 = {}, s1 = {1};  // coefficients of x in the Bezout combination
    while (!r1.empty()) {
        Poly q;
        Poly r2 = divmod(r0, r1, q);
        // s2 = s0 - q * s1
        Poly qs(q.size() + s1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a nonzero constant since phi has no rational roots shared with x.
    if (r0.size() != 1) throw std::logic_error("element not invertible mod cyclotomic polynomial");
    mpq_class g = r0[0];
    Elem inv = zero();
    for (std::size_t i = 0; i < s0.size() && i < static_cast<std::size_t>(deg_); ++i)
        inv[i] = s0[i] / g;
    if (s0.size() > static_cast<std::size_t>(deg_)) {
        std::vector<mpq_class> raw(s0.begin(), s0.end());
        for (auto& v : raw) v /= g;
        inv = reduce(std::move(raw));
    }
    return inv;
}

int CyclotomicField::sign_real(const Elem& x) const {
    if (is_zero(x)) return 0;
    if (!is_real(x)) throw std::logic_error("sign of a non-real cyclotomic element");

    // Common denominator: x = p / q with p an algebraic integer in Z[zeta].
    mpz_class q = 1;
    for (const auto& c : x) q = lcm(q, c.get_den());
    mpz_class abs_sum = 0;
    for (const auto& c : x) abs_sum += abs(mpz_class(c.get_num() * (q / c.get_den())));
    if (abs_sum == 0) return 0;
    // |sigma(p)| <= abs_sum in every embedding, and the norm is a nonzero
    // rational integer, so |p| >= abs_sum^-(deg-1) and |x| >= L below.
    mpq_class L(1);
    mpz_class denom_pow = 1;
    for (int i = 0; i < deg_ - 1; ++i) denom_pow *= (abs_sum > 1 ? abs_sum : mpz_class(1));
    L = mpq_class(1, q * denom_pow);

    for (int terms = 24;; terms *= 2) {
        Iv pi = pi_interval(terms);
        Iv total{0, 0};
        for (int j = 0; j < deg_; ++j) {
            if (x[j] == 0) continue;
            mpq_class frac(2 * j, m_);
            frac.canonicalize();
            Iv theta = iv_scale(pi, frac);
            Iv c = cos_interval(theta, terms);
            total = iv_add(total, iv_scale(c, x[j]));
        }
        if (total.lo > 0) return 1;
        if (total.hi < 0) return -1;
        if (total.hi - total.lo < L) {
            // Interval narrower than the separation bound but straddling 0
            // cannot happen for a nonzero element.
            throw std::logic_error("certified sign evaluation inconsistent");
        }
        if (terms > (1 << 20)) throw std::logic_error("certified sign did not converge");
    }
}

int hermitian_signature(const CyclotomicField& f,
                        std::vector<std::vector<CyclotomicField::Elem>> h) {
    std::size_t n = h.size();
    int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (f.is_zero(h[k][k])) {
            std::size_t p = k + 1;
            while (p < n && f.is_zero(h[p][p])) ++p;
            if (p < n) {
                std::swap(h[k], h[p]);
                for (std::size_t i = 0; i < n; ++i) std::swap(h[i][k], h[i][p]);
            } else {
                // All remaining diagonal entries vanish; find an off-diagonal
                // one and mix it in with the phase making the diagonal real
                // and nonzero: row_k += lam * row_j, col_k += conj(lam) col_j.
                std::size_t j = n;
                for (std::size_t t = k + 1; t < n && j == n; ++t)
                    if (!f.is_zero(h[k][t])) j = t;
                if (j == n) continue;  // zero block
                int chosen = -1;
                for (int t = 0; t < f.order() && chosen < 0; ++t) {
                    auto lam = f.root_power(t);
                    auto v = f.mul(f.conj(lam), h[k][j]);
                    auto twice_re = f.add(v, f.conj(v));
                    if (!f.is_zero(twice_re)) chosen = t;
                }
                if (chosen < 0) throw std::logic_error("could not realify hermitian pivot");
                auto lam = f.root_power(chosen);
                for (std::size_t t = 0; t < n; ++t) h[k][t] = f.add(h[k][t], f.mul(lam, h[j][t]));
                for (std::size_t t = 0; t < n; ++t)
                    h[t][k] = f.add(h[t][k], f.mul(f.conj(lam), h[t][j]));
            }
        }
        if (f.is_zero(h[k][k])) continue;
        int s = f.sign_real(h[k][k]);
        sig += s;
        auto dinv = f.inverse(h[k][k]);
        std::vector<CyclotomicField::Elem> pivot_row = h[k];  // Schur needs it intact
        for (std::size_t i = k + 1; i < n; ++i) {
            if (f.is_zero(h[i][k])) continue;
            auto fac = f.mul(h[i][k], dinv);
            for (std::size_t j = k + 1; j < n; ++j)
                h[i][j] = f.sub(h[i][j], f.mul(fac, pivot_row[j]));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            h[i][k] = f.zero();
            h[k][i] = f.zero();
        }
    }
    return sig;
}

}  // namespace dslice
