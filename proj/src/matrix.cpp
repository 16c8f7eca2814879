#include "dslice/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dslice/errors.hpp"

namespace dslice {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMat::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMat operator+(const IntMat& x, const IntMat& y) {
    IntMat r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
    return r;
}

IntMat operator-(const IntMat& x, const IntMat& y) {
    IntMat r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
    return r;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

mpz_class det(const IntMat& m) {
    if (!m.square()) throw InputError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

namespace {

// Congruence step over Q: symmetric elimination of row/col k by pivot a[k][k].
void eliminate_symmetric(std::vector<std::vector<mpq_class>>& a, std::size_t k) {
    std::size_t n = a.size();
    mpq_class piv = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        mpq_class f = a[i][k] / piv;
        for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];  // keep symmetric
    }
}

}  // namespace

int signature_symmetric(const IntMat& q) {
    if (!q.is_symmetric()) throw InputError("signature requires a symmetric matrix");
    std::size_t n = q.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(q.at(i, j));
    int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Try to bring a nonzero onto the diagonal: first another diagonal
            // entry, else a hyperbolic pair via a row/col addition.
            std::size_t p = k + 1;
            while (p < n && a[p][p] == 0) ++p;
            if (p < n) {
                std::swap(a[k], a[p]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
            } else {
                std::size_t j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) continue;  // row k is zero in the remaining block
                for (std::size_t t = 0; t < n; ++t) a[k][t] += a[j][t];
                for (std::size_t t = 0; t < n; ++t) a[t][k] += a[t][j];
            }
        }
        int s = sgn(a[k][k]);
        sig += s;
        eliminate_symmetric(a, k);
    }
    return sig;
}

SmithResult smith_normal_form(const IntMat& input) {
    std::size_t n = input.rows(), m = input.cols();
    IntMat a = input;
    IntMat left = IntMat::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < m; ++t) std::swap(a.at(i, t), a.at(j, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(left.at(i, t), left.at(j, t));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < n; ++t) std::swap(a.at(t, i), a.at(t, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t t = 0; t < m; ++t) a.at(dst, t) += f * a.at(src, t);
        for (std::size_t t = 0; t < n; ++t) left.at(dst, t) += f * left.at(src, t);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t t = 0; t < n; ++t) a.at(t, dst) += f * a.at(t, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t t = 0; t < m; ++t) a.at(i, t) = -a.at(i, t);
        for (std::size_t t = 0; t < n; ++t) left.at(i, t) = -left.at(i, t);
    };

    std::size_t r = std::min(n, m);
    for (std::size_t k = 0; k < r; ++k) {
        for (;;) {
            // Locate the minimal nonzero |entry| in the trailing block.
            std::size_t bi = k, bj = k;
            bool found = false;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < m; ++j)
                    if (a.at(i, j) != 0 &&
                        (!found || cmp(abs(a.at(i, j)), abs(a.at(bi, bj))) < 0)) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
            if (!found) {
                r = k;  // rest is zero
                break;
            }
            if (bi != k) swap_rows(k, bi);
            if (bj != k) swap_cols(k, bj);
            if (a.at(k, k) < 0) negate_row(k);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    add_row(i, k, -mpz_class(a.at(i, k) / a.at(k, k)));
                    if (a.at(i, k) != 0) clean = false;
                }
            for (std::size_t j = k + 1; j < m; ++j)
                if (a.at(k, j) != 0) {
                    add_col(j, k, -mpz_class(a.at(k, j) / a.at(k, k)));
                    if (a.at(k, j) != 0) clean = false;
                }
            if (!clean) continue;

            // Divisibility: fold any entry the pivot does not divide back in.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < n && divides_all; ++i)
                for (std::size_t j = k + 1; j < m && divides_all; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        add_row(k, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (r == k) break;
    }

    SmithResult res;
    res.diag.resize(std::min(n, m), 0);
    for (std::size_t k = 0; k < r; ++k) res.diag[k] = a.at(k, k);
    res.left = std::move(left);
    return res;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

mpz_class parse_int_at(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw InputError("expected integer in '" + s + "' at position " + std::to_string(start));
    return mpz_class(s.substr(start, i - start));
}

}  // namespace

IntMat parse_matrix(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    std::vector<std::vector<mpz_class>> rows;
    if (i < text.size() && text[i] == '[') {
        ++i;
        skip_ws(text, i);
        if (i < text.size() && text[i] != '[') {
            // flat form "[a,b,...]": a single row
            std::vector<mpz_class> row;
            while (i < text.size() && text[i] != ']') {
                row.push_back(parse_int_at(text, i));
                skip_ws(text, i);
                if (i < text.size() && text[i] == ',') ++i;
                skip_ws(text, i);
            }
            if (i >= text.size()) throw InputError("unterminated matrix literal");
            ++i;
            skip_ws(text, i);
            if (i != text.size()) throw InputError("trailing characters after matrix literal");
            if (row.empty()) throw InputError("empty matrix");
            IntMat m(1, row.size());
            for (std::size_t b = 0; b < row.size(); ++b) m.at(0, b) = row[b];
            return m;
        }
        while (i < text.size() && text[i] != ']') {
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] != '[') throw InputError("malformed matrix literal: " + text);
            ++i;
            std::vector<mpz_class> row;
            skip_ws(text, i);
            while (i < text.size() && text[i] != ']') {
                row.push_back(parse_int_at(text, i));
                skip_ws(text, i);
                if (i < text.size() && text[i] == ',') ++i;
                skip_ws(text, i);
            }
            if (i >= text.size()) throw InputError("unterminated row in matrix literal");
            ++i;  // consume ']'
            rows.push_back(std::move(row));
            skip_ws(text, i);
        }
        if (i >= text.size()) throw InputError("unterminated matrix literal");
        ++i;
        skip_ws(text, i);
        if (i != text.size()) throw InputError("trailing characters after matrix literal");
    } else {
        // semicolon-separated rows of comma-separated entries
        std::vector<mpz_class> row;
        while (i < text.size()) {
            row.push_back(parse_int_at(text, i));
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
            } else if (i < text.size() && text[i] == ';') {
                ++i;
                rows.push_back(std::move(row));
                row.clear();
            }
            skip_ws(text, i);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("empty matrix");
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].size() != rows[0].size()) throw InputError("ragged matrix rows");
        for (std::size_t b = 0; b < rows[a].size(); ++b) m.at(a, b) = rows[a][b];
    }
    return m;
}

std::vector<mpz_class> parse_int_vector(const std::string& text) {
    std::vector<mpz_class> v;
    std::size_t i = 0;
    skip_ws(text, i);
    char close = 0;
    if (i < text.size() && (text[i] == '(' || text[i] == '[')) {
        close = text[i] == '(' ? ')' : ']';
        ++i;
    }
    skip_ws(text, i);
    while (i < text.size() && text[i] != close) {
        v.push_back(parse_int_at(text, i));
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') ++i;
        skip_ws(text, i);
    }
    if (close) {
        if (i >= text.size() || text[i] != close) throw InputError("unterminated vector literal");
        ++i;
        skip_ws(text, i);
        if (i != text.size()) throw InputError("trailing characters after vector literal");
    }
    if (v.empty()) throw InputError("empty vector");
    return v;
}

}  // namespace dslice
