#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace dslice {

// Dense integer matrix. Small sizes throughout (linking matrices, Seifert
// matrices), so no attempt at sparsity or in-place cleverness.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMat transpose() const;
    bool is_symmetric() const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::string to_string() const;  // [[...],[...]] form

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

IntMat operator+(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x, const IntMat& y);
IntMat operator*(const IntMat& x, const IntMat& y);

// Exact determinant (fraction-free Bareiss). Empty matrix has det 1.
mpz_class det(const IntMat& m);

// Signature of a symmetric integer matrix by congruence diagonalization over
// the rationals. Singular forms are fine; zero eigenvalues contribute nothing.
int signature_symmetric(const IntMat& q);

// Smith normal form. diag holds the invariant factors d1 | d2 | ... (all >= 0,
// zeros at the end), padded to min(rows, cols). left is the accumulated
// unimodular row transform: left * A * right = D for some unimodular right
// (not tracked). Column i of left^-1... callers only need left itself: the
// class of x in coker(A) is (left * x) reduced mod diag entrywise.
struct SmithResult {
    std::vector<mpz_class> diag;
    IntMat left;
};
SmithResult smith_normal_form(const IntMat& a);

// Parses "[[0,1],[1,0]]" or "0,1;1,0" into a matrix. Throws InputError.
IntMat parse_matrix(const std::string& text);

// Parses "(4)", "[2,2]" or "2,2" into a vector. Throws InputError.
std::vector<mpz_class> parse_int_vector(const std::string& text);

}  // namespace dslice
