#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace dslice {
namespace wall {

// Reduced word in a free group of given rank. Letters are +g / -g for the
// generator x_g and its inverse, g in 1..rank.
class FreeWord {
public:
    FreeWord() = default;
    FreeWord(std::vector<int> letters, int rank);  // reduces on construction

    static FreeWord parse(const std::string& text, int rank);  // "x1 x2^-1", "1" = identity

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    FreeWord inverse() const;

    // Canonical orientation: the lexicographically smaller of (w, w^-1) under
    // the order x1 < x1^-1 < x2 < x2^-1 < ...
    FreeWord canonical() const;

    bool operator<(const FreeWord& o) const;
    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }

    std::string to_string() const;

private:
    std::vector<int> letters_;
    int rank_ = 0;
};

// Element of Lambda~ = Z[F] / (<g - g^-1> + Z[1]) as a normalized formal sum:
// canonical-orientation words, no identity term, no zero coefficients.
class LambdaElement {
public:
    explicit LambdaElement(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const std::map<FreeWord, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::string to_string() const;

private:
    friend LambdaElement normalize(const std::vector<std::pair<mpz_class, FreeWord>>& raw, int rank);
    friend LambdaElement add(const LambdaElement& a, const LambdaElement& b);
    friend LambdaElement negate(const LambdaElement& a);
    std::map<FreeWord, mpz_class> terms_;
    int rank_;
};

LambdaElement normalize(const std::vector<std::pair<mpz_class, FreeWord>>& raw, int rank);
LambdaElement add(const LambdaElement& a, const LambdaElement& b);
LambdaElement negate(const LambdaElement& a);
bool is_zero(const LambdaElement& a);

// Wall self-intersection value mu = sum of sign(p) * g_p over double points.
LambdaElement mu_from_double_points(const std::vector<std::pair<int, FreeWord>>& points, int rank);

}  // namespace wall
}  // namespace dslice
