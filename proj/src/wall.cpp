#include "dslice/wall.hpp"

#include <sstream>

#include "dslice/errors.hpp"

namespace dslice {
namespace wall {

namespace {

// Letter order x1 < x1^-1 < x2 < x2^-1 < ...: key 2(g-1) for +g, 2(g-1)+1 for -g.
int letter_key(int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

}  // namespace

FreeWord::FreeWord(std::vector<int> letters, int rank) : rank_(rank) {
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw InputError("word uses generator x" + std::to_string(std::abs(l)) +
                             " outside the declared rank " + std::to_string(rank));
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::parse(const std::string& text, int rank) {
    std::istringstream is(text);
    std::string tok;
    std::vector<int> letters;
    while (is >> tok) {
        if (tok == "1" || tok == "e") continue;  // identity
        if (tok[0] != 'x' && tok[0] != 'X') throw InputError("word letter must look like x2 or x2^-1: " + tok);
        int sign = 1;
        std::string body = tok.substr(1);
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            std::string expo = body.substr(caret + 1);
            if (expo == "-1")
                sign = -1;
            else if (expo != "1")
                throw InputError("letter exponent must be 1 or -1: " + tok);
            body = body.substr(0, caret);
        }
        int idx;
        try {
            idx = std::stoi(body);
        } catch (...) {
            throw InputError("malformed word letter: " + tok);
        }
        if (idx < 1) throw InputError("generator indices start at 1: " + tok);
        letters.push_back(sign * idx);
    }
    return FreeWord(std::move(letters), rank);
}

FreeWord FreeWord::inverse() const {
    std::vector<int> inv;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(-*it);
    return FreeWord(std::move(inv), rank_);
}

bool FreeWord::operator<(const FreeWord& o) const {
    std::size_t n = std::min(letters_.size(), o.letters_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int a = letter_key(letters_[i]), b = letter_key(o.letters_[i]);
        if (a != b) return a < b;
    }
    return letters_.size() < o.letters_.size();
}

FreeWord FreeWord::canonical() const {
    FreeWord inv = inverse();
    return inv < *this ? inv : *this;
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int l : letters_) {
        if (!first) os << " ";
        os << "x" << std::abs(l);
        if (l < 0) os << "^-1";
        first = false;
    }
    return os.str();
}

LambdaElement normalize(const std::vector<std::pair<mpz_class, FreeWord>>& raw, int rank) {
    LambdaElement e(rank);
    for (const auto& [coeff, word] : raw) {
        if (word.rank() != rank) throw InputError("word declared over a different generator set");
        if (word.is_identity()) continue;  // Z[1] is killed
        FreeWord c = word.canonical();     // g identified with g^-1
        auto it = e.terms_.find(c);
        if (it == e.terms_.end()) {
            if (coeff != 0) e.terms_[c] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) e.terms_.erase(it);
        }
    }
    return e;
}

LambdaElement add(const LambdaElement& a, const LambdaElement& b) {
    if (a.rank() != b.rank()) throw InputError("generator-set mismatch in Lambda~ addition");
    LambdaElement r = a;
    for (const auto& [w, c] : b.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_[w] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LambdaElement negate(const LambdaElement& a) {
    LambdaElement r = a;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

bool is_zero(const LambdaElement& a) { return a.is_zero(); }

LambdaElement mu_from_double_points(const std::vector<std::pair<int, FreeWord>>& points, int rank) {
    std::vector<std::pair<mpz_class, FreeWord>> raw;
    for (const auto& [sign, word] : points) {
        if (sign != 1 && sign != -1) throw InputError("double point sign must be +1 or -1");
        raw.emplace_back(sign, word);
    }
    return normalize(raw, rank);
}

std::string LambdaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << "(" << w.to_string() << ")";
        first = false;
    }
    return os.str();
}

}  // namespace wall
}  // namespace dslice
