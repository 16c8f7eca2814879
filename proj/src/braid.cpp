#include "dslice/braid.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "dslice/errors.hpp"

namespace dslice {

BraidWord parse_braid(const std::string& text) {
    std::istringstream is(text);
    BraidWord b;
    if (!(is >> b.strands)) throw InputError("braid input must start with the strand count");
    if (b.strands < 1) throw InputError("strand count must be >= 1");
    std::string tok;
    while (is >> tok) {
        if (tok == ":") continue;
        if (tok[0] != 's' && tok[0] != 'S') throw InputError("braid letter must look like s2 or s2^-1: " + tok);
        int sign = 1;
        std::string body = tok.substr(1);
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            std::string expo = body.substr(caret + 1);
            if (expo == "-1")
                sign = -1;
            else if (expo == "1")
                sign = 1;
            else
                throw InputError("braid letter exponent must be 1 or -1: " + tok);
            body = body.substr(0, caret);
        }
        int idx;
        try {
            idx = std::stoi(body);
        } catch (...) {
            throw InputError("malformed braid letter: " + tok);
        }
        if (idx < 1 || idx > b.strands - 1)
            throw InputError("generator index out of range for " + std::to_string(b.strands) +
                             " strands: " + tok);
        b.letters.emplace_back(idx, sign);
    }
    return b;
}

int closure_components(const BraidWord& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (auto [i, s] : b.letters) std::swap(perm[i - 1], perm[i]);
    std::vector<bool> seen(b.strands, false);
    int cycles = 0;
    for (int i = 0; i < b.strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

KnotDiagram braid_closure(const BraidWord& b) {
    KnotDiagram d;
    if (b.letters.empty()) {
        d.free_loops = b.strands;
        d.finalize();
        return d;
    }

    // Current provisional arc label at each strand position; fresh labels are
    // merged across the closure with union-find afterwards.
    int fresh = 0;
    std::vector<int> init(b.strands), cur(b.strands);
    for (int p = 0; p < b.strands; ++p) init[p] = cur[p] = fresh++;
    std::vector<bool> touched(b.strands, false);

    struct RawCrossing {
        std::array<int, 4> slot;
    };
    std::vector<RawCrossing> raw;
    for (auto [i, e] : b.letters) {
        int al = cur[i - 1], ar = cur[i];
        int nl = fresh++, nr = fresh++;
        if (e > 0) {
            // Left strand over: under-in = right strand arriving from SE.
            raw.push_back({{ar, nr, nl, al}});
        } else {
            raw.push_back({{al, ar, nr, nl}});
        }
        cur[i - 1] = nl;
        cur[i] = nr;
        touched[i - 1] = touched[i] = true;
    }

    std::vector<int> uf(fresh);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (int p = 0; p < b.strands; ++p) uf[find(cur[p])] = find(init[p]);

    std::map<int, int> label;
    int next_label = 1;
    auto get_label = [&](int x) {
        int r = find(x);
        auto it = label.find(r);
        if (it != label.end()) return it->second;
        label[r] = next_label;
        return next_label++;
    };
    for (const auto& rc : raw) {
        Crossing c;
        for (int s = 0; s < 4; ++s) c.slot[s] = get_label(rc.slot[s]);
        d.crossings.push_back(c);
    }
    for (int p = 0; p < b.strands; ++p)
        if (!touched[p]) ++d.free_loops;
    d.finalize();
    return d;
}

}  // namespace dslice
