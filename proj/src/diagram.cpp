#include "dslice/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

struct Appearance {
    int crossing;
    int slot;
};

// Orientation inference. Under slots are forced (a = in, c = out); the over
// pair of each crossing needs exactly one incoming arc. Constraints:
//  - per arc: one "in" appearance (head) and one "out" appearance (tail);
//  - per crossing: among slots b, d exactly one head.
// Propagate until stable; break remaining ties by label succession.
void infer_orientations(std::vector<Crossing>& cr) {
    int n = static_cast<int>(cr.size());
    std::map<int, std::vector<Appearance>> occ;
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) occ[cr[x].slot[s]].push_back({x, s});
    for (auto& [label, apps] : occ)
        if (apps.size() != 2)
            throw InputError("arc label " + std::to_string(label) +
                             " appears " + std::to_string(apps.size()) + " times (expected 2)");

    // head[x][s]: 1 = arc comes in here, 0 = goes out, -1 = unknown.
    std::vector<std::array<int, 4>> head(n, {-1, -1, -1, -1});
    for (int x = 0; x < n; ++x) {
        head[x][0] = 1;
        head[x][2] = 0;
    }

    auto set_head = [&](int x, int s, int v, auto&& self) -> void {
        if (head[x][s] == v) return;
        if (head[x][s] != -1)
            throw InputError("inconsistent orientation at crossing " + std::to_string(x + 1));
        head[x][s] = v;
        // Arc constraint: the other appearance is the opposite.
        int label = cr[x].slot[s];
        for (const auto& ap : occ[label])
            if (!(ap.crossing == x && ap.slot == s)) self(ap.crossing, ap.slot, 1 - v, self);
        // Crossing constraint on the over pair.
        if (s == 1 || s == 3) {
            int other = s == 1 ? 3 : 1;
            self(x, other, 1 - v, self);
        }
    };
    // Seed propagation from the forced under slots.
    for (int x = 0; x < n; ++x) {
        for (const auto& ap : occ[cr[x].slot[0]])
            if (!(ap.crossing == x && ap.slot == 0)) set_head(ap.crossing, ap.slot, 0, set_head);
        for (const auto& ap : occ[cr[x].slot[2]])
            if (!(ap.crossing == x && ap.slot == 2)) set_head(ap.crossing, ap.slot, 1, set_head);
    }

    // Remaining unknowns come in all-over clusters; orient by label succession.
    for (int x = 0; x < n; ++x) {
        if (head[x][1] != -1) continue;
        int b = cr[x].slot[1], d = cr[x].slot[3];
        // Prefer the numerically consecutive reading (wraparound pairs pick
        // the larger label as incoming).
        int over_in_slot;
        if (d + 1 == b)
            over_in_slot = 3;
        else if (b + 1 == d)
            over_in_slot = 1;
        else
            over_in_slot = b > d ? 1 : 3;
        set_head(x, over_in_slot, 1, set_head);
    }

    for (int x = 0; x < n; ++x) cr[x].sign = head[x][3] == 1 ? 1 : -1;
}

}  // namespace

void KnotDiagram::finalize() {
    int n = static_cast<int>(crossings.size());
    if (n == 0) {
        if (free_loops <= 0) throw InputError("empty diagram (use the token 'U' for the unknot)");
        num_components_ = free_loops;
        next_arc_.assign(1, 0);
        component_of_arc_.assign(1, 0);
        return;
    }

    infer_orientations(crossings);

    // Successor along the link: under a -> c, over in -> out.
    std::map<int, int> next;
    for (const auto& c : crossings) {
        if (next.count(c.under_in()) || next.count(c.over_in()))
            throw InputError("inconsistent circuit structure (duplicate successor)");
        next[c.under_in()] = c.under_out();
        next[c.over_in()] = c.over_out();
    }
    std::map<int, int> indeg;
    for (auto& [from, to] : next) ++indeg[to];
    for (auto& [from, to] : next)
        if (indeg[from] != 1) throw InputError("inconsistent circuit structure (arc " +
                                               std::to_string(from) + " not entered exactly once)");

    // Trace circuits; canonical relabel 1..2n starting each component at its
    // smallest original label, components ordered by that label.
    std::vector<int> starts;
    {
        std::map<int, bool> seen;
        for (auto& [from, to] : next) seen[from] = false;
        for (auto& [label, s] : seen) {
            if (s) continue;
            starts.push_back(label);
            int cur = label;
            do {
                if (seen.find(cur) == seen.end() || seen[cur])
                    throw InputError("inconsistent circuit structure");
                seen[cur] = true;
                cur = next[cur];
            } while (cur != label);
        }
    }

    std::map<int, int> relabel;
    std::vector<int> comp_of(2 * n + 1, 0);
    std::vector<int> succ(2 * n + 1, 0);
    int fresh = 1;
    int comp = 0;
    for (int s0 : starts) {
        if (relabel.count(s0)) continue;
        int cur = s0;
        do {
            relabel[cur] = fresh++;
            cur = next[cur];
        } while (cur != s0);
        ++comp;
    }
    if (fresh != 2 * n + 1)
        throw InputError("arc labels do not form closed circuits");
    comp = 0;
    for (int s0 : starts) {
        int cur = s0;
        do {
            comp_of[relabel[cur]] = comp;
            succ[relabel[cur]] = relabel[next[cur]];
            cur = next[cur];
        } while (cur != s0);
        ++comp;
    }
    for (auto& c : crossings)
        for (auto& s : c.slot) s = relabel[s];

    num_components_ = comp + free_loops;
    next_arc_ = std::move(succ);
    component_of_arc_ = std::move(comp_of);

    // Deterministic crossing order for stable serialization.
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& x, const Crossing& y) { return x.slot < y.slot; });
}

std::string KnotDiagram::serialize() const {
    if (crossings.empty()) return "U";
    std::ostringstream os;
    bool first = true;
    for (const auto& c : crossings) {
        if (!first) os << " ";
        os << "X(" << c.slot[0] << "," << c.slot[1] << "," << c.slot[2] << "," << c.slot[3] << ")";
        first = false;
    }
    return os.str();
}

KnotDiagram parse_pd(const std::string& text) {
    KnotDiagram d;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ';')) ++i; };
    skip();
    if (i >= text.size()) throw InputError("empty diagram (use the token 'U' for the unknot)");
    while (i < text.size()) {
        skip();
        if (i >= text.size()) break;
        if (text[i] == 'U' || text[i] == 'u') {
            ++i;
            ++d.free_loops;
            continue;
        }
        if (text[i] != 'X' && text[i] != 'x')
            throw InputError("expected 'X(a,b,c,d)' or 'U' at position " + std::to_string(i));
        ++i;
        skip();
        if (i >= text.size() || text[i] != '(') throw InputError("expected '(' after X");
        ++i;
        Crossing c;
        for (int s = 0; s < 4; ++s) {
            skip();
            std::size_t start = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == start) throw InputError("expected positive integer arc label");
            c.slot[s] = std::stoi(text.substr(start, i - start));
            if (c.slot[s] <= 0) throw InputError("arc labels must be positive");
            skip();
            if (s < 3) {
                if (i >= text.size() || text[i] != ',') throw InputError("expected ',' in X tuple");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ')') throw InputError("expected ')' closing X tuple");
        ++i;
        d.crossings.push_back(c);
    }
    if (!d.crossings.empty() && d.free_loops > 0)
        throw InputError("'U' tokens cannot be mixed with crossings");
    d.finalize();
    return d;
}

KnotDiagram parse_gauss(const std::string& text) {
    struct Visit {
        int pos;
        bool over;
        int sign;
    };
    std::map<int, std::vector<Visit>> visits;
    std::istringstream is(text);
    std::string tok;
    int pos = 0;
    while (is >> tok) {
        bool over;
        if (tok[0] == 'O' || tok[0] == 'o')
            over = true;
        else if (tok[0] == 'U' || tok[0] == 'u')
            over = false;
        else
            throw InputError("Gauss token must start with O or U: " + tok);
        if (tok.size() < 3) throw InputError("malformed Gauss token: " + tok);
        char sc = tok.back();
        int sign;
        if (sc == '+')
            sign = 1;
        else if (sc == '-')
            sign = -1;
        else
            throw InputError("Gauss token must end with + or -: " + tok);
        int label;
        try {
            label = std::stoi(tok.substr(1, tok.size() - 2));
        } catch (...) {
            throw InputError("malformed Gauss token: " + tok);
        }
        visits[label].push_back({pos, over, sign});
        ++pos;
    }
    if (pos == 0) throw InputError("empty Gauss code");
    if (pos % 2 != 0) throw InputError("Gauss code must have an even number of tokens");
    int n = pos / 2;

    KnotDiagram d;
    for (auto& [label, v] : visits) {
        if (v.size() != 2)
            throw InputError("crossing label " + std::to_string(label) +
                             " appears " + std::to_string(v.size()) + " times (expected 2)");
        if (v[0].over == v[1].over)
            throw InputError("crossing label " + std::to_string(label) + " appears twice as " +
                             (v[0].over ? "over" : "under"));
        if (v[0].sign != v[1].sign)
            throw InputError("crossing label " + std::to_string(label) + " has conflicting signs");
        const Visit& o = v[0].over ? v[0] : v[1];
        const Visit& u = v[0].over ? v[1] : v[0];
        // Arc i enters token i (arcs indexed 1..2n, arc of token p is p+1).
        auto in_arc = [&](int p) { return p + 1; };
        auto out_arc = [&](int p) { return (p + 1) % (2 * n) + 1; };
        Crossing c;
        c.slot[0] = in_arc(u.pos);
        c.slot[2] = out_arc(u.pos);
        if (o.sign > 0) {
            c.slot[3] = in_arc(o.pos);
            c.slot[1] = out_arc(o.pos);
        } else {
            c.slot[1] = in_arc(o.pos);
            c.slot[3] = out_arc(o.pos);
        }
        d.crossings.push_back(c);
    }
    d.finalize();
    // The declared signs must survive orientation inference.
    return d;
}

KnotDiagram mirror(const KnotDiagram& d) {
    KnotDiagram m;
    m.free_loops = d.free_loops;
    for (const auto& c : d.crossings) {
        Crossing r;
        if (c.sign > 0)
            r.slot = {c.slot[3], c.slot[0], c.slot[1], c.slot[2]};
        else
            r.slot = {c.slot[1], c.slot[2], c.slot[3], c.slot[0]};
        m.crossings.push_back(r);
    }
    if (!m.crossings.empty() || m.free_loops > 0) m.finalize();
    return m;
}

KnotDiagram reverse(const KnotDiagram& d) {
    KnotDiagram r;
    r.free_loops = d.free_loops;
    for (const auto& c : d.crossings) {
        Crossing x;
        x.slot = {c.slot[2], c.slot[3], c.slot[0], c.slot[1]};
        r.crossings.push_back(x);
    }
    if (!r.crossings.empty() || r.free_loops > 0) r.finalize();
    return r;
}

KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2) {
    if (d1.num_components() != 1 || d2.num_components() != 1)
        throw InputError("connected sum requires two 1-component diagrams");
    if (d1.crossings.empty()) return d2;
    if (d2.crossings.empty()) return d1;

    int off = d1.n_arcs();
    KnotDiagram s;
    s.crossings = d1.crossings;
    for (const auto& c : d2.crossings) {
        Crossing x = c;
        for (auto& v : x.slot) v += off;
        s.crossings.push_back(x);
    }
    // Splice along the highest-labeled arc of each summand: swap the two
    // head appearances, rerouting each knot into the other.
    int x1 = d1.n_arcs();
    int x2 = off + d2.n_arcs();
    auto find_head_slot = [&](int label) -> std::pair<int, int> {
        for (int i = 0; i < static_cast<int>(s.crossings.size()); ++i) {
            const Crossing& c = s.crossings[i];
            if (c.under_in() == label) return {i, 0};
            if (c.over_in() == label) return {i, c.sign > 0 ? 3 : 1};
        }
        throw std::logic_error("arc head not found");
    };
    auto [c1, s1] = find_head_slot(x1);
    auto [c2, s2] = find_head_slot(x2);
    s.crossings[c1].slot[s1] = x2;
    s.crossings[c2].slot[s2] = x1;
    s.finalize();
    return s;
}

int writhe(const KnotDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

PlanarFaces trace_faces(const KnotDiagram& d) {
    int n = static_cast<int>(d.crossings.size());
    // Endpoint lookup: head/tail (crossing, slot) of each arc.
    std::vector<std::pair<int, int>> head(d.n_arcs() + 1, {-1, -1}), tail(d.n_arcs() + 1, {-1, -1});
    for (int x = 0; x < n; ++x) {
        const Crossing& c = d.crossings[x];
        head[c.under_in()] = {x, 0};
        tail[c.under_out()] = {x, 2};
        if (c.sign > 0) {
            head[c.slot[3]] = {x, 3};
            tail[c.slot[1]] = {x, 1};
        } else {
            head[c.slot[1]] = {x, 1};
            tail[c.slot[3]] = {x, 3};
        }
    }

    PlanarFaces pf;
    pf.corner_face.assign(n, {-1, -1, -1, -1});
    pf.side0.assign(d.n_arcs() + 1, -1);
    pf.side1.assign(d.n_arcs() + 1, -1);

    // Half-edges: (arc, dir). dir 0 = forward (toward head), 1 = backward.
    std::vector<std::array<bool, 2>> used(d.n_arcs() + 1, {false, false});
    for (int a0 = 1; a0 <= d.n_arcs(); ++a0)
        for (int dir0 = 0; dir0 < 2; ++dir0) {
            if (used[a0][dir0]) continue;
            int fid = static_cast<int>(pf.faces.size());
            pf.faces.emplace_back();
            int a = a0, dir = dir0;
            do {
                used[a][dir] = true;
                (dir == 0 ? pf.side0 : pf.side1)[a] = fid;
                auto [x, s_in] = dir == 0 ? head[a] : tail[a];
                int corner = s_in;  // wedge between s_in and s_in + 1
                pf.faces[fid].push_back({x, corner});
                pf.corner_face[x][corner] = fid;
                int s_out = (s_in + 1) % 4;
                int b = d.crossings[x].slot[s_out];
                // Leave forward if this slot is b's tail, else backward.
                dir = (tail[b] == std::make_pair(x, s_out)) ? 0 : 1;
                a = b;
            } while (!(a == a0 && dir == dir0));
        }

    // Euler check V - E + F = 2: catches combinatorially consistent but
    // non-planar (non-realizable) codes.
    int F = static_cast<int>(pf.faces.size());
    if (n - 2 * n + F != 2)
        throw InputError("diagram is not planar (Euler count " +
                         std::to_string(n - 2 * n + F) + "); non-realizable code");
    return pf;
}

}  // namespace dslice
