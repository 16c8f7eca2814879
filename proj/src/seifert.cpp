#include "dslice/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

// Oriented smoothing of every crossing: under-in joins over-out, over-in
// joins under-out. Returns the Seifert circle id of each arc (1-indexed).
struct Circles {
    std::vector<int> circle_of_arc;            // 1-indexed arcs
    std::vector<std::vector<int>> circle_arcs;  // traversal order per circle
    int count = 0;
};

Circles seifert_circles(const KnotDiagram& d) {
    int na = d.n_arcs();
    std::vector<int> succ(na + 1, 0);
    for (const auto& c : d.crossings) {
        succ[c.under_in()] = c.over_out();
        succ[c.over_in()] = c.under_out();
    }
    Circles cs;
    cs.circle_of_arc.assign(na + 1, -1);
    for (int a = 1; a <= na; ++a) {
        if (cs.circle_of_arc[a] != -1) continue;
        int id = cs.count++;
        cs.circle_arcs.emplace_back();
        int cur = a;
        do {
            cs.circle_of_arc[cur] = id;
            cs.circle_arcs[id].push_back(cur);
            cur = succ[cur];
        } while (cur != a);
    }
    return cs;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Complement regions of the Seifert circle arrangement: diagram faces merged
// across the two wedges each smoothing opens up.
UnionFind smoothed_regions(const KnotDiagram& d, const PlanarFaces& pf) {
    UnionFind uf(static_cast<int>(pf.faces.size()));
    for (std::size_t x = 0; x < d.crossings.size(); ++x) {
        const auto& cf = pf.corner_face[x];
        if (d.crossings[x].sign > 0)
            uf.unite(cf[1], cf[3]);
        else
            uf.unite(cf[0], cf[2]);
    }
    return uf;
}

// A reducible configuration in Vogel's sense: a single diagram face with two
// boundary arcs on distinct Seifert circles seen from the same side. The face
// is an empty disk, so the R2 finger crosses nothing else.
struct Defect {
    int alpha = 0, beta = 0;
    int side = 0;  // 0: face right of both arcs, 1: left of both
    bool found = false;
};

Defect find_defect(const KnotDiagram& d, const Circles& cs, const PlanarFaces& pf) {
    // (face, side) -> first arc seen
    std::map<std::pair<int, int>, int> first;
    for (int a = 1; a <= d.n_arcs(); ++a)
        for (int side = 0; side < 2; ++side) {
            int f = side == 0 ? pf.side0[a] : pf.side1[a];
            auto key = std::make_pair(f, side);
            auto it = first.find(key);
            if (it == first.end()) {
                first[key] = a;
            } else if (cs.circle_of_arc[it->second] != cs.circle_of_arc[a]) {
                return {it->second, a, side, true};
            }
        }
    return {};
}

// Reidemeister-II push of arc alpha across arc beta through their shared
// region; alpha passes over. Adds two crossings of opposite sign.
void apply_vogel_move(KnotDiagram& d, int alpha, int beta, int side) {
    int na = d.n_arcs();
    int f2 = na + 1, f3 = na + 2, beta_mid = na + 3, beta_out = na + 4;

    // Reroute the head appearances first.
    auto replace_head = [&](int label, int fresh) {
        for (auto& c : d.crossings) {
            if (c.under_in() == label) {
                c.slot[0] = fresh;
                return;
            }
            if (c.over_in() == label) {
                c.slot[c.sign > 0 ? 3 : 1] = fresh;
                return;
            }
        }
        throw std::logic_error("vogel move: arc head not found");
    };
    replace_head(beta, beta_out);
    replace_head(alpha, f3);

    // The finger leaves alpha into the shared face and crosses beta twice;
    // embeddedness forces the outbound pass to hit beta at its later point,
    // so the return pass comes first along beta. The side=0 case is the
    // mirror image (slots b and d swapped, signs flipped).
    Crossing c1, c2;
    if (side == 1) {
        c1.slot = {beta, f2, beta_mid, f3};         // return pass, sign -1
        c2.slot = {beta_mid, f2, beta_out, alpha};  // outbound pass, sign +1
    } else {
        c1.slot = {beta, f3, beta_mid, f2};         // sign +1
        c2.slot = {beta_mid, alpha, beta_out, f2};  // sign -1
    }
    d.crossings.push_back(c1);
    d.crossings.push_back(c2);
    d.finalize();
}

struct BraidedData {
    Circles circles;
    std::vector<int> depth_of_circle;
    std::vector<std::vector<int>> attach;  // cyclic band order per circle
};

// Depths and per-circle attachment orders of a coherently nested diagram.
BraidedData read_braided(const KnotDiagram& d, const Circles& cs, const PlanarFaces& pf,
                         UnionFind& regions) {
    BraidedData bd;
    bd.circles = cs;
    int s = cs.count;

    // Side regions per circle, with a consistency check.
    std::vector<int> right(s, -1), left(s, -1);
    for (int a = 1; a <= d.n_arcs(); ++a) {
        int c = cs.circle_of_arc[a];
        int r0 = regions.find(pf.side0[a]), r1 = regions.find(pf.side1[a]);
        if (right[c] == -1) {
            right[c] = r0;
            left[c] = r1;
        } else if (right[c] != r0 || left[c] != r1) {
            throw std::logic_error("inconsistent circle sides; diagram not coherently nested");
        }
    }

    // Region -> adjacent circles.
    std::map<int, std::set<int>> region_circles;
    for (int c = 0; c < s; ++c) {
        region_circles[right[c]].insert(c);
        region_circles[left[c]].insert(c);
    }
    std::vector<int> caps;
    for (auto& [r, set] : region_circles)
        if (set.size() == 1) caps.push_back(r);
    if (caps.size() != 2)
        throw std::logic_error("expected exactly two cap regions, found " +
                               std::to_string(caps.size()));

    // Deterministic outer cap: the one whose circle holds the smallest arc.
    auto smallest_arc_of_region_circle = [&](int r) {
        int c = *region_circles[r].begin();
        return *std::min_element(cs.circle_arcs[c].begin(), cs.circle_arcs[c].end());
    };
    int outer = caps[0];
    if (caps.size() == 2 && smallest_arc_of_region_circle(caps[1]) < smallest_arc_of_region_circle(caps[0]))
        outer = caps[1];

    bd.depth_of_circle.assign(s, -1);
    std::map<int, int> region_depth;
    region_depth[outer] = 0;
    std::queue<int> q;
    q.push(outer);
    while (!q.empty()) {
        int r = q.front();
        q.pop();
        for (int c : region_circles[r]) {
            if (bd.depth_of_circle[c] != -1) continue;
            bd.depth_of_circle[c] = region_depth[r];
            int other = right[c] == r ? left[c] : right[c];
            if (!region_depth.count(other)) {
                region_depth[other] = bd.depth_of_circle[c] + 1;
                q.push(other);
            }
        }
    }
    std::vector<bool> seen_depth(s, false);
    for (int c = 0; c < s; ++c) {
        int dep = bd.depth_of_circle[c];
        if (dep < 0 || dep >= s || seen_depth[dep])
            throw std::logic_error("circle nesting is not a chain after normalization");
        seen_depth[dep] = true;
    }

    // Attachment cyclic order: head crossing of each arc along the circle.
    std::vector<std::pair<int, int>> head(d.n_arcs() + 1, {-1, -1});
    for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x) {
        const Crossing& c = d.crossings[x];
        head[c.under_in()] = {x, 0};
        head[c.over_in()] = {x, 1};
    }
    bd.attach.assign(s, {});
    for (int c = 0; c < s; ++c)
        for (int a : cs.circle_arcs[c]) bd.attach[c].push_back(head[a].first);
    return bd;
}

}  // namespace

void validate_seifert_matrix(const IntMat& v) {
    if (!v.square()) throw InputError("Seifert matrix must be square");
    if (v.rows() % 2 != 0) throw InputError("Seifert matrix must have even size");
    if (det(v - v.transpose()) != 1)
        throw InputError("not a Seifert matrix: det(V - V^T) != 1");
}

SeifertSurface seifert_surface(const KnotDiagram& d) {
    if (d.num_components() != 1)
        throw InputError("Seifert algorithm requires a 1-component diagram (got " +
                         std::to_string(d.num_components()) + " components)");

    SeifertSurface sf;
    if (d.crossings.empty()) {
        sf.normalized = d;
        sf.num_circles = 1;
        sf.num_bands = 0;
        sf.genus = 0;
        sf.provenance = "0-crossing unknot";
        return sf;
    }

    // Vogel loop: push arcs across each other until the Seifert circles are
    // coherently nested. Each move adds one R2 pair.
    KnotDiagram cur = d;
    int moves = 0;
    const int cap = 1000 + 20 * static_cast<int>(d.crossings.size()) * static_cast<int>(d.crossings.size());
    for (;;) {
        Circles cs = seifert_circles(cur);
        PlanarFaces pf = trace_faces(cur);
        Defect def = find_defect(cur, cs, pf);
        if (!def.found) {
            UnionFind regions = smoothed_regions(cur, pf);
            BraidedData bd = read_braided(cur, cs, pf, regions);
            int s = cs.count;
            int nb = static_cast<int>(cur.crossings.size());

            sf.normalized = cur;
            sf.num_circles = s;
            sf.num_bands = nb;
            if ((1 + nb - s) % 2 != 0 || 1 + nb - s < 0)
                throw std::logic_error("genus count (1 + bands - circles)/2 is not a nonneg integer");
            sf.genus = (1 + nb - s) / 2;
            sf.band_sign.resize(nb);
            for (int x = 0; x < nb; ++x) sf.band_sign[x] = cur.crossings[x].sign;

            // Annulus of each band and chain order of circles.
            std::vector<int> circ_at_depth(s);
            for (int c = 0; c < s; ++c) circ_at_depth[bd.depth_of_circle[c]] = c;
            sf.band_annulus.assign(nb, 0);
            for (int x = 0; x < nb; ++x) {
                const Crossing& c = cur.crossings[x];
                int c1 = cs.circle_of_arc[c.under_in()];
                int c2 = cs.circle_of_arc[c.over_in()];
                if (c1 == c2) throw std::logic_error("band joins a circle to itself");
                int d1 = bd.depth_of_circle[c1], d2 = bd.depth_of_circle[c2];
                if (std::abs(d1 - d2) != 1)
                    throw std::logic_error("band joins non-adjacent circles after normalization");
                sf.band_annulus[x] = std::max(d1, d2);
            }

            // Global linear order: cut each circle, aligned with its outer
            // neighbor, then merge the per-circle chains.
            std::vector<std::vector<int>> linear(s);
            for (int dep = 0; dep < s; ++dep) {
                int c = circ_at_depth[dep];
                std::vector<int> cyc = bd.attach[c];
                int start = 0;
                if (dep == 0) {
                    start = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
                } else {
                    // First band of annulus `dep` in the outer circle's order.
                    int e = -1;
                    for (int b : linear[dep - 1])
                        if (sf.band_annulus[b] == dep) {
                            e = b;
                            break;
                        }
                    if (e == -1) throw std::logic_error("annulus without bands");
                    start = static_cast<int>(std::find(cyc.begin(), cyc.end(), e) - cyc.begin());
                }
                linear[dep].reserve(cyc.size());
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    linear[dep].push_back(cyc[(start + i) % cyc.size()]);
            }
            // Kahn toposort over precedence chains, smallest crossing id first.
            std::vector<std::vector<int>> succ(nb);
            std::vector<int> indeg(nb, 0);
            for (int dep = 0; dep < s; ++dep)
                for (std::size_t i = 0; i + 1 < linear[dep].size(); ++i) {
                    succ[linear[dep][i]].push_back(linear[dep][i + 1]);
                    ++indeg[linear[dep][i + 1]];
                }
            std::priority_queue<int, std::vector<int>, std::greater<>> ready;
            for (int x = 0; x < nb; ++x)
                if (indeg[x] == 0) ready.push(x);
            sf.band_pos.assign(nb, -1);
            int pos = 0;
            while (!ready.empty()) {
                int x = ready.top();
                ready.pop();
                sf.band_pos[x] = pos++;
                for (int y : succ[x])
                    if (--indeg[y] == 0) ready.push(y);
            }
            if (pos != nb) throw std::logic_error("band order has a cycle; diagram not braided");

            sf.annulus_bands.assign(s, {});  // index 1..s-1 used
            for (int x = 0; x < nb; ++x) sf.annulus_bands[sf.band_annulus[x]].push_back(x);
            int rank = 0;
            for (int k = 1; k < s; ++k) {
                auto& v = sf.annulus_bands[k];
                if (v.empty()) throw std::logic_error("empty annulus in a 1-component diagram");
                std::sort(v.begin(), v.end(),
                          [&](int a, int b) { return sf.band_pos[a] < sf.band_pos[b]; });
                for (std::size_t m = 1; m < v.size(); ++m)
                    sf.basis.push_back({k, v[0], v[m]});
                rank += static_cast<int>(v.size()) - 1;
            }
            if (rank != 2 * sf.genus) throw std::logic_error("homology rank mismatch");
            sf.provenance = "seifert surface of " + std::to_string(d.crossings.size()) +
                            "-crossing diagram" +
                            (moves ? " (braided with " + std::to_string(moves) + " R2 moves)" : "");
            return sf;
        }
        if (++moves > cap) throw std::logic_error("braid normalization did not terminate");
        apply_vogel_move(cur, def.alpha, def.beta, def.side);
    }
}

namespace {

// Band-pair linking rules on the braided surface, pairs basis. The one-sided
// unit entries were pinned against classical values (see tests).
void fill_pairs_matrix(const SeifertSurface& sf, IntMat& v) {
    struct Cyc {
        int lo, hi;  // global positions of its two bands
        int elo, ehi;
        int annulus;
    };
    std::vector<Cyc> cycles;
    for (int k = 1; k < static_cast<int>(sf.annulus_bands.size()); ++k) {
        const auto& bands = sf.annulus_bands[k];
        for (std::size_t m = 0; m + 1 < bands.size(); ++m) {
            Cyc c;
            c.lo = sf.band_pos[bands[m]];
            c.hi = sf.band_pos[bands[m + 1]];
            c.elo = sf.band_sign[bands[m]];
            c.ehi = sf.band_sign[bands[m + 1]];
            c.annulus = k;
            cycles.push_back(c);
        }
    }
    std::size_t n = cycles.size();
    v = IntMat(n, n);
    for (std::size_t i = 0; i < n; ++i) v.at(i, i) = -(cycles[i].elo + cycles[i].ehi) / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Cyc& a = cycles[i];
            const Cyc& b = cycles[j];
            if (a.annulus == b.annulus) {
                // consecutive cycles share a band
                if (a.hi == b.lo) {
                    // a before b, shared band sign b.elo
                    if (b.elo > 0)
                        v.at(j, i) = 1;
                    else
                        v.at(i, j) = -1;
                }
            } else if (b.annulus == a.annulus + 1) {
                if (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) {
                    v.at(j, i) = -1;  // type A interleave
                } else if (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi) {
                    v.at(j, i) = 1;  // type B interleave
                }
            }
        }
}

}  // namespace

SeifertMatrix seifert_matrix(const SeifertSurface& sf) {
    IntMat pairs;
    fill_pairs_matrix(sf, pairs);
    // Change to the spanning-tree-complement basis: tree edge = first band of
    // each annulus; the cycle for the m-th non-tree band is the telescoping
    // sum of the first m consecutive-pair cycles of its annulus.
    std::size_t n = pairs.rows();
    IntMat t(n, n);
    std::size_t off = 0;
    for (int k = 1; k < static_cast<int>(sf.annulus_bands.size()); ++k) {
        std::size_t block = sf.annulus_bands[k].size() - 1;
        for (std::size_t j = 0; j < block; ++j)
            for (std::size_t i = 0; i <= j; ++i) t.at(off + i, off + j) = 1;
        off += block;
    }
    SeifertMatrix m;
    m.v = t.transpose() * pairs * t;
    m.provenance = sf.provenance;
    validate_seifert_matrix(m.v);
    return m;
}

SeifertMatrix seifert_matrix_of(const KnotDiagram& d) { return seifert_matrix(seifert_surface(d)); }

}  // namespace dslice
