// Randomized GL(2n, F_2) candidate search with partial-matrix pruning,
// compatibility graphs, exact maximum clique, oval-plane enumeration for
// small orders, and the difference-set multiplier scan.
#ifndef OGV_SEARCH_HPP
#define OGV_SEARCH_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "ogv/constructions.hpp"

namespace ogv {

// Fixed 64-bit stream so searches reproduce across runs and platforms:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next() {
        state += 0x9E3779B97F4A7C15ull;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// |M(S_i) ^ S_j| <= 2 for all members: the planes built from the two
// spreads are then orthogoval.
inline bool is_spread_compatible(const BinaryMatrix& M, const SpreadF2& sp) {
    if (M.dim != 2 * sp.n) throw std::invalid_argument("is_spread_compatible: dimension mismatch");
    const u32 total = 1u << M.dim;
    std::vector<u32> stamp(total, 0);
    u32 epoch = 0;
    for (const auto& S : sp.members) {
        ++epoch;
        for (u32 v : S) stamp[M.apply(v)] = epoch;
        for (const auto& T : sp.members) {
            u32 cnt = 0;
            for (u32 w : T)
                if (stamp[w] == epoch && ++cnt > 2) return false;
        }
    }
    return true;
}

namespace detail {

// Partial-matrix prune. The first 2n-1 rows of M fix all but the lowest
// code bit of each image, so the partial product is (Mv) >> 1. If four
// nonzero points of one member land (after truncation) inside the
// truncation of a single member, the preimage subgroup has size at least 8,
// every completion meets that member in at least 4 vectors, and the partial
// matrix can be discarded.
struct PartialPrune {
    u32 n;
    std::vector<std::vector<u32>> trunc_hits;  // (2n-1)-bit value -> member ids whose truncation contains it

    explicit PartialPrune(const SpreadF2& sp) : n(sp.n) {
        trunc_hits.assign(1u << (2 * n - 1), {});
        for (u32 j = 0; j < sp.members.size(); ++j) {
            std::set<u32> tr;
            for (u32 w : sp.members[j]) tr.insert(w >> 1);
            for (u32 t : tr) trunc_hits[t].push_back(j);
        }
    }

    // rows: code-oriented masks for result bits 2n-1 .. 1
    bool reject(const std::vector<u32>& partial_rows, const SpreadF2& sp) const {
        const u32 members = static_cast<u32>(sp.members.size());
        std::vector<u32> counts(members, 0);
        for (u32 i = 0; i < members; ++i) {
            std::fill(counts.begin(), counts.end(), 0);
            for (u32 v : sp.members[i]) {
                if (v == 0) continue;
                u32 pp = 0;
                for (u32 k = 0; k < 2 * n - 1; ++k)
                    pp |= static_cast<u32>(std::popcount(partial_rows[k] & v) & 1) << k;
                for (u32 j : trunc_hits[pp])
                    if (++counts[j] >= 4) return true;
            }
        }
        return false;
    }
};

}  // namespace detail

// Distinct invertible matrices compatible with the line spread of F_2^{2n},
// deterministic for a given seed. Rows 2n-1 .. 1 (code orientation) are
// drawn from the stream; surviving partials are completed by testing every
// final row. Stops at `count` matrices or `max_attempts` partial draws.
inline std::vector<BinaryMatrix> candidate_matrix_search(u32 n, u32 count, u64 seed, u64 max_attempts = 2000000) {
    if (n < 1 || n > 8) throw std::invalid_argument("candidate_matrix_search: n out of range");
    const SpreadF2 sp = line_spread(n);
    const detail::PartialPrune prune(sp);
    const u32 dim = 2 * n;
    const u32 mask = dim == 32 ? 0xffffffffu : (1u << dim) - 1;
    SplitMix64 rng(seed);
    std::set<std::vector<u32>> seen;
    std::vector<BinaryMatrix> out;
    for (u64 attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
        std::vector<u32> rows(dim, 0);  // code orientation; rows[0] filled last
        for (u32 k = dim - 1; k >= 1; --k) rows[k] = static_cast<u32>(rng.next()) & mask;
        std::vector<u32> partial(rows.begin() + 1, rows.end());  // bits 1..2n-1 -> index 0..2n-2
        // partial must be completable to full rank
        if (BinaryMatrix::from_code_rows(dim, rows).rank() < dim - 1) continue;
        if (prune.reject(partial, sp)) continue;
        for (u64 last = 0; last <= mask; ++last) {
            rows[0] = static_cast<u32>(last);
            BinaryMatrix M = BinaryMatrix::from_code_rows(dim, rows);
            if (!M.invertible()) continue;
            if (!is_spread_compatible(M, sp)) continue;
            if (seen.insert(M.rows).second) {
                out.push_back(M);
                if (out.size() >= count) break;
            }
        }
    }
    return out;
}

struct CompatibilityGraph {
    std::vector<std::vector<u64>> adj;  // bitset rows
    u32 size() const { return static_cast<u32>(adj.size()); }
    bool edge(u32 u, u32 v) const { return adj[u][v >> 6] >> (v & 63) & 1; }
    void set_edge(u32 u, u32 v) {
        adj[u][v >> 6] |= u64{1} << (v & 63);
        adj[v][u >> 6] |= u64{1} << (u & 63);
    }
    static CompatibilityGraph empty(u32 nvert) {
        CompatibilityGraph g;
        g.adj.assign(nvert, std::vector<u64>((nvert + 63) / 64, 0));
        return g;
    }
};

// Vertex 0 is the identity; vertex i >= 1 is mats[i-1]. Vertices are joined
// when the planes built from their spread images are orthogoval.
inline CompatibilityGraph build_compat_graph(const std::vector<BinaryMatrix>& mats, const SpreadF2& sp) {
    const u32 nvert = static_cast<u32>(mats.size()) + 1;
    std::vector<PlaneIncidence> planes;
    planes.reserve(nvert);
    planes.push_back(plane_from_spread(sp));
    for (const auto& M : mats) planes.push_back(plane_from_spread(apply_matrix(M, sp)));
    CompatibilityGraph g = CompatibilityGraph::empty(nvert);
    for (u32 i = 0; i < nvert; ++i)
        for (u32 j = i + 1; j < nvert; ++j)
            if (is_orthogoval_pair(planes[i], planes[j]).orthogoval) g.set_edge(i, j);
    return g;
}

inline CompatibilityGraph build_compat_graph(const std::vector<PlaneIncidence>& planes) {
    const u32 nvert = static_cast<u32>(planes.size());
    CompatibilityGraph g = CompatibilityGraph::empty(nvert);
    for (u32 i = 0; i < nvert; ++i)
        for (u32 j = i + 1; j < nvert; ++j)
            if (is_orthogoval_pair(planes[i], planes[j]).orthogoval) g.set_edge(i, j);
    return g;
}

// Exact maximum clique, branch and bound with a greedy coloring bound.
// With `target` set, returns the first clique of at least that size.
inline std::vector<u32> max_clique(const CompatibilityGraph& g, u32 target = 0) {
    const u32 n = g.size();
    if (n == 0) return {};
    const u32 words = (n + 63) / 64;
    std::vector<u32> best, cur;
    bool done = false;

    std::function<void(std::vector<u32>&)> expand = [&](std::vector<u32>& cand) {
        if (done) return;
        if (cand.empty()) {
            if (cur.size() > best.size()) {
                best = cur;
                if (target > 0 && best.size() >= target) done = true;
            }
            return;
        }
        // greedy coloring of cand in order; color classes bound the clique
        std::vector<u32> color(cand.size(), 0);
        u32 ncolors = 0;
        {
            std::vector<std::vector<u64>> class_mask;
            for (size_t idx = 0; idx < cand.size(); ++idx) {
                const u32 v = cand[idx];
                u32 c = 0;
                for (; c < ncolors; ++c)
                    if (!(class_mask[c][v >> 6] >> (v & 63) & 1)) break;
                if (c == ncolors) {
                    class_mask.emplace_back(words, 0);
                    ++ncolors;
                }
                for (u32 w = 0; w < words; ++w) class_mask[c][w] |= g.adj[v][w];
                color[idx] = c + 1;
            }
        }
        // candidates sorted by color ascending; branch from the highest color
        std::vector<u32> order(cand.size());
        for (u32 i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](u32 a, u32 b) { return color[a] < color[b]; });
        for (u32 pos = static_cast<u32>(order.size()); pos-- > 0 && !done;) {
            const u32 idx = order[pos];
            if (cur.size() + color[idx] <= best.size()) return;
            const u32 v = cand[idx];
            cur.push_back(v);
            std::vector<u32> next;
            for (u32 p2 = 0; p2 < pos; ++p2) {
                const u32 u = cand[order[p2]];
                if (g.edge(v, u)) next.push_back(u);
            }
            std::sort(next.begin(), next.end());
            expand(next);
            cur.pop_back();
        }
    };

    std::vector<u32> all(n);
    for (u32 i = 0; i < n; ++i) all[i] = i;
    expand(all);
    // a posteriori: the result must be a clique
    for (size_t i = 0; i < best.size(); ++i)
        for (size_t j = i + 1; j < best.size(); ++j)
            if (!g.edge(best[i], best[j])) throw std::logic_error("max_clique: output not a clique");
    std::sort(best.begin(), best.end());
    return best;
}

// ---------------------------------------------------------------------------
// Oval-plane search for small orders

enum class OvalSearchMode { enumerate, pair_test };

struct OvalPlanesReport {
    u32 q = 0;
    u64 oval_count = 0;
    u64 plane_count = 0;                      // planes whose lines are ovals of the standard plane
    u64 orthogoval_pairs = 0;                 // among those planes
    u32 max_orthogoval_set = 1;               // counting the standard plane
    std::vector<std::vector<u64>> plane_line_masks;  // point bitmasks per plane
};

// Ovals of PG(2,q) (for q = 5 these are exactly the nonsingular conics),
// then every plane on the same points whose lines are all ovals, by exact
// cover of the point pairs. Two such planes are tested for orthogovality
// directly; any one of them is orthogoval to the standard plane already.
inline OvalPlanesReport oval_planes_search(const FieldSpec& F, OvalSearchMode mode = OvalSearchMode::pair_test) {
    const u32 q = F.q;
    if (q < 2 || q > 5) throw std::invalid_argument("oval_planes_search: q must be 2..5");
    const PlaneIncidence pg = build_pg(F);
    const u32 m = pg.num_points;
    OvalPlanesReport rep;
    rep.q = q;

    std::vector<std::vector<u64>> line_masks_words;  // standard plane lines as masks
    std::vector<u64> std_masks;
    for (const auto& line : pg.lines) {
        u64 mk = 0;
        for (u32 v : line) mk |= u64{1} << v;
        std_masks.push_back(mk);
    }

    std::vector<u64> ovals;  // point bitmasks, ascending
    if (q <= 4) {
        // all (q+1)-subsets with no three collinear
        const u32 k = q + 1;
        std::vector<u32> idx(k);
        for (u32 i = 0; i < k; ++i) idx[i] = i;
        auto arc_ok = [&](u64 mk) {
            for (u64 lm : std_masks)
                if (std::popcount(lm & mk) > 2) return false;
            return true;
        };
        while (true) {
            u64 mk = 0;
            for (u32 i : idx) mk |= u64{1} << i;
            if (arc_ok(mk)) ovals.push_back(mk);
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + static_cast<u32>(pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (u32 i = static_cast<u32>(pos) + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    } else {
        // q = 5: enumerate nonsingular conics (forms up to scalar)
        std::set<u64> seen;
        for (u32 a = 0; a < q; ++a)
            for (u32 b = 0; b < q; ++b)
                for (u32 c = 0; c < q; ++c)
                    for (u32 f = 0; f < q; ++f)
                        for (u32 g = 0; g < q; ++g)
                            for (u32 h = 0; h < q; ++h) {
                                const QuadraticForm Q{a, b, c, f, g, h};
                                if (Q.is_zero()) continue;
                                // canonical representative: first nonzero coefficient is 1
                                const u32 first = a ? a : b ? b : c ? c : f ? f : g ? g : h;
                                if (first != 1) continue;
                                if (!is_nonsingular(F, Q)) continue;
                                u64 mk = 0;
                                for (u32 v : conic_points(F, Q)) mk |= u64{1} << v;
                                if (seen.insert(mk).second) ovals.push_back(mk);
                            }
        std::sort(ovals.begin(), ovals.end());
    }
    rep.oval_count = ovals.size();

    // exact cover of all point pairs by ovals = planes with oval lines
    const u32 npairs = m * (m - 1) / 2;
    std::vector<u32> pair_rank(static_cast<size_t>(m) * m, 0);
    {
        u32 r = 0;
        for (u32 a = 0; a < m; ++a)
            for (u32 b = a + 1; b < m; ++b) pair_rank[static_cast<size_t>(a) * m + b] = r++;
    }
    ExactCover ec(npairs);
    for (u64 ov : ovals) {
        std::vector<u32> pts;
        for (u32 v = 0; v < m; ++v)
            if (ov >> v & 1) pts.push_back(v);
        std::vector<u32> cols;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) cols.push_back(pair_rank[static_cast<size_t>(pts[i]) * m + pts[j]]);
        ec.add_row(cols);
    }
    ec.solve([&](const std::vector<u32>& rows) {
        std::vector<u64> masks;
        for (u32 r : rows) masks.push_back(ovals[r]);
        std::sort(masks.begin(), masks.end());
        rep.plane_line_masks.push_back(std::move(masks));
        return true;
    });
    std::sort(rep.plane_line_masks.begin(), rep.plane_line_masks.end());
    rep.plane_count = rep.plane_line_masks.size();

    if (mode == OvalSearchMode::pair_test && rep.plane_count > 0) {
        auto pair_orthogoval = [&](const std::vector<u64>& A, const std::vector<u64>& B) {
            for (u64 x : A)
                for (u64 y : B)
                    if (std::popcount(x & y) > 2) return false;
            return true;
        };
        const u32 np = static_cast<u32>(rep.plane_count);
        CompatibilityGraph g = CompatibilityGraph::empty(np);
        for (u32 i = 0; i < np; ++i)
            for (u32 j = i + 1; j < np; ++j)
                if (pair_orthogoval(rep.plane_line_masks[i], rep.plane_line_masks[j])) {
                    g.set_edge(i, j);
                    ++rep.orthogoval_pairs;
                }
        rep.max_orthogoval_set = 1 + (rep.orthogoval_pairs > 0 ? static_cast<u32>(max_clique(g).size()) : (np > 0 ? 1u : 0u));
    } else if (rep.plane_count > 0) {
        rep.max_orthogoval_set = 2;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Multiplier scan

// Prime powers q = p^e <= limit for which some power of p is congruent to
// -4 modulo q^2+q+1 while 2 is not. Since p^{3e} = q^3 = 1 (mod q^2+q+1),
// the subgroup generated by p has at most 3e elements.
inline std::vector<u64> multiplier_scan(u64 limit) {
    if (limit < 2) return {};
    std::vector<u64> out;
    std::vector<char> sieve(limit + 1, 1);
    for (u64 p = 2; p <= limit; ++p) {
        if (!sieve[p]) continue;
        for (u64 x = p * p; x <= limit; x += p) sieve[x] = 0;
        for (u64 q = p; q <= limit; q *= p) {
            const u64 mod = q * q + q + 1;
            std::vector<u64> subgroup{1};
            u64 x = p % mod;
            while (x != 1) {
                subgroup.push_back(x);
                x = static_cast<u64>((static_cast<unsigned __int128>(x) * p) % mod);
            }
            const u64 minus4 = (mod - 4) % mod;
            bool has_m4 = false, has_2 = false;
            for (u64 s : subgroup) {
                if (s == minus4) has_m4 = true;
                if (s == 2) has_2 = true;
            }
            if (has_m4 && !has_2) out.push_back(q);
            if (q > limit / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ogv

#endif  // OGV_SEARCH_HPP
