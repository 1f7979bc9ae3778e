// Orthogoval verification, packing bounds, union-design analysis and
// derived designs.
//
// Two planes on the same point set are orthogoval when every line of one
// meets every line of the other in at most two points. The verdict is exact
// and exhaustive over all line pairs; counting is organised per point: for a
// point u, the lines of each plane through u are indexed locally, every
// other point v charges the bucket (line-of-A through uv, line-of-B through
// uv), and a bucket reaching t-1 exposes a line pair sharing t points.
// This visits every line pair through every shared point, so the maximum
// intersection over all line pairs is 1 + (maximum bucket).
#ifndef OGV_ORTHOGOVAL_HPP
#define OGV_ORTHOGOVAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ogv/exact_cover.hpp"
#include "ogv/plane.hpp"

namespace ogv {

struct OrthogovalReport {
    bool orthogoval = false;
    u32 max_intersection = 0;
    bool has_witness = false;
    u32 line_a = 0, line_b = 0;          // lexicographically first offending pair
    std::vector<u32> shared_points;      // at least 3 when a witness is present
};

namespace detail {

struct PairScan {
    u32 max_intersection = 0;
    bool violation = false;
    u32 line_a = 0, line_b = 0;
};

inline void require_compatible(const PlaneIncidence& A, const PlaneIncidence& B) {
    if (A.kind != B.kind) throw std::invalid_argument("orthogoval: plane kinds differ");
    if (A.q != B.q) throw std::invalid_argument("orthogoval: plane orders differ");
    if (A.num_points != B.num_points) throw std::invalid_argument("orthogoval: point sets differ");
}

// Exhaustive scan, small planes: lines as bitmasks, all pairs in lex order.
inline PairScan scan_bitmask(const PlaneIncidence& A, const PlaneIncidence& B, int ex_a, int ex_b) {
    std::vector<u64> ma(A.lines.size(), 0), mb(B.lines.size(), 0);
    for (size_t i = 0; i < A.lines.size(); ++i)
        for (u32 v : A.lines[i]) ma[i] |= u64{1} << v;
    for (size_t j = 0; j < B.lines.size(); ++j)
        for (u32 v : B.lines[j]) mb[j] |= u64{1} << v;
    PairScan r;
    for (size_t i = 0; i < ma.size(); ++i)
        for (size_t j = 0; j < mb.size(); ++j) {
            if (static_cast<int>(i) == ex_a && static_cast<int>(j) == ex_b) continue;
            const u32 c = static_cast<u32>(std::popcount(ma[i] & mb[j]));
            if (c > r.max_intersection) r.max_intersection = c;
            if (c >= 3 && !r.violation) {
                r.violation = true;
                r.line_a = static_cast<u32>(i);
                r.line_b = static_cast<u32>(j);
            }
        }
    return r;
}

// Exhaustive scan, large planes: per-point bucket census described above.
inline PairScan scan_census(const PlaneIncidence& A, const PlaneIncidence& B, int ex_a, int ex_b) {
    const u32 m = A.num_points;
    const auto thru_a = lines_through(A);
    const auto thru_b = lines_through(B);
    size_t max_da = 0, max_db = 0;
    for (u32 u = 0; u < m; ++u) {
        max_da = std::max(max_da, thru_a[u].size());
        max_db = std::max(max_db, thru_b[u].size());
    }
    std::vector<u32> mark_val(m, 0), mark_ep(m, 0);
    std::vector<u32> bucket(max_da * max_db, 0), bucket_ep(max_da * max_db, 0);
    u32 epoch = 0;
    PairScan r;
    bool have_min = false;
    u64 min_pair = 0;
    for (u32 u = 0; u < m; ++u) {
        ++epoch;
        const auto& lb = thru_b[u];
        for (u32 j = 0; j < lb.size(); ++j)
            for (u32 v : B.lines[lb[j]]) {
                if (v == u) continue;
                mark_val[v] = j;
                mark_ep[v] = epoch;
            }
        const auto& la = thru_a[u];
        for (u32 i = 0; i < la.size(); ++i) {
            const u32 ga = la[i];
            for (u32 v : A.lines[ga]) {
                if (v == u) continue;
                if (mark_ep[v] != epoch) throw std::invalid_argument("orthogoval: point pair not joined in second plane");
                const u32 j = mark_val[v];
                const size_t idx = static_cast<size_t>(i) * max_db + j;
                const u32 cnt = (bucket_ep[idx] == epoch ? bucket[idx] : 0) + 1;
                bucket[idx] = cnt;
                bucket_ep[idx] = epoch;
                const u32 gb = lb[j];
                if (static_cast<int>(ga) == ex_a && static_cast<int>(gb) == ex_b) continue;
                if (cnt + 1 > r.max_intersection) r.max_intersection = cnt + 1;
                if (cnt >= 2) {
                    const u64 pair = (static_cast<u64>(ga) << 32) | gb;
                    if (!have_min || pair < min_pair) {
                        min_pair = pair;
                        have_min = true;
                    }
                }
            }
        }
    }
    if (have_min) {
        r.violation = true;
        r.line_a = static_cast<u32>(min_pair >> 32);
        r.line_b = static_cast<u32>(min_pair & 0xffffffffu);
    }
    return r;
}

inline PairScan scan_pair(const PlaneIncidence& A, const PlaneIncidence& B, int ex_a = -1, int ex_b = -1) {
    if (A.num_points <= 64) return scan_bitmask(A, B, ex_a, ex_b);
    return scan_census(A, B, ex_a, ex_b);
}

inline std::vector<u32> sorted_intersection(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

}  // namespace detail

inline OrthogovalReport is_orthogoval_pair(const PlaneIncidence& A, const PlaneIncidence& B) {
    detail::require_compatible(A, B);
    const auto scan = detail::scan_pair(A, B);
    OrthogovalReport rep;
    rep.max_intersection = scan.max_intersection;
    rep.orthogoval = scan.max_intersection <= 2;
    if (scan.violation) {
        rep.has_witness = true;
        rep.line_a = scan.line_a;
        rep.line_b = scan.line_b;
        rep.shared_points = detail::sorted_intersection(A.lines[scan.line_a], B.lines[scan.line_b]);
    }
    return rep;
}

struct MutualReport {
    bool mutually_orthogoval = false;
    size_t fail_i = 0, fail_j = 0;
    OrthogovalReport fail_report;
};

inline MutualReport is_mutually_orthogoval(const std::vector<PlaneIncidence>& planes) {
    if (planes.empty()) throw std::invalid_argument("is_mutually_orthogoval: empty list");
    MutualReport r;
    r.mutually_orthogoval = true;
    for (size_t i = 0; i < planes.size(); ++i)
        for (size_t j = i + 1; j < planes.size(); ++j) {
            auto rep = is_orthogoval_pair(planes[i], planes[j]);
            if (!rep.orthogoval) {
                r.mutually_orthogoval = false;
                r.fail_i = i;
                r.fail_j = j;
                r.fail_report = std::move(rep);
                return r;
            }
        }
    return r;
}

// Projective pair sharing a common line (the line z of the pencil
// construction): every line pair other than that one meets in at most two
// points. The named line, given by its index in A, must occur as a line of
// both planes.
inline bool orthogoval_except_line(const PlaneIncidence& A, const PlaneIncidence& B, u32 line_idx_a) {
    detail::require_compatible(A, B);
    if (A.kind != PlaneKind::projective) throw std::invalid_argument("orthogoval_except_line: projective planes required");
    if (line_idx_a >= A.lines.size()) throw std::invalid_argument("orthogoval_except_line: line index out of range");
    const auto& named = A.lines[line_idx_a];
    int idx_b = -1;
    for (size_t j = 0; j < B.lines.size(); ++j)
        if (B.lines[j] == named) { idx_b = static_cast<int>(j); break; }
    if (idx_b < 0) throw std::invalid_argument("orthogoval_except_line: named line not present in both planes");
    const auto scan = detail::scan_pair(A, B, static_cast<int>(line_idx_a), idx_b);
    return scan.max_intersection <= 2;
}

// Johnson bound for strength 3: D(v,k,3) <= floor(v/k floor((v-1)/(k-1) floor((v-2)/(k-2)))).
inline u64 johnson_packing_bound(u64 v, u64 k) {
    if (k <= 2) throw std::invalid_argument("johnson_packing_bound: k must be at least 3");
    if (v <= k) throw std::invalid_argument("johnson_packing_bound: v must exceed k");
    const u64 inner = (v - 2) / (k - 2);
    const u64 mid = (v - 1) * inner / (k - 1);
    return v * mid / k;
}

inline bool is_prime_power(u64 q, u64* prime = nullptr) {
    if (q < 2) return false;
    u64 m = q;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            while (m % d == 0) m /= d;
            if (m != 1) return false;
            if (prime) *prime = d;
            return true;
        }
    if (prime) *prime = q;  // q itself is prime
    return true;
}

// Packing-bound cap on the size of a mutually orthogoval set; affine planes
// of order 2 admit arbitrarily large sets (nullopt).
inline std::optional<u64> orthogoval_set_bound(u64 q, PlaneKind kind) {
    if (!is_prime_power(q)) throw std::invalid_argument("orthogoval_set_bound: q must be a prime power");
    if (kind == PlaneKind::projective) return std::max<u64>(5, q + 2);
    if (q == 2) return std::nullopt;
    return std::max<u64>(7, q + 2);
}

// s planes of order q cannot pack more lines than D allows:
// s(q^2+q+1) <= D(q^2+q+1, q+1, 3) projective, s(q^2+q) <= D(q^2, q, 3) affine.
inline bool packing_inequality_holds(u64 s, u64 q, PlaneKind kind) {
    if (kind == PlaneKind::projective)
        return s * (q * q + q + 1) <= johnson_packing_bound(q * q + q + 1, q + 1);
    if (q == 2) return true;
    return s * (q * q + q) <= johnson_packing_bound(q * q, q);
}

struct UnionDesignReport {
    u64 blocks = 0;
    u32 max_multiplicity = 0;
    u64 uncovered = 0;
    bool steiner = false;  // every 3-subset covered exactly once
};

namespace detail {
inline u64 binom3(u64 m) { return m * (m - 1) * (m - 2) / 6; }
inline u64 triple_rank(u32 i, u32 j, u32 k) {
    // i < j < k, combinadic rank
    return static_cast<u64>(i) + static_cast<u64>(j) * (j - 1) / 2 + static_cast<u64>(k) * (k - 1) * (k - 2) / 6;
}
}  // namespace detail

// Multiplicity census of all point triples against the multiset of all
// lines of all planes, taken as blocks.
inline UnionDesignReport union_design_check(const std::vector<PlaneIncidence>& planes) {
    if (planes.empty()) throw std::invalid_argument("union_design_check: empty list");
    const u32 m = planes[0].num_points;
    for (const auto& pl : planes)
        if (pl.num_points != m) throw std::invalid_argument("union_design_check: incompatible point sets");
    std::vector<u32> mult(detail::binom3(m), 0);
    UnionDesignReport rep;
    for (const auto& pl : planes)
        for (const auto& line : pl.lines) {
            ++rep.blocks;
            for (size_t a = 0; a < line.size(); ++a)
                for (size_t b = a + 1; b < line.size(); ++b)
                    for (size_t c = b + 1; c < line.size(); ++c) {
                        auto& slot = mult[detail::triple_rank(line[a], line[b], line[c])];
                        ++slot;
                        rep.max_multiplicity = std::max(rep.max_multiplicity, slot);
                    }
        }
    for (u32 x : mult)
        if (x == 0) ++rep.uncovered;
    rep.steiner = rep.max_multiplicity == 1 && rep.uncovered == 0;
    return rep;
}

struct DerivedDesignReport {
    std::vector<std::vector<u32>> blocks;          // the (k-1)-sets
    bool resolvable = false;
    std::vector<std::vector<u32>> parallel_classes;  // indices into blocks
};

// Derived design at a point: { B \ {p} : p in B }, plus a resolvability
// decision by exact cover (candidate parallel classes first, then a
// partition of the block set into classes).
inline DerivedDesignReport derived_design(const std::vector<std::vector<u32>>& blocks, u32 point) {
    DerivedDesignReport rep;
    std::vector<u32> universe;
    for (const auto& B : blocks) {
        if (!std::binary_search(B.begin(), B.end(), point)) continue;
        std::vector<u32> d;
        for (u32 v : B)
            if (v != point) d.push_back(v);
        rep.blocks.push_back(std::move(d));
    }
    if (rep.blocks.empty()) throw std::invalid_argument("derived_design: point not in any block");
    for (const auto& B : rep.blocks)
        for (u32 v : B) universe.push_back(v);
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    std::vector<u32> col_of(universe.back() + 1, 0);
    for (u32 i = 0; i < universe.size(); ++i) col_of[universe[i]] = i;

    // candidate parallel classes: exact covers of the point set by blocks
    ExactCover ec(static_cast<u32>(universe.size()));
    for (const auto& B : rep.blocks) {
        std::vector<u32> cols;
        for (u32 v : B) cols.push_back(col_of[v]);
        ec.add_row(cols);
    }
    std::vector<std::vector<u32>> classes;
    ec.solve([&](const std::vector<u32>& rows) {
        auto cls = rows;
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
        return true;
    });
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    // partition the block set into classes
    ExactCover part(static_cast<u32>(rep.blocks.size()));
    for (const auto& cls : classes) part.add_row(cls);
    part.solve([&](const std::vector<u32>& rows) {
        for (u32 r : rows) rep.parallel_classes.push_back(classes[r]);
        std::sort(rep.parallel_classes.begin(), rep.parallel_classes.end());
        return false;  // first partition suffices
    });
    rep.resolvable = !rep.parallel_classes.empty();
    return rep;
}

}  // namespace ogv

#endif  // OGV_ORTHOGOVAL_HPP
