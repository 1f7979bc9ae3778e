// PG(2,q) and AG(2,q) incidence structures over GF(q).
//
// Canonical point order: affine points (x:y:1) sorted by (code(x), code(y)),
// then the infinite points (x:1:0) by code(x), then (1:0:0). Lines are
// stored as ascending point-index lists; index lists are authoritative for
// all verification.
#ifndef OGV_PLANE_HPP
#define OGV_PLANE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ogv/field.hpp"

namespace ogv {

enum class PlaneKind { projective, affine };

using Coord = std::array<u32, 3>;

inline Coord normalize_point(const FieldSpec& f, u32 x, u32 y, u32 z) {
    if (x == 0 && y == 0 && z == 0) throw std::invalid_argument("projective point cannot be zero");
    if (z != 0) {
        const u32 zi = f.inv(z);
        return {f.mul(x, zi), f.mul(y, zi), 1};
    }
    if (y != 0) {
        const u32 yi = f.inv(y);
        return {f.mul(x, yi), 1, 0};
    }
    return {1, 0, 0};
}

// Index of a canonically normalized point in the canonical order.
inline u32 canonical_point_index(u32 q, const Coord& c) {
    if (c[2] == 1) return c[0] * q + c[1];
    if (c[1] == 1) return q * q + c[0];
    return q * q + q;
}

struct PlaneIncidence {
    PlaneKind kind = PlaneKind::projective;
    u32 q = 0;
    u32 num_points = 0;
    FieldSpec field = FieldSpec::make(2, 1);
    std::vector<Coord> points;               // coordinates per point index
    std::vector<std::vector<u32>> lines;     // ascending point-index lists
    std::vector<u32> line_infinity;          // affine planes cut from a projective one:
                                             // per line, the deleted infinite point (projective index)
    std::string provenance;

    u32 line_size() const { return kind == PlaneKind::projective ? q + 1 : q; }
    u32 expected_lines() const { return kind == PlaneKind::projective ? q * q + q + 1 : q * q + q; }
};

// Desarguesian PG(2,q). Lines are enumerated by their dual triples [a:b:c]
// in the same canonical order as points; each line's points are generated
// in ascending index order directly.
inline PlaneIncidence build_pg(const FieldSpec& f) {
    const u32 q = f.q;
    if (q > 128) throw std::invalid_argument("plane order above 128 unsupported");
    PlaneIncidence pl;
    pl.kind = PlaneKind::projective;
    pl.q = q;
    pl.num_points = q * q + q + 1;
    pl.field = f;
    pl.points.reserve(pl.num_points);
    for (u32 x = 0; x < q; ++x)
        for (u32 y = 0; y < q; ++y) pl.points.push_back({x, y, 1});
    for (u32 x = 0; x < q; ++x) pl.points.push_back({x, 1, 0});
    pl.points.push_back({1, 0, 0});

    std::vector<Coord> duals = pl.points;  // same canonical enumeration
    pl.lines.reserve(pl.num_points);
    for (const Coord& d : duals) {
        const u32 a = d[0], b = d[1], c = d[2];
        std::vector<u32> line;
        line.reserve(q + 1);
        if (a == 0 && b == 0) {
            // the line z: all infinite points
            for (u32 i = 0; i <= q; ++i) line.push_back(q * q + i);
        } else {
            if (b != 0) {
                const u32 bi = f.inv(b);
                for (u32 x = 0; x < q; ++x) {
                    const u32 y = f.mul(f.neg(f.add(f.mul(a, x), c)), bi);
                    line.push_back(x * q + y);
                }
            } else {
                const u32 x = f.mul(f.neg(c), f.inv(a));
                for (u32 y = 0; y < q; ++y) line.push_back(x * q + y);
            }
            // infinite point: a x + b = 0 with y = 1, else (1:0:0) when a = 0
            if (a != 0)
                line.push_back(q * q + f.mul(f.neg(b), f.inv(a)));
            else
                line.push_back(q * q + q);
        }
        pl.lines.push_back(std::move(line));
    }
    pl.provenance = "pg q=" + std::to_string(q);
    return pl;
}

// Remove the line z and truncate the remaining lines; keeps the map from
// each affine line to its deleted infinite point.
inline PlaneIncidence ag_from_pg(const PlaneIncidence& pg) {
    if (pg.kind != PlaneKind::projective) throw std::invalid_argument("ag_from_pg requires a projective plane");
    const u32 q = pg.q;
    const u32 affine = q * q;
    PlaneIncidence pl;
    pl.kind = PlaneKind::affine;
    pl.q = q;
    pl.num_points = affine;
    pl.field = pg.field;
    pl.points.assign(pg.points.begin(), pg.points.begin() + affine);
    for (const auto& line : pg.lines) {
        std::vector<u32> trunc;
        u32 inf = 0;
        for (u32 v : line)
            if (v < affine)
                trunc.push_back(v);
            else
                inf = v;
        if (trunc.empty()) continue;  // the line z
        pl.lines.push_back(std::move(trunc));
        pl.line_infinity.push_back(inf);
    }
    pl.provenance = "ag q=" + std::to_string(q);
    return pl;
}

// Structural check: line sizes, point degrees, and exact pair coverage
// (every point pair on exactly one line). Throws with a description.
inline void validate_plane(const PlaneIncidence& pl) {
    const u32 m = pl.num_points;
    const u32 ls = pl.line_size();
    if (pl.lines.size() != pl.expected_lines()) throw std::runtime_error("plane: wrong line count");
    std::vector<std::vector<u32>> thru(m);
    for (u32 li = 0; li < pl.lines.size(); ++li) {
        const auto& line = pl.lines[li];
        if (line.size() != ls) throw std::runtime_error("plane: wrong line size");
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] >= m) throw std::runtime_error("plane: point index out of range");
            if (i > 0 && line[i] <= line[i - 1]) throw std::runtime_error("plane: line not strictly ascending");
            thru[line[i]].push_back(li);
        }
    }
    for (u32 v = 0; v < m; ++v)
        if (thru[v].size() != pl.q + 1) throw std::runtime_error("plane: wrong point degree");
    // pair coverage via a per-point census
    std::vector<u32> stamp(m, 0), seen(m, 0);
    u32 epoch = 0;
    for (u32 u = 0; u < m; ++u) {
        ++epoch;
        for (u32 li : thru[u])
            for (u32 v : pl.lines[li]) {
                if (v == u) continue;
                if (stamp[v] == epoch) throw std::runtime_error("plane: point pair on two lines");
                stamp[v] = epoch;
                ++seen[u];
            }
        if (seen[u] != m - 1) throw std::runtime_error("plane: point pair uncovered");
    }
    if (pl.kind == PlaneKind::affine) {
        // parallelism (disjointness) must split the lines into q+1 classes of q
        if (m <= 4096) {
            std::vector<int> cls(pl.lines.size(), -1);
            int nc = 0;
            for (u32 i = 0; i < pl.lines.size(); ++i) {
                if (cls[i] >= 0) continue;
                cls[i] = nc;
                for (u32 j = i + 1; j < pl.lines.size(); ++j) {
                    if (cls[j] >= 0) continue;
                    const auto &A = pl.lines[i], &B = pl.lines[j];
                    size_t a = 0, b = 0;
                    bool meet = false;
                    while (a < A.size() && b < B.size()) {
                        if (A[a] < B[b]) ++a;
                        else if (B[b] < A[a]) ++b;
                        else { meet = true; break; }
                    }
                    if (!meet) cls[j] = nc;
                }
                ++nc;
            }
            if (nc != static_cast<int>(pl.q + 1)) throw std::runtime_error("plane: wrong number of parallel classes");
            std::vector<u32> sz(static_cast<size_t>(nc), 0);
            for (int c : cls) ++sz[static_cast<size_t>(c)];
            for (u32 s : sz)
                if (s != pl.q) throw std::runtime_error("plane: unbalanced parallel class");
        }
    }
}

// Point -> incident line ids.
inline std::vector<std::vector<u32>> lines_through(const PlaneIncidence& pl) {
    std::vector<std::vector<u32>> thru(pl.num_points);
    for (u32 li = 0; li < pl.lines.size(); ++li)
        for (u32 v : pl.lines[li]) thru[v].push_back(li);
    return thru;
}

// No three points of `set` collinear in `pl`, checked against every line.
inline bool is_arc(const PlaneIncidence& pl, const std::vector<u32>& set) {
    std::vector<char> member(pl.num_points, 0);
    for (u32 v : set) member[v] = 1;
    for (const auto& line : pl.lines) {
        u32 cnt = 0;
        for (u32 v : line)
            if (member[v] && ++cnt > 2) return false;
    }
    return true;
}

inline bool is_oval(const PlaneIncidence& pl, const std::vector<u32>& set) {
    return set.size() == pl.q + 1 && is_arc(pl, set);
}

}  // namespace ogv

#endif  // OGV_PLANE_HPP
