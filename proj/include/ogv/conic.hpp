// Ternary quadratic forms a x^2 + b y^2 + c z^2 + f yz + g xz + h xy over
// GF(q), their point sets in PG(2,q), singularity via formal partials
// (characteristic-aware), the translation-oval criterion for q = 2^n, and
// pencils of conics.
#ifndef OGV_CONIC_HPP
#define OGV_CONIC_HPP

#include <algorithm>
#include <vector>

#include "ogv/plane.hpp"

namespace ogv {

struct QuadraticForm {
    // coefficients of x^2, y^2, z^2, yz, xz, xy
    u32 a = 0, b = 0, c = 0, f = 0, g = 0, h = 0;

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && f == 0 && g == 0 && h == 0; }

    u32 eval(const FieldSpec& F, const Coord& p) const {
        const u32 x = p[0], y = p[1], z = p[2];
        u32 v = F.mul(a, F.mul(x, x));
        v = F.add(v, F.mul(b, F.mul(y, y)));
        v = F.add(v, F.mul(c, F.mul(z, z)));
        v = F.add(v, F.mul(f, F.mul(y, z)));
        v = F.add(v, F.mul(g, F.mul(x, z)));
        v = F.add(v, F.mul(h, F.mul(x, y)));
        return v;
    }

    QuadraticForm scaled(const FieldSpec& F, u32 s) const {
        return {F.mul(s, a), F.mul(s, b), F.mul(s, c), F.mul(s, f), F.mul(s, g), F.mul(s, h)};
    }
    QuadraticForm plus(const FieldSpec& F, const QuadraticForm& o) const {
        return {F.add(a, o.a), F.add(b, o.b), F.add(c, o.c), F.add(f, o.f), F.add(g, o.g), F.add(h, o.h)};
    }
};

// Exact zero set over the canonical points of PG(2,q), ascending indices.
inline std::vector<u32> conic_points(const FieldSpec& F, const QuadraticForm& Q) {
    if (Q.is_zero()) throw std::invalid_argument("conic_points: zero form");
    const u32 q = F.q;
    std::vector<u32> pts;
    u32 idx = 0;
    for (u32 x = 0; x < q; ++x)
        for (u32 y = 0; y < q; ++y, ++idx)
            if (Q.eval(F, {x, y, 1}) == 0) pts.push_back(idx);
    for (u32 x = 0; x < q; ++x)
        if (Q.eval(F, {x, 1, 0}) == 0) pts.push_back(q * q + x);
    if (Q.eval(F, {1, 0, 0}) == 0) pts.push_back(q * q + q);
    return pts;
}

// Formal partials with characteristic-aware coefficients:
//   dQ/dx = 2a x + h y + g z,  dQ/dy = 2b y + h x + f z,  dQ/dz = 2c z + g x + f y.
// A perfect-square detector supplements the test in characteristic 2, where
// a double line (f = g = h = 0) has identically vanishing partials.
inline bool is_nonsingular(const FieldSpec& F, const QuadraticForm& Q) {
    if (Q.is_zero()) throw std::invalid_argument("is_nonsingular: zero form");
    if (F.p == 2 && Q.f == 0 && Q.g == 0 && Q.h == 0) return false;  // (ux+vy+wz)^2
    const u32 q = F.q;
    auto singular_at = [&](const Coord& p) {
        const u32 x = p[0], y = p[1], z = p[2];
        if (Q.eval(F, p) != 0) return false;
        const u32 dx = F.add(F.scale_int(2, F.mul(Q.a, x)), F.add(F.mul(Q.h, y), F.mul(Q.g, z)));
        const u32 dy = F.add(F.scale_int(2, F.mul(Q.b, y)), F.add(F.mul(Q.h, x), F.mul(Q.f, z)));
        const u32 dz = F.add(F.scale_int(2, F.mul(Q.c, z)), F.add(F.mul(Q.g, x), F.mul(Q.f, y)));
        return dx == 0 && dy == 0 && dz == 0;
    };
    for (u32 x = 0; x < q; ++x)
        for (u32 y = 0; y < q; ++y)
            if (singular_at({x, y, 1})) return false;
    for (u32 x = 0; x < q; ++x)
        if (singular_at({x, 1, 0})) return false;
    if (singular_at({1, 0, 0})) return false;
    return true;
}

// Translation-oval criterion for q = 2^n: h = c = 0 and the zero set is an
// oval (q+1 points, no three collinear).
inline bool is_translation_oval(const FieldSpec& F, const QuadraticForm& Q, const PlaneIncidence& pg) {
    if (F.p != 2) throw std::invalid_argument("is_translation_oval requires characteristic 2");
    if (Q.h != 0 || Q.c != 0) return false;
    return is_oval(pg, conic_points(F, Q));
}

// Direct definition: the affine representatives are closed under
// coordinatewise addition.
inline bool is_translation_oval_direct(const FieldSpec& F, const QuadraticForm& Q, const PlaneIncidence& pg) {
    if (F.p != 2) throw std::invalid_argument("requires characteristic 2");
    auto pts = conic_points(F, Q);
    if (!is_oval(pg, pts)) return false;
    const u32 q = F.q;
    std::vector<Coord> aff;
    for (u32 i : pts)
        if (i < q * q) aff.push_back({i / q, i % q, 1});
    std::vector<char> member(q * q, 0);
    for (const Coord& p : aff) member[p[0] * q + p[1]] = 1;
    for (const Coord& u : aff)
        for (const Coord& v : aff) {
            const u32 sx = F.add(u[0], v[0]), sy = F.add(u[1], v[1]);
            if (!member[sx * q + sy]) return false;
        }
    return true;
}

// Pencil {alpha*phi + beta*chi : (alpha:beta) in PG(1,q)}: q+1 members,
// each nonsingular, pairwise meeting only at (0:0:1) inside PG(2,q).
inline std::vector<QuadraticForm> pencil(const FieldSpec& F, const QuadraticForm& phi, const QuadraticForm& chi) {
    const u32 q = F.q;
    std::vector<QuadraticForm> members;
    for (u32 alpha = 0; alpha < q; ++alpha) members.push_back(phi.scaled(F, alpha).plus(F, chi));
    members.push_back(phi);
    const u32 vertex = canonical_point_index(q, {0, 0, 1});
    std::vector<std::vector<u32>> pts;
    for (const auto& m : members) {
        if (!is_nonsingular(F, m)) throw std::runtime_error("pencil: singular member");
        pts.push_back(conic_points(F, m));
    }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            std::vector<u32> shared;
            std::set_intersection(pts[i].begin(), pts[i].end(), pts[j].begin(), pts[j].end(), std::back_inserter(shared));
            if (shared.size() != 1 || shared[0] != vertex) throw std::runtime_error("pencil: nontrivial intersection");
        }
    return members;
}

}  // namespace ogv

#endif  // OGV_CONIC_HPP
