// Explicit constructions of mutually orthogoval plane sets:
//   - conjugated-Cremona projective pairs for every prime power q,
//   - pencil-of-conics affine pairs for q = 2^n,
//   - phi_k affine triples for gcd(6k, n) = 1,
//   - the Z_13 difference-set quadruple of projective planes of order 3,
//   - the large set of STS(9): seven affine planes of order 3,
//   - matrix-power spread families (with the built-in seven-plane seeds
//     for q = 4 and q = 8).
//
// A family carries the planes on one shared point set together with the
// isomorphisms phi_i onto the first plane (as point permutations); these
// are what the covering-array compiler consumes.
#ifndef OGV_CONSTRUCTIONS_HPP
#define OGV_CONSTRUCTIONS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ogv/conic.hpp"
#include "ogv/orthogoval.hpp"
#include "ogv/spread.hpp"

namespace ogv {

struct PlaneFamily {
    std::string family;
    std::vector<PlaneIncidence> planes;        // shared point indexing and coordinates
    std::vector<std::vector<u32>> perms;       // perms[i][z] = phi_i(z), onto plane 0; perms[0] = identity
    std::vector<std::vector<u32>> proj_perms;  // when present: the same maps on the full PG(2,q) point set

    size_t size() const { return planes.size(); }
};

inline std::vector<u32> identity_perm(u32 m) {
    std::vector<u32> p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline std::vector<u32> inverse_perm(const std::vector<u32>& p) {
    std::vector<u32> inv(p.size());
    for (u32 i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

inline std::vector<std::vector<u32>> map_lines(const std::vector<std::vector<u32>>& lines, const std::vector<u32>& perm) {
    std::vector<std::vector<u32>> out;
    out.reserve(lines.size());
    for (const auto& line : lines) {
        std::vector<u32> img;
        img.reserve(line.size());
        for (u32 v : line) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        out.push_back(std::move(img));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjugated Cremona pairs

inline Coord cremona_point(const FieldSpec& F, const Coord& p) {
    int zeros = (p[0] == 0) + (p[1] == 0) + (p[2] == 0);
    if (zeros >= 2) throw std::invalid_argument("cremona_point: undefined at a fundamental point");
    return normalize_point(F, F.mul(p[1], p[2]), F.mul(p[0], p[2]), F.mul(p[0], p[1]));
}

struct CremonaContext {
    ExtFieldSpec ext;
    ExtFieldSpec::E omega{};
    std::array<std::array<ExtFieldSpec::E, 3>, 3> sigma{}, sigma_inv{};
    std::vector<u32> perm;  // induced involution of PG(2,q), canonical indices
};

namespace detail {

using E3 = std::array<ExtFieldSpec::E, 3>;

inline ExtFieldSpec::E det3_ext(const ExtFieldSpec& K, const E3& r0, const E3& r1, const E3& r2) {
    auto term = [&](const ExtFieldSpec::E& a, const ExtFieldSpec::E& b, const ExtFieldSpec::E& c) { return K.mul(a, K.mul(b, c)); };
    ExtFieldSpec::E d = term(r0[0], r1[1], r2[2]);
    d = K.add(d, term(r0[1], r1[2], r2[0]));
    d = K.add(d, term(r0[2], r1[0], r2[1]));
    d = K.sub(d, term(r0[2], r1[1], r2[0]));
    d = K.sub(d, term(r0[0], r1[2], r2[1]));
    d = K.sub(d, term(r0[1], r1[0], r2[2]));
    return d;
}

}  // namespace detail

// The conjugate triple (w : w^q : w^{q^2}), cycled, is non-collinear exactly
// when its 3x3 determinant is nonzero; this determinant equals the negated
// classical exclusion polynomial x^{3q^2} - 3x^{q^2+q+1} + x^{3q} + x^3.
inline bool conjugate_triple_independent(const ExtFieldSpec& K, const ExtFieldSpec::E& w) {
    const auto wq = K.frob_q(w);
    const auto wq2 = K.frob_q(wq);
    const auto det = detail::det3_ext(K, {w, wq, wq2}, {wq, wq2, w}, {wq2, w, wq});
    return !K.is_zero(det);
}

inline bool omega_polynomial_predicate(const ExtFieldSpec& K, const ExtFieldSpec::E& w) {
    const u64 q = K.base.q;
    auto v = K.pow(w, 3 * q * q);
    v = K.sub(v, K.scalar_mul(K.base.scale_int(3, 1), K.pow(w, q * q + q + 1)));
    v = K.add(v, K.pow(w, 3 * q));
    v = K.add(v, K.pow(w, 3));
    return !K.is_zero(v);
}

// First element (integer-code order) outside GF(q) whose conjugate triple is
// independent.
inline ExtFieldSpec::E find_omega(const ExtFieldSpec& K) {
    for (u64 code = K.base.q; code < K.size(); ++code) {
        const auto w = K.from_code(code);
        if (conjugate_triple_independent(K, w)) return w;
    }
    throw std::logic_error("find_omega: no admissible element");
}

inline CremonaContext build_cremona_context(const ExtFieldSpec& K) {
    CremonaContext ctx;
    ctx.ext = K;
    ctx.omega = find_omega(K);
    const auto w = ctx.omega;
    const auto wq = K.frob_q(w);
    const auto wq2 = K.frob_q(wq);
    const detail::E3 P1{w, wq, wq2}, P2{wq, wq2, w}, P3{wq2, w, wq};

    // scale columns so that sigma maps (1:1:1) to itself: [P1 P2 P3] l = (1,1,1)^T
    std::array<detail::E3, 3> A{detail::E3{P1[0], P2[0], P3[0]}, detail::E3{P1[1], P2[1], P3[1]}, detail::E3{P1[2], P2[2], P3[2]}};
    std::array<ExtFieldSpec::E, 3> rhs{K.one(), K.one(), K.one()};
    for (u32 col = 0, row = 0; col < 3; ++col) {
        u32 piv = row;
        while (piv < 3 && K.is_zero(A[piv][col])) ++piv;
        if (piv == 3) throw std::runtime_error("cremona: singular frame");
        std::swap(A[piv], A[row]);
        std::swap(rhs[piv], rhs[row]);
        const auto ipiv = K.inv(A[row][col]);
        for (u32 j = 0; j < 3; ++j) A[row][j] = K.mul(A[row][j], ipiv);
        rhs[row] = K.mul(rhs[row], ipiv);
        for (u32 i = 0; i < 3; ++i) {
            if (i == row || K.is_zero(A[i][col])) continue;
            const auto fct = A[i][col];
            for (u32 j = 0; j < 3; ++j) A[i][j] = K.sub(A[i][j], K.mul(fct, A[row][j]));
            rhs[i] = K.sub(rhs[i], K.mul(fct, rhs[row]));
        }
        ++row;
    }
    const std::array<ExtFieldSpec::E, 3> lambda = rhs;
    for (const auto& l : lambda)
        if (K.is_zero(l)) throw std::runtime_error("cremona: singular frame");
    const std::array<detail::E3, 3> cols{P1, P2, P3};
    for (u32 i = 0; i < 3; ++i)
        for (u32 j = 0; j < 3; ++j) ctx.sigma[i][j] = K.mul(lambda[j], cols[j][i]);

    // inverse by adjugate / determinant
    const auto det = detail::det3_ext(K, ctx.sigma[0], ctx.sigma[1], ctx.sigma[2]);
    if (K.is_zero(det)) throw std::runtime_error("cremona: singular frame");
    const auto idet = K.inv(det);
    auto& s = ctx.sigma;
    auto cof = [&](u32 i, u32 j) {
        const u32 r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return K.sub(K.mul(s[r0][c0], s[r1][c1]), K.mul(s[r0][c1], s[r1][c0]));
    };
    for (u32 i = 0; i < 3; ++i)
        for (u32 j = 0; j < 3; ++j) ctx.sigma_inv[i][j] = K.mul(idet, cof(j, i));

    // tabulate the conjugated map on PG(2,q)
    const FieldSpec& F = K.base;
    const u32 q = F.q;
    const u32 m = q * q + q + 1;
    const PlaneIncidence pg = build_pg(F);
    auto mat_apply = [&](const std::array<detail::E3, 3>& M, const detail::E3& v) {
        detail::E3 r{};
        for (u32 i = 0; i < 3; ++i) {
            r[i] = K.zero();
            for (u32 j = 0; j < 3; ++j) r[i] = K.add(r[i], K.mul(M[i][j], v[j]));
        }
        return r;
    };
    ctx.perm.assign(m, 0);
    std::vector<char> hit(m, 0);
    for (u32 idx = 0; idx < m; ++idx) {
        const Coord& c = pg.points[idx];
        detail::E3 v{K.embed(c[0]), K.embed(c[1]), K.embed(c[2])};
        detail::E3 x = mat_apply({ctx.sigma_inv[0], ctx.sigma_inv[1], ctx.sigma_inv[2]}, v);
        detail::E3 y{K.mul(x[1], x[2]), K.mul(x[0], x[2]), K.mul(x[0], x[1])};
        detail::E3 wv = mat_apply({ctx.sigma[0], ctx.sigma[1], ctx.sigma[2]}, y);
        // canonical normalization over GF(q^3), then descend to GF(q)
        u32 last = 3;
        for (u32 i = 3; i-- > 0;)
            if (!K.is_zero(wv[i])) { last = i; break; }
        if (last == 3) throw std::runtime_error("cremona: image vanished");
        const auto scale = K.inv(wv[last]);
        Coord img{};
        for (u32 i = 0; i < 3; ++i) {
            const auto e = K.mul(scale, wv[i]);
            if (!K.in_base(e)) throw std::runtime_error("cremona: image not in the subplane");
            img[i] = e[0];
        }
        const u32 to = canonical_point_index(q, normalize_point(F, img[0], img[1], img[2]));
        ctx.perm[idx] = to;
        hit[to] = 1;
    }
    for (char h : hit)
        if (!h) throw std::runtime_error("cremona: induced map not bijective");
    for (u32 idx = 0; idx < m; ++idx)
        if (ctx.perm[ctx.perm[idx]] != idx) throw std::runtime_error("cremona: induced map not an involution");
    return ctx;
}

// Pair of orthogoval PG(2,q): the standard plane and the image of its lines
// under Cr' = sigma . Cr . sigma^{-1}.
inline PlaneFamily cremona_pair(const FieldSpec& F) {
    const ExtFieldSpec K = cubic_extension(F);
    const CremonaContext ctx = build_cremona_context(K);
    PlaneFamily fam;
    fam.family = "cremona-pg";
    PlaneIncidence p1 = build_pg(F);
    PlaneIncidence p2 = p1;
    p2.lines = map_lines(p1.lines, ctx.perm);
    p1.provenance = "cremona-pg q=" + std::to_string(F.q) + "; plane 1 of 2";
    p2.provenance = "cremona-pg q=" + std::to_string(F.q) + "; plane 2 of 2";
    fam.planes = {std::move(p1), std::move(p2)};
    fam.perms = {identity_perm(fam.planes[0].num_points), inverse_perm(ctx.perm)};
    fam.proj_perms = fam.perms;
    const auto mr = is_mutually_orthogoval(fam.planes);
    if (!mr.mutually_orthogoval) throw std::runtime_error("cremona_pair: verification failed");
    if (!packing_inequality_holds(2, F.q, PlaneKind::projective)) throw std::runtime_error("cremona_pair: packing bound violated");
    return fam;
}

// ---------------------------------------------------------------------------
// Pencil-of-conics affine pairs (q = 2^n)

struct PencilContext {
    QuadraticForm phi, chi, psi;
    std::vector<u32> f_perm;  // f((x:y:z)) = (phi:chi:psi) on canonical PG(2,q) indices
};

inline PencilContext build_pencil_context(const FieldSpec& F) {
    if (F.p != 2) throw std::invalid_argument("pencil: characteristic 2 required");
    auto [b, c] = find_irreducible_cubic_depressed(F);
    PencilContext ctx;
    ctx.phi = {1, 0, 0, 1, 0, 0};  // x^2 + yz
    ctx.chi = {0, 1, 0, b, c, 0};  // y^2 + b yz + c xz
    ctx.psi = {0, 0, 1, 0, 0, 0};  // z^2
    pencil(F, ctx.phi, ctx.chi);   // validates the trivially intersecting pencil
    const u32 q = F.q;
    const u32 m = q * q + q + 1;
    const PlaneIncidence pg = build_pg(F);
    ctx.f_perm.assign(m, 0);
    std::vector<char> hit(m, 0);
    for (u32 idx = 0; idx < m; ++idx) {
        const Coord& p = pg.points[idx];
        const Coord img = normalize_point(F, ctx.phi.eval(F, p), ctx.chi.eval(F, p), ctx.psi.eval(F, p));
        const u32 to = canonical_point_index(q, img);
        ctx.f_perm[idx] = to;
        hit[to] = 1;
        if (p[2] == 1 && img[2] != 1) throw std::runtime_error("pencil: affine point escaped");
    }
    for (char h : hit)
        if (!h) throw std::runtime_error("pencil: map not bijective");
    return ctx;
}

struct PencilPair {
    PlaneFamily family;           // two affine planes
    PencilContext ctx;
    PlaneIncidence proj_a, proj_b;  // completions, orthogoval except the line z
    u32 line_z_index = 0;           // index of the line z in proj_a
};

inline PencilPair pencil_pair(u32 n) {
    if (n < 1 || n > 6) throw std::invalid_argument("pencil_pair: n out of range");
    const FieldSpec F = FieldSpec::make(2, n);
    const u32 q = F.q;
    PencilPair out;
    out.ctx = build_pencil_context(F);
    out.proj_a = build_pg(F);
    out.proj_b = out.proj_a;
    out.proj_b.lines = map_lines(out.proj_a.lines, out.ctx.f_perm);
    out.proj_b.provenance = "pencil-pg-image q=" + std::to_string(q);
    for (u32 li = 0; li < out.proj_a.lines.size(); ++li)
        if (out.proj_a.points[li][0] == 0 && out.proj_a.points[li][1] == 0) { out.line_z_index = li; break; }

    PlaneIncidence A = ag_from_pg(out.proj_a);
    PlaneIncidence B = A;
    std::vector<u32> affine_perm(out.ctx.f_perm.begin(), out.ctx.f_perm.begin() + q * q);
    B.lines = map_lines(A.lines, affine_perm);
    B.line_infinity.clear();
    A.provenance = "pencil-ag q=" + std::to_string(q) + "; plane 1 of 2";
    B.provenance = "pencil-ag q=" + std::to_string(q) + "; plane 2 of 2";
    out.family.family = "pencil-ag";
    out.family.planes = {std::move(A), std::move(B)};
    out.family.perms = {identity_perm(q * q), inverse_perm(affine_perm)};
    out.family.proj_perms = {identity_perm(q * q + q + 1), inverse_perm(out.ctx.f_perm)};
    const auto mr = is_mutually_orthogoval(out.family.planes);
    if (!mr.mutually_orthogoval) throw std::runtime_error("pencil_pair: verification failed");
    return out;
}

// ---------------------------------------------------------------------------
// phi_k affine triples

// phi_k(x, y) = (x^{2^k} + y, y^{2^k} + x + y), a bijection of GF(2^n)^2
// when gcd(3k, n) = 1; returned as a permutation of the canonical affine
// point indices.
inline std::vector<u32> phi_k_map(const FieldSpec& F, u32 k) {
    if (F.p != 2) throw std::invalid_argument("phi_k_map: characteristic 2 required");
    if (k < 1 || std::gcd(3 * k, F.n) != 1) throw std::invalid_argument("phi_k_map: gcd(3k, n) must be 1");
    const u32 q = F.q;
    const u64 e = u64{1} << k;
    std::vector<u32> perm(q * q);
    std::vector<char> hit(q * q, 0);
    for (u32 x = 0; x < q; ++x)
        for (u32 y = 0; y < q; ++y) {
            const u32 u = F.add(F.pow(x, e), y);
            const u32 v = F.add(F.pow(y, e), F.add(x, y));
            const u32 to = u * q + v;
            perm[x * q + y] = to;
            hit[to] = 1;
        }
    for (char h : hit)
        if (!h) throw std::runtime_error("phi_k_map: not a bijection");
    return perm;
}

inline PlaneFamily phi_k_triple(u32 n, u32 k) {
    if (std::gcd(6 * k, n) != 1) throw std::invalid_argument("phi_k_triple: gcd(6k, n) must be 1");
    const FieldSpec F = FieldSpec::make(2, n);
    const auto phi = phi_k_map(F, k);
    std::vector<u32> phi2(phi.size());
    for (u32 i = 0; i < phi.size(); ++i) phi2[i] = phi[phi[i]];
    PlaneIncidence A = ag_from_pg(build_pg(F));
    A.line_infinity.clear();
    PlaneIncidence B = A, C = A;
    B.lines = map_lines(A.lines, phi);
    C.lines = map_lines(A.lines, phi2);
    const std::string tag = "phi-k q=" + std::to_string(F.q) + " k=" + std::to_string(k);
    A.provenance = tag + "; plane 1 of 3";
    B.provenance = tag + "; plane 2 of 3";
    C.provenance = tag + "; plane 3 of 3";
    PlaneFamily fam;
    fam.family = "phi-k";
    fam.planes = {std::move(A), std::move(B), std::move(C)};
    fam.perms = {identity_perm(phi.size()), inverse_perm(phi), inverse_perm(phi2)};
    const auto mr = is_mutually_orthogoval(fam.planes);
    if (!mr.mutually_orthogoval) throw std::runtime_error("phi_k_triple: verification failed");
    if (!packing_inequality_holds(3, F.q, PlaneKind::affine)) throw std::runtime_error("phi_k_triple: packing bound violated");
    return fam;
}

// ---------------------------------------------------------------------------
// The Z_13 difference-set quadruple

// Coordinates for the cyclic model: point j carries the coordinates of
// alpha^{u j} over GF(3), with the unit u chosen so that the blocks of the
// first plane become collinear triples-of-four. The per-plane isomorphisms
// onto the first plane are multiplier maps j -> u_i j.
inline PlaneFamily ds_quadruple() {
    const std::array<std::array<u32, 4>, 4> bases{{{0, 1, 3, 9}, {0, 1, 5, 11}, {0, 1, 4, 6}, {0, 1, 8, 10}}};
    const FieldSpec F3 = FieldSpec::make(3, 1);
    PlaneFamily fam;
    fam.family = "ds13";
    std::vector<std::vector<std::vector<u32>>> all_lines;
    for (const auto& base : bases) {
        std::vector<std::vector<u32>> lines;
        for (u32 x = 0; x < 13; ++x) {
            std::vector<u32> line;
            for (u32 b : base) line.push_back((b + x) % 13);
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
        all_lines.push_back(std::move(lines));
    }

    const FieldSpec F27 = FieldSpec::make(3, 3);
    auto vec_of = [&](u32 u, u32 j) -> Coord {
        const u32 e = F27.pow(F27.generator, static_cast<u64>(u) * j);
        const auto d = F27.digits(e);
        return normalize_point(F3, d[0], d[1], d[2]);
    };
    auto rank_le2 = [&](u32 u, const std::vector<u32>& block) {
        std::vector<Coord> vs;
        for (u32 j : block) vs.push_back(vec_of(u, j));
        // all 3x3 minors of the 4 vectors must vanish
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                for (size_t c = b + 1; c < vs.size(); ++c) {
                    u32 det = F3.mul(vs[a][0], F3.sub(F3.mul(vs[b][1], vs[c][2]), F3.mul(vs[b][2], vs[c][1])));
                    det = F3.sub(det, F3.mul(vs[a][1], F3.sub(F3.mul(vs[b][0], vs[c][2]), F3.mul(vs[b][2], vs[c][0]))));
                    det = F3.add(det, F3.mul(vs[a][2], F3.sub(F3.mul(vs[b][0], vs[c][1]), F3.mul(vs[b][1], vs[c][0]))));
                    if (det != 0) return false;
                }
        return true;
    };
    u32 ustar = 0;
    for (u32 u = 1; u < 13 && ustar == 0; ++u) {
        bool ok = true;
        for (const auto& block : all_lines[0])
            if (!rank_le2(u, block)) { ok = false; break; }
        if (ok) ustar = u;
    }
    if (ustar == 0) throw std::logic_error("ds_quadruple: no coordinatizing unit");
    std::vector<Coord> coords;
    for (u32 j = 0; j < 13; ++j) coords.push_back(vec_of(ustar, j));

    // multiplier maps onto the first plane
    auto lines_sorted = [](std::vector<std::vector<u32>> ls) {
        std::sort(ls.begin(), ls.end());
        return ls;
    };
    const auto target = lines_sorted(all_lines[0]);
    for (u32 i = 0; i < 4; ++i) {
        u32 ui = 0;
        for (u32 u = 1; u < 13 && ui == 0; ++u) {
            std::vector<std::vector<u32>> mapped;
            for (const auto& line : all_lines[i]) {
                std::vector<u32> img;
                for (u32 v : line) img.push_back(v * u % 13);
                std::sort(img.begin(), img.end());
                mapped.push_back(std::move(img));
            }
            if (lines_sorted(std::move(mapped)) == target) ui = u;
        }
        if (ui == 0) throw std::logic_error("ds_quadruple: no multiplier map");
        std::vector<u32> perm(13);
        for (u32 j = 0; j < 13; ++j) perm[j] = j * ui % 13;
        fam.perms.push_back(std::move(perm));

        PlaneIncidence pl;
        pl.kind = PlaneKind::projective;
        pl.q = 3;
        pl.num_points = 13;
        pl.field = F3;
        pl.points = coords;
        pl.lines = all_lines[i];
        pl.provenance = "ds13; plane " + std::to_string(i + 1) + " of 4";
        fam.planes.push_back(std::move(pl));
    }
    for (const auto& pl : fam.planes) validate_plane(pl);
    const auto mr = is_mutually_orthogoval(fam.planes);
    if (!mr.mutually_orthogoval) throw std::runtime_error("ds_quadruple: verification failed");
    return fam;
}

// ---------------------------------------------------------------------------
// Plane isomorphism search (small planes)

// Lexicographically first isomorphism A -> B as a point map, or empty.
// Backtracking over point images with line-binding propagation.
inline std::optional<std::vector<u32>> plane_isomorphism(const PlaneIncidence& A, const PlaneIncidence& B) {
    const u32 m = A.num_points;
    if (B.num_points != m || A.lines.size() != B.lines.size()) return std::nullopt;
    if (m > 512) throw std::invalid_argument("plane_isomorphism: plane too large");
    auto pair_line = [&](const PlaneIncidence& P) {
        std::vector<int> t(static_cast<size_t>(m) * m, -1);
        for (u32 li = 0; li < P.lines.size(); ++li)
            for (u32 a : P.lines[li])
                for (u32 b : P.lines[li])
                    if (a != b) t[static_cast<size_t>(a) * m + b] = static_cast<int>(li);
        return t;
    };
    const auto pa = pair_line(A), pb = pair_line(B);
    std::vector<u32> img(m, 0);
    std::vector<char> used(m, 0);
    std::vector<int> line_map(A.lines.size(), -1);
    std::vector<char> line_used(B.lines.size(), 0);

    std::function<bool(u32)> rec = [&](u32 u) -> bool {
        if (u == m) {
            for (u32 li = 0; li < A.lines.size(); ++li) {
                std::vector<u32> mapped;
                for (u32 v : A.lines[li]) mapped.push_back(img[v]);
                std::sort(mapped.begin(), mapped.end());
                bool found = false;
                for (const auto& bl : B.lines)
                    if (bl == mapped) { found = true; break; }
                if (!found) return false;
            }
            return true;
        }
        for (u32 cand = 0; cand < m; ++cand) {
            if (used[cand]) continue;
            std::vector<std::pair<u32, int>> bound;
            bool ok = true;
            for (u32 w = 0; w < u && ok; ++w) {
                const int la = pa[static_cast<size_t>(u) * m + w];
                const int lb = pb[static_cast<size_t>(cand) * m + img[w]];
                if ((la < 0) != (lb < 0)) { ok = false; break; }
                if (la < 0) continue;
                if (line_map[static_cast<size_t>(la)] == -1) {
                    if (line_used[static_cast<size_t>(lb)]) { ok = false; break; }
                    line_map[static_cast<size_t>(la)] = lb;
                    line_used[static_cast<size_t>(lb)] = 1;
                    bound.emplace_back(static_cast<u32>(la), lb);
                } else if (line_map[static_cast<size_t>(la)] != lb) {
                    ok = false;
                }
            }
            if (ok) {
                img[u] = cand;
                used[cand] = 1;
                if (rec(u + 1)) return true;
                used[cand] = 0;
            }
            for (auto [la, lb] : bound) {
                line_map[la] = -1;
                line_used[static_cast<size_t>(lb)] = 0;
            }
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return img;
}

// ---------------------------------------------------------------------------
// The large set of STS(9)

// Seven affine planes of order 3 on 9 points whose 84 lines are pairwise
// distinct and exhaust all 3-subsets. Deterministic: candidate planes in
// lexicographic order, first exact completion taken.
inline PlaneFamily large_set_sts9() {
    const u32 m = 9;
    std::vector<std::array<u32, 3>> triples;
    for (u32 a = 0; a < m; ++a)
        for (u32 b = a + 1; b < m; ++b)
            for (u32 c = b + 1; c < m; ++c) triples.push_back({a, b, c});
    auto pair_rank = [&](u32 a, u32 b) { return a * m + b; };  // a < b, sparse is fine
    // enumerate all STS(9): exact covers of the 36 pairs by triples
    ExactCover ec(m * m);
    std::vector<u32> dummy_cols;  // unused pair slots stay empty -> pre-cover them
    std::vector<char> is_pair(m * m, 0);
    for (u32 a = 0; a < m; ++a)
        for (u32 b = a + 1; b < m; ++b) is_pair[pair_rank(a, b)] = 1;
    for (u32 r = 0; r < m * m; ++r)
        if (!is_pair[r]) ec.add_row({r});  // fillers for non-pair columns
    const u32 filler_rows = m * m - 36;
    std::vector<u32> triple_row(triples.size());
    for (u32 t = 0; t < triples.size(); ++t) {
        const auto& tr = triples[t];
        triple_row[t] = ec.add_row({pair_rank(tr[0], tr[1]), pair_rank(tr[0], tr[2]), pair_rank(tr[1], tr[2])});
    }
    std::vector<std::vector<u32>> systems;  // each: sorted triple ids
    ec.solve([&](const std::vector<u32>& rows) {
        std::vector<u32> sys;
        for (u32 r : rows)
            if (r >= filler_rows) sys.push_back(r - filler_rows);
        std::sort(sys.begin(), sys.end());
        systems.push_back(std::move(sys));
        return true;
    });
    std::sort(systems.begin(), systems.end());
    systems.erase(std::unique(systems.begin(), systems.end()), systems.end());

    // partition all 84 triples into 7 systems; rows tried in lexicographic order
    ExactCover part(static_cast<u32>(triples.size()));
    for (const auto& sys : systems) part.add_row(sys);
    std::vector<u32> chosen;
    part.solve([&](const std::vector<u32>& rows) {
        chosen = rows;
        return false;
    });
    if (chosen.size() != 7) throw std::logic_error("large_set_sts9: no completion");
    std::sort(chosen.begin(), chosen.end());

    const PlaneIncidence std_ag = ag_from_pg(build_pg(FieldSpec::make(3, 1)));
    PlaneFamily fam;
    fam.family = "sts9-large";
    for (u32 i = 0; i < 7; ++i) {
        PlaneIncidence pl;
        pl.kind = PlaneKind::affine;
        pl.q = 3;
        pl.num_points = m;
        pl.field = FieldSpec::make(3, 1);
        for (u32 t : systems[chosen[i]]) pl.lines.push_back({triples[t][0], triples[t][1], triples[t][2]});
        std::sort(pl.lines.begin(), pl.lines.end());
        pl.provenance = "sts9-large; plane " + std::to_string(i + 1) + " of 7";
        fam.planes.push_back(std::move(pl));
    }
    // coordinates: carry plane 1 onto the standard AG(2,3)
    const auto iso = plane_isomorphism(fam.planes[0], std_ag);
    if (!iso) throw std::logic_error("large_set_sts9: first plane is not an affine plane");
    std::vector<Coord> coords(m);
    for (u32 j = 0; j < m; ++j) coords[j] = std_ag.points[(*iso)[j]];
    for (auto& pl : fam.planes) pl.points = coords;
    fam.perms.push_back(identity_perm(m));
    for (u32 i = 1; i < 7; ++i) {
        const auto phi = plane_isomorphism(fam.planes[i], fam.planes[0]);
        if (!phi) throw std::logic_error("large_set_sts9: planes not isomorphic");
        fam.perms.push_back(*phi);
    }
    for (const auto& pl : fam.planes) validate_plane(pl);
    const auto mr = is_mutually_orthogoval(fam.planes);
    if (!mr.mutually_orthogoval) throw std::runtime_error("large_set_sts9: verification failed");
    return fam;
}

// ---------------------------------------------------------------------------
// Matrix-power spread families

struct MatrixPowerResult {
    PlaneFamily family;
    bool mutually_orthogoval = false;
};

inline MatrixPowerResult matrix_power_planes(const BinaryMatrix& M, u32 s, const SpreadF2& spread) {
    if (M.dim != 2 * spread.n) throw std::invalid_argument("matrix_power_planes: dimension mismatch");
    if (!M.invertible()) throw std::invalid_argument("matrix_power_planes: singular matrix");
    MatrixPowerResult out;
    out.family.family = "matrix-power";
    const BinaryMatrix Minv = s > 1 ? M.inverse() : BinaryMatrix::identity(M.dim);
    BinaryMatrix Mi = BinaryMatrix::identity(M.dim);
    BinaryMatrix Mi_inv = Mi;
    const u32 npts = 1u << M.dim;
    for (u32 i = 0; i < s; ++i) {
        PlaneIncidence pl = plane_from_spread(apply_matrix(Mi, spread));
        pl.provenance = "matrix-power n=" + std::to_string(spread.n) + "; plane " + std::to_string(i + 1) + " of " + std::to_string(s);
        out.family.planes.push_back(std::move(pl));
        std::vector<u32> perm(npts);
        for (u32 v = 0; v < npts; ++v) perm[v] = Mi_inv.apply(v);
        out.family.perms.push_back(std::move(perm));
        Mi = Mi.mul(M);
        Mi_inv = Mi_inv.mul(Minv);
    }
    out.mutually_orthogoval = is_mutually_orthogoval(out.family.planes).mutually_orthogoval;
    return out;
}

// Built-in seed matrices for the seven-plane families of orders 4 and 8.
inline BinaryMatrix seven_plane_seed(u32 q) {
    if (q == 4)
        return BinaryMatrix::from_bits({{0, 1, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}});
    if (q == 8)
        return BinaryMatrix::from_bits({{0, 1, 0, 1, 0, 1},
                                        {0, 0, 1, 0, 1, 1},
                                        {1, 1, 0, 0, 0, 0},
                                        {0, 0, 1, 1, 1, 1},
                                        {1, 1, 1, 0, 0, 1},
                                        {0, 0, 1, 1, 1, 0}});
    throw std::invalid_argument("seven_plane_seed: only q = 4 and q = 8");
}

inline MatrixPowerResult seven_plane_family(u32 q) {
    const u32 n = q == 4 ? 2u : q == 8 ? 3u : throw std::invalid_argument("seven_plane_family: only q = 4 and q = 8");
    auto out = matrix_power_planes(seven_plane_seed(q), 7, line_spread(n));
    if (!out.mutually_orthogoval) throw std::runtime_error("seven_plane_family: verification failed");
    return out;
}

}  // namespace ogv

#endif  // OGV_CONSTRUCTIONS_HPP
