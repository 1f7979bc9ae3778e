// Subspace spreads of F_2^{2n} and GL(2n, F_2) elements.
//
// Vectors of F_2^{2n} are the integer codes of GF(2^{2n}) elements: bit k is
// the coefficient of x^k in the polynomial basis. Matrices are stored as
// printed, acting on the coordinate vector (t_0 ... t_{2n-1}) where t_j is
// the coefficient of x^{2n-1-j}; a code-oriented row set is derived once so
// that apply() works on codes directly.
#ifndef OGV_SPREAD_HPP
#define OGV_SPREAD_HPP

#include <algorithm>
#include <bit>
#include <vector>

#include "ogv/plane.hpp"

namespace ogv {

struct SpreadF2 {
    u32 n = 0;                             // members have size 2^n inside F_2^{2n}
    std::vector<std::vector<u32>> members; // each sorted, contains 0
};

inline void validate_spread(const SpreadF2& sp) {
    const u32 q = 1u << sp.n;
    const u32 total = q * q;
    if (sp.members.size() != q + 1) throw std::runtime_error("spread: wrong member count");
    std::vector<u32> cover(total, 0);
    for (const auto& S : sp.members) {
        if (S.size() != q) throw std::runtime_error("spread: wrong member size");
        std::vector<char> in(total, 0);
        for (u32 v : S) {
            if (v >= total) throw std::runtime_error("spread: vector out of range");
            in[v] = 1;
        }
        if (!in[0]) throw std::runtime_error("spread: member misses 0");
        for (u32 v : S)
            for (u32 w : S)
                if (!in[v ^ w]) throw std::runtime_error("spread: member not additively closed");
        for (u32 v : S) ++cover[v];
    }
    for (u32 v = 1; v < total; ++v)
        if (cover[v] != 1) throw std::runtime_error("spread: nonzero vector not covered exactly once");
}

// The 2^n+1 cyclotomic cosets of <w^{q+1}> in GF(q^2)*, each with 0
// adjoined; w is the designated generator of the default GF(2^{2n}) field.
inline SpreadF2 line_spread(u32 n) {
    if (n < 1 || n > 8) throw std::invalid_argument("line_spread: n out of range");
    const FieldSpec F2n = FieldSpec::make(2, 2 * n);
    const u32 q = 1u << n;
    SpreadF2 sp;
    sp.n = n;
    const u32 sub = F2n.pow(F2n.generator, q + 1);
    for (u32 i = 0; i <= q; ++i) {
        std::vector<u32> S{0};
        u32 x = F2n.pow(F2n.generator, i);
        for (u32 j = 0; j < q - 1; ++j) {
            S.push_back(x);
            x = F2n.mul(x, sub);
        }
        std::sort(S.begin(), S.end());
        sp.members.push_back(std::move(S));
    }
    validate_spread(sp);
    return sp;
}

// Coordinates for the points of a spread plane: GF(q^2) decomposed over the
// embedded subfield GF(q) in the basis (w, 1), then carried to the abstract
// GF(q) through the subfield isomorphism zeta = w^{q+1} -> root of its
// minimal polynomial. Gives (x, y, 1) triples such that the line-spread
// plane is the standard AG(2,q) in these coordinates.
inline std::vector<Coord> spread_plane_coords(u32 n) {
    const FieldSpec F2n = FieldSpec::make(2, 2 * n);
    const FieldSpec Fq = FieldSpec::make(2, n);
    const u32 q = Fq.q;
    const u32 zeta = F2n.pow(F2n.generator, q + 1);
    // minimal polynomial of zeta over GF(2): prod (x - zeta^{2^i})
    std::vector<u32> mp{1};  // constant-first, coefficients in GF(2^{2n})
    u32 conj = zeta;
    for (u32 i = 0; i < n; ++i) {
        std::vector<u32> next(mp.size() + 1, 0);
        for (size_t j = 0; j < mp.size(); ++j) {
            next[j + 1] = F2n.add(next[j + 1], mp[j]);
            next[j] = F2n.add(next[j], F2n.mul(conj, mp[j]));
        }
        mp = std::move(next);
        conj = F2n.mul(conj, conj);
    }
    for (u32 c : mp)
        if (c > 1) throw std::logic_error("subfield minimal polynomial not over GF(2)");
    u32 root = 0;
    for (u32 r = 0; r < q && root == 0; ++r) {
        u32 v = 0, xp = 1;
        for (size_t j = 0; j < mp.size(); ++j) {
            if (mp[j]) v = Fq.add(v, xp);
            xp = Fq.mul(xp, r);
        }
        if (v == 0) root = r;
    }
    if (root == 0) throw std::logic_error("no root of subfield minimal polynomial");
    // zeta^j -> root^j, checked additive below
    std::vector<u32> sub_to_abs(q * q, 0);  // embedded subfield element -> abstract code (q*q sentinel size)
    std::vector<u32> abs_to_sub(q, 0);
    u32 ze = 1, re = 1;
    for (u32 j = 0; j < q - 1; ++j) {
        sub_to_abs[ze] = re;
        abs_to_sub[re] = ze;
        ze = F2n.mul(ze, zeta);
        re = Fq.mul(re, root);
    }
    for (u32 a = 1; a < q; ++a)
        for (u32 b = 1; b < q; ++b) {
            const u32 s = F2n.add(abs_to_sub[a], abs_to_sub[b]);
            const u32 t = Fq.add(a, b);
            if ((s == 0) != (t == 0)) throw std::logic_error("subfield map not additive");
            if (s != 0 && sub_to_abs[s] != t) throw std::logic_error("subfield map not additive");
        }
    std::vector<Coord> coords(q * q, Coord{0, 0, 1});
    const u32 w = F2n.generator;
    for (u32 x = 0; x < q; ++x)
        for (u32 y = 0; y < q; ++y) {
            const u32 v = F2n.add(F2n.mul(abs_to_sub[x], w), abs_to_sub[y]);
            coords[v] = {x, y, 1};
        }
    return coords;
}

// Translation plane: lines are all cosets of the spread members. Point i is
// the vector with code i.
inline PlaneIncidence plane_from_spread(const SpreadF2& sp) {
    validate_spread(sp);
    const u32 q = 1u << sp.n;
    const u32 m = q * q;
    PlaneIncidence pl;
    pl.kind = PlaneKind::affine;
    pl.q = q;
    pl.num_points = m;
    pl.field = FieldSpec::make(2, sp.n);
    pl.points = spread_plane_coords(sp.n);
    for (const auto& S : sp.members) {
        std::vector<char> used(m, 0);
        for (u32 rep = 0; rep < m; ++rep) {
            if (used[rep]) continue;
            std::vector<u32> line;
            line.reserve(q);
            for (u32 s : S) {
                line.push_back(rep ^ s);
                used[rep ^ s] = 1;
            }
            std::sort(line.begin(), line.end());
            pl.lines.push_back(std::move(line));
        }
    }
    pl.provenance = "spread n=" + std::to_string(sp.n);
    return pl;
}

struct BinaryMatrix {
    u32 dim = 0;
    std::vector<u32> rows;       // printed: bit j of rows[i] is entry (i, j)
    std::vector<u32> code_rows;  // code_rows[k] & v feeds result bit k

    BinaryMatrix() = default;
    explicit BinaryMatrix(u32 d, std::vector<u32> printed = {}) : dim(d), rows(std::move(printed)) {
        if (rows.empty()) rows.assign(dim, 0);
        if (rows.size() != dim) throw std::invalid_argument("matrix: wrong row count");
        rebuild_code_rows();
    }
    static BinaryMatrix identity(u32 d) {
        BinaryMatrix m(d);
        for (u32 i = 0; i < d; ++i) m.rows[i] = 1u << i;
        m.rebuild_code_rows();
        return m;
    }
    static BinaryMatrix from_bits(const std::vector<std::vector<u32>>& bits) {
        const u32 d = static_cast<u32>(bits.size());
        std::vector<u32> rows(d, 0);
        for (u32 i = 0; i < d; ++i) {
            if (bits[i].size() != d) throw std::invalid_argument("matrix: not square");
            for (u32 j = 0; j < d; ++j)
                if (bits[i][j]) rows[i] |= 1u << j;
        }
        return BinaryMatrix(d, rows);
    }
    static BinaryMatrix from_code_rows(u32 d, const std::vector<u32>& code_rows) {
        BinaryMatrix m(d);
        for (u32 i = 0; i < d; ++i) {
            u32 r = 0;
            const u32 cr = code_rows[d - 1 - i];
            for (u32 j = 0; j < d; ++j)
                if (cr >> (d - 1 - j) & 1) r |= 1u << j;
            m.rows[i] = r;
        }
        m.rebuild_code_rows();
        return m;
    }

    void rebuild_code_rows() {
        code_rows.assign(dim, 0);
        for (u32 i = 0; i < dim; ++i) {
            u32 cr = 0;
            for (u32 j = 0; j < dim; ++j)
                if (rows[i] >> j & 1) cr |= 1u << (dim - 1 - j);
            code_rows[dim - 1 - i] = cr;
        }
    }

    u32 bit(u32 i, u32 j) const { return rows[i] >> j & 1; }
    u32 apply(u32 v) const {
        u32 r = 0;
        for (u32 k = 0; k < dim; ++k) r |= static_cast<u32>(std::popcount(code_rows[k] & v) & 1) << k;
        return r;
    }
    BinaryMatrix mul(const BinaryMatrix& o) const {
        BinaryMatrix r(dim);
        for (u32 i = 0; i < dim; ++i) {
            u32 row = 0;
            for (u32 j = 0; j < dim; ++j) {
                u32 s = 0;
                for (u32 k = 0; k < dim; ++k) s ^= bit(i, k) & o.bit(k, j);
                if (s) row |= 1u << j;
            }
            r.rows[i] = row;
        }
        r.rebuild_code_rows();
        return r;
    }
    u32 rank() const {
        std::vector<u32> rs = rows;
        u32 rk = 0;
        for (u32 col = 0; col < dim; ++col) {
            u32 piv = rk;
            while (piv < dim && !(rs[piv] >> col & 1)) ++piv;
            if (piv == dim) continue;
            std::swap(rs[rk], rs[piv]);
            for (u32 i = 0; i < dim; ++i)
                if (i != rk && (rs[i] >> col & 1)) rs[i] ^= rs[rk];
            ++rk;
        }
        return rk;
    }
    bool invertible() const { return rank() == dim; }
    BinaryMatrix inverse() const {
        std::vector<u32> a = rows;
        BinaryMatrix inv = identity(dim);
        std::vector<u32> b = inv.rows;
        u32 rk = 0;
        for (u32 col = 0; col < dim; ++col) {
            u32 piv = rk;
            while (piv < dim && !(a[piv] >> col & 1)) ++piv;
            if (piv == dim) throw std::invalid_argument("matrix: singular");
            std::swap(a[rk], a[piv]);
            std::swap(b[rk], b[piv]);
            for (u32 i = 0; i < dim; ++i)
                if (i != rk && (a[i] >> col & 1)) { a[i] ^= a[rk]; b[i] ^= b[rk]; }
            ++rk;
        }
        // rows are now a permuted identity with a[i] having bit at its pivot column
        std::vector<u32> out(dim, 0);
        for (u32 i = 0; i < dim; ++i) {
            const u32 col = static_cast<u32>(std::countr_zero(a[i]));
            out[col] = b[i];
        }
        return BinaryMatrix(dim, out);
    }
    BinaryMatrix power(u32 e) const {
        BinaryMatrix r = identity(dim);
        for (u32 i = 0; i < e; ++i) r = r.mul(*this);
        return r;
    }
    bool operator==(const BinaryMatrix& o) const { return dim == o.dim && rows == o.rows; }
    bool operator<(const BinaryMatrix& o) const { return rows < o.rows; }
};

inline SpreadF2 apply_matrix(const BinaryMatrix& M, const SpreadF2& sp) {
    if (M.dim != 2 * sp.n) throw std::invalid_argument("matrix/spread dimension mismatch");
    SpreadF2 out;
    out.n = sp.n;
    for (const auto& S : sp.members) {
        std::vector<u32> T;
        T.reserve(S.size());
        for (u32 v : S) T.push_back(M.apply(v));
        std::sort(T.begin(), T.end());
        out.members.push_back(std::move(T));
    }
    return out;
}

}  // namespace ogv

#endif  // OGV_SPREAD_HPP
