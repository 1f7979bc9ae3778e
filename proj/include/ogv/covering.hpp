// Covering perfect hash families compiled from verified plane sets, their
// two-column Sherwood extension, and the expansion into strength-3 covering
// arrays of configurable index.
//
// A CPHF entry is a nonzero 3-vector over GF(q); a set T of three columns
// is covered by a row when its three entries are linearly independent. The
// Sherwood form keeps every entry's last coordinate equal to 1; the
// extended form adds two designated columns carrying line-z vectors (last
// coordinate 0).
#ifndef OGV_COVERING_HPP
#define OGV_COVERING_HPP

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "ogv/constructions.hpp"

namespace ogv {

using Vec3 = std::array<u32, 3>;

struct CphfArray {
    u32 rows = 0, k = 0, q = 0;
    bool sherwood = false, extended = false;
    u32 lambda = 0;  // verified index
    FieldSpec field = FieldSpec::make(2, 1);
    std::vector<Vec3> entries;  // row-major

    const Vec3& at(u32 i, u32 z) const { return entries[static_cast<size_t>(i) * k + z]; }
    Vec3& at(u32 i, u32 z) { return entries[static_cast<size_t>(i) * k + z]; }
};

inline u32 det3(const FieldSpec& F, const Vec3& a, const Vec3& b, const Vec3& c) {
    u32 d = F.mul(a[0], F.sub(F.mul(b[1], c[2]), F.mul(b[2], c[1])));
    d = F.sub(d, F.mul(a[1], F.sub(F.mul(b[0], c[2]), F.mul(b[2], c[0]))));
    d = F.add(d, F.mul(a[2], F.sub(F.mul(b[0], c[1]), F.mul(b[1], c[0]))));
    return d;
}

// Exact index: the minimum over all column triples of the number of rows
// with linearly independent entries.
inline u32 verify_cphf(const CphfArray& C) {
    const FieldSpec& F = C.field;
    for (const auto& e : C.entries)
        if (e[0] == 0 && e[1] == 0 && e[2] == 0) throw std::invalid_argument("verify_cphf: zero entry");
    u32 lambda = C.rows;
    for (u32 a = 0; a < C.k; ++a)
        for (u32 b = a + 1; b < C.k; ++b)
            for (u32 c = b + 1; c < C.k; ++c) {
                u32 cnt = 0;
                for (u32 i = 0; i < C.rows; ++i)
                    if (det3(F, C.at(i, a), C.at(i, b), C.at(i, c)) != 0) ++cnt;
                lambda = std::min(lambda, cnt);
                if (lambda == 0) return 0;
            }
    return lambda;
}

// C_{iz} = phi_i(z) in the coordinates of the first plane. Affine families
// produce Sherwood arrays. The permutations are validated as isomorphisms
// onto the first plane before the entries are emitted.
inline CphfArray cphf_from_planes(const PlaneFamily& fam) {
    if (fam.planes.empty()) throw std::invalid_argument("cphf_from_planes: empty family");
    if (fam.perms.size() != fam.planes.size()) throw std::invalid_argument("cphf_from_planes: missing permutation provenance");
    const PlaneIncidence& first = fam.planes[0];
    const u32 m = first.num_points;
    CphfArray C;
    C.rows = static_cast<u32>(fam.planes.size());
    C.k = m;
    C.q = first.q;
    C.field = first.field;
    C.entries.resize(static_cast<size_t>(C.rows) * m);

    std::vector<std::vector<u32>> sorted_first = first.lines;
    std::sort(sorted_first.begin(), sorted_first.end());
    for (u32 i = 0; i < C.rows; ++i) {
        const auto& perm = fam.perms[i];
        if (perm.size() != m) throw std::invalid_argument("cphf_from_planes: permutation size mismatch");
        for (const auto& line : fam.planes[i].lines) {
            std::vector<u32> img;
            img.reserve(line.size());
            for (u32 v : line) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            if (!std::binary_search(sorted_first.begin(), sorted_first.end(), img))
                throw std::invalid_argument("cphf_from_planes: permutation is not an isomorphism onto plane 1");
        }
        for (u32 z = 0; z < m; ++z) C.at(i, z) = first.points[perm[z]];
    }
    C.sherwood = true;
    for (const auto& e : C.entries)
        if (e[2] != 1) C.sherwood = false;
    C.lambda = verify_cphf(C);
    if (C.lambda + 1 < C.rows) throw std::runtime_error("cphf_from_planes: index below s-1 (planes not mutually orthogoval?)");
    return C;
}

// Row-prefix subarray; the index is re-verified.
inline CphfArray cphf_take_rows(const CphfArray& C, u32 r) {
    if (r < 1 || r > C.rows) throw std::invalid_argument("cphf_take_rows: row count out of range");
    CphfArray out = C;
    out.rows = r;
    out.entries.assign(C.entries.begin(), C.entries.begin() + static_cast<size_t>(r) * C.k);
    out.lambda = verify_cphf(out);
    return out;
}

namespace detail {

inline Coord line_direction(const FieldSpec& F, const Coord& a, const Coord& b) {
    const u32 dx = F.sub(a[0], b[0]), dy = F.sub(a[1], b[1]);
    if (dx == 0 && dy == 0) throw std::invalid_argument("line_direction: identical points");
    if (dy != 0) {
        const u32 di = F.inv(dy);
        return {F.mul(dx, di), 1, 0};
    }
    return {1, 0, 0};
}

}  // namespace detail

// Append two columns for projective points of the line z. Families carrying
// a full projective permutation contribute its values at (1:0:0) and
// (0:1:0); otherwise each row is assigned an ordered pair of distinct
// line-z vectors found by a backtracking search over marked parallel
// classes (two rows may not mark classes containing lines that share two
// points). The result is validated to index at least s-1.
inline CphfArray extend_scphf(const CphfArray& C, const PlaneFamily& fam) {
    if (!C.sherwood) throw std::invalid_argument("extend_scphf: array is not Sherwood");
    if (C.extended) throw std::invalid_argument("extend_scphf: already extended");
    if (fam.planes.size() != C.rows) throw std::invalid_argument("extend_scphf: family/array mismatch");
    const FieldSpec& F = C.field;
    const u32 q = C.q;
    const u32 s = C.rows;
    std::vector<Vec3> u_col(s), v_col(s);

    if (!fam.proj_perms.empty()) {
        const u32 idx100 = q * q + q;
        const u32 idx010 = q * q + 0;  // (0:1:0) = (x:1:0) with x = 0
        const PlaneIncidence pg = build_pg(F);
        for (u32 i = 0; i < s; ++i) {
            u_col[i] = pg.points[fam.proj_perms[i][idx100]];
            v_col[i] = pg.points[fam.proj_perms[i][idx010]];
        }
    } else {
        // direction label of each line of plane i: the infinite point of its
        // image in plane 1
        const u32 nlabels = q + 1;  // labels 0..q-1: (x:1:0); label q: (1:0:0)
        auto label_of = [&](const Coord& d) { return d[1] == 1 ? d[0] : q; };
        std::vector<std::vector<std::vector<u32>>> classes(s);  // plane -> label -> line ids
        for (u32 i = 0; i < s; ++i) {
            classes[i].assign(nlabels, {});
            const auto& perm = fam.perms[i];
            const auto& pts = fam.planes[0].points;
            for (u32 li = 0; li < fam.planes[i].lines.size(); ++li) {
                const auto& line = fam.planes[i].lines[li];
                const Coord d = detail::line_direction(F, pts[perm[line[0]]], pts[perm[line[1]]]);
                classes[i][label_of(d)].push_back(li);
            }
        }
        // conflict(i, a, j, b): marked classes contain lines sharing >= 2 points
        auto share2 = [&](const std::vector<u32>& A, const std::vector<u32>& B) {
            size_t x = 0, y = 0;
            u32 c = 0;
            while (x < A.size() && y < B.size()) {
                if (A[x] < B[y]) ++x;
                else if (B[y] < A[x]) ++y;
                else {
                    if (++c >= 2) return true;
                    ++x; ++y;
                }
            }
            return false;
        };
        std::vector<std::vector<std::vector<char>>> conflict(s * s);
        auto cidx = [&](u32 i, u32 j) { return i * s + j; };
        for (u32 i = 0; i < s; ++i)
            for (u32 j = i + 1; j < s; ++j) {
                auto& tab = conflict[cidx(i, j)];
                tab.assign(nlabels, std::vector<char>(nlabels, 0));
                for (u32 a = 0; a < nlabels; ++a)
                    for (u32 b = 0; b < nlabels; ++b) {
                        bool bad = false;
                        for (u32 la : classes[i][a]) {
                            for (u32 lb : classes[j][b])
                                if (share2(fam.planes[i].lines[la], fam.planes[j].lines[lb])) { bad = true; break; }
                            if (bad) break;
                        }
                        tab[a][b] = bad;
                    }
            }
        auto assign = [&](std::vector<u32>& out, const std::vector<u32>* avoid) {
            out.assign(s, 0);
            std::function<bool(u32)> rec = [&](u32 i) -> bool {
                if (i == s) return true;
                for (u32 lab = 0; lab < nlabels; ++lab) {
                    if (avoid && (*avoid)[i] == lab) continue;
                    bool ok = true;
                    for (u32 j = 0; j < i && ok; ++j)
                        if (conflict[cidx(j, i)][out[j]][lab]) ok = false;
                    if (!ok) continue;
                    out[i] = lab;
                    if (rec(i + 1)) return true;
                }
                return false;
            };
            return rec(0);
        };
        std::vector<u32> ulab, vlab;
        if (!assign(ulab, nullptr)) throw std::runtime_error("extend_scphf: no compatible class marking found");
        if (!assign(vlab, &ulab)) throw std::runtime_error("extend_scphf: no second compatible class marking found");
        auto coord_of_label = [&](u32 lab) -> Vec3 { return lab < q ? Vec3{lab, 1, 0} : Vec3{1, 0, 0}; };
        for (u32 i = 0; i < s; ++i) {
            u_col[i] = coord_of_label(ulab[i]);
            v_col[i] = coord_of_label(vlab[i]);
        }
    }

    CphfArray out;
    out.rows = s;
    out.k = C.k + 2;
    out.q = q;
    out.field = F;
    out.sherwood = false;
    out.extended = true;
    out.entries.resize(static_cast<size_t>(s) * out.k);
    for (u32 i = 0; i < s; ++i) {
        for (u32 z = 0; z < C.k; ++z) out.at(i, z) = C.at(i, z);
        out.at(i, C.k) = u_col[i];
        out.at(i, C.k + 1) = v_col[i];
        if (u_col[i] == v_col[i]) throw std::runtime_error("extend_scphf: extension columns coincide");
    }
    out.lambda = verify_cphf(out);
    if (out.lambda + 1 < s) throw std::runtime_error("extend_scphf: extension failed verification");
    return out;
}

struct CoveringArray {
    u32 N = 0, k = 0, v = 0, t = 3, lambda = 0;
    std::vector<u32> data;  // row-major symbols in 0..v-1

    u32 at(u32 r, u32 c) const { return data[static_cast<size_t>(r) * k + c]; }
};

struct CaVerifyResult {
    bool ok = false;
    u32 col_a = 0, col_b = 0, col_c = 0;
    u32 tup_a = 0, tup_b = 0, tup_c = 0;  // first uncovered (or undercovered) tuple
};

// Exact coverage census over all column triples and all v^3 tuples.
inline CaVerifyResult verify_ca(const CoveringArray& A, u32 t, u32 lambda, u32 threads = 1) {
    if (t != 3) throw std::invalid_argument("verify_ca: only strength 3 supported");
    for (u32 x : A.data)
        if (x >= A.v) throw std::invalid_argument("verify_ca: symbol out of range");
    const u32 v = A.v;
    // column-major copy
    std::vector<std::vector<u32>> cols(A.k, std::vector<u32>(A.N));
    for (u32 r = 0; r < A.N; ++r)
        for (u32 c = 0; c < A.k; ++c) cols[c][r] = A.at(r, c);

    struct Hit {
        bool found = false;
        u64 rank = ~u64{0};
        u32 tup[3] = {0, 0, 0};
    };
    auto scan_range = [&](u64 lo, u64 hi, Hit& hit) {
        std::vector<u32> counts(static_cast<size_t>(v) * v * v);
        u64 idx = 0;
        for (u32 a = 0; a < A.k && idx < hi; ++a)
            for (u32 b = a + 1; b < A.k && idx < hi; ++b)
                for (u32 c = b + 1; c < A.k && idx < hi; ++c, ++idx) {
                    if (idx < lo) continue;
                    std::fill(counts.begin(), counts.end(), 0);
                    const u32 *pa = cols[a].data(), *pb = cols[b].data(), *pc = cols[c].data();
                    for (u32 r = 0; r < A.N; ++r) ++counts[(static_cast<size_t>(pa[r]) * v + pb[r]) * v + pc[r]];
                    for (u32 x = 0; x < v && !hit.found; ++x)
                        for (u32 y = 0; y < v && !hit.found; ++y)
                            for (u32 z = 0; z < v; ++z)
                                if (counts[(static_cast<size_t>(x) * v + y) * v + z] < lambda) {
                                    hit.found = true;
                                    hit.rank = idx;
                                    hit.tup[0] = x; hit.tup[1] = y; hit.tup[2] = z;
                                    break;
                                }
                    if (hit.found) return;
                }
    };

    const u64 total = static_cast<u64>(A.k) * (A.k - 1) * (A.k - 2) / 6;
    std::vector<Hit> hits(std::max(1u, threads));
    if (threads <= 1) {
        scan_range(0, total, hits[0]);
    } else {
        std::vector<std::thread> pool;
        const u64 chunk = (total + threads - 1) / threads;
        for (u32 th = 0; th < threads; ++th)
            pool.emplace_back([&, th] { scan_range(th * chunk, std::min(total, (th + 1) * chunk), hits[th]); });
        for (auto& th : pool) th.join();
    }
    Hit best;
    for (const auto& h : hits)
        if (h.found && h.rank < best.rank) best = h;
    CaVerifyResult res;
    if (!best.found) {
        res.ok = true;
        return res;
    }
    // decode the triple rank deterministically
    u64 idx = 0;
    for (u32 a = 0; a < A.k; ++a)
        for (u32 b = a + 1; b < A.k; ++b)
            for (u32 c = b + 1; c < A.k; ++c, ++idx)
                if (idx == best.rank) {
                    res.col_a = a; res.col_b = b; res.col_c = c;
                    res.tup_a = best.tup[0]; res.tup_b = best.tup[1]; res.tup_c = best.tup[2];
                    return res;
                }
    return res;
}

namespace detail {

inline u32 dot3(const FieldSpec& F, const Vec3& h, const Vec3& w) {
    return F.add(F.add(F.mul(h[0], w[0]), F.mul(h[1], w[1])), F.mul(h[2], w[2]));
}

}  // namespace detail

// Expansion of a CPHF into a covering array of index lambda' <= lambda.
// Plain arrays: all nonzero h per CPHF row plus lambda' all-zero rows,
// N = n(q^3-1) + lambda'. Sherwood arrays: all h outside {(0,0,c)} plus
// lambda' copies of each constant row, N = n(q^3-q) + lambda' q. Rows are
// ordered CPHF-row outer, h in lexicographic code order inner.
inline CoveringArray ca_from_cphf(const CphfArray& C, u32 lambda_prime, u32 verify_threads = 1) {
    if (C.extended) throw std::invalid_argument("ca_from_cphf: use ca_from_extended_scphf for extended arrays");
    if (lambda_prime < 1 || lambda_prime > C.lambda) throw std::invalid_argument("ca_from_cphf: lambda' out of range");
    const FieldSpec& F = C.field;
    const u32 q = C.q;
    CoveringArray A;
    A.k = C.k;
    A.v = q;
    A.lambda = lambda_prime;
    const u64 q3 = static_cast<u64>(q) * q * q;
    A.N = static_cast<u32>(C.rows * (q3 - (C.sherwood ? q : 1)) + static_cast<u64>(lambda_prime) * (C.sherwood ? q : 1));
    A.data.reserve(static_cast<size_t>(A.N) * A.k);
    for (u32 i = 0; i < C.rows; ++i)
        for (u32 h1 = 0; h1 < q; ++h1)
            for (u32 h2 = 0; h2 < q; ++h2)
                for (u32 h3 = 0; h3 < q; ++h3) {
                    if (C.sherwood && h1 == 0 && h2 == 0) continue;
                    if (!C.sherwood && h1 == 0 && h2 == 0 && h3 == 0) continue;
                    const Vec3 h{h1, h2, h3};
                    for (u32 z = 0; z < C.k; ++z) A.data.push_back(detail::dot3(F, h, C.at(i, z)));
                }
    if (C.sherwood) {
        for (u32 c = 0; c < q; ++c)
            for (u32 copy = 0; copy < lambda_prime; ++copy)
                for (u32 z = 0; z < C.k; ++z) A.data.push_back(c);
    } else {
        for (u32 copy = 0; copy < lambda_prime; ++copy)
            for (u32 z = 0; z < C.k; ++z) A.data.push_back(0);
    }
    if (A.data.size() != static_cast<size_t>(A.N) * A.k) throw std::logic_error("ca_from_cphf: row count mismatch");
    const auto res = verify_ca(A, 3, lambda_prime, verify_threads);
    if (!res.ok) throw std::runtime_error("ca_from_cphf: coverage verification failed");
    return A;
}

// Expansion of an extended Sherwood array: the first lambda'+1 CPHF rows
// are expanded over all q^3 of their h-rows, then exactly one copy of each
// of the q repeated rows (constant c on the affine columns, 0 on the two
// extra columns) is deleted; N = (lambda'+1) q^3 - q.
inline CoveringArray ca_from_extended_scphf(const CphfArray& C, u32 lambda_prime, u32 verify_threads = 1) {
    if (!C.extended) throw std::invalid_argument("ca_from_extended_scphf: array is not extended");
    if (lambda_prime < 1 || lambda_prime + 1 > C.rows) throw std::invalid_argument("ca_from_extended_scphf: lambda' out of range");
    const FieldSpec& F = C.field;
    const u32 q = C.q;
    const u32 use_rows = lambda_prime + 1;
    CoveringArray A;
    A.k = C.k;
    A.v = q;
    A.lambda = lambda_prime;
    const u64 q3 = static_cast<u64>(q) * q * q;
    A.N = static_cast<u32>(use_rows * q3 - q);
    A.data.reserve(static_cast<size_t>(A.N) * A.k);
    for (u32 i = 0; i < use_rows; ++i)
        for (u32 h1 = 0; h1 < q; ++h1)
            for (u32 h2 = 0; h2 < q; ++h2)
                for (u32 h3 = 0; h3 < q; ++h3) {
                    // rows h = (0,0,c) are the repeated ones; the last CPHF row
                    // drops its copy (later occurrences are the deleted ones)
                    if (h1 == 0 && h2 == 0) {
                        std::vector<u32> row(A.k);
                        bool constant_ok = true;
                        const Vec3 h{h1, h2, h3};
                        for (u32 z = 0; z < C.k; ++z) {
                            row[z] = detail::dot3(F, h, C.at(i, z));
                            if (z >= C.k - 2) {
                                if (row[z] != 0) constant_ok = false;
                            } else if (row[z] != h3) {
                                constant_ok = false;
                            }
                        }
                        if (!constant_ok) throw std::runtime_error("ca_from_extended_scphf: expected repeated row has the wrong shape");
                        if (i + 1 == use_rows) continue;  // delete this copy
                        A.data.insert(A.data.end(), row.begin(), row.end());
                        continue;
                    }
                    const Vec3 h{h1, h2, h3};
                    for (u32 z = 0; z < C.k; ++z) A.data.push_back(detail::dot3(F, h, C.at(i, z)));
                }
    if (A.data.size() != static_cast<size_t>(A.N) * A.k) throw std::logic_error("ca_from_extended_scphf: row count mismatch");
    const auto res = verify_ca(A, 3, lambda_prime, verify_threads);
    if (!res.ok) throw std::runtime_error("ca_from_extended_scphf: coverage verification failed");
    return A;
}

}  // namespace ogv

#endif  // OGV_COVERING_HPP
