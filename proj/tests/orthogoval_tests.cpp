#include <catch2/catch_amalgamated.hpp>

#include "ogv/constructions.hpp"
#include "ogv/search.hpp"

using namespace ogv;

namespace {

// Independent oracle: plain sorted-merge intersection count over every line
// pair, no shared code with the census implementation.
u32 max_intersection_merge(const PlaneIncidence& A, const PlaneIncidence& B) {
    u32 best = 0;
    for (const auto& la : A.lines)
        for (const auto& lb : B.lines) {
            size_t i = 0, j = 0;
            u32 c = 0;
            while (i < la.size() && j < lb.size()) {
                if (la[i] < lb[j]) ++i;
                else if (lb[j] < la[i]) ++j;
                else { ++c; ++i; ++j; }
            }
            best = std::max(best, c);
        }
    return best;
}

// All Steiner triple systems of order 7 on labeled points, by backtracking
// over the lexicographically first uncovered pair.
std::vector<std::vector<std::vector<u32>>> all_sts7() {
    std::vector<std::vector<std::vector<u32>>> out;
    std::vector<std::vector<u32>> cur;
    std::vector<std::vector<char>> covered(7, std::vector<char>(7, 0));
    std::function<void()> rec = [&]() {
        int a = -1, b = -1;
        for (int i = 0; i < 7 && a < 0; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (!covered[i][j]) { a = i; b = j; break; }
        if (a < 0) {
            out.push_back(cur);
            return;
        }
        for (u32 c = 0; c < 7; ++c) {
            if (c == static_cast<u32>(a) || c == static_cast<u32>(b)) continue;
            if (c < static_cast<u32>(b)) continue;  // triples with the pair's smaller completions are symmetric duplicates
            if (covered[a][c] || covered[b][c]) continue;
            covered[a][b] = covered[b][a] = 1;
            covered[a][c] = covered[c][a] = 1;
            covered[b][c] = covered[c][b] = 1;
            cur.push_back({static_cast<u32>(a), static_cast<u32>(b), c});
            rec();
            cur.pop_back();
            covered[a][b] = covered[b][a] = 0;
            covered[a][c] = covered[c][a] = 0;
            covered[b][c] = covered[c][b] = 0;
        }
    };
    rec();
    return out;
}

PlaneIncidence plane_from_blocks(std::vector<std::vector<u32>> blocks, u32 q, u32 m) {
    PlaneIncidence pl;
    pl.kind = PlaneKind::projective;
    pl.q = q;
    pl.num_points = m;
    pl.field = FieldSpec::make(2, 1);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    pl.lines = std::move(blocks);
    pl.points.assign(m, Coord{0, 0, 1});
    return pl;
}

}  // namespace

TEST_CASE("a plane against itself fails with max intersection q+1") {
    const auto pg = build_pg(FieldSpec::make(3, 1));
    const auto rep = is_orthogoval_pair(pg, pg);
    CHECK_FALSE(rep.orthogoval);
    CHECK(rep.max_intersection == 4);
    CHECK(rep.has_witness);
    CHECK(rep.shared_points.size() == 4);
    CHECK(rep.line_a == 0);
    CHECK(rep.line_b == 0);
}

TEST_CASE("census agrees with the sorted-merge oracle on assorted pairs") {
    for (u32 q : {2u, 3u}) {
        const FieldSpec F = FieldSpec::make(q == 2 ? 2 : 3, 1);
        const auto pg = build_pg(F);
        CHECK(is_orthogoval_pair(pg, pg).max_intersection == max_intersection_merge(pg, pg));
    }
    const auto fam = cremona_pair(FieldSpec::make(2, 2));
    CHECK(is_orthogoval_pair(fam.planes[0], fam.planes[1]).max_intersection ==
          max_intersection_merge(fam.planes[0], fam.planes[1]));
    // the census path (more than 64 points) against the oracle, q=9 pair
    const auto fam9 = cremona_pair(FieldSpec::make(3, 2));
    CHECK(fam9.planes[0].num_points == 91);
    CHECK(is_orthogoval_pair(fam9.planes[0], fam9.planes[1]).max_intersection ==
          max_intersection_merge(fam9.planes[0], fam9.planes[1]));
    const auto self9 = is_orthogoval_pair(fam9.planes[0], fam9.planes[0]);
    CHECK(self9.max_intersection == max_intersection_merge(fam9.planes[0], fam9.planes[0]));
    CHECK(self9.line_a == 0);
    CHECK(self9.line_b == 0);
}

TEST_CASE("verdicts are symmetric") {
    const auto fam = cremona_pair(FieldSpec::make(2, 2));
    const auto r1 = is_orthogoval_pair(fam.planes[0], fam.planes[1]);
    const auto r2 = is_orthogoval_pair(fam.planes[1], fam.planes[0]);
    CHECK(r1.orthogoval == r2.orthogoval);
    CHECK(r1.max_intersection == r2.max_intersection);
}

TEST_CASE("mismatched planes are rejected") {
    const auto pg2 = build_pg(FieldSpec::make(2, 1));
    const auto pg3 = build_pg(FieldSpec::make(3, 1));
    const auto ag = ag_from_pg(pg3);
    CHECK_THROWS(is_orthogoval_pair(pg2, pg3));
    CHECK_THROWS(is_orthogoval_pair(pg3, ag));
}

TEST_CASE("duplicate plane in a list of order > 2 fails mutuality") {
    const auto pg = build_pg(FieldSpec::make(3, 1));
    const auto r = is_mutually_orthogoval({pg, pg});
    CHECK_FALSE(r.mutually_orthogoval);
    CHECK(r.fail_i == 0);
    CHECK(r.fail_j == 1);
}

TEST_CASE("STS(7) pairs: orthogoval iff block sets are disjoint") {
    const auto systems = all_sts7();
    REQUIRE(systems.size() == 30);
    std::vector<PlaneIncidence> planes;
    for (const auto& sys : systems) planes.push_back(plane_from_blocks(sys, 2, 7));
    u32 disjoint_pairs = 0;
    for (size_t i = 0; i < planes.size(); ++i)
        for (size_t j = i + 1; j < planes.size(); ++j) {
            std::vector<std::vector<u32>> inter;
            std::set_intersection(planes[i].lines.begin(), planes[i].lines.end(), planes[j].lines.begin(),
                                  planes[j].lines.end(), std::back_inserter(inter));
            const bool disjoint = inter.empty();
            if (disjoint) ++disjoint_pairs;
            REQUIRE(is_orthogoval_pair(planes[i], planes[j]).orthogoval == disjoint);
        }
    CHECK(disjoint_pairs > 0);
}

TEST_CASE("orthogoval except the line z") {
    const auto pp = pencil_pair(2);
    CHECK(orthogoval_except_line(pp.proj_a, pp.proj_b, pp.line_z_index));
    // a full pair has no common line: the named line is present in only one plane
    const auto fam = cremona_pair(FieldSpec::make(2, 2));
    CHECK_THROWS(orthogoval_except_line(fam.planes[0], fam.planes[1], 0));
    // self pair: other line pairs still violate
    CHECK_FALSE(orthogoval_except_line(pp.proj_a, pp.proj_a, pp.line_z_index));
}

TEST_CASE("johnson packing bound") {
    CHECK(johnson_packing_bound(13, 4) == 65);
    CHECK(johnson_packing_bound(9, 3) == 84);
    CHECK(johnson_packing_bound(21, 5) == 126);
    CHECK_THROWS(johnson_packing_bound(10, 2));
    CHECK_THROWS(johnson_packing_bound(4, 4));
}

TEST_CASE("orthogoval set bounds") {
    CHECK(orthogoval_set_bound(3, PlaneKind::projective) == 5);
    CHECK(orthogoval_set_bound(3, PlaneKind::affine) == 7);
    CHECK(orthogoval_set_bound(4, PlaneKind::projective) == 6);
    CHECK(orthogoval_set_bound(4, PlaneKind::affine) == 7);
    CHECK_FALSE(orthogoval_set_bound(2, PlaneKind::affine).has_value());
    CHECK(orthogoval_set_bound(2, PlaneKind::projective) == 5);
    CHECK_THROWS(orthogoval_set_bound(6, PlaneKind::projective));
    CHECK_THROWS(orthogoval_set_bound(12, PlaneKind::affine));
}

TEST_CASE("union design census") {
    SECTION("single projective plane packs triples at most once") {
        const auto pg = build_pg(FieldSpec::make(2, 2));
        const auto rep = union_design_check({pg});
        CHECK(rep.blocks == 21);
        CHECK(rep.max_multiplicity == 1);
        CHECK_FALSE(rep.steiner);
    }
    SECTION("difference-set quadruple: 52 blocks, no repeated triple") {
        const auto fam = ds_quadruple();
        const auto rep = union_design_check(fam.planes);
        CHECK(rep.blocks == 52);
        CHECK(rep.max_multiplicity == 1);
        CHECK(rep.uncovered == 286 - 52 * 4);
    }
}

TEST_CASE("derived designs") {
    SECTION("deriving an STS(9) at a point yields 4 pairs partitioning 8 points") {
        const auto ag = ag_from_pg(build_pg(FieldSpec::make(3, 1)));
        const auto rep = derived_design(ag.lines, 0);
        CHECK(rep.blocks.size() == 4);
        CHECK(rep.resolvable);
        CHECK(rep.parallel_classes.size() == 1);
        std::vector<u32> pts;
        for (const auto& b : rep.blocks) pts.insert(pts.end(), b.begin(), b.end());
        std::sort(pts.begin(), pts.end());
        CHECK(pts == std::vector<u32>{1, 2, 3, 4, 5, 6, 7, 8});
    }
    SECTION("point not covered is rejected") {
        CHECK_THROWS(derived_design({{1, 2, 3}}, 0));
    }
}

TEST_CASE("packing inequality for constructed sets") {
    CHECK(packing_inequality_holds(2, 4, PlaneKind::projective));
    CHECK(packing_inequality_holds(7, 4, PlaneKind::affine));
    CHECK_FALSE(packing_inequality_holds(8, 4, PlaneKind::affine));
    CHECK(packing_inequality_holds(4, 3, PlaneKind::projective));
    CHECK_FALSE(packing_inequality_holds(6, 3, PlaneKind::projective));
}
