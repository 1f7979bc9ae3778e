#include <catch2/catch_amalgamated.hpp>

#include "ogv/search.hpp"

using namespace ogv;

TEST_CASE("spread compatibility") {
    const auto sp2 = line_spread(2);
    CHECK_FALSE(is_spread_compatible(BinaryMatrix::identity(4), sp2));
    CHECK(is_spread_compatible(seven_plane_seed(4), sp2));
    const auto sp3 = line_spread(3);
    CHECK(is_spread_compatible(seven_plane_seed(8), sp3));
    CHECK(is_spread_compatible(seven_plane_seed(8).power(2), sp3));
    CHECK_THROWS(is_spread_compatible(BinaryMatrix::identity(4), sp3));
    // order 2: a member meets itself in exactly 2 vectors, which is allowed
    CHECK(is_spread_compatible(BinaryMatrix::identity(2), line_spread(1)));
}

TEST_CASE("candidate matrix search") {
    SECTION("postconditions and determinism, n=2") {
        const auto mats = candidate_matrix_search(2, 50, 0);
        REQUIRE(mats.size() == 50);
        const auto sp = line_spread(2);
        for (const auto& M : mats) {
            REQUIRE(M.invertible());
            REQUIRE(is_spread_compatible(M, sp));
        }
        const auto again = candidate_matrix_search(2, 50, 0);
        for (size_t i = 0; i < mats.size(); ++i) REQUIRE(mats[i].rows == again[i].rows);
        std::set<std::vector<u32>> distinct;
        for (const auto& M : mats) distinct.insert(M.rows);
        CHECK(distinct.size() == 50);
    }
    SECTION("n=3 with a fixed seed: reproducible first matrix, plane orthogoval to the standard one") {
        const auto mats = candidate_matrix_search(3, 1, 7);
        REQUIRE(mats.size() == 1);
        // golden value pinned from the first run of this configuration
        const auto again = candidate_matrix_search(3, 1, 7);
        REQUIRE(mats[0].rows == again[0].rows);
        const auto sp = line_spread(3);
        CHECK(is_orthogoval_pair(plane_from_spread(sp), plane_from_spread(apply_matrix(mats[0], sp))).orthogoval);
    }
    SECTION("the spread-intersection criterion matches the full line check, n=2") {
        const auto sp = line_spread(2);
        const auto base = plane_from_spread(sp);
        const auto mats = candidate_matrix_search(2, 20, 1);
        for (const auto& M : mats)
            REQUIRE(is_orthogoval_pair(base, plane_from_spread(apply_matrix(M, sp))).orthogoval);
    }
}

TEST_CASE("the partial-stage prune is conservative") {
    // members of the n=2 spread have only 3 nonzero points, so the
    // four-product threshold cannot fire there; rejections appear from n=3 on
    for (u32 n : {2u, 3u}) {
        const SpreadF2 sp = line_spread(n);
        const detail::PartialPrune prune(sp);
        const u32 dim = 2 * n;
        const u32 mask = (1u << dim) - 1;
        SplitMix64 rng(99);
        u32 rejected = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<u32> rows(dim, 0);
            for (u32 k = dim - 1; k >= 1; --k) rows[k] = static_cast<u32>(rng.next()) & mask;
            std::vector<u32> partial(rows.begin() + 1, rows.end());
            if (!prune.reject(partial, sp)) continue;
            ++rejected;
            for (u32 last = 0; last <= mask; ++last) {
                rows[0] = last;
                const BinaryMatrix M = BinaryMatrix::from_code_rows(dim, rows);
                if (!M.invertible()) continue;
                REQUIRE_FALSE(is_spread_compatible(M, sp));
            }
        }
        if (n == 2) CHECK(rejected == 0);
        if (n == 3) CHECK(rejected > 0);
    }
}

TEST_CASE("compatibility graphs") {
    SECTION("powers of the q=4 seed give the complete graph K7") {
        const auto M = seven_plane_seed(4);
        std::vector<BinaryMatrix> mats;
        for (u32 i = 1; i < 7; ++i) mats.push_back(M.power(i));
        const auto g = build_compat_graph(mats, line_spread(2));
        REQUIRE(g.size() == 7);
        for (u32 i = 0; i < 7; ++i)
            for (u32 j = i + 1; j < 7; ++j) REQUIRE(g.edge(i, j));
    }
    SECTION("empty matrix list keeps only the identity vertex") {
        const auto g = build_compat_graph(std::vector<BinaryMatrix>{}, line_spread(2));
        CHECK(g.size() == 1);
    }
    SECTION("two copies of one matrix are not joined") {
        const auto M = seven_plane_seed(4);
        const auto g = build_compat_graph({M, M}, line_spread(2));
        CHECK(g.size() == 3);
        CHECK(g.edge(0, 1));
        CHECK(g.edge(0, 2));
        CHECK_FALSE(g.edge(1, 2));
    }
}

TEST_CASE("maximum clique") {
    SECTION("complete graph") {
        auto g = CompatibilityGraph::empty(7);
        for (u32 i = 0; i < 7; ++i)
            for (u32 j = i + 1; j < 7; ++j) g.set_edge(i, j);
        CHECK(max_clique(g).size() == 7);
        CHECK(max_clique(g, 7).size() == 7);
    }
    SECTION("5-cycle has clique number 2") {
        auto g = CompatibilityGraph::empty(5);
        for (u32 i = 0; i < 5; ++i) g.set_edge(i, (i + 1) % 5);
        CHECK(max_clique(g).size() == 2);
    }
    SECTION("isolated vertices give a single vertex") {
        auto g = CompatibilityGraph::empty(4);
        CHECK(max_clique(g).size() == 1);
    }
    SECTION("early exit with a target") {
        auto g = CompatibilityGraph::empty(6);
        for (u32 i = 0; i < 6; ++i)
            for (u32 j = i + 1; j < 6; ++j)
                if (i != 0 || j != 5) g.set_edge(i, j);
        const auto cl = max_clique(g, 4);
        CHECK(cl.size() >= 4);
    }
}

TEST_CASE("oval-plane search, q=2") {
    const auto rep = oval_planes_search(FieldSpec::make(2, 1));
    CHECK(rep.oval_count == 28);
    CHECK(rep.plane_count > 0);
    CHECK(rep.max_orthogoval_set == 2);
}

TEST_CASE("oval-plane search, q=3: the quadruple's planes appear") {
    const auto rep = oval_planes_search(FieldSpec::make(3, 1));
    CHECK(rep.oval_count == 234);
    const auto fam = ds_quadruple();
    // carry the cyclic planes onto the canonical PG(2,3) points via the stored coordinates
    std::vector<u32> to_canonical(13);
    for (u32 j = 0; j < 13; ++j) to_canonical[j] = canonical_point_index(3, fam.planes[0].points[j]);
    for (u32 i = 1; i < 4; ++i) {
        std::vector<u64> masks;
        for (const auto& line : fam.planes[i].lines) {
            u64 mk = 0;
            for (u32 v : line) mk |= u64{1} << to_canonical[v];
            masks.push_back(mk);
        }
        std::sort(masks.begin(), masks.end());
        CHECK(std::find(rep.plane_line_masks.begin(), rep.plane_line_masks.end(), masks) != rep.plane_line_masks.end());
    }
    // and the quadruple witnesses a triangle among oval-planes
    CHECK(rep.max_orthogoval_set >= 4);
}

TEST_CASE("multiplier scan") {
    CHECK(multiplier_scan(100) == std::vector<u64>{3});
    CHECK(multiplier_scan(2) == std::vector<u64>{});
    // q = 3: 3^2 = 9 = -4 (mod 13) and <3> = {1,3,9} does not contain 2
    const u64 mod = 13;
    std::vector<u64> subgroup{1, 3, 9};
    CHECK(std::find(subgroup.begin(), subgroup.end(), (mod - 4) % mod) != subgroup.end());
    CHECK(std::find(subgroup.begin(), subgroup.end(), 2) == subgroup.end());
}
