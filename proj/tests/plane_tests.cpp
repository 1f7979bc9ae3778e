#include <catch2/catch_amalgamated.hpp>

#include "ogv/constructions.hpp"

using namespace ogv;

TEST_CASE("PG(2,2) is the Fano plane") {
    const auto pl = build_pg(FieldSpec::make(2, 1));
    CHECK(pl.num_points == 7);
    CHECK(pl.lines.size() == 7);
    for (const auto& l : pl.lines) CHECK(l.size() == 3);
    validate_plane(pl);
}

TEST_CASE("PG(2,4): 21 points, 21 lines of 5, any two lines meet once") {
    const auto pl = build_pg(FieldSpec::make(2, 2));
    CHECK(pl.num_points == 21);
    CHECK(pl.lines.size() == 21);
    validate_plane(pl);
    for (size_t i = 0; i < pl.lines.size(); ++i)
        for (size_t j = i + 1; j < pl.lines.size(); ++j) {
            std::vector<u32> shared;
            std::set_intersection(pl.lines[i].begin(), pl.lines[i].end(), pl.lines[j].begin(), pl.lines[j].end(),
                                  std::back_inserter(shared));
            REQUIRE(shared.size() == 1);
        }
}

TEST_CASE("PG(2,3): every point on exactly 4 lines") {
    const auto pl = build_pg(FieldSpec::make(3, 1));
    const auto thru = lines_through(pl);
    for (const auto& t : thru) CHECK(t.size() == 4);
    validate_plane(pl);
}

TEST_CASE("AG(2,4): 16 points, 20 lines of 4 in 5 parallel classes") {
    const auto ag = ag_from_pg(build_pg(FieldSpec::make(2, 2)));
    CHECK(ag.num_points == 16);
    CHECK(ag.lines.size() == 20);
    for (const auto& l : ag.lines) CHECK(l.size() == 4);
    validate_plane(ag);
    // two lines are parallel (disjoint) iff their deleted infinite points match
    for (size_t i = 0; i < ag.lines.size(); ++i)
        for (size_t j = i + 1; j < ag.lines.size(); ++j) {
            std::vector<u32> shared;
            std::set_intersection(ag.lines[i].begin(), ag.lines[i].end(), ag.lines[j].begin(), ag.lines[j].end(),
                                  std::back_inserter(shared));
            REQUIRE((shared.empty()) == (ag.line_infinity[i] == ag.line_infinity[j]));
        }
}

TEST_CASE("AG(2,3): 9 points, 12 lines") {
    const auto ag = ag_from_pg(build_pg(FieldSpec::make(3, 1)));
    CHECK(ag.num_points == 9);
    CHECK(ag.lines.size() == 12);
    validate_plane(ag);
}

TEST_CASE("line spread of F_2^4 matches the published cyclotomic cosets") {
    const auto sp = line_spread(2);
    REQUIRE(sp.members.size() == 5);
    CHECK(sp.members[0] == std::vector<u32>{0, 1, 6, 7});
    CHECK(sp.members[1] == std::vector<u32>{0, 2, 12, 14});
    CHECK(sp.members[2] == std::vector<u32>{0, 4, 11, 15});
    CHECK(sp.members[3] == std::vector<u32>{0, 5, 8, 13});
    CHECK(sp.members[4] == std::vector<u32>{0, 3, 9, 10});
}

TEST_CASE("spread members intersect trivially and cover, n=3") {
    const auto sp = line_spread(3);
    validate_spread(sp);
    std::vector<char> seen(64, 0);
    size_t covered = 0;
    for (const auto& S : sp.members)
        for (u32 v : S)
            if (!seen[v]) { seen[v] = 1; ++covered; }
    CHECK(covered == 64);
}

TEST_CASE("plane from the line spread") {
    const auto sp = line_spread(2);
    const auto pl = plane_from_spread(sp);
    CHECK(pl.lines.size() == 20);
    validate_plane(pl);
    SECTION("the parallel class of S_0 is the published coset list") {
        std::vector<std::vector<u32>> class0(pl.lines.begin(), pl.lines.begin() + 4);
        std::vector<std::vector<u32>> expected{{0, 1, 6, 7}, {2, 3, 4, 5}, {8, 9, 14, 15}, {10, 11, 12, 13}};
        std::sort(class0.begin(), class0.end());
        std::sort(expected.begin(), expected.end());
        CHECK(class0 == expected);
    }
    SECTION("isomorphic to the standard AG(2,4)") {
        const auto ag = ag_from_pg(build_pg(FieldSpec::make(2, 2)));
        CHECK(plane_isomorphism(pl, ag).has_value());
    }
    SECTION("the stored coordinates map lines to affine lines of AG(2,4)") {
        const auto ag = ag_from_pg(build_pg(FieldSpec::make(2, 2)));
        std::vector<u32> perm(16);
        for (u32 v = 0; v < 16; ++v) perm[v] = pl.points[v][0] * 4 + pl.points[v][1];
        auto mapped = map_lines(pl.lines, perm);
        std::sort(mapped.begin(), mapped.end());
        auto target = ag.lines;
        std::sort(target.begin(), target.end());
        CHECK(mapped == target);
    }
}

TEST_CASE("conic point sets") {
    const FieldSpec F4 = FieldSpec::make(2, 2);
    const auto pg = build_pg(F4);
    SECTION("z^2 cuts out the line z") {
        const auto pts = conic_points(F4, {0, 0, 1, 0, 0, 0});
        std::vector<u32> expect;
        for (u32 i = 0; i <= 4; ++i) expect.push_back(16 + i);
        CHECK(pts == expect);
    }
    SECTION("x^2+yz over GF(4) has 5 points including (0:1:0) and (0:0:1)") {
        const auto pts = conic_points(F4, {1, 0, 0, 1, 0, 0});
        CHECK(pts.size() == 5);
        CHECK(std::binary_search(pts.begin(), pts.end(), canonical_point_index(4, {0, 1, 0})));
        CHECK(std::binary_search(pts.begin(), pts.end(), canonical_point_index(4, {0, 0, 1})));
        CHECK(is_oval(pg, pts));
    }
    SECTION("pencil members meet the line z in exactly one point, n=2,3") {
        for (u32 n : {2u, 3u}) {
            const FieldSpec F = FieldSpec::make(2, n);
            auto [b, c] = find_irreducible_cubic_depressed(F);
            const QuadraticForm phi{1, 0, 0, 1, 0, 0}, chi{0, 1, 0, b, c, 0};
            for (const auto& member : pencil(F, phi, chi)) {
                u32 at_infinity = 0;
                for (u32 v : conic_points(F, member))
                    if (v >= F.q * F.q) ++at_infinity;
                REQUIRE(at_infinity == 1);
            }
        }
    }
}

TEST_CASE("nonsingularity via formal partials") {
    const FieldSpec F4 = FieldSpec::make(2, 2);
    CHECK(is_nonsingular(F4, {1, 0, 0, 1, 0, 0}));       // x^2+yz
    CHECK_FALSE(is_nonsingular(F4, {0, 0, 1, 0, 0, 0})); // z^2 double line
    const auto [b, c] = find_irreducible_cubic_depressed(F4);
    for (const auto& member : pencil(F4, {1, 0, 0, 1, 0, 0}, {0, 1, 0, b, c, 0})) CHECK(is_nonsingular(F4, member));
}

TEST_CASE("translation oval criterion") {
    const FieldSpec F4 = FieldSpec::make(2, 2);
    const auto pg = build_pg(F4);
    CHECK(is_translation_oval(F4, {1, 0, 0, 1, 0, 0}, pg));        // x^2+yz
    CHECK_FALSE(is_translation_oval(F4, {1, 0, 0, 1, 0, 1}, pg));  // x^2+xy+yz, h != 0
    CHECK_FALSE(is_translation_oval(F4, {0, 0, 1, 0, 0, 1}, pg));  // z^2+xy, c != 0
    CHECK_THROWS(is_translation_oval(FieldSpec::make(3, 1), {1, 0, 0, 1, 0, 0}, build_pg(FieldSpec::make(3, 1))));
}

TEST_CASE("pencil of conics over GF(4)") {
    const FieldSpec F = FieldSpec::make(2, 2);
    const auto [b, c] = find_irreducible_cubic_depressed(F);
    const QuadraticForm phi{1, 0, 0, 1, 0, 0}, chi{0, 1, 0, b, c, 0};
    const auto members = pencil(F, phi, chi);
    CHECK(members.size() == 5);
    const u32 vertex = canonical_point_index(4, {0, 0, 1});
    for (const auto& m : members) {
        const auto pts = conic_points(F, m);
        CHECK(std::binary_search(pts.begin(), pts.end(), vertex));
    }
    SECTION("affine traces form a spread of F_2^4") {
        SpreadF2 sp;
        sp.n = 2;
        for (const auto& m : members) {
            std::vector<u32> member;
            for (u32 idx : conic_points(F, m))
                if (idx < 16) {
                    const u32 x = idx / 4, y = idx % 4;
                    member.push_back(x * 4 + y);
                }
            std::sort(member.begin(), member.end());
            sp.members.push_back(std::move(member));
        }
        validate_spread(sp);
    }
}

TEST_CASE("line spread members are F2-closed up to n=5") {
    for (u32 n = 1; n <= 5; ++n) {
        const auto sp = line_spread(n);
        for (const auto& S : sp.members) {
            std::vector<char> in(1u << (2 * n), 0);
            for (u32 v : S) in[v] = 1;
            for (u32 a : S)
                for (u32 b : S) REQUIRE(in[a ^ b]);
        }
    }
}

TEST_CASE("binary matrix conventions") {
    const auto M = seven_plane_seed(4);
    CHECK(M.dim == 4);
    CHECK(M.invertible());
    // printed row 0 is (0 1 1 0): it sends t = (t0,t1,t2,t3) to t1+t2
    // as the new t0. Check a known image: e_{t0} = 1000 (code 8).
    // M * (1,0,0,0)^T = (0,0,1,0)^T -> bitstring 0010 -> code 2.
    CHECK(M.apply(0b1000) == 0b0010);
    CHECK(BinaryMatrix::identity(4).apply(0b1011) == 0b1011);
    const auto Minv = M.inverse();
    for (u32 v = 0; v < 16; ++v) CHECK(Minv.apply(M.apply(v)) == v);
    const auto M2 = M.mul(M);
    for (u32 v = 0; v < 16; ++v) CHECK(M2.apply(v) == M.apply(M.apply(v)));
}
