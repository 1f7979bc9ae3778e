#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ogv/field.hpp"
#include "ogv/search.hpp"

using namespace ogv;

namespace {

// Independent reduction oracle: multiply coefficient vectors as plain
// polynomials over GF(p) and reduce by long division against the modulus.
u32 schoolbook_mul(const FieldSpec& F, u32 a, u32 b) {
    std::vector<u32> pa = F.digits(a), pb = F.digits(b);
    std::vector<u32> prod(2 * F.n, 0);
    for (u32 i = 0; i < F.n; ++i)
        for (u32 j = 0; j < F.n; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % F.p;
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(F.n); --d) {
        const u32 c = prod[d];
        if (c == 0) continue;
        for (u32 i = 0; i <= F.n; ++i) {
            auto& x = prod[d - F.n + i];
            x = (x + F.p * F.p - c * F.modulus[i] % F.p) % F.p;
        }
    }
    prod.resize(F.n);
    return F.from_digits(prod);
}

}  // namespace

TEST_CASE("default moduli match the published generators") {
    CHECK(FieldSpec::make(2, 4).modulus == std::vector<u32>{1, 1, 0, 0, 1});
    CHECK(FieldSpec::make(2, 6).modulus == std::vector<u32>{1, 1, 0, 0, 0, 0, 1});
    CHECK(FieldSpec::make(2, 3).modulus == std::vector<u32>{1, 0, 1, 1});
    CHECK(FieldSpec::make(2, 2).modulus == std::vector<u32>{1, 1, 1});
    CHECK(FieldSpec::make(3, 2).modulus == std::vector<u32>{1, 0, 1});
    const FieldSpec f2 = FieldSpec::make(2, 1);
    CHECK(f2.modulus == std::vector<u32>{1, 1});
    CHECK(f2.add(1, 1) == 0);
}

TEST_CASE("reducible or malformed moduli are rejected") {
    CHECK_THROWS(FieldSpec::make(2, 2, {1, 0, 1}));   // x^2+1 = (x+1)^2
    CHECK_THROWS(FieldSpec::make(2, 3, {0, 0, 0, 1}));
    CHECK_THROWS(FieldSpec::make(2, 3, {1, 1}));      // wrong degree
    CHECK_THROWS(FieldSpec::make(4, 2));              // p not prime
    CHECK_THROWS(FieldSpec::make(11, 1));             // unsupported characteristic
}

TEST_CASE("GF(8) with modulus x^3+x^2+1: w*w*w = w^2+1") {
    const FieldSpec F = FieldSpec::make(2, 3);
    const u32 w = 2;  // class of x
    const u32 expect = schoolbook_mul(F, schoolbook_mul(F, w, w), w);
    CHECK(F.mul(F.mul(w, w), w) == expect);
    CHECK(expect == 0b101u);  // x^3 = x^2 + 1
}

TEST_CASE("a * inv(a) = 1 for all nonzero a in GF(16)") {
    const FieldSpec F = FieldSpec::make(2, 4);
    for (u32 a = 1; a < F.q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS(F.inv(0));
}

TEST_CASE("frobenius with e = n is the identity") {
    for (u32 n : {2u, 3u, 4u}) {
        const FieldSpec F = FieldSpec::make(2, n);
        for (u32 a = 0; a < F.q; ++a) CHECK(F.frobenius(a, n) == a);
    }
    const FieldSpec F9 = FieldSpec::make(3, 2);
    for (u32 a = 0; a < 9; ++a) CHECK(F9.frobenius(a, 2) == a);
}

TEST_CASE("field axioms on random triples, orders up to 64") {
    SplitMix64 rng(12345);
    for (u32 n : {2u, 3u, 4u, 5u, 6u}) {
        const FieldSpec F = FieldSpec::make(2, n);
        for (int it = 0; it < 10000 / 4; ++it) {
            const u32 a = static_cast<u32>(rng.next()) % F.q;
            const u32 b = static_cast<u32>(rng.next()) % F.q;
            const u32 c = static_cast<u32>(rng.next()) % F.q;
            REQUIRE(F.mul(a, b) == F.mul(b, a));
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            REQUIRE(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.mul(a, b) == schoolbook_mul(F, a, b));
        }
        CHECK(F.element_order(F.generator) == F.q - 1);
    }
    for (auto [p, n] : std::vector<std::pair<u32, u32>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const FieldSpec F = FieldSpec::make(p, n);
        CHECK(F.element_order(F.generator) == F.q - 1);
        for (int it = 0; it < 2000; ++it) {
            const u32 a = static_cast<u32>(rng.next()) % F.q;
            const u32 b = static_cast<u32>(rng.next()) % F.q;
            REQUIRE(F.mul(a, b) == schoolbook_mul(F, a, b));
            REQUIRE(F.sub(F.add(a, b), b) == a);
        }
    }
}

TEST_CASE("depressed irreducible cubics") {
    SECTION("GF(2) gives x^3+x+1") {
        const auto [b, c] = find_irreducible_cubic_depressed(FieldSpec::make(2, 1));
        CHECK(b == 1);
        CHECK(c == 1);
    }
    SECTION("count over GF(4) is (q-1)(q+1)/3 = 5") {
        CHECK(count_irreducible_depressed_cubics(FieldSpec::make(2, 2)) == 5);
    }
    SECTION("returned cubic has no root") {
        for (u32 n : {1u, 2u, 3u, 4u}) {
            const FieldSpec F = FieldSpec::make(2, n);
            const auto [b, c] = find_irreducible_cubic_depressed(F);
            CHECK(c != 0);
            for (u32 x = 0; x < F.q; ++x) CHECK(F.add(F.add(F.pow(x, 3), F.mul(b, x)), c) != 0);
        }
    }
}

TEST_CASE("cubic extensions") {
    SECTION("GF(2) -> GF(8) via y^3+y+1, and y+1 lies outside GF(2)") {
        const ExtFieldSpec K = cubic_extension(FieldSpec::make(2, 1));
        CHECK(K.g == std::array<u32, 4>{1, 1, 0, 1});
        const auto w = K.from_code(3);  // y+1
        CHECK_FALSE(K.in_base(w));
    }
    SECTION("embedded elements are fixed by the base Frobenius, q=4") {
        const ExtFieldSpec K = cubic_extension(FieldSpec::make(2, 2));
        for (u32 a = 0; a < 4; ++a) {
            const auto e = K.embed(a);
            CHECK(K.frob_q(e) == e);
        }
    }
    SECTION("triple base-Frobenius is the identity on GF(27)") {
        const ExtFieldSpec K = cubic_extension(FieldSpec::make(3, 1));
        for (u64 code = 0; code < K.size(); ++code) {
            const auto a = K.from_code(code);
            CHECK(K.frob_q(K.frob_q(K.frob_q(a))) == a);
        }
    }
    SECTION("extension arithmetic: inverses and associativity spot checks") {
        const ExtFieldSpec K = cubic_extension(FieldSpec::make(2, 2));
        for (u64 code = 1; code < K.size(); ++code) {
            const auto a = K.from_code(code);
            CHECK(K.mul(a, K.inv(a)) == K.one());
        }
    }
}

TEST_CASE("kernel of x -> a x^{2^k} + b x has size at most 2 when gcd(k,n)=1") {
    for (u32 n = 2; n <= 6; ++n) {
        const FieldSpec F = FieldSpec::make(2, n);
        for (u32 k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            const u64 e = u64{1} << k;
            for (u32 a = 0; a < F.q; ++a)
                for (u32 b = 0; b < F.q; ++b) {
                    if (a == 0 && b == 0) continue;
                    u32 roots = 0;
                    for (u32 x = 0; x < F.q; ++x)
                        if (F.add(F.mul(a, F.pow(x, e)), F.mul(b, x)) == 0) ++roots;
                    REQUIRE(roots <= 2);
                }
        }
    }
}

TEST_CASE("x^{2^k+1} + x + 1 has no roots when gcd(3k,n)=1") {
    for (u32 n = 1; n <= 6; ++n) {
        const FieldSpec F = FieldSpec::make(2, n);
        for (u32 k = 1; k <= 6; ++k) {
            if (std::gcd(3 * k, n) != 1) continue;
            const u64 e = (u64{1} << k) + 1;
            for (u32 x = 0; x < F.q; ++x) REQUIRE(F.add(F.add(F.pow(x, e), x), 1) != 0);
        }
    }
}

TEST_CASE("x^{2^{2k}-1} + x^{2^k-1} + 1 has no roots; the linearized form permutes") {
    for (u32 n = 1; n <= 6; ++n) {
        const FieldSpec F = FieldSpec::make(2, n);
        for (u32 k = 1; k <= 3; ++k) {
            if (std::gcd(3 * k, n) != 1) continue;
            const u64 e1 = (u64{1} << (2 * k)) - 1, e2 = (u64{1} << k) - 1;
            for (u32 x = 0; x < F.q; ++x) REQUIRE(F.add(F.add(F.pow(x, e1), F.pow(x, e2)), 1) != 0);
            std::vector<char> hit(F.q, 0);
            for (u32 x = 0; x < F.q; ++x) {
                const u32 y = F.add(F.add(F.pow(x, u64{1} << (2 * k)), F.pow(x, u64{1} << k)), x);
                hit[y] = 1;
            }
            REQUIRE(std::accumulate(hit.begin(), hit.end(), 0) == static_cast<int>(F.q));
        }
    }
}
