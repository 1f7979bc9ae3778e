// Exact arithmetic in GF(p^n) in a fixed polynomial basis, plus relative
// cubic extensions GF(q^3) = GF(q)[y]/(g) with the base Frobenius x -> x^q.
//
// Elements are stored by their integer code: the base-p expansion of the
// coefficient vector, constant term least significant. Code 0 is the zero
// element and code 1 the unit. Multiplication and inversion go through
// log/exp tables on a primitive generator; addition is an XOR in
// characteristic 2 and digit-wise otherwise.
#ifndef OGV_FIELD_HPP
#define OGV_FIELD_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

namespace detail {

// Dense polynomials over Z_p, constant term first, possibly with high zeros.
using Poly = std::vector<u32>;

inline int poly_deg(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[static_cast<size_t>(d)] != 0) return d;
    return -1;
}

inline Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Remainder of a modulo monic f.
inline Poly poly_rem(Poly a, const Poly& f, u32 p) {
    const int df = poly_deg(f);
    for (int d = poly_deg(a); d >= df && d >= 0; d = poly_deg(a)) {
        const u32 c = a[static_cast<size_t>(d)];
        if (c != 0) {
            for (int i = 0; i <= df; ++i) {
                auto& x = a[static_cast<size_t>(d - df + i)];
                x = (x + p * p - c * f[static_cast<size_t>(i)] % p) % p;
            }
        }
        a[static_cast<size_t>(d)] = 0;
    }
    a.resize(static_cast<size_t>(df > 0 ? df : 1), 0);
    return a;
}

// Irreducibility over Z_p by exhaustive trial division (degrees up to n/2).
inline bool poly_irreducible(const Poly& f, u32 p) {
    const int n = poly_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        u64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (u64 code = 0; code < count; ++code) {
            Poly g(static_cast<size_t>(d) + 1, 0);
            u64 c = code;
            for (int i = 0; i < d; ++i) { g[static_cast<size_t>(i)] = static_cast<u32>(c % p); c /= p; }
            g[static_cast<size_t>(d)] = 1;
            if (poly_deg(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

inline std::vector<u64> prime_factors(u64 m) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fs.push_back(m);
    return fs;
}

inline bool is_prime_u64(u64 m) {
    if (m < 2) return false;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

}  // namespace detail

class FieldSpec {
public:
    u32 p = 0, n = 0, q = 0;
    std::vector<u32> modulus;  // length n+1, constant term first, monic
    u32 generator = 0;         // primitive element, smallest code

    static FieldSpec make(u32 p, u32 n) { return FieldSpec(p, n, default_modulus(p, n)); }
    static FieldSpec make(u32 p, u32 n, std::vector<u32> modulus) { return FieldSpec(p, n, std::move(modulus)); }

    u32 add(u32 a, u32 b) const {
        if (p == 2) return a ^ b;
        u32 r = 0, mul = 1;
        for (u32 i = 0; i < n; ++i) {
            r += (a % p + b % p) % p * mul;
            a /= p; b /= p; mul *= p;
        }
        return r;
    }
    u32 neg(u32 a) const {
        if (p == 2) return a;
        u32 r = 0, mul = 1;
        for (u32 i = 0; i < n; ++i) {
            r += (p - a % p) % p * mul;
            a /= p; mul *= p;
        }
        return r;
    }
    u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }
    u32 mul(u32 a, u32 b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<size_t>(log_[a]) + static_cast<size_t>(log_[b])];
    }
    u32 inv(u32 a) const {
        if (a == 0) throw std::invalid_argument("field: inversion of zero");
        return exp_[(q - 1) - static_cast<size_t>(log_[a])];
    }
    u32 pow(u32 a, u64 e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        const u64 r = static_cast<u64>(log_[a]) * (e % (q - 1)) % (q - 1);
        return exp_[r];
    }
    // Frobenius x -> x^(p^e).
    u32 frobenius(u32 a, u32 e) const {
        u64 pe = 1;
        for (u32 i = 0; i < e; ++i) pe = pe * p % (q - 1 > 0 ? (q - 1) : 1);
        if (q == 2) return a;
        return pow(a, pe == 0 ? (q - 1) : pe);
    }
    // Scale by an integer (characteristic-aware, e.g. 2*a = 0 in char 2).
    u32 scale_int(u64 k, u32 a) const {
        u32 r = 0;
        k %= p;
        for (u64 i = 0; i < k; ++i) r = add(r, a);
        return r;
    }

    std::vector<u32> digits(u32 a) const {
        std::vector<u32> d(n);
        for (u32 i = 0; i < n; ++i) { d[i] = a % p; a /= p; }
        return d;
    }
    u32 from_digits(const std::vector<u32>& d) const {
        u32 r = 0, mul = 1;
        for (u32 i = 0; i < n; ++i) { r += (i < d.size() ? d[i] % p : 0) * mul; mul *= p; }
        return r;
    }

    u64 element_order(u32 a) const {
        if (a == 0) throw std::invalid_argument("field: order of zero");
        u64 o = 1;
        u32 x = a;
        while (x != 1) { x = mul(x, a); ++o; }
        return o;
    }

    bool operator==(const FieldSpec& o) const { return p == o.p && n == o.n && modulus == o.modulus; }

    static std::vector<u32> default_modulus(u32 p, u32 n) {
        if (p == 2 && n == 2) return {1, 1, 1};
        if (p == 2 && n == 3) return {1, 0, 1, 1};            // x^3 + x^2 + 1
        if (p == 2 && n == 4) return {1, 1, 0, 0, 1};         // x^4 + x + 1
        if (p == 2 && n == 6) return {1, 1, 0, 0, 0, 0, 1};   // x^6 + x + 1
        if (p == 3 && n == 2) return {1, 0, 1};               // x^2 + 1
        if (n == 1) {
            // x - g for the least primitive root g, so the class of x generates.
            for (u32 g = 1; g < p; ++g) {
                u64 o = 1, x = g;
                while (x != 1) { x = x * g % p; ++o; }
                if (o == p - 1) return {(p - g) % p, 1};
            }
            throw std::logic_error("no primitive root");
        }
        // Lexicographically least primitive monic polynomial (by code of the
        // low-coefficient vector).
        u64 qq = 1;
        for (u32 i = 0; i < n; ++i) qq *= p;
        for (u64 low = 1; low < qq; ++low) {
            std::vector<u32> f(n + 1, 0);
            u64 c = low;
            for (u32 i = 0; i < n; ++i) { f[i] = static_cast<u32>(c % p); c /= p; }
            f[n] = 1;
            if (!detail::poly_irreducible(f, p)) continue;
            FieldSpec probe(p, n, f, /*require_x_primitive=*/true);
            if (probe.x_primitive_) return f;
        }
        throw std::logic_error("no primitive polynomial found");
    }

private:
    std::vector<u32> exp_;  // size 2(q-1)
    std::vector<int> log_;  // size q, log_[0] = -1
    bool x_primitive_ = false;

    FieldSpec(u32 p_, u32 n_, std::vector<u32> mod, bool probe_only = false) : p(p_), n(n_), modulus(std::move(mod)) {
        if (!detail::is_prime_u64(p) || (p != 2 && p != 3 && p != 5 && p != 7))
            throw std::invalid_argument("field: characteristic must be one of 2,3,5,7");
        if (n == 0) throw std::invalid_argument("field: degree must be positive");
        u64 qq = 1;
        for (u32 i = 0; i < n; ++i) {
            qq *= p;
            if (qq > 65536) throw std::invalid_argument("field: order " + std::to_string(qq) + " unsupported (max 65536)");
        }
        q = static_cast<u32>(qq);
        if (modulus.size() != n + 1 || modulus[n] != 1)
            throw std::invalid_argument("field: modulus must be monic of degree n");
        for (u32 c : modulus)
            if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
        if (!detail::poly_irreducible(modulus, p))
            throw std::invalid_argument("field: modulus is reducible");

        // Raw polynomial product reduced mod the modulus; used until the
        // log/exp tables exist.
        auto raw_mul = [&](u32 a, u32 b) -> u32 {
            detail::Poly pa = to_poly(a), pb = to_poly(b);
            detail::Poly r = detail::poly_rem(detail::poly_mul(pa, pb, p), modulus, p);
            u32 code = 0, m = 1;
            for (u32 i = 0; i < n; ++i) { code += (i < r.size() ? r[i] : 0) * m; m *= p; }
            return code;
        };
        auto raw_order = [&](u32 g) -> u64 {
            u64 o = 1;
            u32 x = g;
            while (x != 1) {
                x = raw_mul(x, g);
                ++o;
                if (o > q) return 0;  // hit a zero divisor cycle; cannot happen once irreducible
            }
            return o;
        };
        if (probe_only) {
            x_primitive_ = n >= 1 && q > 2 ? (raw_order(p) == q - 1) : true;
            if (q == 2) x_primitive_ = true;
            return;
        }
        generator = 0;
        for (u32 g = 1; g < q; ++g)
            if (raw_order(g) == q - 1) { generator = g; break; }
        if (generator == 0) throw std::logic_error("field: no primitive element (modulus not irreducible?)");
        exp_.assign(2 * (q - 1), 0);
        log_.assign(q, -1);
        u32 x = 1;
        for (u32 i = 0; i < q - 1; ++i) {
            exp_[i] = x;
            exp_[i + (q - 1)] = x;
            log_[x] = static_cast<int>(i);
            x = raw_mul(x, generator);
        }
        if (x != 1) throw std::logic_error("field: generator order mismatch");
    }

    detail::Poly to_poly(u32 a) const {
        detail::Poly r(n, 0);
        for (u32 i = 0; i < n; ++i) { r[i] = a % p; a /= p; }
        return r;
    }
};

// First (b, c) in lexicographic code order with x^3 + b x + c irreducible
// over GF(2^n); c != 0 always holds. A cubic with no root is irreducible.
inline std::pair<u32, u32> find_irreducible_cubic_depressed(const FieldSpec& f) {
    if (f.p != 2) throw std::invalid_argument("depressed cubic search requires characteristic 2");
    for (u32 b = 0; b < f.q; ++b)
        for (u32 c = 1; c < f.q; ++c) {
            bool has_root = false;
            for (u32 x = 0; x < f.q && !has_root; ++x) {
                u32 v = f.add(f.add(f.pow(x, 3), f.mul(b, x)), c);
                if (v == 0) has_root = true;
            }
            if (!has_root) return {b, c};
        }
    throw std::logic_error("no irreducible depressed cubic found");
}

inline u64 count_irreducible_depressed_cubics(const FieldSpec& f) {
    u64 count = 0;
    for (u32 b = 0; b < f.q; ++b)
        for (u32 c = 1; c < f.q; ++c) {
            bool has_root = false;
            for (u32 x = 0; x < f.q && !has_root; ++x)
                if (f.add(f.add(f.pow(x, 3), f.mul(b, x)), c) == 0) has_root = true;
            if (!has_root) ++count;
        }
    return count;
}

// GF(q^3) as a relative extension GF(q)[y]/(g), g a monic irreducible cubic.
// Elements are coefficient triples over the base field; in this basis the
// base Frobenius x -> x^q fixes exactly the embedded constants.
struct ExtFieldSpec {
    FieldSpec base = FieldSpec::make(2, 1);
    std::array<u32, 4> g{};  // cubic coefficients, constant first, g[3] = 1

    using E = std::array<u32, 3>;

    u64 size() const { return static_cast<u64>(base.q) * base.q * base.q; }
    static E zero() { return {0, 0, 0}; }
    static E one() { return {1, 0, 0}; }
    E embed(u32 a) const { return {a, 0, 0}; }
    bool in_base(const E& a) const { return a[1] == 0 && a[2] == 0; }

    E from_code(u64 code) const {
        const u32 q = base.q;
        return {static_cast<u32>(code % q), static_cast<u32>(code / q % q), static_cast<u32>(code / q / q % q)};
    }
    u64 code(const E& a) const { return a[0] + static_cast<u64>(base.q) * a[1] + static_cast<u64>(base.q) * base.q * a[2]; }

    E add(const E& a, const E& b) const { return {base.add(a[0], b[0]), base.add(a[1], b[1]), base.add(a[2], b[2])}; }
    E sub(const E& a, const E& b) const { return {base.sub(a[0], b[0]), base.sub(a[1], b[1]), base.sub(a[2], b[2])}; }
    E neg(const E& a) const { return {base.neg(a[0]), base.neg(a[1]), base.neg(a[2])}; }
    bool is_zero(const E& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

    E mul(const E& a, const E& b) const {
        // Schoolbook product then reduction of y^3 and y^4 via g.
        std::array<u32, 5> c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c[i + j] = base.add(c[i + j], base.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
        for (int d = 4; d >= 3; --d) {
            const u32 t = c[static_cast<size_t>(d)];
            if (t != 0)
                for (int i = 0; i < 3; ++i)
                    c[static_cast<size_t>(d - 3 + i)] = base.sub(c[static_cast<size_t>(d - 3 + i)], base.mul(t, g[static_cast<size_t>(i)]));
            c[static_cast<size_t>(d)] = 0;
        }
        return {c[0], c[1], c[2]};
    }
    E scalar_mul(u32 s, const E& a) const { return {base.mul(s, a[0]), base.mul(s, a[1]), base.mul(s, a[2])}; }
    E pow(E a, u64 e) const {
        E r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    E inv(const E& a) const {
        if (is_zero(a)) throw std::invalid_argument("ext field: inversion of zero");
        return pow(a, size() - 2);
    }
    // Base Frobenius x -> x^q.
    E frob_q(const E& a) const { return pow(a, base.q); }
};

// GF(q^3) over GF(q). Characteristic 2 uses the depressed cubic x^3+bx+c
// from the lexicographic search; odd characteristic the first monic
// irreducible cubic in (c2,c1,c0) code order.
inline ExtFieldSpec cubic_extension(const FieldSpec& base) {
    ExtFieldSpec ext;
    ext.base = base;
    if (base.p == 2) {
        auto [b, c] = find_irreducible_cubic_depressed(base);
        ext.g = {c, b, 0, 1};
        return ext;
    }
    for (u32 c2 = 0; c2 < base.q; ++c2)
        for (u32 c1 = 0; c1 < base.q; ++c1)
            for (u32 c0 = 0; c0 < base.q; ++c0) {
                bool has_root = false;
                for (u32 x = 0; x < base.q && !has_root; ++x) {
                    u32 v = base.add(base.add(base.add(base.pow(x, 3), base.mul(c2, base.mul(x, x))), base.mul(c1, x)), c0);
                    if (v == 0) has_root = true;
                }
                if (!has_root) {
                    ext.g = {c0, c1, c2, 1};
                    return ext;
                }
            }
    throw std::logic_error("no irreducible cubic found");
}

}  // namespace ogv

#endif  // OGV_FIELD_HPP
