#include <doctest.h>

#include "hmn/field.hpp"

#include <cstdint>
#include <vector>

using namespace hmn;

namespace {

// Test-side polynomial multiply, independent of the library's reduction code.
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> p(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

// Deterministic small-integer stream for property tests.
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Cyc random_cyc(const Field& F, Lcg& g) {
    std::vector<Rat> c;
    for (int j = 0; j < F.phi(); ++j) c.emplace_back(g.next(-5, 5), g.next(1, 4));
    return F.from_coords(std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomial matches frozen values and the divisor identity") {
    // Frozen: Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1.
    Field f22(2, 2);
    CHECK(f22.phi() == 2);
    CHECK(f22.cyclotomic() == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});

    Field f23(2, 3);
    CHECK(f23.phi() == 2);
    CHECK(f23.cyclotomic() == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});

    // Phi_6 is shared by (2,3) and (3,2); (3,3) and (2,6) exercise N = 9, 12.
    Field f32(3, 2);
    CHECK(f32.cyclotomic() == f23.cyclotomic());

    // Oracle: the product of Phi_d over all divisors d of N equals x^N - 1.
    // The test recomputes the proper-divisor part from scratch with its own
    // polynomial arithmetic, seeded by independently constructed fields whose
    // N are the proper divisors... for small N the divisor set of cyclotomics
    // is known; instead multiply the library's Phi_N by the frozen smaller
    // cyclotomics and compare against x^N - 1 directly.
    auto check_divisor_identity = [](const Field& F,
                                     const std::vector<std::vector<Rat>>& proper) {
        std::vector<Rat> prod{Rat(1)};
        for (const auto& p : proper) prod = poly_mul(prod, p);
        prod = poly_mul(prod, F.cyclotomic());
        std::vector<Rat> expect(static_cast<std::size_t>(F.N()) + 1, Rat(0));
        expect[0] = -1;
        expect[static_cast<std::size_t>(F.N())] = 1;
        CHECK(prod == expect);
    };
    // Divisors of 4: 1, 2 with Phi_1 = x-1, Phi_2 = x+1.
    check_divisor_identity(f22, {{Rat(-1), Rat(1)}, {Rat(1), Rat(1)}});
    // Divisors of 6: 1, 2, 3 with Phi_3 = x^2+x+1.
    check_divisor_identity(f23, {{Rat(-1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(1)}});
    // Divisors of 9: 1, 3.
    Field f33(3, 3);
    CHECK(f33.phi() == 6);
    check_divisor_identity(f33, {{Rat(-1), Rat(1)}, {Rat(1), Rat(1), Rat(1)}});
}

TEST_CASE("xi is a primitive N-th root and q = xi^m has order n") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        Field F(m, n);
        CAPTURE(m); CAPTURE(n);
        CHECK(F.root(F.N()) == F.one());
        for (int k = 1; k < F.N(); ++k) CHECK(F.root(k) != F.one());
        // Sum of all N-th roots of unity vanishes for N > 1.
        Cyc s = F.zero();
        for (int k = 0; k < F.N(); ++k) s += F.root(k);
        CHECK(s.is_zero());
        // q has exact order n.
        CHECK(F.q_pow(F.n()) == F.one());
        for (int k = 1; k < F.n(); ++k) CHECK(F.q_pow(k) != F.one());
        // Negative exponents wrap.
        CHECK(F.root(-1) * F.root(1) == F.one());
        CHECK(F.q_pow(-1) == F.q_pow(F.n() - 1));
    }
}

TEST_CASE("field axioms and exact inverses on a seeded sample") {
    Field F(2, 3);
    Lcg g(0x5eed0001);
    for (int t = 0; t < 40; ++t) {
        Cyc x = random_cyc(F, g), y = random_cyc(F, g), z = random_cyc(F, g);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == F.one());
            CHECK((y / x) * x == y);
        }
    }
    CHECK_THROWS_AS(F.zero().inverse(), std::domain_error);
    CHECK_THROWS_AS(F.one() / F.zero(), std::domain_error);

    Field F33(3, 3); // phi = 6 exercises deeper reduction
    Lcg g2(0x5eed0002);
    for (int t = 0; t < 15; ++t) {
        Cyc x = random_cyc(F33, g2), y = random_cyc(F33, g2);
        CHECK((x * y) * y == x * (y * y));
        if (!x.is_zero()) CHECK(x * x.inverse() == F33.one());
    }
}

TEST_CASE("detached zero behaves as a neutral element") {
    Field F(2, 2);
    Cyc z; // detached
    CHECK(z.is_zero());
    CHECK(z + F.root(1) == F.root(1));
    CHECK(F.root(1) + z == F.root(1));
    CHECK((z * F.root(1)).is_zero());
    CHECK(z == F.zero());
    Cyc acc;
    acc += F.integer(2);
    acc += F.integer(3);
    CHECK(acc == F.integer(5));
}

TEST_CASE("values from different fields never mix") {
    Field A(2, 2), B(2, 3);
    CHECK_THROWS_AS(A.one() + B.one(), std::invalid_argument);
    CHECK_THROWS_AS(A.one() * B.one(), std::invalid_argument);
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(Field(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(0, 0), std::invalid_argument);
}

TEST_CASE("q-integers: conventions, zero pattern, factorial example") {
    Field F(2, 3);
    CHECK(F.q_int(0).is_zero());
    CHECK(F.q_fact(0) == F.one());
    // (k)_q = 0 exactly when n | k, within 0 <= k <= 3n.
    for (long k = 0; k <= 3 * F.n(); ++k) {
        CAPTURE(k);
        CHECK(F.q_int(k).is_zero() == (k % F.n() == 0));
    }
    // Frozen: (2)!_q = 1 + q with q = xi^2 (xi a primitive 6th root).
    CHECK(F.q_fact(2) == F.one() + F.root(2));
    // q-factorials of k < n are invertible.
    for (long k = 0; k < F.n(); ++k) CHECK_FALSE(F.q_fact(k).is_zero());
}

TEST_CASE("alpha/gamma coefficients: frozen example and zero pattern") {
    // Frozen from the q = -1 case (m = n = 2, l = 1, i = 0):
    // gamma_2 = (1/(1)!_q)(q^0 - q^1) = 2, alpha_2 = -2.
    Field F(2, 2);
    Coeffs c(F, 1, 0);
    CHECK(c.gamma(2) == F.integer(2));
    CHECK(c.alpha(2) == F.integer(-2));
    // gamma_1(1,0) = (1)_q (q^1 - q^{-1}) = 0 at q = -1 (k = n - l).
    CHECK(c.gamma(1).is_zero());
    // alpha_1(1,0) = (1)_q (q^0 - q^0) = 0 (k = l).
    CHECK(c.alpha(1).is_zero());

    // Zero pattern over a full grid at (2,3): gamma_k = 0 iff k = n - l,
    // alpha_k = 0 iff k = l, and the k = n values never vanish.
    Field G(2, 3);
    for (long l = 1; l < G.n(); ++l)
        for (long i = 0; i < G.N(); ++i) {
            Coeffs cf(G, l, i);
            for (long k = 1; k < G.n(); ++k) {
                CAPTURE(l); CAPTURE(i); CAPTURE(k);
                CHECK(cf.gamma(k).is_zero() == (k == G.n() - l));
                CHECK(cf.alpha(k).is_zero() == (k == l));
            }
            CHECK_FALSE(cf.gamma(G.n()).is_zero());
            CHECK_FALSE(cf.alpha(G.n()).is_zero());
        }
}

TEST_CASE("rational serialization round trip") {
    CHECK(rat_to_string(Rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(-6, 8)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5/1");
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_from_string("-9/6") == Rat(-3, 2));
    CHECK(rat_from_string("+4/2") == Rat(2));
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    for (const char* s : {"3/4", "-3/4", "5/1", "0/1"})
        CHECK(rat_to_string(rat_from_string(s)) == s);
}
