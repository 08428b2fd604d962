#include <doctest.h>

#include "hmn/linalg.hpp"

#include <cstdint>

using namespace hmn;

namespace {

struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Small integers plus occasional xi multiples keep the arithmetic honest.
Mat rnd(const Field& F, Lcg& g, int r, int c) {
    Mat A(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Cyc v = F.integer(g.next(-3, 3));
            if (g.next(0, 3) == 0) v += F.root(1) * F.integer(g.next(-2, 2));
            A.at(i, j) = v;
        }
    return A;
}

} // namespace

TEST_CASE("frozen kernel: nilpotent shift matrix") {
    Field F(2, 2);
    // D_2 e_1 = 0, D_2 e_2 = e_1: matrix [[0,1],[0,0]].
    Mat D(F, 2, 2);
    D.at(0, 1) = F.one();
    Subspace K = kernel(D);
    CHECK(K.dim() == 1);
    CHECK(K.basis().at(0, 0) == F.one());
    CHECK(K.basis().at(0, 1) == F.zero());
}

TEST_CASE("rref produces a canonical basis independent of generator order") {
    Field F(2, 3);
    Lcg g(0x11a);
    for (int t = 0; t < 10; ++t) {
        Mat A = rnd(F, g, 4, 5);
        // Shuffle rows and mix in row operations; the span is unchanged.
        Mat B(F, 4, 5);
        for (int j = 0; j < 5; ++j) {
            B.at(0, j) = A.at(2, j);
            B.at(1, j) = A.at(0, j) + A.at(1, j);
            B.at(2, j) = A.at(3, j);
            B.at(3, j) = A.at(1, j) - A.at(3, j);
        }
        Subspace u = Subspace::row_space(A), v = Subspace::row_space(B);
        CHECK(u.contains(v));
        if (u.dim() == v.dim()) CHECK(u == v);
    }
}

TEST_CASE("rank-nullity on seeded samples") {
    Field F(2, 2);
    Lcg g(0x22b);
    for (int t = 0; t < 12; ++t) {
        int r = static_cast<int>(g.next(1, 5)), c = static_cast<int>(g.next(1, 5));
        Mat A = rnd(F, g, r, c);
        CHECK(rank(A) + kernel(A).dim() == c);
        // A annihilates every kernel basis vector.
        Subspace K = kernel(A);
        for (int i = 0; i < K.dim(); ++i) {
            auto img = A.apply(K.basis().row(i));
            for (const auto& x : img) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("subspace dimension formula and membership") {
    Field F(2, 3);
    Lcg g(0x33c);
    for (int t = 0; t < 10; ++t) {
        Subspace U = Subspace::row_space(rnd(F, g, 3, 6));
        Subspace V = Subspace::row_space(rnd(F, g, 3, 6));
        Subspace S = sum(U, V), I = intersect(U, V);
        CHECK(S.dim() + I.dim() == U.dim() + V.dim());
        CHECK(S.contains(U));
        CHECK(S.contains(V));
        CHECK(U.contains(I));
        CHECK(V.contains(I));
        CHECK(sum(U, U) == U);
        CHECK(intersect(U, U) == U);
        // Every intersection vector reduces to zero against both bases.
        for (int i = 0; i < I.dim(); ++i) {
            CHECK(U.contains(I.basis().row(i)));
            CHECK(V.contains(I.basis().row(i)));
        }
    }
}

TEST_CASE("coords recovers coefficients and rejects outside vectors") {
    Field F(2, 2);
    Mat gens(F, 2, 4);
    gens.at(0, 0) = F.one();
    gens.at(0, 2) = F.root(1);
    gens.at(1, 1) = F.integer(2);
    gens.at(1, 3) = F.one();
    Subspace U = Subspace::row_space(gens);
    REQUIRE(U.dim() == 2);
    // v = 3*row0 + xi*row1 in the canonical basis.
    std::vector<Cyc> v(4, F.zero());
    for (int j = 0; j < 4; ++j)
        v[static_cast<std::size_t>(j)] = F.integer(3) * U.basis().at(0, j) + F.root(1) * U.basis().at(1, j);
    auto co = U.coords(v);
    REQUIRE(co.has_value());
    CHECK((*co)[0] == F.integer(3));
    CHECK((*co)[1] == F.root(1));
    std::vector<Cyc> w(4, F.zero());
    w[0] = F.one();
    w[1] = F.one();
    w[2] = F.one(); // not in U: row space pins coordinate 2 to xi * coordinate 0
    CHECK_FALSE(U.coords(w).has_value());
    CHECK_FALSE(U.contains(w));
}

TEST_CASE("solve: consistent systems round-trip, inconsistent detected") {
    Field F(2, 3);
    Lcg g(0x44d);
    for (int t = 0; t < 10; ++t) {
        Mat A = rnd(F, g, 4, 3);
        std::vector<Cyc> x0;
        for (int j = 0; j < 3; ++j) x0.push_back(F.integer(g.next(-4, 4)));
        auto b = A.apply(x0);
        auto x = solve(A, b);
        REQUIRE(x.has_value());
        CHECK(A.apply(*x) == b);
    }
    // x + y = 0 and x + y = 1 cannot both hold.
    Mat A(F, 2, 2);
    A.at(0, 0) = A.at(0, 1) = A.at(1, 0) = A.at(1, 1) = F.one();
    std::vector<Cyc> b{F.zero(), F.one()};
    CHECK_FALSE(solve(A, b).has_value());
}

TEST_CASE("determinants: frozen value, multiplicativity, singularity") {
    Field F(2, 2);
    // [[xi, 1], [2, xi]] has det xi^2 - 2 = -3 since xi^2 = -1.
    Mat A(F, 2, 2);
    A.at(0, 0) = F.root(1);
    A.at(0, 1) = F.one();
    A.at(1, 0) = F.integer(2);
    A.at(1, 1) = F.root(1);
    CHECK(det(A) == F.integer(-3));

    Lcg g(0x55e);
    for (int t = 0; t < 8; ++t) {
        Mat X = rnd(F, g, 3, 3), Y = rnd(F, g, 3, 3);
        CHECK(det(X * Y) == det(X) * det(Y));
    }
    // Repeated row forces det 0.
    Mat S = rnd(F, g, 3, 3);
    for (int j = 0; j < 3; ++j) S.at(2, j) = S.at(0, j);
    CHECK(det(S).is_zero());
}

TEST_CASE("inverse: exact two-sided inverse or nullopt") {
    Field F(2, 3);
    Lcg g(0x66f);
    int found = 0;
    for (int t = 0; t < 12; ++t) {
        Mat A = rnd(F, g, 3, 3);
        auto inv = inverse(A);
        if (det(A).is_zero()) {
            CHECK_FALSE(inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(A * *inv == Mat::identity(F, 3));
            CHECK(*inv * A == Mat::identity(F, 3));
            ++found;
        }
    }
    CHECK(found > 0);
}

TEST_CASE("matrix pow and block assembly") {
    Field F(2, 2);
    Mat D(F, 2, 2);
    D.at(0, 1) = F.one();
    CHECK(D.pow(0) == Mat::identity(F, 2));
    CHECK(D.pow(1) == D);
    CHECK(D.pow(2).is_zero());

    Mat I = Mat::identity(F, 2), Z(F, 2, 2);
    Mat B = Mat::block2(I, D, Z, I);
    CHECK(B.rows() == 4);
    CHECK(B.cols() == 4);
    CHECK(B.at(0, 3) == F.one()); // D lands in the top-right block
    CHECK(B.at(2, 2) == F.one());
    CHECK(rank(B) == 4);
}
