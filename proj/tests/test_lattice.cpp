#include <doctest.h>

#include <random>
#include <set>

#include "fano/lattice.hpp"
#include "fano/planes.hpp"

using namespace fano;

namespace {

// independent oracle for the pairing of two plane classes, from the closed
// form <M_I, M_J> = 1/4 + (-1)^{m+|I|+|J|} (N - 2|I delta J|) / 4
Rat pairing_oracle(int n, const std::vector<int>& I, const std::vector<int>& J) {
    const int N = n + 3, m = n / 2;
    std::set<int> a(I.begin(), I.end()), b(J.begin(), J.end());
    int sym = 0;
    for (int i = 1; i <= N; ++i) sym += (a.count(i) != b.count(i)) ? 1 : 0;
    int sign = ((m + int(I.size()) + int(J.size())) % 2 == 0) ? 1 : -1;
    return Rat(1, 4) + Rat(sign) * Rat(N - 2 * sym, 4);
}

std::vector<int> subset_from_mask(unsigned long mask, int N) {
    std::vector<int> I;
    for (int i = 0; i < N; ++i)
        if (mask & (1ul << i)) I.push_back(i + 1);
    return I;
}

}  // namespace

TEST_CASE("gram matrices of both sides") {
    for (int n : {2, 4}) {
        SpacePtr z = make_space(n, Side::Z);
        SpacePtr x = make_space(n, Side::X);
        const int m = n / 2, N = n + 3;
        CHECK(pair(cls_eta(z), cls_eta(z)) == 4);
        CHECK(pair(cls_H(x), cls_H(x)) == n - 1);
        for (int i = 1; i <= N; ++i) {
            CHECK(pair(cls_eps(z, i), cls_eps(z, i)) == ((m % 2 == 0) ? 1 : -1));
            CHECK(pair(cls_E(x, i), cls_E(x, i)) == -1);
            CHECK(pair(cls_eta(z), cls_eps(z, i)) == 0);
            CHECK(pair(cls_H(x), cls_E(x, i)) == 0);
        }
    }
}

TEST_CASE("plane pairings match the closed-form oracle exhaustively at n=2") {
    const int n = 2, N = 5;
    SpacePtr z = make_space(n, Side::Z);
    for (unsigned long a = 0; a < (1ul << N); ++a)
        for (unsigned long b = 0; b < (1ul << N); ++b) {
            std::vector<int> I = subset_from_mask(a, N), J = subset_from_mask(b, N);
            LatticeClass mi(z, z->canonical_basis(), plane_coords(n, I));
            LatticeClass mj(z, z->canonical_basis(), plane_coords(n, J));
            CHECK(pair(mi, mj) == pairing_oracle(n, I, J));
        }
}

TEST_CASE("plane pairings match the closed-form oracle, sampled at n=4 and n=6") {
    std::mt19937_64 rng(7);
    for (int n : {4, 6}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        for (int t = 0; t < 300; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::vector<int> J = subset_from_mask(rng() & ((1ul << N) - 1), N);
            LatticeClass mi(z, z->canonical_basis(), plane_coords(n, I));
            LatticeClass mj(z, z->canonical_basis(), plane_coords(n, J));
            CHECK(pair(mi, mj) == pairing_oracle(n, I, J));
        }
    }
}

TEST_CASE("subset and complement give the same plane class up to nothing at all") {
    // the label is defined modulo complement; the class itself must agree
    for (int n : {2, 4}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        std::mt19937_64 rng(11);
        for (int t = 0; t < 50; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::vector<int> C;
            std::set<int> s(I.begin(), I.end());
            for (int i = 1; i <= N; ++i)
                if (!s.count(i)) C.push_back(i);
            CHECK(plane_coords(n, I) == plane_coords(n, C));
        }
    }
}

TEST_CASE("registered basis round-trips") {
    std::mt19937_64 rng(13);
    for (int n : {2, 4}) {
        SpacePtr z = make_space(n, Side::Z);
        SpacePtr x = make_space(n, Side::X);
        for (int t = 0; t < 30; ++t) {
            QVec v(z->rank());
            for (Rat& q : v) q = Rat(int(rng() % 21) - 10, 1 + int(rng() % 6));
            LatticeClass cz(z, z->canonical_basis(), v);
            CHECK(cz.in_basis("M").in_basis("eps") == cz);
            LatticeClass cx(x, x->canonical_basis(), v);
            CHECK(cx.in_basis("KE").in_basis("HE") == cx);
            CHECK(cx.in_basis("Keps").in_basis("HE") == cx);
            // pairing is basis independent
            CHECK(pair(cx.in_basis("KE"), cx) == pair(cx, cx));
        }
    }
}

TEST_CASE("anticanonical class on the X side") {
    for (int n : {2, 4, 6}) {
        SpacePtr x = make_space(n, Side::X);
        LatticeClass k = cls_minus_K(x);
        LatticeClass built = cls_H(x) * Rat(n + 1);
        for (int i = 1; i <= n + 3; ++i) built = built - cls_E(x, i) * Rat(n - 1);
        CHECK(k == built);
        CHECK(pair(k, k) == 4 * (n - 1));  // (n+1)^2(n-1) - (n-1)^2(n+3)
    }
}

TEST_CASE("integral lattice membership") {
    for (int n : {2, 4}) {
        SpacePtr z = make_space(n, Side::Z);
        std::mt19937_64 rng(17);
        const int N = n + 3;
        for (int t = 0; t < 30; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::vector<int> J = subset_from_mask(rng() & ((1ul << N) - 1), N);
            LatticeClass mi(z, z->canonical_basis(), plane_coords(n, I));
            LatticeClass mj(z, z->canonical_basis(), plane_coords(n, J));
            CHECK(is_integral(mi));
            CHECK(is_integral(mi + mj));
            CHECK(is_integral(mi - mj));
        }
        CHECK(is_integral(cls_eta(z)));
        CHECK_FALSE(is_integral(cls_eta(z) * Rat(1, 4)));
        CHECK_FALSE(is_integral(cls_eta(z) * Rat(1, 3)));
    }
}

TEST_CASE("plane class in the eta/M basis matches the expansion through eps") {
    // M_I = eta/4 + (-1)^{|I|}/2 (sum_{j notin I} eps_j - sum_{i in I} eps_i),
    // re-expanded in {eta, M_i} with eps_i = eta/(2(n+1)) - (sum M_j)/(n+1) + M_i
    for (int n : {2, 4}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        std::mt19937_64 rng(19);
        for (int t = 0; t < 40; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::set<int> s(I.begin(), I.end());
            const int d = N - 2 * int(I.size());
            Rat sign((I.size() % 2 == 0) ? 1 : -1);
            QVec want(z->rank(), Rat(0));
            want[0] = Rat(1, 4) + sign * Rat(d, 4 * (n + 1));
            for (int i = 1; i <= N; ++i) {
                want[std::size_t(i)] = -sign * Rat(d, 2 * (n + 1));
                want[std::size_t(i)] += sign * (s.count(i) ? Rat(-1, 2) : Rat(1, 2));
            }
            LatticeClass mi(z, z->canonical_basis(), plane_coords(n, I));
            CHECK(mi.in_basis("M").coords() == want);
        }
    }
}

TEST_CASE("odd n and bad bases are rejected") {
    CHECK_THROWS(make_space(3, Side::Z));
    CHECK_THROWS(make_space(0, Side::X));
    SpacePtr z = make_space(2, Side::Z);
    CHECK_THROWS(LatticeClass(z, "HE", QVec(z->rank())));
}
