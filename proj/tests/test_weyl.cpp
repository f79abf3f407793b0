#include <doctest.h>

#include <algorithm>
#include <random>

#include "fano/planes.hpp"
#include "fano/weyl.hpp"

using namespace fano;

namespace {

WeylElement random_element(int N, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> signs(static_cast<std::size_t>(N), 1);
    int flips = 0;
    for (int i = 0; i < N; ++i)
        if (rng() & 1) {
            signs[static_cast<std::size_t>(i)] = -1;
            ++flips;
        }
    if (flips % 2) signs[0] = -signs[0];
    return make_weyl(std::move(perm), std::move(signs));
}

}  // namespace

TEST_CASE("group axioms on random elements") {
    std::mt19937_64 rng(23);
    const int N = 7;
    const WeylElement id = weyl_identity(N);
    for (int t = 0; t < 200; ++t) {
        WeylElement a = random_element(N, rng), b = random_element(N, rng), c = random_element(N, rng);
        CHECK(compose(a, inverse(a)) == id);
        CHECK(compose(inverse(a), a) == id);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, id) == a);
        CHECK(compose(id, a) == a);
    }
}

TEST_CASE("odd sign count is rejected") {
    CHECK_THROWS(make_weyl({0, 1, 2, 3, 4}, {-1, 1, 1, 1, 1}));
    CHECK_NOTHROW(make_weyl({0, 1, 2, 3, 4}, {-1, -1, 1, 1, 1}));
}

TEST_CASE("sign-change elements: sigma_I equals sigma of the complement") {
    const int N = 7;
    CHECK(sigma({1, 2}, N) == sigma({3, 4, 5, 6, 7}, N));
    CHECK(sigma({}, N) == weyl_identity(N));
    CHECK(sigma({1, 2, 3, 4, 5, 6, 7}, N) == weyl_identity(N));
    // involution
    std::mt19937_64 rng(29);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> I;
        for (int i = 1; i <= N; ++i)
            if (rng() & 1) I.push_back(i);
        CHECK(compose(sigma(I, N), sigma(I, N)) == weyl_identity(N));
    }
}

TEST_CASE("decompose round-trips and lands in the even-set normal form") {
    std::mt19937_64 rng(31);
    for (int N : {5, 7}) {
        for (int t = 0; t < 300; ++t) {
            WeylElement w = random_element(N, rng);
            auto [I, rho] = decompose(w);
            CHECK(I.size() % 2 == 0);
            CHECK(std::is_sorted(I.begin(), I.end()));
            CHECK(compose(sigma(I, N), perm_element(rho)) == w);
        }
    }
}

TEST_CASE("act agrees with weyl_matrix") {
    std::mt19937_64 rng(37);
    for (int n : {2, 4}) {
        SpacePtr z = make_space(n, Side::Z);
        for (int t = 0; t < 50; ++t) {
            WeylElement w = random_element(n + 3, rng);
            QMat m = weyl_matrix(w, z);
            QVec v(z->rank());
            for (Rat& q : v) q = Rat(int(rng() % 19) - 9, 1 + int(rng() % 4));
            LatticeClass x(z, z->canonical_basis(), v);
            CHECK(act(w, x).canonical_coords() == m.apply(v));
            // the action is an isometry fixing eta
            CHECK(pair(act(w, x), act(w, x)) == pair(x, x));
            CHECK(act(w, cls_eta(z)) == cls_eta(z));
            // matrix -> element round trip
            CHECK(weyl_from_matrix(m) == w);
        }
    }
}

TEST_CASE("weyl_from_matrix rejects non-group matrices") {
    SpacePtr z = make_space(2, Side::Z);
    QMat m = QMat::identity(z->rank());
    m(0, 0) = 2;  // scales eta
    CHECK_FALSE(weyl_from_matrix(m).has_value());
    QMat s = QMat::identity(z->rank());
    s(1, 1) = -1;  // single sign flip: odd, outside D-type
    CHECK_FALSE(weyl_from_matrix(s).has_value());
}

TEST_CASE("group orders") {
    CHECK(group_order(weyl_group(2)) == 1920);            // 2^4 * 5!
    CHECK(group_order(weyl_group(4)) == 322560);          // 2^6 * 7!
    CHECK(group_order(weyl_group(6)) == Int(92897280));   // 2^8 * 9!
    for (int n : {2, 4, 6}) CHECK(group_order(wprime_group(n)) == Int(1) << (n + 2));
}

TEST_CASE("element enumeration of the sign-change subgroup") {
    std::vector<WeylElement> els = elements(wprime_group(2));
    CHECK(els.size() == 16);
    std::set<WeylElement> uniq(els.begin(), els.end());
    CHECK(uniq.size() == 16);
    for (const WeylElement& w : els) {
        auto [I, rho] = decompose(w);
        for (std::size_t i = 0; i < rho.size(); ++i) CHECK(rho[i] == int(i) + 1);
    }
    CHECK_THROWS(elements(weyl_group(6), 1000));  // cap refusal
}

TEST_CASE("orbits of basis vectors") {
    for (int n : {2, 4}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        // full W(D_N) on eps_1: all of +-eps_i
        CHECK(orbit(weyl_group(n), cls_eps(z, 1)).size() == 2 * std::size_t(N));
        // W' orbit of M_0 is all 2^{n+2} plane classes
        LatticeClass m0 = plane_class(canonical({}, n), z);
        std::set<LatticeClass> orb = orbit(wprime_group(n), m0);
        CHECK(orb.size() == std::size_t(1) << (n + 2));
        for (const PlaneLabel& L : all_labels(n)) CHECK(orb.count(plane_class(L, z)) == 1);
    }
}

TEST_CASE("sigma action on labels matches the lattice action") {
    std::mt19937_64 rng(41);
    for (int n : {2, 4}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        for (int t = 0; t < 100; ++t) {
            std::vector<int> I;
            for (int i = 1; i <= N; ++i)
                if (rng() & 1) I.push_back(i);
            std::vector<int> J;
            for (int i = 1; i <= N; ++i)
                if (rng() & 1) J.push_back(i);
            PlaneLabel L = canonical(J, n);
            CHECK(act(sigma(I, N), plane_class(L, z)) == plane_class(label_after_sigma(I, L), z));
        }
    }
}
