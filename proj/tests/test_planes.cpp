#include <doctest.h>

#include <random>
#include <set>

#include "fano/planes.hpp"

using namespace fano;

namespace {

std::vector<int> subset_from_mask(unsigned long mask, int N) {
    std::vector<int> I;
    for (int i = 0; i < N; ++i)
        if (mask & (1ul << i)) I.push_back(i + 1);
    return I;
}

int symdiff_size(const std::vector<int>& a, const std::vector<int>& b, int N) {
    std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    int k = 0;
    for (int i = 1; i <= N; ++i)
        if (sa.count(i) != sb.count(i)) ++k;
    return k;
}

}  // namespace

TEST_CASE("label counts and representative normal form") {
    for (int n : {2, 4, 6}) {
        const int N = n + 3, m = n / 2;
        std::vector<PlaneLabel> labels = all_labels(n);
        CHECK(labels.size() == std::size_t(1) << (n + 2));
        std::set<PlaneLabel> uniq(labels.begin(), labels.end());
        CHECK(uniq.size() == labels.size());
        for (const PlaneLabel& L : labels) {
            CHECK(int(L.rep.size()) <= m + 1);
            CHECK(std::is_sorted(L.rep.begin(), L.rep.end()));
            if (!L.rep.empty()) {
                CHECK(L.rep.front() >= 1);
                CHECK(L.rep.back() <= N);
            }
        }
    }
}

TEST_CASE("canonical identifies a subset with its complement") {
    std::mt19937_64 rng(43);
    for (int n : {2, 4, 6}) {
        const int N = n + 3;
        for (int t = 0; t < 100; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::set<int> s(I.begin(), I.end());
            std::vector<int> C;
            for (int i = 1; i <= N; ++i)
                if (!s.count(i)) C.push_back(i);
            CHECK(canonical(I, n) == canonical(C, n));
            // the representative is I or its complement, nothing else
            PlaneLabel L = canonical(I, n);
            CHECK((L.rep == I || L.rep == C));
        }
    }
}

TEST_CASE("label_after_sigma is an involution compatible with symmetric difference") {
    std::mt19937_64 rng(47);
    for (int n : {2, 4}) {
        const int N = n + 3;
        for (int t = 0; t < 200; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::vector<int> J = subset_from_mask(rng() & ((1ul << N) - 1), N);
            PlaneLabel L = canonical(J, n);
            CHECK(label_after_sigma(I, label_after_sigma(I, L)) == L);
            // oracle: the image label is J symmetric-difference I, mod complement
            std::set<int> sI(I.begin(), I.end()), sJ(J.begin(), J.end());
            std::vector<int> D;
            for (int i = 1; i <= N; ++i)
                if (sI.count(i) != sJ.count(i)) D.push_back(i);
            CHECK(label_after_sigma(I, L) == canonical(D, n));
        }
    }
}

TEST_CASE("intersection_dim oracle") {
    std::mt19937_64 rng(53);
    for (int n : {2, 4}) {
        const int N = n + 3, m = n / 2;
        for (int t = 0; t < 200; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            std::vector<int> J = subset_from_mask(rng() & ((1ul << N) - 1), N);
            PlaneLabel a = canonical(I, n), b = canonical(J, n);
            int d = symdiff_size(I, J, N);
            int dist = std::min(d, N - d);
            CHECK(intersection_dim(a, b) == m - dist);
        }
        // distance zero: same plane, full dimension m
        PlaneLabel L = canonical({1, 2}, n);
        CHECK(intersection_dim(L, L) == m);
    }
}

TEST_CASE("family parity is preserved by sigma_i and flipped by sigma_j, j != i") {
    std::mt19937_64 rng(61);
    for (int n : {2, 4}) {
        const int N = n + 3;
        PlaneLabel base = canonical({}, n);
        for (int i = 1; i <= N; ++i) CHECK(family_parity(i, base) == Family::Tpsi);
        for (int t = 0; t < 100; ++t) {
            PlaneLabel L = canonical(subset_from_mask(rng() & ((1ul << N) - 1), N), n);
            int i = 1 + int(rng() % N);
            int j = 1 + int(rng() % N);
            if (j == i) j = (j % N) + 1;
            CHECK(family_parity(i, label_after_sigma({i}, L)) == family_parity(i, L));
            CHECK(family_parity(i, label_after_sigma({j}, L)) != family_parity(i, L));
        }
    }
}

TEST_CASE("plane_class agrees with the coordinate formula") {
    std::mt19937_64 rng(59);
    for (int n : {2, 4}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        for (int t = 0; t < 100; ++t) {
            std::vector<int> I = subset_from_mask(rng() & ((1ul << N) - 1), N);
            CHECK(plane_class(canonical(I, n), z).canonical_coords() == plane_coords(n, I));
        }
    }
}
