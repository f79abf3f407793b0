#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "fano/cones.hpp"
#include "fano/linalg.hpp"

using namespace fano;

namespace {

// brute-force extremal-ray oracle: for every (dim-1)-subset of the normals,
// solve for the null direction, orient it, and keep it when it satisfies every
// inequality and is tight on at least dim-1 independent normals
std::vector<ZVec> rays_by_enumeration(const std::vector<ZVec>& halfspaces, std::size_t dim) {
    std::set<ZVec> found;
    const std::size_t h = halfspaces.size();
    std::vector<std::size_t> idx(dim - 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t lo) {
        if (at == dim - 1) {
            QMat m(dim - 1, dim);
            for (std::size_t r = 0; r < dim - 1; ++r)
                for (std::size_t c = 0; c < dim; ++c) m(r, c) = Rat(halfspaces[idx[r]][c]);
            if (rank(m) != dim - 1) return;
            // one-dimensional kernel: find it by extending to a square system
            for (std::size_t free_c = 0; free_c < dim; ++free_c) {
                QMat sq(dim, dim);
                for (std::size_t r = 0; r < dim - 1; ++r)
                    for (std::size_t c = 0; c < dim; ++c) sq(r, c) = m(r, c);
                sq(dim - 1, free_c) = 1;
                if (rank(sq) != dim) continue;
                QVec rhs(dim, Rat(0));
                rhs[dim - 1] = 1;
                QVec v = solve(sq, rhs);
                for (int orient : {1, -1}) {
                    QVec w(dim);
                    for (std::size_t c = 0; c < dim; ++c) w[c] = Rat(orient) * v[c];
                    bool inside = true;
                    for (const ZVec& a : halfspaces)
                        if (dot(to_rational(a), w) < 0) {
                            inside = false;
                            break;
                        }
                    if (inside && !is_zero(w)) found.insert(primitive(w));
                }
                break;
            }
            return;
        }
        for (std::size_t i = lo; i + (dim - 2 - at) < h; ++i) {
            idx[at] = i;
            rec(at + 1, i + 1);
        }
    };
    rec(0, 0);
    return {found.begin(), found.end()};
}

ZVec zv(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

}  // namespace

TEST_CASE("dual_rays matches the brute-force oracle on random pointed cones") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t dim = 3 + (trial % 2);
        std::vector<ZVec> halfspaces;
        while (true) {
            halfspaces.clear();
            for (int k = 0; k < 7; ++k) {
                ZVec a(dim);
                for (Int& x : a) x = Int(int(rng() % 11)) - 5;
                if (!is_zero(to_rational(a))) halfspaces.push_back(a);
            }
            // force pointedness by adding the positive orthant
            for (std::size_t i = 0; i < dim; ++i) {
                ZVec e(dim, Int(0));
                e[i] = 1;
                halfspaces.push_back(e);
            }
            QMat m(halfspaces.size(), dim);
            for (std::size_t r = 0; r < halfspaces.size(); ++r)
                for (std::size_t c = 0; c < dim; ++c) m(r, c) = Rat(halfspaces[r][c]);
            if (rank(m) == dim) break;
        }
        std::vector<ZVec> got = dual_rays(halfspaces, dim);
        std::vector<ZVec> want = rays_by_enumeration(halfspaces, dim);
        std::sort(got.begin(), got.end());
        CHECK(got == want);
    }
}

TEST_CASE("cone_from_rays and cone_from_facets are mutually inverse") {
    // square-based cone: four extremal rays, non-simplicial
    std::vector<ZVec> rays = {zv({1, 0, 1}), zv({0, 1, 1}), zv({-1, 0, 1}), zv({0, -1, 1}),
                              zv({0, 0, 1})};  // interior ray, must be dropped
    RationalCone c = cone_from_rays(rays);
    CHECK(c.rays.size() == 4);
    RationalCone back = cone_from_facets(c.facets);
    CHECK(back == c);
    RationalCone again = cone_from_rays(back.rays);
    CHECK(again == c);
    // membership
    CHECK(membership(c, QVec{Rat(0), Rat(0), Rat(1)}));
    CHECK(membership(c, QVec{Rat(0), Rat(0), Rat(0)}));
    CHECK_FALSE(membership(c, QVec{Rat(2), Rat(0), Rat(1)}));
}

TEST_CASE("non-pointed input is rejected") {
    // a half-space in R^2 contains the line x=0
    CHECK_THROWS(dual_rays({zv({1, 0})}, 2));
}

TEST_CASE("face_of extracts the tight rays") {
    RationalCone c = cone_from_rays({zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
    std::vector<ZVec> f = face_of(c, zv({0, 0, 1}));
    std::vector<ZVec> want = {zv({0, 1, 0}), zv({1, 0, 0})};
    std::sort(f.begin(), f.end());
    CHECK(f == want);
    CHECK_THROWS(face_of(c, zv({0, 0, -1})));  // negative somewhere on the cone
}

TEST_CASE("demihypercube(4) is the 16-cell") {
    AffinePolytope p = demihypercube(4);
    CHECK(p.vertices.size() == 8);
    CHECK(p.facets.size() == 16);
    CHECK(p.contains(QVec(4, Rat(0))));
    CHECK(p.strictly_contains(QVec(4, Rat(0))));
    CHECK(p.contains(cube_vertex({1}, 4)));
    CHECK_FALSE(p.contains(cube_vertex({}, 4)));  // even-parity corner is cut off
    CHECK_FALSE(p.strictly_contains(cube_vertex({1}, 4)));
}

TEST_CASE("eval_H is the graph distance on cube vertices") {
    const int N = 7;
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> I, J;
        for (int i = 1; i <= N; ++i) {
            if (rng() & 1) I.push_back(i);
            if (rng() & 1) J.push_back(i);
        }
        std::set<int> sI(I.begin(), I.end()), sJ(J.begin(), J.end());
        int d = 0;
        for (int i = 1; i <= N; ++i)
            if (sI.count(i) != sJ.count(i)) ++d;
        CHECK(eval_H(I, cube_vertex(J, N)) == d);
    }
}

TEST_CASE("polytope round trip through vertices and inequalities") {
    AffinePolytope p = demihypercube(5);
    AffinePolytope q = polytope_from_vertices(5, p.vertices);
    CHECK(q.vertices == p.vertices);
    CHECK(q.facets == p.facets);
    AffinePolytope r = polytope_from_inequalities(5, p.facets);
    CHECK(r.vertices == p.vertices);
    CHECK(r.facets == p.facets);
}

TEST_CASE("unbounded inequality systems are rejected") {
    // x >= 0 alone in R^2 is unbounded
    CHECK_THROWS(polytope_from_inequalities(2, {zv({0, 1, 0})}));
}

TEST_CASE("cone_E and its dual at n=2") {
    SpacePtr z = make_space(2, Side::Z);
    RationalCone E = cone_E(z);
    CHECK(E.rays.size() == 16);
    RationalCone Ed = cone_E_dual(z);
    std::vector<ZVec> gens = cone_E_dual_generators(2);
    CHECK(Ed.rays == gens);
    CHECK(Ed.rays.size() == 26);  // 2^{n+2} + 2(n+3) generators
    // duality with respect to the intersection form is involutive
    CHECK(dual_cone(Ed, z) == E);
    // every dual ray sits inside E
    for (const ZVec& r : Ed.rays) CHECK(membership(E, to_rational(r)));
}

TEST_CASE("linear symmetry search refuses oversized inputs") {
    // the full n=2 symmetry-group comparison runs in the long acceptance pass;
    // here only the guard against runaway searches is exercised
    SpacePtr z = make_space(6, Side::Z);
    CHECK_THROWS(linear_symmetries(z));
}
