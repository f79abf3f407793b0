#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fano/bridge.hpp"
#include "fano/mcd.hpp"

using namespace fano;

namespace {

// closed-form oracle for the pairing of two plane classes in terms of the
// symmetric difference of their index sets
Rat pairing_oracle(int n, const std::vector<int>& I, const std::vector<int>& J) {
    const int N = n + 3, m = n / 2;
    std::set<int> a(I.begin(), I.end()), b(J.begin(), J.end());
    int sym = 0;
    for (int i = 1; i <= N; ++i) sym += (a.count(i) != b.count(i)) ? 1 : 0;
    int sign = ((m + int(I.size()) + int(J.size())) % 2 == 0) ? 1 : -1;
    return Rat(1, 4) + Rat(sign) * Rat(N - 2 * sym, 4);
}

ZVec pairing_functional(const LatticeClass& c) {
    return primitive(c.space()->gram().apply(c.canonical_coords()));
}

}  // namespace

TEST_CASE("divisor/curve duality table is the closed form, exhaustively at n=2") {
    const int n = 2;
    SpacePtr z = make_space(n, Side::Z);
    std::vector<PlaneLabel> labels = all_labels(n);
    REQUIRE(labels.size() == 16);
    for (const PlaneLabel& a : labels)
        for (const PlaneLabel& b : labels) {
            Rat want = pairing_oracle(n, a.rep, b.rep);
            CHECK(pair(beta_class(a, z), alpha_inv(b, z)) == want);
            CHECK(pair(beta_class(b, z), alpha_inv(a, z)) == want);
        }
}

TEST_CASE("transport and its inverse round-trip, and classify to the trivial pair") {
    std::mt19937_64 rng(83);
    for (int n : {2, 4}) {
        SpacePtr z = make_space(n, Side::Z);
        SpacePtr x = make_space(n, Side::X);
        for (const PlaneLabel& L : all_labels(n)) {
            LatticeMap h = h_tilde(L, x, z);
            LatticeMap back = inverse_map(h);
            CHECK(compose(back, h).matrix == QMat::identity(x->rank()));
            QVec v(x->rank());
            for (Rat& q : v) q = Rat(int(rng() % 15) - 7, 1 + int(rng() % 3));
            LatticeClass c(x, x->canonical_basis(), v);
            CHECK(back.apply(h.apply(c)) == c);
            // the transport itself classifies as (L, identity relabelling)
            auto got = classify_pseudo_iso(h);
            REQUIRE(got.has_value());
            CHECK(got->first == L);
            for (std::size_t i = 0; i < got->second.size(); ++i) CHECK(got->second[i] == int(i) + 1);
        }
    }
}

TEST_CASE("classify_pseudo_iso rejects maps outside the expected shape") {
    SpacePtr z = make_space(2, Side::Z);
    SpacePtr x = make_space(2, Side::X);
    LatticeMap h = h_tilde(canonical({}, 2), x, z);
    LatticeMap scaled{x, z, h.matrix * QMat::identity(x->rank())};
    scaled.matrix(0, 0) += 1;  // no longer a lattice transport
    CHECK_FALSE(classify_pseudo_iso(scaled).has_value());
    // wrong orientation of the sides
    CHECK_FALSE(classify_pseudo_iso(inverse_map(h)).has_value());
}

TEST_CASE("cremona pullbacks are involutions fixing the anticanonical class") {
    const int n = 4, N = 7;
    SpacePtr x = make_space(n, Side::X);
    SpacePtr z = make_space(n, Side::Z);
    LatticeMap h0 = h_tilde(canonical({}, n), x, z);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            LatticeMap c = cremona_pullback(i, j, x);
            CHECK(compose(c, c).matrix == QMat::identity(x->rank()));
            CHECK(c.apply(cls_minus_K(x)) == cls_minus_K(x));
            CHECK(c.apply(cls_E(x, i)) == cls_E(x, j));
            // conjugating by the transport gives the double sign change
            CHECK(h0.matrix * c.matrix * inverse(h0.matrix) == weyl_matrix(sigma({i, j}, N), z));
        }
    CHECK_THROWS(cremona_pullback(1, 1, x));
    CHECK_THROWS(cremona_pullback(0, 2, x));
}

TEST_CASE("curve classes pair with divisor classes as catalogued") {
    for (int n : {2, 4}) {
        SpacePtr z = make_space(n, Side::Z);
        for (const PlaneLabel& L : all_labels(n)) {
            CurveClass l = curve_class(CurveKind::Line, L, z);
            CurveClass d = curve_class(CurveKind::DM, L, z);
            CurveClass e = curve_class(CurveKind::EM, L, z);
            CurveClass c = curve_class(CurveKind::Elliptic, L, z);
            CHECK(pair(cls_minus_K_G(z), d) == n + 1);
            CHECK(pair(cls_minus_K_G(z), c) == 4);
            CHECK(pair(cls_minus_K_G(z), l) == 1);
            CHECK(pair(beta_class(L, z), c) == 1);
            CHECK(pair(beta_class(L, z), e) == -1);
            for (int i = 1; i <= n + 3; ++i) {
                CHECK(pair(beta_class(label_after_sigma({i}, L), z), d) == 0);
                CurveClass f = curve_class(CurveKind::Fiber, L, z, i);
                // a fiber class is eta/2 +- eps_i on the nose
                bool in_rep = std::binary_search(L.rep.begin(), L.rep.end(), i);
                int tau = ((L.rep.size() % 2 == 0) ? 1 : -1) * (in_rep ? -1 : 1);
                QVec fc = f.cls.canonical_coords();
                CHECK(fc[0] == Rat(1, 2));
                for (int j = 1; j <= n + 3; ++j)
                    CHECK(fc[std::size_t(j)] == ((j == i) ? Rat(tau) : Rat(0)));
            }
        }
    }
}

TEST_CASE("cone catalogue: curve cones, divisor cones, and their ray names") {
    GCones g2 = g_cones(2);
    // on a surface the moving and nef divisor cones agree
    std::set<ZVec> nef2(g2.nef.rays.begin(), g2.nef.rays.end());
    std::set<ZVec> mov2(g2.mov_div.rays.begin(), g2.mov_div.rays.end());
    CHECK(nef2 == mov2);
    CHECK(g2.eff.rays.size() == 16);
    CHECK(g2.ne == g2.eff);
    CHECK(g2.mov_curves == g2.nef);

    GCones g4 = g_cones(4);
    CHECK(g4.eff.rays.size() == 64);
    CHECK(g4.nef.rays.size() == 64 + 14);
    // extremal rays of the dual moving cone: the classes e_M and the fibers
    std::size_t fiber = 0, em = 0;
    for (const ZVec& r : g4.mov_div_dual.rays) {
        std::string name = name_ray(r, 4);
        REQUIRE(!name.empty());
        if (name.find("fiber") != std::string::npos) ++fiber;
        if (name.find("eta_M") != std::string::npos) ++em;
    }
    CHECK(g4.mov_div_dual.rays.size() == 78);
    CHECK(em == 64);
    CHECK(fiber == 14);
}

TEST_CASE("contracted faces of the effective cone") {
    for (int n : {2, 4}) {
        const int N = n + 3;
        SpacePtr z = make_space(n, Side::Z);
        RationalCone E = cone_E(z);
        PlaneLabel L = canonical({}, n);
        // the fiber functional vanishes on exactly half of the plane classes
        CurveClass f = curve_class(CurveKind::Fiber, L, z, 1);
        std::vector<ZVec> face_fiber = face_of(E, pairing_functional(f.cls));
        CHECK(face_fiber.size() == std::size_t(1) << (n + 1));
        // the small-contraction functional vanishes exactly on the adjacent planes
        LatticeClass d = class_delta(L, z);
        std::vector<ZVec> face_delta = face_of(E, pairing_functional(d));
        REQUIRE(face_delta.size() == std::size_t(N));
        std::set<ZVec> want;
        for (int i = 1; i <= N; ++i)
            want.insert(primitive(plane_class(label_after_sigma({i}, L), z).canonical_coords()));
        CHECK(std::set<ZVec>(face_delta.begin(), face_delta.end()) == want);
    }
}

TEST_CASE("automorphism bounds") {
    for (int n : {2, 4}) {
        AutBounds b = aut_bounds(n);
        CHECK(b.lower == Int(1) << (n + 2));
        Int fact = 1;
        for (int k = 2; k <= n + 3; ++k) fact *= k;
        CHECK(b.upper == b.lower * fact);
        CHECK(b.sign_changes_preserve_cones);
        CHECK_FALSE(b.note.empty());
    }
}
