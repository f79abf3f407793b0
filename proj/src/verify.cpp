#include "fano/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fano {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string str(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

class Suite {
public:
    Suite(std::string name, int n) {
        rep_.suite = std::move(name);
        rep_.n = n;
    }

    /// f() -> (expected, computed); the check passes iff the strings match.
    template <class F>
    void check(const std::string& id, const std::string& detail, F&& f) {
        CheckResult c;
        c.id = id;
        c.detail = detail;
        auto t0 = Clock::now();
        try {
            auto [e, v] = f();
            c.expected = e;
            c.computed = v;
            c.pass = (e == v);
        } catch (const std::exception& ex) {
            c.expected = "no exception";
            c.computed = std::string("exception: ") + ex.what();
            c.pass = false;
        }
        c.ms = ms_since(t0);
        rep_.checks.push_back(std::move(c));
    }

    void check_true(const std::string& id, const std::string& detail, bool value) {
        check(id, detail, [&] { return std::pair<std::string, std::string>("true", value ? "true" : "false"); });
    }

    Report take() { return std::move(rep_); }

private:
    Report rep_;
};

std::pair<std::string, std::string> count_pair(const Int& expected, std::size_t got) {
    return {str(expected), str(Int(got))};
}

std::vector<int> random_subset(std::mt19937_64& rng, int N) {
    std::vector<int> I;
    for (int i = 1; i <= N; ++i)
        if (rng() & 1) I.push_back(i);
    return I;
}

PlaneLabel random_label(std::mt19937_64& rng, int n) { return canonical(random_subset(rng, n + 3), n); }

// ---------------------------------------------------------------- lattice ---

Report suite_lattice(int n) {
    Suite s("lattice", n);
    SpacePtr z = make_space(n, Side::Z);
    SpacePtr x = make_space(n, Side::X);
    const int N = n + 3, m = n / 2;
    std::mt19937_64 rng(0x5eed0001);

    s.check("gram_z", "diagonal form diag(4, (-1)^m, ...) on the eta/eps basis", [&] {
        bool ok = pair(cls_eta(z), cls_eta(z)) == 4;
        for (int i = 1; i <= N && ok; ++i) {
            ok = pair(cls_eps(z, i), cls_eps(z, i)) == ((m % 2 == 0) ? 1 : -1);
            ok = ok && pair(cls_eta(z), cls_eps(z, i)) == 0;
            for (int j = i + 1; j <= N && ok; ++j) ok = pair(cls_eps(z, i), cls_eps(z, j)) == 0;
        }
        return std::pair<std::string, std::string>("diagonal", ok ? "diagonal" : "not diagonal");
    });

    s.check("gram_x", "diagonal form diag(n-1, -1, ...) on the H/E basis", [&] {
        bool ok = pair(cls_H(x), cls_H(x)) == n - 1;
        for (int i = 1; i <= N && ok; ++i) {
            ok = pair(cls_E(x, i), cls_E(x, i)) == -1 && pair(cls_H(x), cls_E(x, i)) == 0;
            for (int j = i + 1; j <= N && ok; ++j) ok = pair(cls_E(x, i), cls_E(x, j)) == 0;
        }
        return std::pair<std::string, std::string>("diagonal", ok ? "diagonal" : "not diagonal");
    });

    s.check("label_count", "2^{n+2} plane labels", [&] {
        return count_pair(Int(1) << (n + 2), all_labels(n).size());
    });

    s.check("plane_norm", "every plane class has self-intersection (1 + (-1)^m (n+3))/4", [&] {
        Rat want = (Rat(1) + Rat((m % 2 == 0) ? 1 : -1) * Rat(N)) / 4;
        for (const PlaneLabel& L : all_labels(n))
            if (pair(plane_class(L, z), plane_class(L, z)) != want)
                return std::pair<std::string, std::string>(str(want), "mismatch at a label");
        return std::pair<std::string, std::string>(str(want), str(want));
    });

    s.check("eta_identity", "eta = M_I + M_{Ii} + M_{Ij} + M_{Iij} for sampled I, i, j", [&] {
        for (int t = 0; t < 200; ++t) {
            PlaneLabel L = random_label(rng, n);
            int i = 1 + int(rng() % N), j = 1 + int(rng() % N);
            if (i == j) continue;
            LatticeClass sum = plane_class(L, z) + plane_class(label_after_sigma({i}, L), z) +
                               plane_class(label_after_sigma({j}, L), z) +
                               plane_class(label_after_sigma({i, j}, L), z);
            if (!(sum == cls_eta(z))) return std::pair<std::string, std::string>("eta", "other class");
        }
        return std::pair<std::string, std::string>("eta", "eta");
    });

    s.check("eps_formula", "eps_i = M_0 + M_i - eta/2", [&] {
        PlaneLabel L0 = canonical({}, n);
        for (int i = 1; i <= N; ++i) {
            LatticeClass rhs =
                plane_class(L0, z) + plane_class(canonical({i}, n), z) - cls_eta(z) * Rat(1, 2);
            if (!(cls_eps(z, i) == rhs)) return std::pair<std::string, std::string>("eps_i", "other class");
        }
        return std::pair<std::string, std::string>("eps_i", "eps_i");
    });

    s.check("m_basis", "round-trip through the {eta, M_i} basis is the identity", [&] {
        for (int t = 0; t < 50; ++t) {
            QVec v(z->rank());
            for (Rat& q : v) q = Rat(int(rng() % 19) - 9, 1 + int(rng() % 4));
            LatticeClass c(z, z->canonical_basis(), v);
            if (!(c.in_basis("M").in_basis(z->canonical_basis()) == c))
                return std::pair<std::string, std::string>("identity", "changed");
        }
        return std::pair<std::string, std::string>("identity", "identity");
    });

    s.check("integrality", "plane classes generate a lattice containing eta but not eta/4", [&] {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) ok = is_integral(plane_class(random_label(rng, n), z));
        ok = ok && is_integral(cls_eta(z)) && !is_integral(cls_eta(z) * Rat(1, 4));
        return std::pair<std::string, std::string>("as stated", ok ? "as stated" : "violated");
    });

    s.check("weyl_factorization", "w = sigma_I . rho recovered by decompose, sampled", [&] {
        for (int t = 0; t < 100; ++t) {
            std::vector<int> kappa(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i) kappa[std::size_t(i)] = i + 1;
            std::shuffle(kappa.begin(), kappa.end(), rng);
            std::vector<int> I = random_subset(rng, N);
            if (I.size() % 2) I.pop_back();
            WeylElement w = compose(sigma(I, N), perm_element(kappa));
            auto [I2, kappa2] = decompose(w);
            if (!(compose(sigma(I2, N), perm_element(kappa2)) == w))
                return std::pair<std::string, std::string>("recovered", "not recovered");
        }
        return std::pair<std::string, std::string>("recovered", "recovered");
    });

    s.check("orbit_m0", "the sign-change subgroup acts transitively on the plane classes", [&] {
        return count_pair(Int(1) << (n + 2), orbit(wprime_group(n), plane_class(canonical({}, n), z)).size());
    });

    s.check("pairing_invariance", "the group action preserves the bilinear form, sampled", [&] {
        GroupHandle g = weyl_group(n);
        for (int t = 0; t < 60; ++t) {
            const WeylElement& w = g.generators[rng() % g.generators.size()];
            LatticeClass a = plane_class(random_label(rng, n), z);
            LatticeClass b = plane_class(random_label(rng, n), z);
            if (pair(act(w, a), act(w, b)) != pair(a, b))
                return std::pair<std::string, std::string>("preserved", "changed");
        }
        return std::pair<std::string, std::string>("preserved", "preserved");
    });

    s.check("intersection_dim", "plane intersection dimensions from label distance, spot values", [&] {
        PlaneLabel a = canonical({}, n);
        bool ok = intersection_dim(a, a) == m;
        ok = ok && intersection_dim(a, canonical({1, 2}, n)) == m - 2;
        ok = ok && intersection_dim(a, canonical({1}, n)) == m - 1;
        return std::pair<std::string, std::string>("spot values", ok ? "spot values" : "violated");
    });

    return s.take();
}

// ------------------------------------------------------------------ cones ---

Report suite_cones(int n) {
    Suite s("cones", n);
    SpacePtr z = make_space(n, Side::Z);
    const int N = n + 3;

    s.check("demihypercube", "2^{N-1} vertices and 2^{N-1} + 2N facets", [&] {
        const AffinePolytope& p = demihypercube(N);
        Int ev = Int(1) << (N - 1);
        std::ostringstream want, got;
        want << ev << " vertices, " << ev + 2 * N << " facets";
        got << p.vertices.size() << " vertices, " << p.facets.size() << " facets";
        return std::pair<std::string, std::string>(want.str(), got.str());
    });

    RationalCone E = cone_E(z);
    RationalCone Edual = cone_E_dual(z);

    s.check("cone_E_rays", "the effective cone has one extremal ray per plane class", [&] {
        return count_pair(Int(1) << (n + 2), E.rays.size());
    });

    s.check("dual_generators", "extremal rays of the dual cone match the closed-form list", [&] {
        std::vector<ZVec> want = cone_E_dual_generators(n);
        bool ok = want == Edual.rays;
        return std::pair<std::string, std::string>("equal", ok ? "equal" : "different");
    });

    s.check("dual_inside", "every dual-cone ray lies in the effective cone", [&] {
        for (const ZVec& r : Edual.rays)
            if (!membership(E, to_rational(r))) return std::pair<std::string, std::string>("inside", "outside");
        return std::pair<std::string, std::string>("inside", "inside");
    });

    s.check("duality_involutive", "dualizing twice returns the original cone", [&] {
        return std::pair<std::string, std::string>("equal", dual_cone(Edual, z) == E ? "equal" : "different");
    });

    s.check("nested_polytopes", "Nef and Mov slices sit inside the effective slice", [&] {
        const NamedRows& rows = named_rows(n);
        AffinePolytope nef = polytope_from_inequalities(N, rows.nef);
        AffinePolytope fano = polytope_from_inequalities(N, rows.fano);
        for (const QVec& v : nef.vertices)
            if (!rows_contain(rows.mov, v)) return std::pair<std::string, std::string>("nested", "nef outside mov");
        for (const QVec& v : fano.vertices)
            if (!rows_contain(rows.mov, v)) return std::pair<std::string, std::string>("nested", "fano outside mov");
        if (n <= 4) {
            // the mov vertex enumeration is only cheap for small n
            for (const QVec& v : named_cones(n).mov.vertices)
                if (!rows_contain(rows.delta, v))
                    return std::pair<std::string, std::string>("nested", "mov outside delta");
        }
        return std::pair<std::string, std::string>("nested", "nested");
    });

    // the exhaustive symmetry search is quick at n=2 only; larger n are
    // reachable through the library with an explicit cap override
    if (n <= 2) {
        s.check("symmetry_group", "cone symmetries fixing degrees = the signed permutation group", [&] {
            std::vector<WeylElement> found = linear_symmetries(z);
            std::vector<WeylElement> all = elements(weyl_group(n));
            std::sort(all.begin(), all.end());
            return std::pair<std::string, std::string>(str(Int(all.size())) + ", equal as sets",
                                                       str(Int(found.size())) +
                                                           (found == all ? ", equal as sets" : ", different"));
        });
    }

    return s.take();
}

// -------------------------------------------------------------------- mcd ---

Report suite_mcd(int n) {
    Suite s("mcd", n);
    SpacePtr x = make_space(n, Side::X);
    const int N = n + 3, m = n / 2;

    s.check("factorization_counts", "terminal counts of special subvarieties add to 2^{n+2}", [&] {
        FactorizationReport r = factorization(n);
        return std::pair<std::string, std::string>(str(Int(1) << (n + 2)),
                                                   str(Int(r.terminal_m + r.terminal_m_minus_1)));
    });

    if (n == 4) {
        s.check("dim4_counts", "n=4: one flip step with 22 loci; terminal counts 42 and 22", [&] {
            FactorizationReport r = factorization(4);
            std::ostringstream got;
            got << r.steps.size() << " steps, ";
            got << (r.steps.empty() ? 0 : r.steps[0].size()) << " loci, " << r.terminal_m << ", "
                << r.terminal_m_minus_1;
            return std::pair<std::string, std::string>("1 steps, 22 loci, 42, 22", got.str());
        });
    }

    s.check("anticanonical_chamber", "-K_X lies in the Fano chamber (interior when n >= 4)", [&] {
        ChamberDescriptor d = chamber_of(cls_minus_K(x));
        bool ok = d.effective && d.in_fano;
        if (n >= 4) ok = ok && rows_strictly_contain(named_rows(n).fano, d.sample);
        return std::pair<std::string, std::string>("in Fano chamber", ok ? "in Fano chamber" : "not");
    });

    s.check("hyperplane_chamber", "H lies in the Nef chamber", [&] {
        ChamberDescriptor d = chamber_of(cls_H(x));
        return std::pair<std::string, std::string>("nef", d.effective && d.in_nef ? "nef" : "not nef");
    });

    s.check("exceptional_vertex", "E_1 is effective and sits on the boundary of the slice", [&] {
        ChamberDescriptor d = chamber_of(cls_E(x, 1));
        bool boundary = d.effective && !rows_strictly_contain(named_rows(n).delta, d.sample);
        return std::pair<std::string, std::string>("boundary", boundary ? "boundary" : "not boundary");
    });

    s.check("walls_classify", "every arrangement wall classifies; k=2 walls carry E_{I^c}", [&] {
        for (const WallDescriptor& w : arrangement(n)) {
            WallKind kind = classify_wall(w, n);
            if (w.k == 2) {
                const auto* d = std::get_if<DivisorialWall>(&kind);
                if (!d) return std::pair<std::string, std::string>("all classified", "k=2 not divisorial");
                if (!(d->exceptional_class == class_E_I(d->exceptional_I, x)))
                    return std::pair<std::string, std::string>("all classified", "wrong exceptional class");
            } else if (!std::get_if<FlipWall>(&kind)) {
                return std::pair<std::string, std::string>("all classified", "k>2 not a flip");
            }
        }
        return std::pair<std::string, std::string>("all classified", "all classified");
    });

    s.check("boundary_walls", "both fibration walls per index classify with targets", [&] {
        for (int i = 1; i <= N; ++i)
            for (int sign : {-1, 1}) {
                WallKind kind = classify_wall(BoundaryWall{i, sign}, n);
                if (!std::get_if<FiberWall>(&kind))
                    return std::pair<std::string, std::string>("fibrations", "not a fibration");
            }
        return std::pair<std::string, std::string>("fibrations", "fibrations");
    });

    s.check("restriction_cases", "intersection with an exceptional divisor: the three-case split", [&] {
        SpecialVariety j1{{1, 2}, 1};
        auto a = restrict_to_E(1, j1);  // index inside I
        auto b = restrict_to_E(3, SpecialVariety{{1, 2}, 0});  // outside, s = 0
        auto c = restrict_to_E(3, j1);  // outside, s >= 1
        bool ok = a && a->I == std::vector<int>{2} && a->s == 1;
        ok = ok && !b;
        ok = ok && c && c->I == std::vector<int>{1, 2, 3} && c->s == 0;
        return std::pair<std::string, std::string>("three cases", ok ? "three cases" : "violated");
    });

    if (n == 2) {
        s.check("surface_baseline", "n=2: no flip steps and Nef = Fano slice", [&] {
            const NamedPolytopes& p = named_cones(2);
            std::vector<QVec> a = p.nef.vertices, b = p.fano.vertices;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            bool ok = factorization(2).steps.empty() && a == b;
            return std::pair<std::string, std::string>("baseline", ok ? "baseline" : "violated");
        });
    }

    s.check("fano_inequalities", "one Fano inequality per subset with |I| = m mod 2", [&] {
        Int want = 0;
        for (int d = 0; d <= N; ++d)
            if (d % 2 == m % 2) want += binomial(N, d);
        return count_pair(want, fano_cone_inequalities_KE(n).size());
    });

    return s.take();
}

// ----------------------------------------------------------------- bridge ---

Report suite_bridge(int n) {
    Suite s("bridge", n);
    SpacePtr z = make_space(n, Side::Z);
    SpacePtr x = make_space(n, Side::X);
    const int N = n + 3, m = n / 2;
    std::mt19937_64 rng(0x5eed0002);
    std::vector<PlaneLabel> labels = all_labels(n);

    s.check("duality_pairing", "E_M . l_{M'} is symmetric in the two transports, sampled", [&] {
        for (int t = 0; t < 400; ++t) {
            const PlaneLabel& a = labels[rng() % labels.size()];
            const PlaneLabel& b = labels[rng() % labels.size()];
            if (pair(beta_class(a, z), alpha_inv(b, z)) != pair(beta_class(b, z), alpha_inv(a, z)))
                return std::pair<std::string, std::string>("symmetric", "asymmetric");
        }
        return std::pair<std::string, std::string>("symmetric", "symmetric");
    });

    PlaneLabel L0 = canonical({}, n);
    LatticeMap h0 = h_tilde(L0, x, z);

    s.check("h_tilde_images", "transport sends -K_X to eta, E_i to sigma_i(M), H to H_M", [&] {
        bool ok = h0.apply(cls_minus_K(x)) == cls_eta(z);
        for (int i = 1; i <= N && ok; ++i)
            ok = h0.apply(cls_E(x, i)) == plane_class(label_after_sigma({i}, L0), z);
        ok = ok && h0.apply(cls_H(x)) == class_H_M(L0, z);
        return std::pair<std::string, std::string>("as stated", ok ? "as stated" : "violated");
    });

    s.check("h_tilde_eps", "transport matches eps-tilde to eps coordinatewise", [&] {
        for (int i = 1; i <= N; ++i)
            if (!(h0.apply(cls_eps_tilde(x, i)) == cls_eps(z, i)))
                return std::pair<std::string, std::string>("matched", "mismatch");
        return std::pair<std::string, std::string>("matched", "matched");
    });

    s.check("h_tilde_equivariance", "transport at sigma_I(M) is sigma_I after the transport at M", [&] {
        for (int t = 0; t < 40; ++t) {
            PlaneLabel L = random_label(rng, n);
            std::vector<int> I = random_subset(rng, N);
            if (I.size() % 2) I.pop_back();
            LatticeMap hL = h_tilde(label_after_sigma(I, L), x, z);
            QMat want = weyl_matrix(sigma(I, N), z) * h_tilde(L, x, z).matrix;
            if (!(hL.matrix == want)) return std::pair<std::string, std::string>("equivariant", "not");
        }
        return std::pair<std::string, std::string>("equivariant", "equivariant");
    });

    s.check("restricted_isometry", "transport scales the form by (-1)^{m-1} on (-K_X)-perp", [&] {
        // basis of the orthogonal complement: E_i - E_{i+1} and (n+3)H - (n+1) sum E_i
        std::vector<LatticeClass> basis;
        for (int i = 1; i < N; ++i) basis.push_back(cls_E(x, i) - cls_E(x, i + 1));
        LatticeClass last = cls_H(x) * Rat(N);
        for (int i = 1; i <= N; ++i) last = last - cls_E(x, i) * Rat(n + 1);
        basis.push_back(last);
        Rat scale((m % 2 == 1) ? 1 : -1);
        for (const LatticeClass& a : basis) {
            if (pair(cls_minus_K(x), a) != 0)
                return std::pair<std::string, std::string>("scaled", "basis not orthogonal to -K");
            for (const LatticeClass& b : basis)
                if (pair(h0.apply(a), h0.apply(b)) != scale * pair(a, b))
                    return std::pair<std::string, std::string>("scaled", "not scaled");
        }
        return std::pair<std::string, std::string>("scaled", "scaled");
    });

    s.check("curve_pairings", "degrees and intersections of the catalogued curve classes, sampled", [&] {
        for (int t = 0; t < 60; ++t) {
            PlaneLabel L = labels[rng() % labels.size()];
            CurveClass d = curve_class(CurveKind::DM, L, z);
            CurveClass e = curve_class(CurveKind::EM, L, z);
            CurveClass c = curve_class(CurveKind::Elliptic, L, z);
            if (pair(cls_minus_K_G(z), d) != n + 1) return std::pair<std::string, std::string>("ok", "deg d_M");
            if (pair(cls_minus_K_G(z), c) != 4) return std::pair<std::string, std::string>("ok", "deg c");
            if (pair(beta_class(L, z), c) != 1) return std::pair<std::string, std::string>("ok", "E_M . c");
            if (pair(beta_class(L, z), e) != -1) return std::pair<std::string, std::string>("ok", "E_M . e_M");
            for (int i = 1; i <= N; ++i) {
                if (pair(beta_class(label_after_sigma({i}, L), z), d) != 0)
                    return std::pair<std::string, std::string>("ok", "E_{sigma_i M} . d_M");
                for (int j = i + 1; j <= N; ++j)
                    if (pair(beta_class(label_after_sigma({i, j}, L), z), e) != 0)
                        return std::pair<std::string, std::string>("ok", "E_{sigma_ij M} . e_M");
            }
        }
        return std::pair<std::string, std::string>("ok", "ok");
    });

    s.check("cremona_conjugation", "transported Cremona pullback equals the double sign change", [&] {
        for (int t = 0; t < 30; ++t) {
            int i = 1 + int(rng() % N), j = 1 + int(rng() % N);
            if (i == j) continue;
            QMat conj = h0.matrix * cremona_pullback(i, j, x).matrix * inverse(h0.matrix);
            if (!(conj == weyl_matrix(sigma({i, j}, N), z)))
                return std::pair<std::string, std::string>("equal", "different");
        }
        return std::pair<std::string, std::string>("equal", "equal");
    });

    s.check("pseudo_iso_roundtrip", "composite maps classify back to their (label, relabelling)", [&] {
        for (int t = 0; t < 100; ++t) {
            std::vector<int> I = random_subset(rng, N);
            if (I.size() % 2) I.pop_back();
            std::vector<int> kappa(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i) kappa[std::size_t(i)] = i + 1;
            std::shuffle(kappa.begin(), kappa.end(), rng);
            LatticeMap f = compose(LatticeMap{z, z, weyl_matrix(sigma(I, N), z)},
                                   compose(h0, relabel_map(kappa, x)));
            auto got = classify_pseudo_iso(f);
            if (!got || !(got->first == canonical(I, n)) || got->second != kappa)
                return std::pair<std::string, std::string>("recovered", "not recovered");
        }
        return std::pair<std::string, std::string>("recovered", "recovered");
    });

    s.check("fano_transport", "the Fano chamber corresponds to the dual effective cone", [&] {
        // forward: homogenized Fano vertices, written in {-K_X, E_i} and moved
        // across, must satisfy the dual cone; backward: dual rays pulled back
        // must satisfy the Fano inequalities.
        RationalCone Edual = cone_E_dual(z);
        AffinePolytope fano = polytope_from_inequalities(N, named_rows(n).fano);
        std::vector<ZVec> ineqs = fano_cone_inequalities_KE(n);
        QMat hinv = inverse(h0.matrix);
        for (const QVec& v : fano.vertices) {
            // lift the slice point to a divisor class with that radial image:
            // y = (sum alpha + N/2 - 1)/2 and x_i = alpha_i + 1/2 - y puts the
            // normalizing functional at 1
            Rat sum = 0;
            for (const Rat& a : v) sum += a;
            Rat y = (sum + Rat(N, 2) - 1) / 2;
            QVec he(std::size_t(N) + 1);
            he[0] = y;
            for (int i = 1; i <= N; ++i) he[std::size_t(i)] = v[std::size_t(i) - 1] + Rat(1, 2) - y;
            LatticeClass cls(x, x->canonical_basis(), he);
            if (radial_project(cls) != v)
                return std::pair<std::string, std::string>("transported", "projection mismatch");
            if (!membership(Edual, h0.apply(cls).canonical_coords()))
                return std::pair<std::string, std::string>("transported", "vertex not in dual cone");
        }
        for (const ZVec& r : Edual.rays) {
            LatticeClass cz(z, z->canonical_basis(), to_rational(r));
            LatticeClass cx(x, x->canonical_basis(), hinv.apply(cz.canonical_coords()));
            QVec t = cx.in_basis("KE").coords();
            for (const ZVec& row : ineqs)
                if (dot(to_rational(row), t) < 0)
                    return std::pair<std::string, std::string>("transported", "ray violates an inequality");
        }
        return std::pair<std::string, std::string>("transported", "transported");
    });

    if (n <= 4) {
        s.check("g_cone_rays", "ray counts of the curve/divisor cones", [&] {
            GCones g = g_cones(n);
            std::ostringstream want, got;
            want << (Int(1) << (n + 2)) << " effective, " << (Int(1) << (n + 2)) + 2 * N << " nef";
            got << g.eff.rays.size() << " effective, " << g.nef.rays.size() << " nef";
            return std::pair<std::string, std::string>(want.str(), got.str());
        });

        s.check("g_cone_names", "every extremal ray of the six cones is a catalogued class", [&] {
            GCones g = g_cones(n);
            for (const RationalCone* c :
                 {&g.ne, &g.nef, &g.eff, &g.mov_curves, &g.mov_div_dual})
                for (const ZVec& r : c->rays)
                    if (name_ray(r, n).empty())
                        return std::pair<std::string, std::string>("all named", "unnamed ray");
            return std::pair<std::string, std::string>("all named", "all named");
        });
    }

    s.check("aut_bounds", "sign changes preserve the cone pair; group order bounds", [&] {
        AutBounds b = aut_bounds(n);
        Int lower = Int(1) << (n + 2), upper = lower;
        for (int k = 2; k <= N; ++k) upper *= k;
        bool ok = b.lower == lower && b.upper == upper && b.sign_changes_preserve_cones;
        return std::pair<std::string, std::string>("bounds hold", ok ? "bounds hold" : "violated");
    });

    return s.take();
}

}  // namespace

bool Report::ok() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

bool known_suite(const std::string& suite) {
    return suite == "lattice" || suite == "cones" || suite == "mcd" || suite == "bridge";
}

Report verify_suite(const std::string& suite, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("verify: n must be even and >= 2");
    auto t0 = Clock::now();
    Report r;
    if (suite == "lattice")
        r = suite_lattice(n);
    else if (suite == "cones")
        r = suite_cones(n);
    else if (suite == "mcd")
        r = suite_mcd(n);
    else if (suite == "bridge")
        r = suite_bridge(n);
    else
        throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    r.ms = ms_since(t0);
    return r;
}

int worker_count() {
    if (const char* env = std::getenv("FANO_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 2;
}

std::vector<Report> verify_all(int n) {
    const std::vector<std::string> suites = {"lattice", "cones", "mcd", "bridge"};
    const int workers = worker_count();
    std::vector<Report> out(suites.size());
    std::size_t next = 0;
    std::mutex mu;
    auto run = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= suites.size()) return;
                i = next++;
            }
            out[i] = verify_suite(suites[i], n);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(workers, int(suites.size())); ++t) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
    return out;
}

json report_json(const Report& r) {
    json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["n"] = r.n;
    j["pass"] = r.ok();
    j["ms"] = r.ms;
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(json{{"id", c.id},
                              {"detail", c.detail},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"pass", c.pass},
                              {"ms", c.ms}});
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace fano
