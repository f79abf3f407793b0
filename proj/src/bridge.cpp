#include "fano/bridge.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fano/mcd.hpp"

namespace fano {

LatticeClass LatticeMap::apply(const LatticeClass& x) const {
    if (x.space()->n() != source->n() || x.space()->side() != source->side())
        throw std::invalid_argument("LatticeMap::apply: class not in the source space");
    return LatticeClass(target, target->canonical_basis(), matrix.apply(x.canonical_coords()));
}

LatticeMap compose(const LatticeMap& a, const LatticeMap& b) {
    if (b.target->n() != a.source->n() || b.target->side() != a.source->side())
        throw std::invalid_argument("compose: spaces do not chain");
    return LatticeMap{b.source, a.target, a.matrix * b.matrix};
}

LatticeMap inverse_map(const LatticeMap& f) { return LatticeMap{f.target, f.source, inverse(f.matrix)}; }

Rat pair(const LatticeClass& divisor, const CurveClass& curve) { return pair(divisor, curve.cls); }

LatticeClass beta_class(const PlaneLabel& L, const SpacePtr& zspace) { return plane_class(L, zspace); }

CurveClass alpha_inv(const PlaneLabel& L, const SpacePtr& zspace) { return CurveClass{plane_class(L, zspace)}; }

LatticeClass cls_minus_K_G(const SpacePtr& zspace) { return cls_eta(zspace); }

LatticeClass class_delta(const PlaneLabel& L, const SpacePtr& zspace) {
    const int m = zspace->m();
    LatticeClass M = plane_class(L, zspace);
    LatticeClass e = cls_eta(zspace) * Rat((m + 1) / 2);
    return (m % 2 == 0) ? e + M : e - M;
}

LatticeClass class_eta_M(const PlaneLabel& L, const SpacePtr& zspace) {
    const int m = zspace->m();
    LatticeClass M = plane_class(L, zspace);
    LatticeClass e = cls_eta(zspace) * Rat(m / 2);
    return (m % 2 == 1) ? e + M : e - M;
}

CurveClass curve_class(CurveKind kind, const PlaneLabel& L, const SpacePtr& zspace, int i) {
    switch (kind) {
        case CurveKind::Line:
            return CurveClass{plane_class(L, zspace)};
        case CurveKind::DM:
            return CurveClass{class_delta(L, zspace)};
        case CurveKind::EM:
            return CurveClass{class_eta_M(L, zspace)};
        case CurveKind::Fiber: {
            if (i < 1 || i > zspace->points()) throw std::invalid_argument("curve_class: bad fibration index");
            PlaneLabel Li = label_after_sigma({i}, L);
            return CurveClass{plane_class(L, zspace) + plane_class(Li, zspace)};
        }
        case CurveKind::Elliptic:
            return CurveClass{cls_eta(zspace)};
    }
    throw std::logic_error("curve_class: unknown kind");
}

LatticeMap h_tilde(const PlaneLabel& L, const SpacePtr& xspace, const SpacePtr& zspace) {
    if (xspace->side() != Side::X || zspace->side() != Side::Z || xspace->n() != zspace->n() ||
        xspace->n() != L.n)
        throw std::invalid_argument("h_tilde: inconsistent spaces");
    std::vector<QVec> images;
    images.push_back(cls_eta(zspace).canonical_coords());
    for (int i = 1; i <= zspace->points(); ++i)
        images.push_back(plane_class(label_after_sigma({i}, L), zspace).canonical_coords());
    // columns are images of the {-K_X, E_i} basis; compose with the change of
    // basis so the matrix acts on canonical X coordinates
    return LatticeMap{xspace, zspace, QMat::from_columns(images) * xspace->from_canonical("KE")};
}

LatticeClass class_H_M(const PlaneLabel& L, const SpacePtr& zspace) {
    const int n = zspace->n();
    return cls_eta(zspace) * Rat(n / 2) - plane_class(L, zspace) * Rat(n - 1);
}

LatticeMap relabel_map(const std::vector<int>& kappa, const SpacePtr& xspace) {
    if (xspace->side() != Side::X) throw std::invalid_argument("relabel_map: X side only");
    const int N = xspace->points();
    if (int(kappa.size()) != N) throw std::invalid_argument("relabel_map: bad permutation length");
    std::vector<bool> seen(std::size_t(N) + 1, false);
    QMat m(xspace->rank(), xspace->rank());
    m(0, 0) = 1;
    for (int i = 1; i <= N; ++i) {
        int k = kappa[std::size_t(i) - 1];
        if (k < 1 || k > N || seen[std::size_t(k)]) throw std::invalid_argument("relabel_map: not a permutation");
        seen[std::size_t(k)] = true;
        m(std::size_t(k), std::size_t(i)) = 1;
    }
    return LatticeMap{xspace, xspace, std::move(m)};
}

GCones g_cones(int n) {
    static std::mutex mu;
    static std::map<int, GCones> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto cached = cache.find(n);
    if (cached != cache.end()) return cached->second;

    SpacePtr z = make_space(n, Side::Z);
    GCones g;
    g.eff = cone_E(z);
    g.ne = g.eff;  // same chart: curves l_M and divisors E_M share coordinates
    g.nef = cone_E_dual(z);
    g.mov_curves = g.nef;
    std::vector<ZVec> rays;
    for (const QVec& v : named_cones(n).mov.vertices) {
        QVec w(v.size() + 1);
        w[0] = Rat(1, 4);
        for (std::size_t i = 0; i < v.size(); ++i) w[i + 1] = v[i];
        rays.push_back(primitive(w));
    }
    g.mov_div = cone_from_rays(rays);
    g.mov_div_dual = dual_cone(g.mov_div, z);
    return cache.emplace(n, std::move(g)).first->second;
}

namespace {

std::string label_text(const std::vector<int>& rep) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < rep.size(); ++i) os << (i ? "," : "") << rep[i];
    os << "}";
    return os.str();
}

const std::map<ZVec, std::string>& ray_catalog(int n) {
    static std::mutex mu;
    static std::map<int, std::map<ZVec, std::string>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    SpacePtr z = make_space(n, Side::Z);
    std::map<ZVec, std::string> cat;
    auto add = [&cat](const QVec& v, const std::string& name) {
        ZVec key = primitive(v);
        auto [pos, fresh] = cat.emplace(std::move(key), name);
        if (!fresh && pos->second.find(name) == std::string::npos) pos->second += " = " + name;
    };
    add(cls_eta(z).canonical_coords(), "eta (-K_G; curve c)");
    for (const PlaneLabel& L : all_labels(n)) {
        const std::string t = "M=" + label_text(L.rep);
        add(plane_class(L, z).canonical_coords(), "E_M / l_M, " + t);
        add(class_delta(L, z).canonical_coords(), "D_M / d_M, " + t);
        add(class_eta_M(L, z).canonical_coords(), "eta_M / e_M, " + t);
        for (int i = 1; i <= z->points(); ++i)
            add(curve_class(CurveKind::Fiber, L, z, i).cls.canonical_coords(),
                "fiber, M=" + label_text(L.rep) + ", i=" + std::to_string(i));
    }
    return cache.emplace(n, std::move(cat)).first->second;
}

}  // namespace

std::string name_ray(const ZVec& ray, int n) {
    const auto& cat = ray_catalog(n);
    auto it = cat.find(primitive(ray));
    return it == cat.end() ? std::string() : it->second;
}

std::optional<std::pair<PlaneLabel, std::vector<int>>> classify_pseudo_iso(const LatticeMap& f) {
    if (f.source->side() != Side::X || f.target->side() != Side::Z || f.source->n() != f.target->n())
        return std::nullopt;
    const int n = f.source->n();
    LatticeMap h0 = h_tilde(canonical({}, n), f.source, f.target);
    QMat g = f.matrix * inverse(h0.matrix);
    std::optional<WeylElement> w = weyl_from_matrix(g);
    if (!w) return std::nullopt;
    auto [I, kappa] = decompose(*w);
    return std::make_pair(canonical(I, n), kappa);
}

LatticeMap cremona_pullback(int i, int j, const SpacePtr& xspace) {
    if (xspace->side() != Side::X) throw std::invalid_argument("cremona_pullback: X side only");
    const int n = xspace->n(), N = n + 3;
    if (i == j || i < 1 || j < 1 || i > N || j > N) throw std::invalid_argument("cremona_pullback: bad indices");
    QMat m(xspace->rank(), xspace->rank());
    // H -> nH - (n-1) sum_{h != i,j} E_h
    m(0, 0) = n;
    for (int h = 1; h <= N; ++h)
        if (h != i && h != j) m(std::size_t(h), 0) = -(n - 1);
    // E_i <-> E_j
    m(std::size_t(j), std::size_t(i)) = 1;
    m(std::size_t(i), std::size_t(j)) = 1;
    // E_r -> H - sum_{h != i,j,r} E_h
    for (int r = 1; r <= N; ++r) {
        if (r == i || r == j) continue;
        m(0, std::size_t(r)) = 1;
        for (int h = 1; h <= N; ++h)
            if (h != i && h != j && h != r) m(std::size_t(h), std::size_t(r)) = -1;
    }
    return LatticeMap{xspace, xspace, std::move(m)};
}

AutBounds aut_bounds(int n) {
    SpacePtr z = make_space(n, Side::Z);
    AutBounds b;
    b.lower = Int(1) << (n + 2);
    b.upper = b.lower;
    for (int k = 2; k <= n + 3; ++k) b.upper *= k;

    RationalCone eff = cone_E(z);
    RationalCone nef = dual_cone(eff, z);
    std::set<ZVec> eff_rays(eff.rays.begin(), eff.rays.end());
    std::set<ZVec> nef_rays(nef.rays.begin(), nef.rays.end());
    LatticeClass mk = cls_minus_K_G(z);

    bool ok = true;
    for (const WeylElement& s : wprime_group(n).generators) {
        if (!(act(s, mk) == mk)) ok = false;
        for (const ZVec& r : eff_rays) {
            LatticeClass img = act(s, LatticeClass(z, z->canonical_basis(), to_rational(r)));
            if (!eff_rays.count(primitive(img.canonical_coords()))) ok = false;
        }
        for (const ZVec& r : nef_rays) {
            LatticeClass img = act(s, LatticeClass(z, z->canonical_basis(), to_rational(r)));
            if (!nef_rays.count(primitive(img.canonical_coords()))) ok = false;
        }
    }
    b.sign_changes_preserve_cones = ok;
    b.note =
        "lower bound is attained for a general configuration; whether the upper "
        "bound drops for special configurations is not decidable at lattice level";
    return b;
}

}  // namespace fano
